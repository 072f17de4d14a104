from fractions import Fraction

import pytest

from seqaccel import (
    AtIndex,
    InsufficientTermsError,
    Kind,
    Method,
    NumStream,
    TransformSpec,
    Undefined,
    accelerate_sequence,
    from_function,
    from_values,
    grandi_terms,
    growth_coefficient,
    leibniz_pi4_terms,
    partial_sums,
    ratio_stream,
    sum_series,
    take,
)

import oracles
from conftest import assert_stream_equals

F = Fraction

LEVIN_U2 = TransformSpec(Method.LEVIN, Kind.U, 2)
LEVIN_T1 = TransformSpec(Method.LEVIN, Kind.T, 1)
EALG_T2 = TransformSpec(Method.EALG, Kind.T, 2)
EALG_U4 = TransformSpec(Method.EALG, Kind.U, 4)


def counting_stream(fn, length=None):
    forced = []

    def compute(i):
        forced.append(i)
        return fn(i)

    return NumStream(compute, length), forced


class TestRatioStream:
    def test_consecutive_ratios(self):
        out = ratio_stream(from_values([1, 1, 2, 5, 14]))
        assert_stream_equals(out, [1, 2, F(5, 2), F(14, 5)])

    def test_leading_zeros_skipped(self):
        out = ratio_stream(from_values([0, 0, 1, 1, 2]))
        assert_stream_equals(out, [1, 2])

    def test_geometric_gives_constant(self):
        out = ratio_stream(from_function(lambda i: F(3) ** i))
        assert out.length is None
        assert all(out.at(i) == 3 for i in range(10))

    def test_interior_zero_yields_undefined_cell(self):
        out = ratio_stream(from_values([1, 0, 2, 3]))
        assert out.at(0) == 0
        assert isinstance(out.at(1), Undefined)
        assert out.at(2) == F(3, 2)

    def test_all_zero_finite_is_empty(self):
        assert ratio_stream(from_values([0, 0, 0])).length == 0

    def test_matches_oracle(self):
        values = [0, 2, 6, 0, 5, 10]
        got = ratio_stream(from_values(values))
        want = oracles.ratios_list(values)
        assert got.length == len(want)
        for i, w in enumerate(want):
            cell = got.at(i)
            if w is None:
                assert isinstance(cell, Undefined)
            else:
                assert cell == w


class TestGrowthCoefficient:
    def test_constant_ratio_recovered_exactly(self):
        source = from_function(lambda i: F(3) ** i)
        report = growth_coefficient(LEVIN_T1, source, 10)
        assert report.estimate == F(3)
        assert report.rendered == "3.000000000"
        assert report.digits_stable == 10

    def test_take_last_requires_two_terms(self):
        with pytest.raises(ValueError):
            growth_coefficient(LEVIN_T1, from_values([1, 2, 4, 8]), 1)

    def test_insufficient_terms_rejected(self):
        with pytest.raises(InsufficientTermsError):
            growth_coefficient(LEVIN_T1, from_values([1, 2, 4]), 10)

    def test_determinism(self):
        source = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]
        a = growth_coefficient(LEVIN_U2, from_values(source), 10)
        b = growth_coefficient(LEVIN_U2, from_values(source), 10)
        assert a == b

    def test_monotone_consumption(self):
        consumed = []
        for n in range(6, 12):
            stream, forced = counting_stream(lambda i: F(2) ** i)
            growth_coefficient(LEVIN_T1, stream, n)
            consumed.append(max(forced) + 1)
        assert consumed == sorted(consumed)

    def test_at_index_mode_reads_untruncated_pipeline(self):
        source = from_function(lambda i: F(3) ** i)
        report = growth_coefficient(LEVIN_T1, source, mode=AtIndex(4))
        assert report.estimate == F(3)

    def test_report_counts_forced_source_cells(self):
        # Non-constant ratios, so the last cell really needs the last term.
        stream, forced = counting_stream(lambda i: F(2) ** i + i)
        report = growth_coefficient(LEVIN_T1, stream, 8)
        assert report.terms_used == max(forced) + 1 == 8


class TestSumSeries:
    def test_geometric_series_exact(self):
        terms = from_function(lambda i: F(1, 2) ** i)
        report = sum_series(LEVIN_T1, terms, 6)
        assert report.estimate == F(2)

    def test_grandi_take_last(self):
        report = sum_series(EALG_T2, grandi_terms(), 8)
        assert report.estimate == F(1, 2)

    def test_grandi_at_index(self):
        report = sum_series(EALG_T2, grandi_terms(), mode=AtIndex(0))
        assert report.estimate == F(1, 2)

    def test_alternating_naturals_fourth_order(self):
        terms = from_function(lambda i: F(i) if i % 2 == 1 else F(-i))
        report = sum_series(EALG_U4, terms, 12)
        assert report.estimate == F(1, 4)

    def test_take_last_and_at_index_agree_on_stable_pipelines(self):
        report_last = sum_series(EALG_T2, grandi_terms(), 8)
        report_idx = sum_series(EALG_T2, grandi_terms(), mode=AtIndex(2))
        assert report_last.estimate == report_idx.estimate

    def test_empty_transform_output_reports_undefined(self):
        # Three partial sums are too few for a second-order elimination.
        report = sum_series(EALG_T2, grandi_terms(), 3)
        assert isinstance(report.estimate, Undefined)
        assert report.rendered.startswith("undefined(")


class TestAccelerateSequence:
    def test_order_zero_echoes_last_value(self):
        report = accelerate_sequence(
            TransformSpec(Method.LEVIN, Kind.T, 0), from_values([4, 5, 6]), 3
        )
        assert report.estimate == F(6)

    def test_applies_transform_to_raw_input(self):
        values = [F(1), F(0), F(1), F(0), F(1)]
        report = accelerate_sequence(LEVIN_T1, from_values(values), 5)
        assert report.estimate == F(1, 2)


class TestReports:
    def test_rendered_respects_digit_request(self):
        source = from_function(lambda i: F(3) ** i)
        report = growth_coefficient(LEVIN_T1, source, 10, digits=4)
        assert report.rendered == "3.000"

    def test_digits_stable_zero_when_previous_run_empty(self):
        report = sum_series(EALG_T2, grandi_terms(), 4)
        # The 3-term run has no defined output cell, so nothing to compare.
        assert report.digits_stable == 0

    def test_digits_stable_counts_common_prefix(self):
        # Identity transform on geometric partial sums: the 6-term run gives
        # 1.96875, the 5-term run 1.9375; they agree on one leading digit.
        ident = TransformSpec(Method.LEVIN, Kind.T, 0)
        terms = from_function(lambda i: F(1, 2) ** i)
        report = sum_series(ident, terms, 6, digits=8)
        assert report.estimate == F(63, 32)
        assert report.digits_stable == 1

    def test_pi_quarter_benchmark_beats_raw_sums(self):
        reference = oracles.pi_quarter_reference()
        report = sum_series(LEVIN_U2, leibniz_pi4_terms(), 20)
        raw = partial_sums(take(leibniz_pi4_terms(), 20)).at(19)
        assert abs(report.estimate - reference) < abs(raw - reference)
