"""End-to-end pipelines: growth-coefficient estimation and series summation.

`growth_coefficient` estimates the base a of s[n] ~ a^n * f(n) (f
subexponential) by accelerating the ratio sequence s[n+1]/s[n];
`sum_series` assigns a value to a series - convergent or divergent - by
accelerating its partial sums; `accelerate_sequence` applies an
accelerator to raw input unchanged. All three return an
`AccelerationReport` carrying the exact estimate, its decimal rendering
and a cheap stability diagnostic.

Two evaluation modes exist. `TakeLast` truncates the input to its first
n terms, transforms, and reads the last defined cell - the batch shape
used for the worked examples. `AtIndex(i)` transforms the untruncated
source and reads cell i, which is the natural reading of "the value
after i iterations" and also works when truncation would leave the
transformed stream empty.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Union

from .scalars import Element, Undefined, UndefinedReason, div, is_defined, render_decimal
from .sequences import SequenceSource, open_source
from .streams import NumStream, last_defined, partial_sums, take
from .transforms import TransformSpec

__all__ = [
    "TakeLast",
    "AtIndex",
    "EvaluationMode",
    "AccelerationReport",
    "InsufficientTermsError",
    "ratio_stream",
    "growth_coefficient",
    "sum_series",
    "accelerate_sequence",
]


@dataclass(frozen=True)
class TakeLast:
    """Truncate to the first n terms, transform, read the last defined cell."""


@dataclass(frozen=True)
class AtIndex:
    """Transform the untruncated source and read one output cell."""

    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError(f"output index must be >= 0, got {self.index}")


EvaluationMode = Union[TakeLast, AtIndex]


class InsufficientTermsError(ValueError):
    """The source cannot supply the requested number of terms."""


@dataclass(frozen=True)
class AccelerationReport:
    """Outcome of one accelerated run.

    `terms_used` counts the source elements actually forced (measured, not
    assumed). `digits_stable` counts how many leading significant digits
    survive rerunning with one term (or one output index) less; 0 when the
    comparison run has no defined value.
    """

    transform: TransformSpec
    terms_used: int
    estimate: Element
    rendered: str
    digits_stable: int


def ratio_stream(s: NumStream) -> NumStream:
    """Consecutive ratios s[i+1]/s[i], skipping the leading zero prefix.

    The result starts at the first ratio whose denominator is nonzero, so
    sequences with leading zeros (A114851 starts 0, 0, ...) stay usable.
    Zero denominators after that point yield undefined cells. The leading
    scan runs at construction; it terminates for any finite stream and for
    any infinite stream that is not identically zero.
    """
    start = 0
    while (s.length is None or start < s.length) and s.at(start) == 0:
        start += 1
    if s.length is None:
        length = None
    else:
        length = max(s.length - start - 1, 0)
    return NumStream(lambda i: div(s.at(start + i + 1), s.at(start + i)), length)


def _counted(s: NumStream) -> tuple[NumStream, Callable[[], int]]:
    """View of s that records how many leading source cells were forced."""
    forced: set[int] = set()

    def compute(i: int) -> Element:
        forced.add(i)
        return s.at(i)

    return NumStream(compute, s.length), lambda: max(forced) + 1 if forced else 0


def _evaluate(
    transform: TransformSpec,
    source: NumStream,
    prepare: Callable[[NumStream], NumStream],
    n_terms: Optional[int],
    mode: EvaluationMode,
) -> tuple[Element, int]:
    """Run one pipeline; returns (estimate, source cells consumed)."""
    counted, consumed = _counted(source)
    if isinstance(mode, TakeLast):
        stream = transform.apply(prepare(take(counted, n_terms)))
        estimate = last_defined(stream)
    else:
        stream = transform.apply(prepare(counted))
        estimate = stream.at(mode.index)
    return estimate, consumed()


def _stable_digits(current: Element, previous: Element, up_to: int) -> int:
    """Leading significant digits on which the two renderings agree."""
    if not (is_defined(current) and is_defined(previous)):
        return 0
    agreed = 0
    for d in range(1, up_to + 1):
        if render_decimal(current, d) != render_decimal(previous, d):
            break
        agreed = d
    return agreed


def _report(
    transform: TransformSpec,
    source: NumStream,
    prepare: Callable[[NumStream], NumStream],
    n_terms: Optional[int],
    mode: EvaluationMode,
    digits: int,
    min_terms: int,
) -> AccelerationReport:
    if digits < 1:
        raise ValueError(f"digits must be >= 1, got {digits}")
    if isinstance(mode, TakeLast):
        if n_terms is None or n_terms < min_terms:
            raise ValueError(f"need at least {min_terms} terms, got {n_terms}")
        if source.length is not None and source.length < n_terms:
            raise InsufficientTermsError(
                f"source provides {source.length} terms, {n_terms} requested"
            )

    estimate, consumed = _evaluate(transform, source, prepare, n_terms, mode)

    # Stability diagnostic: same pipeline, one step shorter.
    if isinstance(mode, TakeLast):
        comparable = n_terms - 1 >= min_terms and (
            source.length is None or source.length >= n_terms - 1
        )
        previous = (
            _evaluate(transform, source, prepare, n_terms - 1, mode)[0]
            if comparable
            else Undefined(UndefinedReason.OUT_OF_RANGE)
        )
    else:
        previous = (
            _evaluate(transform, source, prepare, n_terms, AtIndex(mode.index - 1))[0]
            if mode.index > 0
            else Undefined(UndefinedReason.OUT_OF_RANGE)
        )

    return AccelerationReport(
        transform=transform,
        terms_used=consumed,
        estimate=estimate,
        rendered=render_decimal(estimate, digits),
        digits_stable=_stable_digits(estimate, previous, digits),
    )


def growth_coefficient(
    transform: TransformSpec,
    source: Union[SequenceSource, NumStream],
    n_terms: Optional[int] = None,
    *,
    digits: int = 10,
    mode: EvaluationMode = TakeLast(),
) -> AccelerationReport:
    """Estimate the exponential growth base of an integer sequence.

    Takes n terms, forms the ratio stream, accelerates it, and reads the
    result per `mode`. Needs n >= 2 in TakeLast mode.
    """
    return _report(transform, open_source(source), ratio_stream, n_terms, mode, digits, 2)


def sum_series(
    transform: TransformSpec,
    terms: Union[SequenceSource, NumStream],
    n_terms: Optional[int] = None,
    *,
    digits: int = 10,
    mode: EvaluationMode = TakeLast(),
) -> AccelerationReport:
    """Sum a series (convergent or divergent) by accelerating partial sums."""
    return _report(transform, open_source(terms), partial_sums, n_terms, mode, digits, 1)


def accelerate_sequence(
    transform: TransformSpec,
    source: Union[SequenceSource, NumStream],
    n_terms: Optional[int] = None,
    *,
    digits: int = 10,
    mode: EvaluationMode = TakeLast(),
) -> AccelerationReport:
    """Apply an accelerator to the raw input sequence, no preprocessing."""
    return _report(transform, open_source(source), lambda s: s, n_terms, mode, digits, 1)
