from __future__ import annotations

import random
from fractions import Fraction

import pytest

from seqaccel import NumStream, Undefined, is_defined


def assert_stream_equals(stream: NumStream, expected: list) -> None:
    """Compare a finite stream against a list of Fractions/ints/None.

    None in `expected` means "undefined cell"; defined cells must match
    exactly.
    """
    assert stream.length == len(expected), f"extent {stream.length} != {len(expected)}"
    for i, want in enumerate(expected):
        got = stream.at(i)
        if want is None:
            assert isinstance(got, Undefined), f"cell {i}: expected undefined, got {got}"
        else:
            assert is_defined(got), f"cell {i}: expected {want}, got {got}"
            assert got == want, f"cell {i}: expected {want}, got {got}"


def stream_cells(stream: NumStream, n: int) -> list:
    """First n cells with Undefined collapsed to None (for oracle compare)."""
    return [None if isinstance(c, Undefined) else c for c in stream.prefix(n)]


def random_fraction(rng: random.Random, span: int = 9) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def random_stream_values(rng: random.Random, length: int, span: int = 9) -> list[Fraction]:
    return [random_fraction(rng, span) for _ in range(length)]


def nondegenerate_stream_values(rng: random.Random, length: int) -> list[Fraction]:
    """Random values with no zero first or second differences.

    The order-1 equivalences between the accelerator families are stated
    on this family: zero differences make the remainder models hit their
    short-circuit/division cases in routes that differ in definedness.
    """
    while True:
        values = random_stream_values(rng, length)
        d = [values[i + 1] - values[i] for i in range(len(values) - 1)]
        d2 = [d[i + 1] - d[i] for i in range(len(d) - 1)]
        if all(x != 0 for x in d) and all(x != 0 for x in d2):
            return values


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240917)
