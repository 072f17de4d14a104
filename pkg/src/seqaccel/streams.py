"""Lazy, memoizing numeric streams and the combinators built on them.

A `NumStream` is a potentially infinite sequence of `Element` cells,
computed on demand and cached so that every cell is computed once.
Extent is explicit: `length is None` means infinite, otherwise the
stream is finite and reading past the end yields
`Undefined(OUT_OF_RANGE)` rather than raising. Indexing is 0-based
throughout; combinators that need the classic 1-based position n use
n = i + 1.

Streams are safe to read from several threads: the cell cache is
write-once (the first computed value for an index is the one every
reader sees) and stateful producers serialize their accumulation.
"""
from __future__ import annotations

import threading
from typing import Callable, Iterable, Optional

from .scalars import (
    Element,
    Undefined,
    UndefinedReason,
    add,
    as_element,
    is_defined,
    sub,
)

__all__ = [
    "NumStream",
    "from_values",
    "from_function",
    "iota",
    "repeat_const",
    "take",
    "stream_tail",
    "zip_with",
    "stream_map",
    "forward_difference",
    "partial_sums",
    "last_defined",
]


class NumStream:
    """On-demand sequence of Elements with a write-once cell cache."""

    __slots__ = ("_compute", "_cache", "_length")

    def __init__(self, compute: Callable[[int], Element], length: Optional[int] = None):
        if length is not None and length < 0:
            raise ValueError(f"stream length must be >= 0, got {length}")
        self._compute = compute
        self._cache: dict[int, Element] = {}
        self._length = length

    @property
    def length(self) -> Optional[int]:
        """Finite length, or None for an infinite stream."""
        return self._length

    @property
    def is_finite(self) -> bool:
        return self._length is not None

    def at(self, i: int) -> Element:
        """Cell i; past-the-end reads of a finite stream are OUT_OF_RANGE."""
        if i < 0:
            raise ValueError(f"stream index must be >= 0, got {i}")
        if self._length is not None and i >= self._length:
            return Undefined(UndefinedReason.OUT_OF_RANGE)
        cell = self._cache.get(i)
        if cell is None:
            # setdefault keeps whichever value landed first, so concurrent
            # readers of a fresh cell always agree.
            cell = self._cache.setdefault(i, self._compute(i))
        return cell

    def prefix(self, n: int) -> list[Element]:
        """The first n cells as a list (shorter if the stream is)."""
        if self._length is not None:
            n = min(n, self._length)
        return [self.at(i) for i in range(n)]

    def to_list(self) -> list[Element]:
        if self._length is None:
            raise ValueError("cannot list an infinite stream")
        return self.prefix(self._length)

    def __repr__(self):
        extent = "inf" if self._length is None else self._length
        return f"<NumStream length={extent}>"


def from_values(values: Iterable) -> NumStream:
    """Finite stream over concrete values (ints, Fractions, Undefined)."""
    cells = [as_element(v) for v in values]
    return NumStream(cells.__getitem__, length=len(cells))


def from_function(fn: Callable[[int], Element], length: Optional[int] = None) -> NumStream:
    return NumStream(fn, length)


def iota(start, step) -> NumStream:
    """Infinite arithmetic progression start, start+step, start+2*step, ..."""
    start = as_element(start)
    step = as_element(step)
    return NumStream(lambda i: start + step * i)


def repeat_const(c) -> NumStream:
    c = as_element(c)
    return NumStream(lambda i: c)


def take(s: NumStream, n: int) -> NumStream:
    """Finite view of the first n cells (fewer if s is shorter)."""
    if n < 0:
        raise ValueError(f"take count must be >= 0, got {n}")
    length = n if s.length is None else min(n, s.length)
    return NumStream(s.at, length)


def stream_tail(s: NumStream) -> NumStream:
    length = None if s.length is None else max(s.length - 1, 0)
    return NumStream(lambda i: s.at(i + 1), length)


def _min_extent(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def zip_with(f: Callable[[Element, Element], Element], a: NumStream, b: NumStream) -> NumStream:
    """Cell i is f(a[i], b[i]); extent is the shorter of the two."""
    return NumStream(lambda i: f(a.at(i), b.at(i)), _min_extent(a.length, b.length))


def stream_map(f: Callable[[Element], Element], s: NumStream) -> NumStream:
    return NumStream(lambda i: f(s.at(i)), s.length)


def forward_difference(s: NumStream) -> NumStream:
    """Cell i is s[i+1] - s[i]; a finite length L becomes L - 1."""
    return zip_with(sub, stream_tail(s), s)


def partial_sums(s: NumStream) -> NumStream:
    """Running sums of s, same extent; undefined terms poison the rest."""
    acc: list[Element] = []
    lock = threading.Lock()

    def compute(i: int) -> Element:
        with lock:
            while len(acc) <= i:
                j = len(acc)
                term = s.at(j)
                acc.append(term if j == 0 else add(acc[j - 1], term))
            return acc[i]

    return NumStream(compute, s.length)


def last_defined(s: NumStream) -> Element:
    """Last defined cell of a finite stream; OUT_OF_RANGE if there is none."""
    if s.length is None:
        raise ValueError("last_defined needs a finite stream")
    for i in reversed(range(s.length)):
        cell = s.at(i)
        if is_defined(cell):
            return cell
    return Undefined(UndefinedReason.OUT_OF_RANGE)
