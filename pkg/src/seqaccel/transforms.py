"""Sequence transformations that accelerate convergence.

Three classic remainder models (kinds t, u, v) feed two accelerator
families:

* the E-algorithm, a recursive elimination scheme valid for any order,
  driven by auxiliary weight streams g(k, j); and
* Levin transforms of order 0, 1 and 2 in closed form. Order 1 with the
  t model is Aitken's delta-squared process.

Two conventions for the order-0 weights circulate in the literature and
are **not** equivalent: g(0, j)[n] = n^(1-j) * R[n] (`GConvention.TEXT`)
and g(0, j)[n] = n^(j-1) / R[n] (`GConvention.CODE`). TEXT is the
default and is the one for which order-1 E-algorithm, order-1 Levin and
Aitken coincide; CODE is kept selectable because published E-algorithm
runs exist for both. See README for measured differences.

Every elimination step a[i] - b[i] * (Δa[i] / Δb[i]) applies one
short-circuit rule: if Δa[i] is exactly 0 the correction is 0 and the
result is a[i] regardless of Δb[i]; if Δa[i] != 0 and Δb[i] = 0 the cell
is undefined. This preserves exact fixed points, so a transform that has
already collapsed a sequence to its (anti-)limit is not destroyed by
applying a higher order.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .scalars import (
    Element,
    Undefined,
    UndefinedReason,
    add,
    div,
    first_undefined,
    int_pow,
    mul,
    propagated,
    sub,
)
from .streams import (
    NumStream,
    forward_difference,
    from_function,
    iota,
    repeat_const,
    stream_tail,
    zip_with,
)

__all__ = [
    "Kind",
    "GConvention",
    "Method",
    "TransformSpec",
    "remainder_estimate",
    "g_initial",
    "g_algorithm",
    "e_algorithm",
    "aitken",
    "levin",
    "levin_order2_form",
]


class Kind(Enum):
    """Remainder model: R = Δs (T), R = n·Δs (U), R = Δs'·Δs/Δ²s (V)."""

    T = "t"
    U = "u"
    V = "v"


class GConvention(Enum):
    TEXT = "text"  # g(0, j)[n] = n^(1-j) * R[n]
    CODE = "code"  # g(0, j)[n] = n^(j-1) / R[n]


class Method(Enum):
    EALG = "ealg"
    LEVIN = "levin"


@dataclass(frozen=True)
class TransformSpec:
    """A complete accelerator recipe; `apply` builds the output stream."""

    method: Method
    kind: Kind
    order: int
    g_convention: GConvention = GConvention.TEXT

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"order must be >= 0, got {self.order}")
        if self.method is Method.LEVIN and self.order > 2:
            raise ValueError(
                "closed-form Levin transforms stop at order 2; "
                "use the E-algorithm for higher orders"
            )

    def apply(self, s: NumStream) -> NumStream:
        if self.method is Method.LEVIN:
            return levin(self.kind, self.order, s)
        return e_algorithm(self.kind, self.order, s, self.g_convention)

    def describe(self) -> str:
        base = f"{self.method.value} kind={self.kind.value} order={self.order}"
        if self.method is Method.EALG:
            base += f" g-convention={self.g_convention.value}"
        return base


def remainder_estimate(kind: Kind, s: NumStream) -> NumStream:
    """The R stream modelling the error of s, per the chosen kind."""
    d = forward_difference(s)
    if kind is Kind.T:
        return d
    if kind is Kind.U:
        return zip_with(mul, d, iota(1, 1))
    # V: product of two consecutive differences over the second difference
    return zip_with(div, zip_with(mul, stream_tail(d), d), forward_difference(d))


def g_initial(kind: Kind, j: int, s: NumStream, convention: GConvention) -> NumStream:
    """Order-0 weight stream g(0, j) under the selected convention."""
    if j < 1:
        raise ValueError(f"weight column j must be >= 1, got {j}")
    r = remainder_estimate(kind, s)
    n_pow = from_function(lambda i: int_pow(Fraction(i + 1), j - 1))
    if convention is GConvention.TEXT:
        return zip_with(div, r, n_pow)  # n^(1-j) * R, with n >= 1
    return zip_with(div, n_pow, r)


def _eliminate(a: NumStream, b: NumStream) -> NumStream:
    """One elimination step: a[i] - b[i] * (Δa[i] / Δb[i]).

    Short-circuit rule: Δa[i] == 0 returns a[i] outright; Δa[i] != 0 with
    Δb[i] == 0 is a genuine division by zero.
    """

    def compute(i: int) -> Element:
        a0, a1 = a.at(i), a.at(i + 1)
        u = first_undefined(a0, a1)
        if u:
            return propagated(u)
        da = a1 - a0
        if da == 0:
            return a0
        b0, b1 = b.at(i), b.at(i + 1)
        u = first_undefined(b0, b1)
        if u:
            return propagated(u)
        db = b1 - b0
        if db == 0:
            return Undefined(UndefinedReason.DIV_BY_ZERO)
        return a0 - b0 * da / db

    la, lb = a.length, b.length
    if la is None and lb is None:
        length = None
    else:
        length = max(min(x for x in (la, lb) if x is not None) - 1, 0)
    return NumStream(compute, length)


def _g_table(kind: Kind, s: NumStream, convention: GConvention):
    """Shared, memoized builder for the g(k, j) weight streams."""
    cache: dict[tuple[int, int], NumStream] = {}

    def g(k: int, j: int) -> NumStream:
        key = (k, j)
        if key not in cache:
            if k == 0:
                cache[key] = g_initial(kind, j, s, convention)
            else:
                cache[key] = _eliminate(g(k - 1, j), g(k - 1, k))
        return cache[key]

    return g


def g_algorithm(
    kind: Kind, k: int, j: int, s: NumStream, convention: GConvention = GConvention.TEXT
) -> NumStream:
    """Auxiliary weight stream g(k, j) of the E-algorithm."""
    if k < 0:
        raise ValueError(f"order must be >= 0, got {k}")
    return _g_table(kind, s, convention)(k, j)


def e_algorithm(
    kind: Kind, k: int, s: NumStream, convention: GConvention = GConvention.TEXT
) -> NumStream:
    """E-algorithm of order k; order 0 is the identity."""
    if k < 0:
        raise ValueError(f"order must be >= 0, got {k}")
    g = _g_table(kind, s, convention)
    e = s
    for level in range(1, k + 1):
        e = _eliminate(e, g(level - 1, level))
    return e


def aitken(s: NumStream) -> NumStream:
    """Aitken's delta-squared process: s[i] - (Δs[i])² / Δ²s[i].

    Exact on any sequence of the form L + c·qⁱ (q not in {0, 1}), where
    every defined cell equals L. Constant stretches pass through
    unchanged via the short-circuit rule.
    """

    def compute(i: int) -> Element:
        s0, s1, s2 = s.at(i), s.at(i + 1), s.at(i + 2)
        u = first_undefined(s0, s1)
        if u:
            return propagated(u)
        d = s1 - s0
        if d == 0:
            return s0
        if isinstance(s2, Undefined):
            return propagated(s2)
        d2 = s2 - 2 * s1 + s0
        if d2 == 0:
            return Undefined(UndefinedReason.DIV_BY_ZERO)
        return s0 - d * d / d2

    length = None if s.length is None else max(s.length - 2, 0)
    return NumStream(compute, length)


def levin(kind: Kind, k: int, s: NumStream) -> NumStream:
    """Closed-form Levin transform of order k in {0, 1, 2}.

    Order 1 with kind T coincides cell-for-cell with `aitken`.
    """
    if k == 0:
        return s
    if k == 1:
        return _levin_order1(kind, s)
    if k == 2:
        numerator = levin_order2_form(kind, s, s)
        denominator = levin_order2_form(kind, repeat_const(1), s)
        return zip_with(div, numerator, denominator)
    raise ValueError(
        f"closed-form Levin transforms stop at order 2, got {k}; "
        "use the E-algorithm for higher orders"
    )


def _levin_order1(kind: Kind, s: NumStream) -> NumStream:
    r = remainder_estimate(kind, s)

    def compute(i: int) -> Element:
        s0, s1, r0 = s.at(i), s.at(i + 1), r.at(i)
        u = first_undefined(s0, s1, r0)
        if u:
            return propagated(u)
        num = (s1 - s0) * r0
        if num == 0:
            return s0
        r1 = r.at(i + 1)
        if isinstance(r1, Undefined):
            return propagated(r1)
        den = r1 - r0
        if den == 0:
            return Undefined(UndefinedReason.DIV_BY_ZERO)
        return s0 - num / den

    length = None if r.length is None else max(r.length - 1, 0)
    return NumStream(compute, length)


def levin_order2_form(kind: Kind, s_prime: NumStream, s: NumStream) -> NumStream:
    """Weighted three-term combination behind the order-2 Levin transform.

    With R the remainder estimate of s, cell i is
    (i+2)·s'[i+2]·R[i+1]·R[i] - 2(i+1)·s'[i+1]·R[i+2]·R[i]
    + i·s'[i]·R[i+2]·R[i+1]. The transform divides this form evaluated at
    s' = s by the same form evaluated at the all-ones stream.
    """
    r = remainder_estimate(kind, s)
    tail = stream_tail
    t1 = _product(iota(2, 1), tail(tail(s_prime)), tail(r), r)
    t2 = _product(iota(2, 2), tail(s_prime), tail(tail(r)), r)
    t3 = _product(iota(0, 1), s_prime, tail(tail(r)), tail(r))
    return zip_with(add, zip_with(sub, t1, t2), t3)


def _product(first: NumStream, *rest: NumStream) -> NumStream:
    out = first
    for s in rest:
        out = zip_with(mul, out, s)
    return out
