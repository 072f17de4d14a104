"""Exact rational scalars with explicit undefined-value propagation.

Every value in this library is an arbitrary-precision rational
(`fractions.Fraction`, re-exported as `Scalar`), so pipelines are
bit-reproducible and results can be compared with exact equality.
Operations that have no rational result (division by zero, reading past
the end of a finite stream) do not raise: they produce an `Undefined`
marker that records why, and any arithmetic touching an `Undefined`
operand yields `Undefined` again with the original cause preserved.
Decimal text appears only at the output boundary, via `render_decimal`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional, Union

Scalar = Fraction

__all__ = [
    "Scalar",
    "UndefinedReason",
    "Undefined",
    "Element",
    "is_defined",
    "as_element",
    "propagated",
    "first_undefined",
    "add",
    "sub",
    "mul",
    "div",
    "ARITHMETIC_OPS",
    "int_pow",
    "render_decimal",
    "parse_scalar",
]


class UndefinedReason(Enum):
    """Root causes an undefined cell can carry."""

    DIV_BY_ZERO = "div-by-zero"
    INDETERMINATE_ZERO_OVER_ZERO = "zero-over-zero"
    OUT_OF_RANGE = "out-of-range"
    PROPAGATED_FROM_INPUT = "propagated-from-input"


@dataclass(frozen=True)
class Undefined:
    """Marker for a cell with no rational value.

    `reason` says why this particular cell is undefined; `cause` is the
    earliest root cause, preserved unchanged through propagation (first
    cause wins when several operands are undefined).
    """

    reason: UndefinedReason
    cause: Optional[UndefinedReason] = None

    def __post_init__(self):
        if self.cause is None:
            object.__setattr__(self, "cause", self.reason)

    def __repr__(self):
        if self.reason is self.cause:
            return f"Undefined({self.cause.value})"
        return f"Undefined({self.reason.value}, cause={self.cause.value})"


Element = Union[Scalar, Undefined]


def is_defined(e: Element) -> bool:
    return not isinstance(e, Undefined)


def as_element(x) -> Element:
    """Coerce an int, string, Fraction or Undefined into an Element."""
    if isinstance(x, (Fraction, Undefined)):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an Element")


def propagated(u: Undefined) -> Undefined:
    """Undefined derived from an undefined operand; keeps the root cause."""
    return Undefined(UndefinedReason.PROPAGATED_FROM_INPUT, u.cause)


def first_undefined(*elements: Element) -> Optional[Undefined]:
    """The first undefined operand in argument order, if any."""
    for e in elements:
        if isinstance(e, Undefined):
            return e
    return None


def add(a: Element, b: Element) -> Element:
    u = first_undefined(a, b)
    return propagated(u) if u else a + b


def sub(a: Element, b: Element) -> Element:
    u = first_undefined(a, b)
    return propagated(u) if u else a - b


def mul(a: Element, b: Element) -> Element:
    u = first_undefined(a, b)
    return propagated(u) if u else a * b


def div(a: Element, b: Element) -> Element:
    """Totalized division: 0/0 and x/0 map to Undefined, never raise."""
    u = first_undefined(a, b)
    if u:
        return propagated(u)
    if b == 0:
        if a == 0:
            return Undefined(UndefinedReason.INDETERMINATE_ZERO_OVER_ZERO)
        return Undefined(UndefinedReason.DIV_BY_ZERO)
    return a / b


ARITHMETIC_OPS: dict[str, Callable[[Element, Element], Element]] = {
    "add": add,
    "sub": sub,
    "mul": mul,
    "div": div,
}


def int_pow(a: Scalar, e: int) -> Scalar:
    """Exact a**e for a nonnegative integer exponent; a**0 == 1 for all a."""
    if e < 0:
        raise ValueError(f"int_pow exponent must be >= 0, got {e}")
    return a ** e


_SCALAR_RE = re.compile(r"[+-]?\d+(?:/\d+|\.\d+)?")


def parse_scalar(text: str) -> Scalar:
    """Parse an integer, rational "p/q" or plain decimal literal exactly.

    Raises ValueError for anything outside that grammar (including a zero
    denominator).
    """
    token = text.strip()
    if not _SCALAR_RE.fullmatch(token):
        raise ValueError(f"invalid numeric literal: {token!r}")
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in literal: {token!r}") from None


def _ilog10(p: int, q: int) -> int:
    """floor(log10(p/q)) for positive integers, exactly."""
    e = len(str(p)) - len(str(q))  # within 1 of the answer
    while not _at_least_pow10(p, q, e):
        e -= 1
    while _at_least_pow10(p, q, e + 1):
        e += 1
    return e


def _at_least_pow10(p: int, q: int, k: int) -> bool:
    return p >= q * 10 ** k if k >= 0 else p * 10 ** (-k) >= q


def _round_half_even(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if 2 * r > den or (2 * r == den and q % 2 == 1):
        q += 1
    return q


def render_decimal(value: Element, sig_digits: int) -> str:
    """Render with exactly `sig_digits` significant digits, ties to even.

    Positional notation is used when the leading digit falls between 1e-4
    and the requested precision; otherwise scientific notation ("1.024e5",
    "3.3333e-7") keeps the digit count honest. Undefined cells become
    "undefined(<cause>)". The decimal separator is always ".".
    """
    if sig_digits < 1:
        raise ValueError(f"sig_digits must be >= 1, got {sig_digits}")
    value = as_element(value)
    if isinstance(value, Undefined):
        return f"undefined({value.cause.value})"
    if value == 0:
        return "0" if sig_digits == 1 else "0." + "0" * (sig_digits - 1)

    sign = "-" if value < 0 else ""
    p, q = abs(value.numerator), value.denominator
    e = _ilog10(p, q)
    shift = sig_digits - 1 - e
    if shift >= 0:
        m = _round_half_even(p * 10 ** shift, q)
    else:
        m = _round_half_even(p, q * 10 ** (-shift))
    if m == 10 ** sig_digits:  # rounding rolled over, e.g. 0.99996 -> 1.0000
        m //= 10
        e += 1
    digits = str(m)

    if 0 <= e < sig_digits:
        int_part, frac_part = digits[: e + 1], digits[e + 1 :]
        body = int_part + ("." + frac_part if frac_part else "")
    elif -4 <= e < 0:
        body = "0." + "0" * (-e - 1) + digits
    else:
        mantissa = digits[0] + ("." + digits[1:] if sig_digits > 1 else "")
        body = f"{mantissa}e{e}"
    return sign + body
