"""Helpers for exact rationals: parsing, decimal rendering, lcm."""

from __future__ import annotations

import math
import re
from decimal import Decimal, localcontext
from fractions import Fraction

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text) -> Fraction:
    """Parse ``[-]digits[/digits]`` into a Fraction.

    Python ints are accepted as-is; floats are rejected so that model input
    never goes through binary floating point.

    >>> parse_rational("-1/2")
    Fraction(-1, 2)
    >>> parse_rational(5)
    Fraction(5, 1)
    """
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"expected a rational string, got {type(text).__name__}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def to_decimal(q: Fraction, digits: int = 15) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits
        return Decimal(q.numerator) / Decimal(q.denominator)


def decimal_str(q: Fraction, digits: int = 15) -> str:
    """Decimal rendering of ``q`` at ``digits`` significant digits.

    >>> decimal_str(Fraction(5, 2))
    '2.5'
    >>> decimal_str(Fraction(1, 3), 5)
    '0.33333'
    """
    d = to_decimal(q, digits)
    if d == 0:
        return "0"
    return format(d, f".{digits}g")


def lcm_of_denominators(values) -> int:
    out = 1
    for v in values:
        out = math.lcm(out, Fraction(v).denominator)
    return out
