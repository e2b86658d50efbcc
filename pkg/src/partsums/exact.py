"""Exact integer and rational scalars shared by every other module.

All values are Python ints (arbitrary precision) or ``fractions.Fraction``,
which is always kept in lowest terms with a positive denominator.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

Rational = Fraction

__all__ = ["Rational", "binomial", "multinomial", "double_factorial", "factorial", "pow2", "rational_str"]


def binomial(n: int, k: int) -> int:
    """C(n, k), extended by zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(m: int) -> int:
    return math.factorial(m)


def multinomial(parts: Iterable[int]) -> int:
    """(sum parts)! / prod(part!); the empty sequence gives 1."""
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"multinomial entries must be nonnegative, got {parts}")
    denom = 1
    for p in parts:
        denom *= math.factorial(p)
    return math.factorial(sum(parts)) // denom


def double_factorial(m: int) -> int:
    """m!! with the conventions 0!! = (-1)!! = 1."""
    if m < -1:
        raise ValueError(f"double factorial undefined for m={m}")
    result = 1
    while m > 1:
        result *= m
        m -= 2
    return result


def pow2(e: int) -> Fraction:
    if e >= 0:
        return Fraction(1 << e)
    return Fraction(1, 1 << -e)


def rational_str(x: Fraction) -> str:
    """Render as ``p/q`` even for integers, so the format is uniform."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"
