"""Exact rational arithmetic and the combinatorial primitives used by the evaluators.

Rationals are :class:`fractions.Fraction` values, which already keep the
denominator positive and the fraction reduced after every operation.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction

__all__ = [
    "Rational",
    "rat_add",
    "rat_sub",
    "rat_mul",
    "rat_div",
    "binomial",
    "int_pow",
    "factorial",
    "format_rational",
    "parse_rational",
]


def rat_add(a: Rational, b: Rational) -> Rational:
    return Fraction(a) + Fraction(b)


def rat_sub(a: Rational, b: Rational) -> Rational:
    return Fraction(a) - Fraction(b)


def rat_mul(a: Rational, b: Rational) -> Rational:
    return Fraction(a) * Fraction(b)


def rat_div(a: Rational, b: Rational) -> Rational:
    """Divide exactly; raises ZeroDivisionError when ``b`` is zero."""
    b = Fraction(b)
    if b == 0:
        raise ZeroDivisionError("rational division by zero")
    return Fraction(a) / b


def binomial(top: int, k: int) -> Rational:
    """Generalized binomial coefficient ``top*(top-1)*...*(top-k+1)/k!``.

    ``top`` may be any integer, including negative ones. The falling
    factorial is used throughout, so no factorial of a negative number is
    ever formed.
    """
    if k < 0:
        raise ValueError(f"binomial lower index must be >= 0, got {k}")
    num = 1
    for i in range(k):
        num *= top - i
    return Fraction(num, math.factorial(k))


def int_pow(base: int, exp: int) -> int:
    """Integer power with the convention ``0**0 == 1``."""
    if exp < 0:
        raise ValueError(f"exponent must be >= 0, got {exp}")
    if exp == 0:
        return 1
    return base**exp


def factorial(k: int) -> int:
    if k < 0:
        raise ValueError(f"factorial of negative number {k}")
    return math.factorial(k)


def format_rational(q: Rational) -> str:
    """Render as ``"num/den"``, or ``"num"`` when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Rational:
    """Inverse of :func:`format_rational`; rejects floats and non-canonical input."""
    if not isinstance(text, str):
        raise ValueError(f"rational literal must be a string, got {text!r}")
    num, sep, den = text.partition("/")
    try:
        value = Fraction(int(num), int(den) if sep else 1)
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None
    if format_rational(value) != text:
        raise ValueError(f"non-canonical rational literal: {text!r}")
    return value
