"""Truncated Laurent series in one formal variable ``y`` over the rationals.

A :class:`TruncatedSeries` stores exact coefficients for the exponents
``lowest, lowest + 1, ..., order - 1``. Every exponent ``>= order`` is
*unknown*, not zero, and asking for it is an error. Arithmetic propagates the
truncation order so that no result ever claims more precision than its
inputs support::

    >>> e = series_from_exponential(1, 4)
    >>> print(e)
    1 + 1*y + 1/2*y^2 + 1/6*y^3 + O(y^4)
    >>> print(series_mul(e, series_from_exponential(-1, 4)))
    1 + O(y^4)

Multiplication of ``a`` (lowest ``la``, order ``oa``) by ``b`` (lowest
``lb``, order ``ob``) is reliable below ``min(la + ob, lb + oa)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .exact_arith import format_rational

__all__ = [
    "SeriesError",
    "SeriesTruncationError",
    "NonInvertibleSeriesError",
    "TruncatedSeries",
    "series_constant",
    "series_from_coeffs",
    "series_from_exponential",
    "series_add",
    "series_sub",
    "series_mul",
    "series_scale",
    "series_shift",
    "series_int_pow",
    "series_reciprocal",
    "coefficient",
]


class SeriesError(ArithmeticError):
    pass


class SeriesTruncationError(SeriesError, LookupError):
    """A coefficient at or above the truncation order was requested."""


class NonInvertibleSeriesError(SeriesError, ZeroDivisionError):
    """The series is zero up to its truncation order and has no inverse."""


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Exact coefficients of ``y**lowest .. y**(order-1)``; higher terms unknown.

    Instances are kept in canonical form: ``coeffs[0] != 0`` unless the
    series is zero up to ``order``, in which case ``coeffs`` is empty and
    ``lowest == order``.
    """

    lowest: int
    coeffs: tuple[Fraction, ...]
    order: int

    def __post_init__(self) -> None:
        if self.lowest + len(self.coeffs) != self.order:
            raise ValueError(
                f"inconsistent series: lowest={self.lowest}, "
                f"{len(self.coeffs)} coeffs, order={self.order}"
            )

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def precision(self) -> int:
        """Number of reliable terms counted from the leading exponent."""
        return len(self.coeffs)

    def normalize(self) -> "TruncatedSeries":
        """Drop leading zeros, raising ``lowest`` accordingly."""
        k = 0
        while k < len(self.coeffs) and self.coeffs[k] == 0:
            k += 1
        if k == 0:
            return self
        return TruncatedSeries(self.lowest + k, self.coeffs[k:], self.order)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order >= self.order:
            return self
        keep = max(0, order - self.lowest)
        return TruncatedSeries(min(self.lowest, order), self.coeffs[:keep], order)

    def __getitem__(self, e: int) -> Fraction:
        return coefficient(self, e)

    def items(self) -> Iterable[tuple[int, Fraction]]:
        """Yield ``(exponent, coefficient)`` for every stored term."""
        return ((self.lowest + i, c) for i, c in enumerate(self.coeffs))

    def __eq__(self, other: object) -> bool:
        # Equal means identical coefficients on the common reliable range.
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        top = min(self.order, other.order)
        bottom = min(self.lowest, other.lowest)
        return all(coefficient(self, e) == coefficient(other, e) for e in range(bottom, top))

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_sub(self, other)

    def __neg__(self) -> "TruncatedSeries":
        return series_scale(self, -1)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def __pow__(self, p: int) -> "TruncatedSeries":
        return series_int_pow(self, p)

    def __repr__(self) -> str:
        return (
            f"TruncatedSeries(lowest={self.lowest}, "
            f"coeffs=({', '.join(format_rational(c) for c in self.coeffs)}), "
            f"order={self.order})"
        )

    def __str__(self) -> str:
        parts = []
        for e, c in self.items():
            if c == 0:
                continue
            if e == 0:
                parts.append(format_rational(c))
            elif e == 1:
                parts.append(f"{format_rational(c)}*y")
            else:
                parts.append(f"{format_rational(c)}*y^{e}")
        parts.append(f"O(y^{self.order})")
        return " + ".join(parts).replace("+ -", "- ")


def series_from_coeffs(coeffs: Iterable, lowest: int = 0, order: int | None = None) -> TruncatedSeries:
    """Build a canonical series from coefficients starting at ``y**lowest``.

    When ``order`` exceeds the number of supplied terms the missing ones are
    taken to be zero; by default the order is just past the last term.
    """
    cs = [Fraction(c) for c in coeffs]
    if order is None:
        order = lowest + len(cs)
    if order < lowest + len(cs):
        cs = cs[: max(0, order - lowest)]
    cs.extend([Fraction(0)] * (order - lowest - len(cs)))
    if order < lowest:
        lowest = order
    return TruncatedSeries(lowest, tuple(cs), order).normalize()


def series_constant(c, order: int) -> TruncatedSeries:
    return series_from_coeffs([c], 0, order)


def series_from_exponential(c, order: int) -> TruncatedSeries:
    """Maclaurin polynomial of ``exp(c*y)``: ``sum c**k/k! y**k`` for ``k < order``."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    c = Fraction(c)
    terms = []
    term = Fraction(1)
    for k in range(order):
        terms.append(term)
        term = term * c / (k + 1)
    # Keep the explicit zeros of exp(0*y); only the leading term is nonzero.
    return TruncatedSeries(0, tuple(terms), order)


def coefficient(a: TruncatedSeries, e: int) -> Fraction:
    """Exact coefficient of ``y**e``; zero below ``lowest``, error at or past ``order``."""
    if e >= a.order:
        raise SeriesTruncationError(
            f"coefficient of y^{e} is unknown: series is truncated at O(y^{a.order})"
        )
    if e < a.lowest:
        return Fraction(0)
    return a.coeffs[e - a.lowest]


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    order = min(a.order, b.order)
    lowest = min(a.lowest, b.lowest, order)
    coeffs = tuple(coefficient(a, e) + coefficient(b, e) for e in range(lowest, order))
    return TruncatedSeries(lowest, coeffs, order).normalize()


def series_scale(a: TruncatedSeries, c) -> TruncatedSeries:
    c = Fraction(c)
    if c == 0:
        return TruncatedSeries(a.order, (), a.order)
    return TruncatedSeries(a.lowest, tuple(c * x for x in a.coeffs), a.order)


def series_sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return series_add(a, series_scale(b, -1))


def series_shift(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """Multiply by the monomial ``y**k`` (``k`` may be negative)."""
    return TruncatedSeries(a.lowest + k, a.coeffs, a.order + k)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    order = min(a.lowest + b.order, b.lowest + a.order)
    lowest = a.lowest + b.lowest
    if a.is_zero or b.is_zero or order <= lowest:
        return TruncatedSeries(order, (), order)
    n = order - lowest
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n):
        s = Fraction(0)
        for i in range(max(0, k - len(bc) + 1), min(k, len(ac) - 1) + 1):
            s += ac[i] * bc[k - i]
        out.append(s)
    return TruncatedSeries(lowest, tuple(out), order).normalize()


def series_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of ``a``.

    ``a = y**l * u`` with ``u(0) != 0``; the inverse is ``y**-l * (1/u)`` and
    keeps the same number of reliable terms as ``a``.
    """
    a = a.normalize()
    if a.is_zero:
        raise NonInvertibleSeriesError(
            f"series is zero up to O(y^{a.order}) and cannot be inverted"
        )
    u = a.coeffs
    n = len(u)
    inv0 = 1 / u[0]
    out = [inv0]
    for k in range(1, n):
        s = Fraction(0)
        for i in range(1, k + 1):
            s += u[i] * out[k - i]
        out.append(-s * inv0)
    return TruncatedSeries(-a.lowest, tuple(out), -a.lowest + n)


def series_int_pow(a: TruncatedSeries, p: int) -> TruncatedSeries:
    """``a**p`` for any integer ``p``; negative powers go through the reciprocal."""
    if p < 0:
        return series_int_pow(series_reciprocal(a), -p)
    if p == 0:
        a = a.normalize()
        return series_constant(1, max(a.precision, 1))
    result = None
    base = a
    while p:
        if p & 1:
            result = base if result is None else series_mul(result, base)
        p >>= 1
        if p:
            base = series_mul(base, base)
    return result

