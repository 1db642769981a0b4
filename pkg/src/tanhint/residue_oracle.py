"""Second, independent route to the closed form through raw series arithmetic.

All poles of ``tanh(z)**m / z**n`` in the upper half-plane sit at
``z_k = (k - 1/2) pi i`` and share one local expansion. With ``y = z - z_k``
the integrand becomes ``coth(y)**m / (y + z_k)**n``, so the residue is

    [y**(m-1)]  W(y) / (y + z_k)**n,    W = cosh(y)**m * (sinh(y)/y)**-m,

which expands to ``sum_j r_j z_k**-(n+j-1)`` with
``r_j = C(-n, j-1) [y**(m-j)] W``. Summing over the poles turns each
``z_k`` power into an odd zeta value. Nothing here reuses the binomial
rearrangements of :mod:`tanhint.closed_form`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .closed_form import IntegralSpec, ZetaCombination
from .exact_arith import binomial
from .laurent import (
    TruncatedSeries,
    coefficient,
    series_add,
    series_constant,
    series_from_exponential,
    series_int_pow,
    series_mul,
    series_scale,
    series_shift,
    series_sub,
)

__all__ = [
    "DivergentSumError",
    "PoleSumFactor",
    "ResidueProfile",
    "cosh_series",
    "sinhc_series",
    "u_series",
    "v_series",
    "w_series",
    "residue_profile",
    "pole_sum_factor",
    "oracle_closed_form",
]


class DivergentSumError(ValueError):
    pass


def cosh_series(order: int) -> TruncatedSeries:
    return series_scale(series_add(series_from_exponential(1, order), series_from_exponential(-1, order)), Fraction(1, 2))


def sinhc_series(order: int) -> TruncatedSeries:
    """``(e**y - e**-y) / (2y)`` up to ``O(y**order)``."""
    sinh = series_scale(
        series_sub(series_from_exponential(1, order + 1), series_from_exponential(-1, order + 1)),
        Fraction(1, 2),
    )
    return series_shift(sinh, -1)


def u_series(m: int, order: int) -> TruncatedSeries:
    return series_int_pow(cosh_series(order), m)


def v_series(m: int, order: int) -> TruncatedSeries:
    # V = (1 - w)**-m with w = 1 - sinh(y)/y, a series starting at y**2.
    one = series_constant(1, order)
    w = series_sub(one, sinhc_series(order))
    return series_int_pow(series_sub(one, w), -m)


def w_series(m: int) -> TruncatedSeries:
    """``U * V`` to order ``m + 1``, enough for every ``[y**(m-j)]``, ``j >= 1``."""
    order = m + 1
    return series_mul(u_series(m, order), v_series(m, order))


@dataclass(frozen=True)
class ResidueProfile:
    """Residue at every pole ``z_k`` as ``sum_j r_j * z_k**-(n+j-1)``."""

    m: int
    n: int
    coeffs: tuple[tuple[int, Fraction], ...]

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.coeffs)

    def __str__(self) -> str:
        return " + ".join(f"({r})*z_k^-{self.n + j - 1}" for j, r in self.coeffs) or "0"


def residue_profile(spec: IntegralSpec) -> ResidueProfile:
    m, n = spec.m, spec.n
    w = w_series(m)
    if coefficient(w, 0) != 1:
        raise ArithmeticError(f"W(0) = {coefficient(w, 0)}, expected 1")
    for e in range(1, w.order, 2):
        if coefficient(w, e) != 0:
            raise ArithmeticError(f"W has a nonzero odd coefficient at y^{e}")
    coeffs = []
    for j in range(1, m + 1):
        c = coefficient(w, m - j)
        if (m - j) % 2:
            if c != 0:
                raise ArithmeticError(f"[y^{m - j}]W should vanish, got {c}")
            continue
        coeffs.append((j, binomial(-n, j - 1) * c))
    return ResidueProfile(m, n, tuple(coeffs))


@dataclass(frozen=True)
class PoleSumFactor:
    """``pi*i * sum_k z_k**-e == sign * scale * zeta(s) / pi**(s-1)``."""

    sign: int
    s: int
    scale: int


def pole_sum_factor(e: int) -> PoleSumFactor:
    if e < 2:
        raise DivergentSumError(f"sum over poles of z_k^-{e} diverges")
    if e % 2 == 0:
        raise ValueError(f"pole sum for even exponent {e} is imaginary")
    # z_k = (2k-1) pi i / 2, so sum_k z_k**-e = (2**e - 1) zeta(e) / (pi i)**e
    # and pi i / (pi i)**e = i**(1-e) / pi**(e-1) = (-1)**((e-1)/2) / pi**(e-1).
    sign = -1 if (e - 1) // 2 % 2 else 1
    return PoleSumFactor(sign=sign, s=e, scale=2**e - 1)


def oracle_closed_form(spec: IntegralSpec) -> ZetaCombination:
    profile = residue_profile(spec)
    terms = []
    for j, r in profile.coeffs:
        f = pole_sum_factor(spec.n + j - 1)
        terms.append((f.s, r * f.sign * f.scale))
    return ZetaCombination(tuple(terms))
