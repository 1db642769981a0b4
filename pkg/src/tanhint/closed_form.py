"""Exact closed form of ``J(m, n) = int_0^oo tanh(z)**m / z**n dz``.

The value is a finite combination ``sum_s c_s * zeta(s) / pi**(s-1)`` over
odd ``s`` with rational ``c_s``. :func:`theorem_sum` evaluates the
coefficients through a quadruple sum over ``j, lam, mu, nu`` in exact
arithmetic; nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .exact_arith import binomial, factorial, int_pow

__all__ = [
    "InvalidSpecError",
    "LowerBoundError",
    "OrderingError",
    "ParityError",
    "IntegralSpec",
    "ZetaCombination",
    "validate_spec",
    "valid_specs",
    "half_m_bounds",
    "theorem_sum",
    "theorem_sum_with_bound",
]


class InvalidSpecError(ValueError):
    """``(m, n)`` is outside the range where the closed form holds."""

    condition = "invalid (m, n)"


class LowerBoundError(InvalidSpecError):
    condition = "n >= 2"


class OrderingError(InvalidSpecError):
    condition = "m >= n"


class ParityError(InvalidSpecError):
    condition = "m = n (mod 2)"


@dataclass(frozen=True)
class IntegralSpec:
    """Validated parameters of ``J(m, n)``; build through :func:`validate_spec`."""

    m: int
    n: int

    def __post_init__(self) -> None:
        _check(self.m, self.n)

    def __str__(self) -> str:
        return f"J({self.m},{self.n})"


def _check(m: int, n: int) -> None:
    if isinstance(m, bool) or isinstance(n, bool) or not isinstance(m, int) or not isinstance(n, int):
        raise TypeError(f"m and n must be integers, got {m!r}, {n!r}")
    if n < 2:
        raise LowerBoundError(f"n must satisfy n >= 2, got n={n}")
    if m < n:
        raise OrderingError(f"m must satisfy m >= n, got m={m}, n={n}")
    if (m - n) % 2:
        raise ParityError(f"m and n must have the same parity, got m={m}, n={n}")


def validate_spec(m: int, n: int) -> IntegralSpec:
    return IntegralSpec(m, n)


def valid_specs(max_m: int) -> list[IntegralSpec]:
    """All valid specs with ``m <= max_m``, ordered by ``m`` then ``n``."""
    return [IntegralSpec(m, n) for m in range(2, max_m + 1) for n in range(2 + m % 2, m + 1, 2)]


@dataclass(frozen=True)
class ZetaCombination:
    """``sum_s c_s * zeta(s) / pi**(s-1)``, stored as ``((s, c_s), ...)`` ascending in ``s``.

    Zero coefficients are dropped on construction, so ``==`` is equality of
    values.
    """

    terms: tuple[tuple[int, Fraction], ...] = ()

    def __post_init__(self) -> None:
        merged: dict[int, Fraction] = {}
        for s, c in self.terms:
            if not isinstance(s, int) or s < 3 or s % 2 == 0:
                raise ValueError(f"zeta argument must be an odd integer >= 3, got {s!r}")
            merged[s] = merged.get(s, Fraction(0)) + Fraction(c)
        canonical = tuple((s, c) for s, c in sorted(merged.items()) if c != 0)
        object.__setattr__(self, "terms", canonical)

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, object]) -> "ZetaCombination":
        return cls(tuple(mapping.items()))

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.terms)

    def __iter__(self) -> Iterator[tuple[int, Fraction]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, s: int) -> Fraction:
        return self.as_dict().get(s, Fraction(0))

    def __add__(self, other: "ZetaCombination") -> "ZetaCombination":
        return ZetaCombination(self.terms + other.terms)


def half_m_bounds(m: int) -> tuple[int, int]:
    """``(floor(m/2), ceil(m/2))``."""
    return m // 2, (m + 1) // 2


def real_sign_of_pi_i_power(e: int) -> int:
    """``1 / i**(e-1)`` for odd ``e``, i.e. ``(-1)**((e-1)/2)``."""
    if e % 2 == 0:
        raise ValueError(f"exponent {e} is even: the factor is imaginary")
    return -1 if (e - 1) // 2 % 2 else 1


def _inner_sum(m: int, j: int, bound: int) -> Fraction:
    # sum over lam, mu, nu of
    # (-1)**(mu+nu) * m/(m+mu) * C(m,lam) C(P,mu) C(mu,nu)
    #     * (m - 2 lam + mu - 2 nu)**(m+mu-j) / (2**(m+mu) (m+mu-j)!)
    total = Fraction(0)
    for mu in range(bound + 1):
        e = m + mu - j
        acc = 0
        for lam in range(m + 1):
            c_lam = binomial(m, lam).numerator
            for nu in range(mu + 1):
                term = c_lam * binomial(mu, nu).numerator * int_pow(m - 2 * lam + mu - 2 * nu, e)
                acc += -term if nu % 2 else term
        if acc == 0:
            continue
        weight = binomial(bound, mu) * Fraction(m, (m + mu) * 2 ** (m + mu) * factorial(e))
        total += (-1) ** mu * weight * acc
    return total


def theorem_sum_with_bound(spec: IntegralSpec, P: int) -> ZetaCombination:
    """Quadruple sum with the half-``m`` cutoff set to ``P``.

    ``P`` replaces all three occurrences of the cutoff: the prefactor
    ``C(m+P, m)``, the range of ``mu`` and the factor ``C(P, mu)``. Only
    ``floor(m/2)`` and ``ceil(m/2)`` are accepted; both give the same value.
    """
    m, n = spec.m, spec.n
    if P not in half_m_bounds(m):
        raise ValueError(f"P must be floor(m/2) or ceil(m/2) for m={m}, got {P}")
    prefactor = binomial(m + P, m)
    coeffs: dict[int, Fraction] = {}
    for j in range(2 - m % 2, m + 1, 2):
        s = n + j - 1
        outer = binomial(-n, j - 1) * (2**s - 1) * real_sign_of_pi_i_power(s)
        coeffs[s] = prefactor * outer * _inner_sum(m, j, P)
    return ZetaCombination.from_mapping(coeffs)


def theorem_sum(spec: IntegralSpec) -> ZetaCombination:
    """Exact closed form of ``J(m, n)``.

    >>> theorem_sum(validate_spec(2, 2)).as_dict()
    {3: Fraction(14, 1)}
    """
    return theorem_sum_with_bound(spec, (spec.m + 1) // 2)
