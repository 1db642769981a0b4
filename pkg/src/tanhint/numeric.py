"""High-precision numerics: odd zeta values, pi, and quadrature of ``J(m, n)``.

Every result is a :class:`BigFloat` carrying its own absolute error bound.
Decimal work runs inside a :func:`decimal.localcontext`, so the precision is
per call and per thread; nothing global is touched.
"""

from __future__ import annotations

import decimal
import heapq
import math
from dataclasses import dataclass
from decimal import Decimal

from functools import lru_cache

from mpmath import bernfrac

from . import kernels
from .closed_form import IntegralSpec, ZetaCombination

__all__ = [
    "BigFloat",
    "QuadratureError",
    "zeta_odd",
    "pi_digits",
    "eval_combination",
    "quadrature",
    "HEAD_CUTOFF",
    "tail_start",
]

GUARD_DIGITS = 12


@dataclass(frozen=True)
class BigFloat:
    """A decimal value known to within ``error`` of the true quantity.

    ``value`` may carry guard digits beyond ``digits``; ``str()`` rounds to
    ``digits`` places after the point.
    """

    value: Decimal
    digits: int
    error: Decimal

    def __str__(self) -> str:
        with decimal.localcontext() as ctx:
            ctx.prec = max(self.value.adjusted(), 0) + self.digits + 2
            return str(self.value.quantize(Decimal(1).scaleb(-self.digits), rounding=decimal.ROUND_HALF_EVEN))

    def __float__(self) -> float:
        return float(self.value)

    def contains(self, x) -> bool:
        """True when ``x`` lies within ``error`` of ``value``."""
        return abs(Decimal(x) - self.value) <= self.error


def _context(digits: int) -> decimal.Context:
    return decimal.Context(prec=digits, rounding=decimal.ROUND_HALF_EVEN, Emin=-999999, Emax=999999)


@lru_cache(maxsize=None)
def _bernoulli(k: int) -> tuple[int, int]:
    num, den = bernfrac(k)
    return int(num), int(den)


def _ulp_count_bound(ops: int, prec: int) -> Decimal:
    return Decimal(ops) * Decimal(10) ** (1 - prec)


def zeta_odd(s: int, digits: int) -> BigFloat:
    """``zeta(s)`` with absolute error below ``10**-digits``.

    Sums ``k**-s`` for ``k < N`` and replaces the rest by its Euler-Maclaurin
    expansion at ``N``. For ``x**-s`` every even derivative is positive, so
    the remainder after any number of correction terms is bounded by the
    first omitted term.
    """
    if not isinstance(s, int) or s < 2:
        raise ValueError(f"zeta(s) is only evaluated for integers s >= 2, got {s!r}")
    prec = digits + GUARD_DIGITS
    target = Decimal(10) ** -(digits + 2)
    N = max(10, digits)
    with decimal.localcontext(_context(prec)):
        total = sum((Decimal(k) ** -s for k in range(1, N)), Decimal(0))
        dN = Decimal(N)
        total += dN ** (1 - s) / (s - 1) + dN ** -s / 2
        # Rising factorial s (s+1) ... (s+2j-2) and N**(-s-2j+1), updated per j.
        rising = Decimal(s)
        npow = dN ** (-s - 1)
        ops = N + 4
        j = 1
        while True:
            b_num, b_den = _bernoulli(2 * j)
            term = Decimal(b_num) * rising * npow / (Decimal(b_den) * math.factorial(2 * j))
            if abs(term) < target:
                remainder = abs(term)
                break
            total += term
            rising *= (s + 2 * j - 1) * (s + 2 * j)
            npow /= dN * dN
            ops += 6
            j += 1
        error = remainder + _ulp_count_bound(ops, prec)
    return BigFloat(total, digits, error)


def _arctan_inverse(x: int, scale: int) -> tuple[int, int]:
    """``scale * arctan(1/x)`` truncated, with the number of terms summed."""
    total = 0
    power = scale // x
    x2 = x * x
    k = 0
    while power:
        term = power // (2 * k + 1)
        total += -term if k % 2 else term
        power //= x2
        k += 1
    return total, k


def pi_digits(digits: int) -> BigFloat:
    """pi from Machin's formula ``16 atan(1/5) - 4 atan(1/239)`` in fixed point."""
    if digits < 0:
        raise ValueError(f"digits must be >= 0, got {digits}")
    prec = digits + GUARD_DIGITS
    scale = 10**prec
    a, ka = _arctan_inverse(5, scale)
    b, kb = _arctan_inverse(239, scale)
    # Each floor division is off by < 1 ulp (two per term); the tails are < 1 ulp.
    err_ulps = 16 * (2 * ka + 1) + 4 * (2 * kb + 1)
    with decimal.localcontext(_context(prec + 2)):
        value = Decimal(16 * a - 4 * b) / scale
        error = Decimal(err_ulps) / scale
    return BigFloat(value, digits, error)


def eval_combination(zc: ZetaCombination, digits: int) -> BigFloat:
    """``sum_s c_s zeta(s) / pi**(s-1)`` with absolute error below ``10**-digits``."""
    if not len(zc):
        return BigFloat(Decimal(0), digits, Decimal(0))
    biggest = max(abs(c) for _, c in zc)
    mag = max(1, len(str(math.ceil(biggest))))
    work = digits + mag + 4
    prec = work + GUARD_DIGITS
    pi = pi_digits(work)
    total = Decimal(0)
    error = Decimal(0)
    with decimal.localcontext(_context(prec)):
        for s, c in zc:
            z = zeta_odd(s, work)
            coeff = Decimal(c.numerator) / Decimal(c.denominator)
            total += coeff * z.value / pi.value ** (s - 1)
            # pi >= 3, so d(pi**-(s-1))/dpi <= (s-1) / 3**s; zeta(s) <= 2.
            error += abs(coeff) * (z.error + 2 * (s - 1) * pi.error)
        error += _ulp_count_bound(4 * len(zc) + 4, prec) * (1 + Decimal(biggest.numerator) / biggest.denominator)
    if error >= Decimal(10) ** -digits:
        raise ArithmeticError(f"error bound {error} misses the 10^-{digits} target")
    return BigFloat(total, digits, error)


class QuadratureError(ArithmeticError):
    """The requested tolerance could not be certified."""

    def __init__(self, message: str, achieved: float) -> None:
        super().__init__(message)
        self.achieved = achieved


HEAD_CUTOFF = 1e-8
_DOUBLE_EPS = 2.220446049250313e-16


def tail_start(n: int) -> float:
    return max(30.0, 8.0 + n * math.log(10.0))


def quadrature(spec: IntegralSpec, abs_err: float = 1e-10, max_panels: int = 2000) -> BigFloat:
    """Estimate ``J(m, n)`` directly from the integrand, in double precision.

    The half-line is split at ``HEAD_CUTOFF`` and ``A = tail_start(n)``.
    On ``[0, HEAD_CUTOFF]`` the integrand is ``z**(m-n)`` up to a factor in
    ``[(1 - z**2/3)**m, 1]``; on ``[A, oo)`` it is ``z**-n`` up to
    ``2m exp(-2z) z**-n``. Both pieces are integrated analytically with
    those bounds, and the middle is bisected adaptively with a 21-point
    Gauss-Kronrod rule until the summed ``|K21 - G10|`` estimates fit the
    budget.
    """
    if not abs_err >= 1e-13:
        raise ValueError(f"abs_err must be >= 1e-13 in double precision, got {abs_err}")
    m, n = spec.m, spec.n
    eta = HEAD_CUTOFF
    A = tail_start(n)
    d = m - n
    head = eta ** (d + 1) / (d + 1)
    head_err = m * eta ** (d + 3) / (3 * (d + 3))
    tail = A ** (1 - n) / (n - 1)
    tail_err = m * math.exp(-2 * A) * A**-n

    # Start from panels that double in width, matching the decay of the integrand.
    edges = [eta, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, A]
    heap = []
    for a, b in zip(edges, edges[1:]):
        val, err = kernels.gk21(a, b, m, n)
        heap.append((-err, a, b, val))
    heapq.heapify(heap)

    def budget() -> tuple[float, float]:
        vals = [p[3] for p in heap]
        mid = math.fsum(vals)
        rounding = 50 * _DOUBLE_EPS * (math.fsum(abs(v) for v in vals) + head + tail)
        return mid, math.fsum(-p[0] for p in heap) + head_err + tail_err + rounding

    mid, achieved = budget()
    while achieved > abs_err:
        if len(heap) >= max_panels:
            raise QuadratureError(
                f"{spec}: tolerance {abs_err:g} not reached with {max_panels} panels", achieved
            )
        _, a, b, _ = heapq.heappop(heap)
        c = 0.5 * (a + b)
        for lo, hi in ((a, c), (c, b)):
            val, err = kernels.gk21(lo, hi, m, n)
            heapq.heappush(heap, (-err, lo, hi, val))
        mid, achieved = budget()

    estimate = math.fsum([head, mid, tail])
    digits = max(0, math.floor(-math.log10(abs_err)))
    return BigFloat(Decimal(repr(estimate)), digits, Decimal(repr(achieved)))

