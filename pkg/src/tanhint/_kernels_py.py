"""Pure-Python versions of the numeric hot loops.

Same functions and signatures as the compiled ``_kernels`` extension; used
when the extension is not built.
"""

import math

from ._gk21 import WG, WGK, XGK


def integrand(z: float, m: int, n: int) -> float:
    """``tanh(z)**m / z**n`` for ``z > 0``.

    ``tanh`` is formed from ``exp(-2z)`` only, so nothing overflows for large
    ``z`` and ``expm1`` keeps full relative accuracy as ``z -> 0``.
    """
    d = math.expm1(-2.0 * z)
    t = -d / (2.0 + d)
    return (t / z) ** n * t ** (m - n)


def gk21(a: float, b: float, m: int, n: int) -> tuple[float, float]:
    """Kronrod estimate of the integral over ``[a, b]`` and ``|K21 - G10|``."""
    centre = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fc = integrand(centre, m, n)
    res_k = WGK[10] * fc
    res_g = 0.0
    for i in range(10):
        dx = half * XGK[i]
        fsum = integrand(centre - dx, m, n) + integrand(centre + dx, m, n)
        res_k += WGK[i] * fsum
        if i % 2:
            res_g += WG[i // 2] * fsum
    return res_k * half, abs((res_k - res_g) * half)


def odd_power_sum(e: int, K: int) -> float:
    """``sum_{k=1..K} (2k-1)**-e`` in double precision, correctly rounded."""
    return math.fsum(float(2 * k - 1) ** -e for k in range(K, 0, -1))
