"""Numeric hot loops, compiled when available.

``BACKEND`` is ``"cython"`` when the ``_kernels`` extension imported and
``"python"`` when the pure-Python fallback is in use.
"""

try:
    from . import _kernels as _impl

    BACKEND = "cython"
except ImportError:
    from . import _kernels_py as _impl

    BACKEND = "python"

integrand = _impl.integrand
gk21 = _impl.gk21
odd_power_sum = _impl.odd_power_sum

__all__ = ["BACKEND", "integrand", "gk21", "odd_power_sum"]
