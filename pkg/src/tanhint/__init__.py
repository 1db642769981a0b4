"""Exact evaluation of ``J(m, n) = int_0^oo tanh(z)**m / z**n dz``.

For integers ``m >= n >= 2`` of equal parity the integral is a finite
rational combination of ``zeta(s) / pi**(s-1)`` over odd ``s``:

    >>> from tanhint import theorem_sum, validate_spec
    >>> print(theorem_sum(validate_spec(4, 2)).as_dict())
    {3: Fraction(56, 3), 5: Fraction(-124, 1)}
"""

from .closed_form import (
    IntegralSpec,
    InvalidSpecError,
    LowerBoundError,
    OrderingError,
    ParityError,
    ZetaCombination,
    theorem_sum,
    theorem_sum_with_bound,
    valid_specs,
    validate_spec,
)
from .numeric import BigFloat, eval_combination, pi_digits, quadrature, zeta_odd
from .residue_oracle import oracle_closed_form, residue_profile

__version__ = "0.1.0"

__all__ = [
    "BigFloat",
    "IntegralSpec",
    "InvalidSpecError",
    "LowerBoundError",
    "OrderingError",
    "ParityError",
    "ZetaCombination",
    "eval_combination",
    "oracle_closed_form",
    "pi_digits",
    "quadrature",
    "residue_profile",
    "theorem_sum",
    "theorem_sum_with_bound",
    "valid_specs",
    "validate_spec",
    "zeta_odd",
]
