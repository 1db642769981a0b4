from decimal import Decimal
from fractions import Fraction as F

import mpmath
import pytest

from oracles import mp_closed_form_value, pi_bbp, zeta3_bracket
from tanhint import kernels
from tanhint.closed_form import ZetaCombination, theorem_sum, valid_specs, validate_spec
from tanhint.numeric import QuadratureError, eval_combination, pi_digits, quadrature, zeta_odd


def mp(x):
    return mpmath.mpf(str(x))


def test_zeta3_fifteen_digits():
    z = zeta_odd(3, 15)
    assert str(z) == "1.202056903159594"
    lo, hi = zeta3_bracket()
    assert lo - 1e-15 <= float(z.value) <= hi + 1e-15


def test_zeta_large_argument_close_to_one():
    z = zeta_odd(25, 20)
    assert 1 < z.value < Decimal("1.00000003")


@pytest.mark.parametrize("s", [0, 1, -3])
def test_zeta_domain(s):
    with pytest.raises(ValueError):
        zeta_odd(s, 20)


@pytest.mark.parametrize("s", [3, 5, 7, 9, 11, 13, 15, 25])
@pytest.mark.parametrize("digits", [10, 15, 30, 60])
def test_zeta_error_bound_is_honest(s, digits):
    z = zeta_odd(s, digits)
    assert z.error < Decimal(10) ** -digits
    with mpmath.workdps(digits + 30):
        assert abs(mp(z.value) - mpmath.zeta(s)) <= mp(z.error)


def test_pi_digits():
    assert str(pi_digits(15)).startswith("3.14159265358979")
    assert str(pi_digits(1)) == "3.1"
    assert str(pi_digits(50)).startswith(str(pi_digits(15))[:-1])
    bbp, tail = pi_bbp()
    p = pi_digits(20)
    assert abs(F(p.value) - bbp) <= F(p.error) + tail


@pytest.mark.parametrize("digits", [5, 15, 30, 100])
def test_pi_error_bound_is_honest(digits):
    p = pi_digits(digits)
    with mpmath.workdps(digits + 30):
        assert abs(mp(p.value) - mpmath.pi) <= mp(p.error)


def test_refining_precision_keeps_guaranteed_digits():
    for f in (lambda d: zeta_odd(5, d), pi_digits):
        coarse, fine = f(15), f(40)
        assert abs(coarse.value - fine.value) <= coarse.error + fine.error


def test_eval_combination_examples():
    assert str(eval_combination(ZetaCombination.from_mapping({3: 14}), 12)) == "1.705113595270"
    empty = eval_combination(ZetaCombination(), 20)
    assert empty.value == 0 and empty.error == 0
    j33 = eval_combination(ZetaCombination.from_mapping({3: -7, 5: 186}), 10)
    assert abs(j33.value - quadrature(validate_spec(3, 3), 1e-10).value) < Decimal("2e-10")


@pytest.mark.parametrize("spec", valid_specs(12), ids=str)
def test_eval_combination_bound(spec):
    zc = theorem_sum(spec)
    v = eval_combination(zc, 30)
    assert v.error < Decimal("1e-30")
    with mpmath.workdps(60):
        assert abs(mp(v.value) - mp_closed_form_value(zc, 60)) <= mp(v.error)


def test_integrand_limits_at_zero():
    assert kernels.integrand(1e-9, 4, 4) == pytest.approx(1.0, abs=1e-15)
    assert kernels.integrand(1e-9, 6, 4) < 1e-17


@pytest.mark.parametrize("mn", [(2, 2), (4, 4)])
def test_quadrature_examples(mn):
    spec = validate_spec(*mn)
    q = quadrature(spec, 1e-10)
    assert q.error <= Decimal("1e-10")
    assert abs(q.value - eval_combination(theorem_sum(spec), 30).value) <= Decimal("1e-10")


def test_quadrature_against_mpmath_quad():
    spec = validate_spec(5, 3)
    with mpmath.workdps(30):
        ref = mpmath.quad(lambda z: mpmath.tanh(z) ** 5 / z**3, [0, 1, 4, 16, mpmath.inf])
        assert abs(mp(quadrature(spec, 1e-12).value) - ref) < 1e-12


def test_quadrature_rejects_tiny_tolerance():
    with pytest.raises(ValueError):
        quadrature(validate_spec(2, 2), 1e-15)


def test_quadrature_reports_unreachable_tolerance():
    with pytest.raises(QuadratureError) as info:
        quadrature(validate_spec(40, 2), 1e-13, max_panels=8)
    assert info.value.achieved > 1e-13
    # With room to bisect the same request succeeds.
    assert quadrature(validate_spec(40, 2), 1e-13).error <= Decimal("1e-13")


@pytest.mark.parametrize("spec", valid_specs(8), ids=str)
def test_quadrature_positive_and_monotone_in_m(spec):
    q = quadrature(spec, 1e-10)
    assert q.value > 0
    bigger = quadrature(validate_spec(spec.m + 2, spec.n), 1e-10)
    assert bigger.value < q.value
