import pytest

from qverify.pk_param import (
    F_COEFFICIENTS,
    INTEGRAL_FORMS,
    P_ETA,
    F_divisible_by,
    compute_k,
    compute_p,
    evaluate_F,
    p_eta_form,
    p_leading_coefficients,
    verify_integral_form,
    verify_R7,
)
from qverify.qlang import evaluate
from qverify.series import make_series, mul, phi, pow_series, reduce_mod


def test_F_coefficients():

    assert len(F_COEFFICIENTS) == 21
    assert F_COEFFICIENTS[0] == 2621440
    assert F_COEFFICIENTS[20] == 98305
    assert F_COEFFICIENTS[19] == 12386590
    assert all(c % 5 == 0 for c in F_COEFFICIENTS)
    assert F_divisible_by(5)
    assert not F_divisible_by(7)


def test_F_at_zero_is_its_constant_term():

    assert evaluate_F(make_series([0] * 11)).coefficients() == [2621440] + [0] * 10


def test_F_of_p_vanishes_mod_5():

    assert reduce_mod(evaluate_F(compute_p(200)), 5).is_zero()


def test_p_series():

    p = compute_p(300)
    assert p[0] == 0
    assert p.coefficients()[:3] == [0, 2, 2]
    assert p == p_eta_form(300)
    assert p_leading_coefficients() == (2, 2)


def test_p_eta_form_has_f6_to_the_ninth_in_the_denominator():

    assert P_ETA.as_dict() == {1: -1, 2: 3, 3: 3, 4: -2, 6: -9, 12: 6}
    p = compute_p(120)
    assert p == evaluate("2*q*f2^3*f3^3*f12^6/(f1*f4^2*f6^9)", 120)
    assert p != evaluate("2*q*f2^3*f3^3*f12^6/(f1*f4^2*f9^6)", 120)


def test_k_series():

    k = compute_k(300)
    assert k[0] == 1
    assert mul(k, phi(300)) == pow_series(phi(300, level=3), 3)


@pytest.mark.parametrize("form", INTEGRAL_FORMS, ids=lambda form: form.id)
def test_integral_forms(form):

    assert verify_integral_form(form, 200).passed


def test_R7_passes():

    report = verify_R7(100)
    assert report.passed
    assert report.order_checked == 100


def test_R7_detects_a_changed_coefficient():

    changed = (F_COEFFICIENTS[0] + 1,) + F_COEFFICIENTS[1:]
    report = verify_R7(30, changed)
    assert report.status == "fail"
    assert report.first_mismatch.exponent == 0
    assert (report.first_mismatch.lhs, report.first_mismatch.rhs) == (0, 1)
