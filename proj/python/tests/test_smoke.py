from fractions import Fraction

import pytest

import abzeta


def test_sigma_polynomial():
    assert abzeta.sigma_poly([1, 1]) == "q^3 + (p+1)*q^2 + (p+1)*q + 1"
    for method in ("slow", "fast", "closed"):
        assert abzeta.sigma_poly([2, 1, 1], method) == abzeta.sigma_poly([2, 1, 1])


def test_sigma_values():
    assert abzeta.sigma_value(2, -1, [1, 1]) == Fraction(27, 8)
    assert abzeta.sigma_value(3, 1, [2]) == 13
    assert abzeta.sigma_value(2, 0, [1, 0], method="oracle") == 5


def test_order_profile():
    assert abzeta.order_profile(2, [1, 0]) == [1, 3, 1]
    assert sum(abzeta.order_profile(2, [1, 1])) == 8
    assert abzeta.order_profile(101, [1, 0]) == [1, 102, 1]


def test_series():
    assert abzeta.series_numerator(2) == "1 + q*X1 - q*(q+1)*X1*X2"
    det = abzeta.det_numerator(4, q_one=True)
    assert max(det) == 26
    assert det[3] == "2*p"


def test_dirichlet():
    assert abzeta.dirichlet_p_factor(1, 0, 2, 2) == Fraction(16, 9)
    assert abzeta.dirichlet_p_factor(1, 1, 2, "3") == Fraction(32, 21)
    with pytest.raises(ZeroDivisionError):
        abzeta.dirichlet_p_factor(1, 0, 2, 0)
    with pytest.raises(ValueError):
        abzeta.dirichlet_p_factor(1, 0, 2, Fraction(1, 3))


def test_errors():
    with pytest.raises(abzeta.DomainError):
        abzeta.sigma_value(4, 0, [1])
    with pytest.raises(abzeta.BudgetExceeded):
        abzeta.order_profile(2, [30])


def test_cli():
    code, out, _ = abzeta.run_cli("sigma", "--p", 2, "--f", "1,1", "--method", "all")
    assert code == 0
    assert "agreement: yes" in out
    code, _, err = abzeta.run_cli("series", "--rank", 9)
    assert code == 3
    assert "rank" in err
