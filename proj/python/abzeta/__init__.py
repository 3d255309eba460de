"""Exact subgroup sums sigma_a of finite abelian p-groups and their generating series."""

from fractions import Fraction

from . import _core
from ._core import (
    BudgetExceeded,
    DomainError,
    NonIntegerCoefficient,
    NonIntegralPower,
    NotDivisible,
    PoleHit,
    det_numerator,
    series_numerator,
    sigma_poly,
)

__all__ = [
    "BudgetExceeded",
    "DomainError",
    "NonIntegerCoefficient",
    "NonIntegralPower",
    "NotDivisible",
    "PoleHit",
    "det_numerator",
    "dirichlet_p_factor",
    "order_profile",
    "run_cli",
    "series_numerator",
    "sigma_poly",
    "sigma_value",
]


def sigma_value(p, a, f, method="fast"):
    """sigma_a([p; f_1, ..., f_r]) as an exact Fraction."""
    return Fraction(_core.sigma_value(int(p), int(a), list(f), method))


def order_profile(p, f):
    """Number of subgroups of order p^k, k = 0..log_p |F|."""
    return [int(c) for c in _core.order_profile(int(p), list(f))]


def dirichlet_p_factor(rank, a, p, s):
    """Q_{r,a} at q = p^a, X_t = p^(-s(r-t+1)), exactly. s may be int, str or Fraction."""
    return Fraction(_core.dirichlet_p_factor(int(rank), int(a), int(p), str(Fraction(s))))


def run_cli(*args):
    """Runs `abzeta args...` in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(x) for x in args])
