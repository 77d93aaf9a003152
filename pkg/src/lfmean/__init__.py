"""Exact mean values of products of Dirichlet L-functions at positive integers."""

from .exact import bernoulli, binomial, zeta_even_rational
from .formulas import (
    IdentityReport,
    MeanValueFormula,
    c_coefficient,
    check_bernoulli_identity,
    evaluate_exact,
    evaluate_numeric,
    mean_value,
    mean_value_all_ones,
    mean_value_pair,
    mean_value_single,
)
from .series import PolyQ, SeriesPQ, r_m_closed, r_polynomial, t_polynomial

__all__ = [
    "IdentityReport",
    "MeanValueFormula",
    "PolyQ",
    "SeriesPQ",
    "bernoulli",
    "binomial",
    "c_coefficient",
    "check_bernoulli_identity",
    "evaluate_exact",
    "evaluate_numeric",
    "mean_value",
    "mean_value_all_ones",
    "mean_value_pair",
    "mean_value_single",
    "r_m_closed",
    "r_polynomial",
    "t_polynomial",
    "zeta_even_rational",
]
