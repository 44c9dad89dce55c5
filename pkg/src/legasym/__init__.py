"""Uniform asymptotic expansions of associated Legendre, Ferrers and conical functions.

Evaluators live in :mod:`legasym.expand`; the coefficient machinery in
:mod:`legasym.coeffs`; convergent-series reference values in
:mod:`legasym.oracle`; the identity checks in :mod:`legasym.verify`.
"""

from .arith import FAST, VERIFY, Precision, Side, current_precision, set_precision
from .errors import LegasymError
from .expand import (
    EvalResult,
    Method,
    Regime,
    RegimeRequest,
    conical_large_tau,
    evaluate,
    ferrers_conical,
    ferrers_large_mu_LG,
    ferrers_large_nu,
    legendre_large_mu,
    legendre_large_mu_imag,
    legendre_large_nu,
    legendre_large_nu_imag_mu,
)

__version__ = "0.1.0"

__all__ = [
    "FAST",
    "VERIFY",
    "Precision",
    "Side",
    "current_precision",
    "set_precision",
    "LegasymError",
    "EvalResult",
    "Method",
    "Regime",
    "RegimeRequest",
    "evaluate",
    "legendre_large_nu",
    "legendre_large_nu_imag_mu",
    "conical_large_tau",
    "legendre_large_mu",
    "legendre_large_mu_imag",
    "ferrers_large_nu",
    "ferrers_conical",
    "ferrers_large_mu_LG",
]
