# probability/__init__.py
"""
Probability module: splitting formula and vacuum moment generating function.

Provides:
- Closed-form splitting coefficients, ODE residuals, Riccati form (from splitting.py)
- MGF closed form, oracle, moments, Gaussian and gamma factors (from splitting.py)
"""

from probability.splitting import (
    MGFRow,
    QuadraticExponentParams,
    RiccatiForm,
    SplittingCoefficients,
    closed_form_w,
    gamma_factor,
    gaussian_exponent,
    gaussian_variance,
    is_gaussian,
    mgf_closed_form,
    mgf_moments,
    mgf_oracle,
    mgf_params,
    mgf_table,
    ode_residuals,
    riccati_canonical,
    verify_splitting,
)

__all__ = [
    "MGFRow",
    "QuadraticExponentParams",
    "RiccatiForm",
    "SplittingCoefficients",
    "closed_form_w",
    "gamma_factor",
    "gaussian_exponent",
    "gaussian_variance",
    "is_gaussian",
    "mgf_closed_form",
    "mgf_moments",
    "mgf_oracle",
    "mgf_params",
    "mgf_table",
    "ode_residuals",
    "riccati_canonical",
    "verify_splitting",
]
