"""Relaxed Wyner common information for jointly Gaussian sources.

All information quantities are in nats.
"""

from ._core import (  # noqa: F401
    Allocation,
    InputError,
    NumericalError,
    achievability_params,
    breakpoints,
    c_of_rho,
    canonical_correlations,
    common_rate,
    dual_objective_g_mu,
    ell_of_nu,
    evaluate_allocation,
    f_of_beta,
    g_of_gamma,
    i_of_rho,
    mu_star,
    nu_star,
    oracle,
    pinv_sqrt,
    validate_cov,
    waterfill,
    wyner_ci_scalar,
    wyner_ci_vector,
)

__version__ = "1.0.0"
