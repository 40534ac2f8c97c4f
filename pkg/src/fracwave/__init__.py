"""Fundamental solution of the time-fractional diffusion-wave equation.

The library evaluates the self-similar Green function G(x, t) for
orders nu in [1/2, 1) (half the fractional derivative order), the
special functions it is built from (Mittag-Leffler, Wright, Mainardi),
and the laws of its moving maximum: location x*(t) = c * t**nu, height
G*(t) = m * t**-nu, propagation speed, and the invariant product c * m.
Every evaluation returns a value together with an absolute error bound.
"""

from .errors import (
    AsymptoticDivergence,
    BracketFailure,
    CancellationLoss,
    DomainError,
    FracwaveError,
    NonConvergence,
)
from .extremum import (
    coefficients,
    hyperbola_track,
    max_location,
    max_location_coeff,
    max_value,
    max_value_coeff,
    product_constant,
    propagation_speed,
)
from .green_function import green, green_similarity, plan_truncation, profile
from .mittag_leffler import ml, ml_asymptotic, ml_series, x_switch
from .types import (
    DEFAULT_EPS,
    DEFAULT_TOL,
    PROFILE_EPS,
    EvalResult,
    ExtremumCoeffs,
    GreenProfile,
    TruncationPlan,
)
from .wright_mainardi import mainardi_f, mainardi_m, mainardi_m_prime, wright

__version__ = "0.1.0"

__all__ = [
    "AsymptoticDivergence",
    "BracketFailure",
    "CancellationLoss",
    "DEFAULT_EPS",
    "DEFAULT_TOL",
    "DomainError",
    "EvalResult",
    "ExtremumCoeffs",
    "FracwaveError",
    "GreenProfile",
    "NonConvergence",
    "PROFILE_EPS",
    "TruncationPlan",
    "coefficients",
    "green",
    "green_similarity",
    "hyperbola_track",
    "mainardi_f",
    "mainardi_m",
    "mainardi_m_prime",
    "max_location",
    "max_location_coeff",
    "max_value",
    "max_value_coeff",
    "ml",
    "ml_asymptotic",
    "ml_series",
    "plan_truncation",
    "product_constant",
    "profile",
    "propagation_speed",
    "wright",
    "x_switch",
]
