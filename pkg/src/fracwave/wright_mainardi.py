"""Wright function on the negative real axis and the Mainardi functions.

W_{lam,mu}(-r) = sum_n (-r)^n / (n! Gamma(lam n + mu)) for lam > -1.
The auxiliary functions of order nu are the special parameter lines

    M_nu(r)  = W_{-nu, 1-nu}(-r)
    F_nu(r)  = W_{-nu, 0}(-r) = nu r M_nu(r)
    M'_nu(r) = -W_{-nu, 1-2nu}(-r)

The derivative line follows from differentiating the M series term by
term and shifting the summation index down by one; the sign comes from
the chain rule on (-r)^n.  At nu = 1/2 its n = 0 coefficient is
1/Gamma(0) = 0, which reproduces M'_{1/2}(0) = 0 of the Gaussian closed
form (the unshifted term-wise series is easy to misread as giving a
nonzero value here; the finite-difference oracle settles it).

Pole terms contribute exactly zero through the reciprocal gamma.  The
series loses digits as r grows, faster the closer nu is to 1; the
cancellation guard raises CancellationLoss there and callers fall back
to the spectral-integral route.
"""

from __future__ import annotations

import math

import numpy as np

from ._series import sum_series, wright_coeffs
from .errors import CancellationLoss, DomainError
from .types import DEFAULT_TOL, EvalResult, check_nonneg, check_nu, check_tol

# generous term budget; the envelope hump at the edge of the dd-reliable
# region needs ~1400 terms for nu near 1 (see _series for the stop rule)
_TERM_CAP = 4000


def wright(lam, mu, r, tol=DEFAULT_TOL) -> EvalResult:
    """W_{lam,mu}(-r) by series, r >= 0, lam > -1.

    Raises CancellationLoss when the guard finds the cancellation hump too
    tall for the requested tolerance at working precision (large r, or
    lam approaching -1).
    """
    lam = float(lam)
    mu = float(mu)
    if not (math.isfinite(lam) and lam > -1.0):
        raise DomainError(f"lambda={lam!r} outside (-1, inf)")
    if not math.isfinite(mu):
        raise DomainError("mu must be finite")
    r = check_nonneg(r, "r")
    tol = check_tol(tol)
    val, err, _ = sum_series(
        wright_coeffs(lam, mu), np.array([r]), tol, _TERM_CAP, CancellationLoss)
    return EvalResult(float(val[0]), float(err[0]))


def mainardi_m(nu, r, tol=DEFAULT_TOL) -> EvalResult:
    """M_nu(r) = W_{-nu,1-nu}(-r), the density kernel of the similarity form."""
    nu = check_nu(nu, exclude_one=True)
    return wright(-nu, 1.0 - nu, r, tol)


def mainardi_f(nu, r, tol=DEFAULT_TOL) -> EvalResult:
    """F_nu(r) = nu r M_nu(r).

    Computed through mainardi_m; the identity with W_{-nu,0}(-r) is a
    test surface, not a second code path.
    """
    nu = check_nu(nu, exclude_one=True)
    r = check_nonneg(r, "r")
    m = mainardi_m(nu, r, tol)
    scale = nu * r
    return EvalResult(scale * m.value, scale * m.abs_err + 5e-324)


def mainardi_m_prime(nu, r, tol=DEFAULT_TOL) -> EvalResult:
    """d/dr M_nu(r), the critical-point function of the moving maximum.

    Term-wise differentiated M series, reindexed: -W_{-nu,1-2nu}(-r).
    """
    nu = check_nu(nu, exclude_one=True)
    w = wright(-nu, 1.0 - 2.0 * nu, r, tol)
    return EvalResult(-w.value, w.abs_err)
