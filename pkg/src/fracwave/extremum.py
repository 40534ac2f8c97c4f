"""Location and height of the moving maximum of the fundamental solution.

The maximum of G(., t; nu) sits at x*(t) = c t^nu with height
G* = m t^-nu; everything here reduces to the two coefficients (c, m) at
t = 1.  c is located on the similarity profile by a coarse scan plus
golden-section search (robust to the eps-level noise of the quadrature
objective), then polished by bisection on the derivative series, whose
root is sharp to ~1e-12 wherever that series is reliable - which covers
the whole supported order range.  m is the profile value at c.

Endpoints are exact: c = 0, m = 1/(2 sqrt pi) at nu = 1/2 and c = 1 at
nu = 1 (the wave pulse travels at unit speed; its height is not a
number).  Orders above 0.995 are refused: the density collapses toward
the moving delta, m blows up, and the quadrature window outgrows desk
scale.  Computed pairs carry a three-point local-max certificate.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .errors import BracketFailure, CancellationLoss, DomainError, NonConvergence
from .green_function import _similarity_batch, green_similarity
from .types import DEFAULT_EPS, ExtremumCoeffs, check_nu, check_positive, check_tol
from .wright_mainardi import mainardi_m_prime

#: orders above this are the documented blow-up neighborhood of nu = 1
NU_CAP = 0.995

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_M_HALF = 0.5 / math.sqrt(math.pi)  # m at the diffusion endpoint


def _golden_max(f, a, b, xtol):
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while (b - a) > xtol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def _polish_bisect(nu, c0, tol):
    """Root of the derivative series near c0; returns (c, half_width)."""
    half = 1e-3
    for _ in range(5):
        lo = max(c0 - half, 1e-12)
        hi = c0 + half
        try:
            flo = mainardi_m_prime(nu, lo, tol).value
            fhi = mainardi_m_prime(nu, hi, tol).value
        except CancellationLoss:
            return None
        if flo > 0.0 > fhi:
            break
        half *= 4.0
    else:
        return None
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if mainardi_m_prime(nu, mid, tol).value > 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-12:
            break
    return 0.5 * (lo + hi), 0.5 * (hi - lo)


def _certify(nu, c, m, c_tol, eps):
    """Three-point local-max certificate at spacing 100 * c_tol."""
    delta = 100.0 * max(c_tol, 1e-6)
    center = green_similarity(nu, c, eps).value
    probes = [c + delta]
    if c - delta > 0.0:
        probes.append(c - delta)
    for p in probes:
        if not green_similarity(nu, p, eps).value < center:
            raise NonConvergence(
                f"local-max certificate failed at nu={nu}: the profile is "
                f"not lower {delta:.1e} away from the computed maximizer")


@lru_cache(maxsize=512)
def _coeffs_cached(nu, tol, eps):
    if nu == 0.5:
        return ExtremumCoeffs(nu=nu, c=0.0, m=_M_HALF,
                              c_tol=0.0, m_tol=_M_HALF * 2.3e-16)
    # near the diffusion endpoint the profile is extremely flat around its
    # maximizer, so the scan objective gets a tightened accuracy
    eps_obj = 1e-12 if nu < 0.505 else eps
    rs = np.linspace(0.0, 2.0, 33)
    vals, _ = _similarity_batch(nu, rs, eps_obj)
    i = int(vals.argmax())
    if i == rs.size - 1:
        rs = np.linspace(2.0, 4.0, 17)
        vals, _ = _similarity_batch(nu, rs, eps_obj)
        i = int(vals.argmax())
        if i == 0 or i == rs.size - 1:
            raise BracketFailure(
                f"no interior maximum bracket found in [0, 4] at nu={nu}")
    lo = rs[i - 1] if i > 0 else rs[0]
    hi = rs[i + 1]

    def f(r):
        return green_similarity(nu, float(r), eps_obj).value

    c = _golden_max(f, float(lo), float(hi), 1e-4)
    c_tol = 2e-4  # golden certifies no better, the objective carries noise
    polished = _polish_bisect(nu, c, min(tol, 1e-12))
    if polished is not None:
        c, half_w = polished
        c_tol = max(half_w, 5e-13)
    if c_tol > tol:
        raise NonConvergence(
            f"maximizer at nu={nu} located to {c_tol:.1e} only; "
            f"requested {tol:.1e}")
    g = green_similarity(nu, c, eps)
    _certify(nu, c, g.value, c_tol, min(eps, 1e-11))
    return ExtremumCoeffs(nu=nu, c=c, m=g.value, c_tol=c_tol, m_tol=g.abs_err)


def coefficients(nu, tol=1e-8, eps=DEFAULT_EPS) -> ExtremumCoeffs:
    """The certified pair (c, m) at order nu, cached across calls.

    tol bounds the error of c; eps is the accuracy of the profile values
    behind m and the certificate.  nu = 1 is rejected here because m has
    no finite value there; use max_location_coeff for its c.
    """
    nu = check_nu(nu, exclude_one=True)
    tol = check_tol(tol)
    eps = check_tol(eps)
    if nu > NU_CAP:
        raise DomainError(
            f"orders above {NU_CAP} approach the wave endpoint blow-up "
            "and are not computed")
    return _coeffs_cached(nu, tol, eps)


def max_location_coeff(nu, tol=1e-8) -> float:
    """c: the maximizer of the similarity profile; x*(t) = c t^nu."""
    nu = check_nu(nu)
    if nu == 0.5:
        return 0.0
    if nu == 1.0:
        return 1.0
    return coefficients(nu, tol).c


def max_value_coeff(nu, c, tol=DEFAULT_EPS) -> float:
    """m: profile height at the maximizer c; G*(t) = m t^-nu.

    The caller supplies c = max_location_coeff(nu); this evaluates the
    profile there rather than re-searching.
    """
    nu = check_nu(nu, exclude_one=True)
    if nu == 0.5:
        return _M_HALF
    return green_similarity(nu, c, tol).value


def max_location(nu, t) -> float:
    """x*(t) = c t^nu."""
    nu = check_nu(nu)
    t = check_positive(t, "t")
    if nu == 1.0:
        return t
    if nu == 0.5:
        return 0.0
    return coefficients(nu).c * t ** nu


def max_value(nu, t) -> float:
    """G*(t) = m t^-nu."""
    nu = check_nu(nu, exclude_one=True)
    t = check_positive(t, "t")
    if nu == 0.5:
        return _M_HALF / math.sqrt(t)
    return coefficients(nu).m * t ** -nu


def propagation_speed(nu, t) -> float:
    """v(t) = d/dt x*(t) = nu c t^(nu-1).

    Zero for diffusion, the constant 1 for the wave endpoint, and for
    orders in between a decreasing function of t: faster than the wave
    pulse at small times, slower at large times.
    """
    nu = check_nu(nu)
    t = check_positive(t, "t")
    if nu == 1.0:
        return 1.0
    if nu == 0.5:
        return 0.0
    return nu * coefficients(nu).c * t ** (nu - 1.0)


def product_constant(nu) -> float:
    """x*(t) * G*(t) = c m, independent of t."""
    nu = check_nu(nu, exclude_one=True)
    if nu == 0.5:
        return 0.0
    co = coefficients(nu)
    return co.c * co.m


def hyperbola_track(nu, t_grid) -> list:
    """(x*(t), G*(t)) pairs along t_grid; they trace x G = c m."""
    nu = check_nu(nu, exclude_half=True, exclude_one=True)
    ts = [check_positive(t, "t") for t in np.asarray(t_grid, float)]
    co = coefficients(nu)
    return [(co.c * t ** nu, co.m * t ** -nu) for t in ts]
