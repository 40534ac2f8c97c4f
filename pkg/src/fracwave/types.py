"""Shared result containers and argument validation helpers."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

#: library-wide default tolerance for special-function evaluations
DEFAULT_TOL = 1e-12

#: default absolute accuracy for single-point Green function evaluations
DEFAULT_EPS = 1e-10

#: default absolute accuracy for sampled profiles
PROFILE_EPS = 1e-8


@dataclass(frozen=True)
class EvalResult:
    """A numerical value together with an absolute error bound.

    Attributes
    ----------
    value : float
        Computed value.
    abs_err : float
        Bound on the absolute error of ``value``.  Routines only return
        normally when the bound is at or below the tolerance they were
        asked for, so ``abs_err`` can be trusted downstream.
    """

    value: float
    abs_err: float

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise DomainError(f"non-finite value {self.value!r}")
        if not (self.abs_err >= 0.0 and math.isfinite(self.abs_err)):
            raise DomainError(f"invalid error bound {self.abs_err!r}")


@dataclass(frozen=True)
class TruncationPlan:
    """Finite truncation of the spectral integral over wave numbers.

    The integral over [0, a] is split into ``panels``; everything beyond
    ``a`` is covered by ``tail_estimate``, a bound on the magnitude of the
    discarded tail.
    """

    a: float
    eps: float
    panels: np.ndarray  # shape (n, 2), consecutive subintervals of [0, a]
    tail_estimate: float

    def __post_init__(self):
        p = np.asarray(self.panels, float)
        if p.ndim != 2 or p.shape[1] != 2:
            raise DomainError("panels must have shape (n, 2)")
        if not (p[0, 0] == 0.0 and abs(p[-1, 1] - self.a) <= 1e-9 * self.a):
            raise DomainError("panels must cover [0, a]")
        if not (np.all(p[:, 1] > p[:, 0]) and np.all(p[1:, 0] == p[:-1, 1])):
            raise DomainError("panels must be increasing and contiguous")
        if not (0.0 <= self.tail_estimate <= self.eps):
            raise DomainError("tail estimate exceeds the accuracy target")


@dataclass(frozen=True)
class GreenProfile:
    """Green function sampled on a spatial grid at one time.

    ``accuracy`` holds a per-sample absolute error bound; ``values`` may
    dip below zero only within that bound.
    """

    nu: float
    t: float
    grid: np.ndarray
    values: np.ndarray
    accuracy: np.ndarray

    def __post_init__(self):
        g = np.asarray(self.grid, float)
        v = np.asarray(self.values, float)
        a = np.asarray(self.accuracy, float)
        if not (g.ndim == 1 and g.shape == v.shape == a.shape):
            raise DomainError("grid, values and accuracy must be equal-length 1-d arrays")
        if g.size and not (g[0] >= 0.0 and np.all(np.diff(g) > 0.0)):
            raise DomainError("grid must be strictly increasing and nonnegative")
        if np.any(v < -a):
            raise DomainError("negative density beyond the stated accuracy")


@dataclass(frozen=True)
class ExtremumCoeffs:
    """Self-similar coefficients of the moving maximum at one order.

    The maximum of the fundamental solution sits at ``x = c * t**nu`` and
    has height ``m * t**(-nu)``.  ``c_tol`` and ``m_tol`` are the absolute
    accuracies actually achieved for ``c`` and ``m``.
    """

    nu: float
    c: float
    m: float
    c_tol: float
    m_tol: float

    def __post_init__(self):
        if not (self.c >= 0.0 and self.m > 0.0):
            raise DomainError("coefficients must be nonnegative (m positive)")
        if not (self.c_tol >= 0.0 and self.m_tol >= 0.0):
            raise DomainError("negative tolerance")


def check_nu(nu, *, exclude_half=False, exclude_one=False) -> float:
    """Validate an order parameter nu in [1/2, 1] and return it as float."""
    nu = float(nu)
    if not (math.isfinite(nu) and 0.5 <= nu <= 1.0):
        raise DomainError(f"order nu={nu!r} outside [1/2, 1]")
    if exclude_half and nu == 0.5:
        raise DomainError("nu = 1/2 is the diffusion endpoint; use the closed form")
    if exclude_one and nu == 1.0:
        raise DomainError("wave endpoint is analytic (delta)")
    return nu


def check_alpha(alpha) -> float:
    """Validate a Mittag-Leffler order alpha in [1, 2] and return it as float."""
    alpha = float(alpha)
    if not (math.isfinite(alpha) and 1.0 <= alpha <= 2.0):
        raise DomainError(f"order alpha={alpha!r} outside [1, 2]")
    return alpha


def check_nonneg(x, name) -> float:
    x = float(x)
    if not (math.isfinite(x) and x >= 0.0):
        raise DomainError(f"{name}={x!r} must be finite and nonnegative")
    return x


def check_positive(x, name) -> float:
    x = float(x)
    if not (math.isfinite(x) and x > 0.0):
        raise DomainError(f"{name}={x!r} must be finite and positive")
    return x


def check_tol(tol) -> float:
    tol = float(tol)
    if not (math.isfinite(tol) and 0.0 < tol <= 0.1):
        raise DomainError(f"tolerance {tol!r} outside (0, 0.1]")
    return tol
