"""Coefficient tables and the summation engine for the alternating series.

Every special function in this package reduces, on its evaluation domain,
to a single shape

    S(x) = sum_{n>=0} (-x)^n c_n,   x >= 0,

with coefficients from one of two families:

    "ml"      c_n = 1/Gamma(a n + 1)          (Mittag-Leffler)
    "wright"  c_n = 1/(n! Gamma(lam n + mu))  (Wright, here lam < 0)

Both alternate through a cancellation hump whose height grows exponentially
with x, so partial sums are accumulated in double-double arithmetic (about
31 digits) and a hump of up to ~1e18 still leaves 1e-13 absolute accuracy.

Truncation decisions never look at the computed terms.  The Wright
coefficients carry a sin(pi(lam n + mu)) factor through the reflection
formula, and its zeros make individual terms arbitrarily small long before
the series has converged.  Instead each table stores lenv[n], the log of a
sign-free envelope with |c_n| <= exp(lenv[n]), and summation stops at the
first index past the envelope hump whose geometric tail bound drops below
the tolerance.

Tables are built with mpmath once per parameter set, split into (hi, lo)
float64 pairs, cached, and grown geometrically on demand.  Access is
synchronized; the cache is invisible to callers.

Coefficients and running powers are both carried as a mantissa pair with
a separate binary exponent: far along a series, c_n alone underflows and
x**n alone overflows float64 while their product, capped by the
cancellation guard, is still an ordinary number.
"""

from __future__ import annotations

import math
import threading

import mpmath as mp
import numpy as np

from ._dd import DD_EPS, dd_add, dd_mul, dd_mul_f

_BUILD_DPS = 40
_LOG_PI = math.log(math.pi)
# log(4 * DD_EPS), the per-unit-of-|partial sum| roundoff of the dd loop
_LOG_ROUND = math.log(4.0) - 104.0 * math.log(2.0)

# slope gate for the geometric tail bound.  The log envelope is concave
# in n past its hump for both families, so any negative slope gives a
# valid bound; near nu = 1 the Wright envelope decays at only
# ~(1-nu) log n per term and a loose gate is what makes it stoppable.
_RHO_MIN = 1e-4


class SeriesTable:
    """Coefficients of one series family as scaled dd pairs plus envelope.

    c_n = (hi[n] + lo[n]) * 2**cexp[n] with the mantissa in [0.5, 1).
    """

    __slots__ = ("key", "hi", "lo", "cexp", "lenv", "_lock")

    def __init__(self, key):
        self.key = key
        self.hi = np.empty(0)
        self.lo = np.empty(0)
        self.cexp = np.empty(0, np.int32)
        self.lenv = np.empty(0)
        self._lock = threading.Lock()

    def ensure(self, n):
        """Grow to at least n entries; returns (hi, lo, cexp, lenv)."""
        snap = self.hi, self.lo, self.cexp, self.lenv
        if len(snap[0]) >= n:
            return snap
        with self._lock:
            if len(self.hi) >= n:
                return self.hi, self.lo, self.cexp, self.lenv
            new_n = max(n, 2 * len(self.hi), 96)
            self._build(new_n)
            return self.hi, self.lo, self.cexp, self.lenv

    def _build(self, new_n):
        start = len(self.hi)
        grow = np.empty(new_n - start)
        hi = np.concatenate([self.hi, grow])
        lo = np.concatenate([self.lo, grow])
        cexp = np.concatenate([self.cexp, np.empty(new_n - start, np.int32)])
        lenv = np.concatenate([self.lenv, grow])
        kind = self.key[0]
        with mp.workdps(_BUILD_DPS):
            if kind == "ml":
                a = mp.mpf(self.key[1])
                for n in range(start, new_n):
                    z = a * n + 1
                    hi[n], lo[n], cexp[n] = _split_scaled(mp.rgamma(z))
                    lenv[n] = float(-mp.loggamma(z))
            else:
                lam = mp.mpf(self.key[1])
                mu = mp.mpf(self.key[2])
                for n in range(start, new_n):
                    z = lam * n + mu
                    v = mp.rgamma(z) / mp.factorial(n)
                    hi[n], lo[n], cexp[n] = _split_scaled(v)
                    if z < 0.5:
                        # reflection, |1/Gamma(z)| <= Gamma(1-z)/pi
                        lenv[n] = float(
                            mp.loggamma(1 - z) - mp.loggamma(n + 1)) - _LOG_PI
                    else:
                        # no pole possible here, the coefficient is positive
                        lenv[n] = float(-mp.loggamma(z) - mp.loggamma(n + 1))
        # atomic swap so concurrent readers keep a consistent snapshot
        self.hi, self.lo, self.cexp, self.lenv = hi, lo, cexp, lenv


def _split_scaled(v):
    """mpf -> (hi, lo, e) with v = (hi + lo) * 2**e, |hi| in [0.5, 1)."""
    if v == 0:
        return 0.0, 0.0, 0
    e = int(mp.mag(v))
    m = mp.ldexp(v, -e)
    h = float(m)
    return h, float(m - h), e


_tables: dict[tuple, SeriesTable] = {}
_tables_lock = threading.Lock()


def _table(key) -> SeriesTable:
    tab = _tables.get(key)
    if tab is None:
        with _tables_lock:
            tab = _tables.setdefault(key, SeriesTable(key))
    return tab


def ml_coeffs(alpha) -> SeriesTable:
    return _table(("ml", float(alpha)))


def wright_coeffs(lam, mu) -> SeriesTable:
    return _table(("wright", float(lam), float(mu)))


def _stop_index(table, lxm, tol, max_terms, err_cls, peak_cut):
    """Smallest n past the envelope hump whose tail bound is below tol/4.

    lxm is log of the largest argument in the batch.  Returns (n, peak)
    where peak = max_n (lenv[n] + n*lxm).  Raises err_cls when max_terms
    is reached first or when peak exceeds peak_cut (roundoff budget).
    """
    target = math.log(tol) - math.log(4.0)
    n_have = 96
    while True:
        lenv = table.ensure(n_have)[3]
        n_av = len(lenv)
        lb = lenv + np.arange(n_av) * lxm
        peak = float(lb.max())
        if peak > peak_cut:
            raise err_cls(
                "alternating-series hump exceeds the working-precision "
                "budget for this tolerance (argument too large)")
        i_pk = int(lb.argmax())
        rho = np.diff(lb)
        past = (np.arange(n_av - 1) > i_pk) & (rho < -_RHO_MIN)
        with np.errstate(over="ignore"):
            tail = np.where(
                past, lb[:-1] - np.log1p(-np.exp(np.minimum(rho, -_RHO_MIN))),
                np.inf)
        hits = np.nonzero(past & (tail <= target))[0]
        if hits.size and hits[0] <= max_terms:
            return int(hits[0]), peak
        if n_av >= max_terms + 2:
            raise err_cls(
                f"series not converged within {max_terms} terms")
        n_have = min(2 * n_av, max_terms + 2)


def sum_series(table, x, tol, max_terms, err_cls):
    """Evaluate S(x) = sum (-x)^n c_n for a 1-d array of x >= 0.

    Returns (value, abs_err, n_terms) with per-point error bounds that
    cover truncation, dd roundoff, and the final collapse to float64.
    Raises err_cls when the term budget or the cancellation guard blocks
    the requested tolerance.
    """
    x = np.atleast_1d(np.asarray(x, float))
    hi, lo, cexp, lenv = table.ensure(4)
    if x.size == 0:
        return np.empty(0), np.empty(0), 0
    lx = np.where(x > 0.0, np.log(np.maximum(x, 1e-300)), -np.inf)
    lxm = float(lx.max())
    if lxm == -np.inf:
        # every point is zero, only the n = 0 term survives
        val = np.full_like(x, np.ldexp(hi[0] + lo[0], int(cexp[0])))
        return val, np.abs(val) * 1.2e-16, 1

    peak_cut = math.log(tol) - _LOG_ROUND  # 4*DD_EPS*exp(peak) <= tol
    n_stop, _ = _stop_index(table, lxm, tol, max_terms, err_cls, peak_cut)
    hi, lo, cexp, lenv = table.ensure(n_stop + 2)

    sh = np.zeros_like(x)
    sl = np.zeros_like(x)
    # running power (-x)**n as a scaled mantissa pair: (ph + pl) * 2**pe
    ph = np.ones_like(x)
    pl = np.zeros_like(x)
    pe = np.zeros(x.shape, np.int32)
    sabs = np.zeros_like(x)
    nx = -x
    for n in range(n_stop):
        th, tl = dd_mul(ph, pl, hi[n], lo[n])
        e = pe + int(cexp[n])
        th = np.ldexp(th, e)
        tl = np.ldexp(tl, e)
        sh, sl = dd_add(sh, sl, th, tl)
        sabs += np.abs(th)
        ph, pl = dd_mul_f(ph, pl, nx)
        ph, e = np.frexp(ph)
        pl = np.ldexp(pl, -e)
        pe += e

    round_err = (4.0 * DD_EPS) * sabs
    if float(round_err.max()) > tol:
        raise err_cls(
            "cancellation guard tripped: roundoff budget exceeds the "
            "requested tolerance")
    # geometric tail bound from the envelope at the first omitted term;
    # every point's slope is at most the one the stop index was gated on
    rho = (lenv[n_stop + 1] - lenv[n_stop]) + lx
    with np.errstate(over="ignore"):
        fac = 1.0 / -np.expm1(np.minimum(rho, -_RHO_MIN))
    trunc = np.exp(lenv[n_stop] + n_stop * lx) * fac
    val = sh + sl
    err = trunc + round_err + np.abs(val) * 1.2e-16
    return val, err, n_stop
