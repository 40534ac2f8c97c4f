"""Double-double arithmetic on numpy arrays.

A value is carried as an unevaluated sum hi + lo of two float64 numbers
with |lo| <= ulp(hi)/2, giving roughly 32 significant digits.  That is
enough headroom to sum the alternating special-function series of this
package through their cancellation humps without extended-precision
libraries in the hot path.  Classic Dekker/Knuth error-free transforms;
no fma is assumed.
"""

from __future__ import annotations

import numpy as np

#: unit roundoff of the hi+lo pair (2**-104)
DD_EPS = 2.0 ** -104

_SPLITTER = 134217729.0  # 2**27 + 1, Dekker splitting constant


def two_sum(a, b):
    """Error-free sum: a + b = s + e exactly."""
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def fast_two_sum(a, b):
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def _split(a):
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def two_prod(a, b):
    """Error-free product: a * b = p + e exactly."""
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    e = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, e


def dd_add(xh, xl, yh, yl):
    sh, sl = two_sum(xh, yh)
    sl = sl + (xl + yl)
    return fast_two_sum(sh, sl)


def dd_mul(xh, xl, yh, yl):
    ph, pl = two_prod(xh, yh)
    pl = pl + (xh * yl + xl * yh)
    return fast_two_sum(ph, pl)


def dd_mul_f(xh, xl, f):
    """Multiply a dd pair by a plain float64 array or scalar."""
    ph, pl = two_prod(xh, f)
    pl = pl + xl * f
    return fast_two_sum(ph, pl)


def dd_from_mp(values, mpf_cls=None):
    """Split an iterable of mpmath numbers into (hi, lo) float64 arrays."""
    hi = np.empty(len(values))
    lo = np.empty(len(values))
    for i, v in enumerate(values):
        h = float(v)
        hi[i] = h
        lo[i] = float(v - h)
    return hi, lo
