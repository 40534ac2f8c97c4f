import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracwave import (
    AsymptoticDivergence,
    DomainError,
    NonConvergence,
    ml,
    ml_asymptotic,
    ml_series,
    x_switch,
)
from fracwave.mittag_leffler import ml_grid

# ---------------------------------------------------------------------------
# frozen oracle values: brute partial sums of the defining Taylor series in
# mpmath at 200 digits (smooth positive coefficients, no extrapolation), and
# for large x the 16-term reciprocal-power expansion plus the saddle mode at
# 40 digits, cross-checked against the series on the overlap x in [100, 400]

ORACLE_SERIES = {
    (1.1, 5.0): -0.027841073916427898,
    (1.5, 1.0): 0.39662936531808808,
    (1.5, 9.0): -0.15465348189175913,
    (1.5, 100.0): -0.0027898467733372399,
    (1.9, 50.0): 0.022022145114234176,
}

ORACLE_ASYM = {
    (1.2, 60.0): -0.0029730410256659194,
    (1.5, 250.0): -0.0011281459711300859,
    (1.5, 2000.0): -0.00014104693309378221,
    (1.8, 900.0): 0.00016550391086393319,
}


def test_exponential_closed_form():
    for x in (0.0, 0.5, 3.0, 40.0):
        res = ml(1.0, x)
        assert res.value == pytest.approx(math.exp(-x), abs=1e-15)
        assert abs(res.value - math.exp(-x)) <= res.abs_err


def test_cosine_closed_form():
    for x in (0.0, 2.0, 9.0, 1.0e6):
        res = ml(2.0, x)
        assert abs(res.value - math.cos(math.sqrt(x))) <= res.abs_err


def test_series_matches_oracle():
    for (alpha, x), truth in ORACLE_SERIES.items():
        res = ml_series(alpha, x)
        assert abs(res.value - truth) <= res.abs_err
        assert res.abs_err <= 1e-12


def test_asymptotic_matches_oracle():
    for (alpha, x), truth in ORACLE_ASYM.items():
        res = ml_asymptotic(alpha, x, 1e-10)
        assert abs(res.value - truth) <= res.abs_err
        assert res.abs_err <= 1e-10


def test_dispatch_picks_the_right_regime():
    for (alpha, x), truth in {**ORACLE_SERIES, **ORACLE_ASYM}.items():
        res = ml(alpha, x, 1e-10)
        assert res.value == pytest.approx(truth, abs=2e-10)


def test_regimes_agree_at_the_switch():
    # both routes are valid in a band around x_switch; they must agree
    # within their combined bounds there
    for alpha in (1.1, 1.5, 1.9):
        xs = x_switch(alpha)
        for x in (0.97 * xs, xs, 1.03 * xs):
            a = ml_series(alpha, x, 1e-11)
            b = ml_asymptotic(alpha, x, 1e-9)
            assert abs(a.value - b.value) <= a.abs_err + b.abs_err


def test_switch_is_monotone_in_alpha():
    assert x_switch(1.5) == pytest.approx(33.0 ** 1.5, rel=1e-15)
    grid = np.linspace(1.0, 2.0, 11)
    vals = [x_switch(a) for a in grid]
    assert all(b > a for a, b in zip(vals, vals[1:]))


def test_bounded_by_one_on_the_negative_axis():
    for alpha in (1.05, 1.5, 1.95):
        for x in (0.0, 0.3, 2.0, 30.0, 1e4):
            res = ml(alpha, x, 1e-10)
            assert res.value <= 1.0 + res.abs_err
            assert abs(res.value) <= 1.0
    assert ml(1.3, 0.0).value == 1.0


def test_asymptotic_raises_when_x_is_too_small():
    # the smallest term of the divergent expansion exceeds the tolerance
    with pytest.raises(AsymptoticDivergence):
        ml_asymptotic(1.5, 5.0, 1e-12)
    with pytest.raises(AsymptoticDivergence):
        ml_asymptotic(1.7, 0.0, 1e-10)


def test_asymptotic_tolerance_cutoff_moves_with_x():
    # at x = 100, alpha = 1.5 the optimal-truncation floor sits between
    # 1e-10 and 1e-12: loose tolerance works, tight tolerance must raise
    res = ml_asymptotic(1.5, 100.0, 1e-8)
    assert res.value == pytest.approx(ORACLE_SERIES[(1.5, 100.0)], abs=1e-8)
    with pytest.raises(AsymptoticDivergence):
        ml_asymptotic(1.5, 100.0, 1e-12)


def test_asymptotic_rejects_closed_form_orders():
    with pytest.raises(DomainError):
        ml_asymptotic(1.0, 50.0)
    with pytest.raises(DomainError):
        ml_asymptotic(2.0, 50.0)


def test_series_raises_beyond_its_reach():
    with pytest.raises(NonConvergence):
        ml_series(1.5, 1.0e4)


def test_domain_validation():
    with pytest.raises(DomainError):
        ml(0.9, 1.0)
    with pytest.raises(DomainError):
        ml(1.5, -1.0)
    with pytest.raises(DomainError):
        ml(1.5, 1.0, tol=0.0)


def test_grid_agrees_with_scalar():
    xs = np.array([0.0, 0.7, 12.0, 33.0 ** 1.4 * 0.999, 300.0, 5.0e3])
    val, err = ml_grid(1.4, xs)
    for x, v, e in zip(xs, val, err):
        res = ml(1.4, float(x), 1e-12)
        assert abs(v - res.value) <= e + res.abs_err


@settings(max_examples=25, deadline=None)
@given(
    alpha=st.floats(min_value=1.02, max_value=1.98),
    x=st.floats(min_value=0.0, max_value=50.0),
)
def test_matches_highprecision_series(alpha, x):
    # independent check: brute mpmath sum at 60 digits, enough terms that
    # the first omitted term is below 1e-30
    res = ml(alpha, x, 1e-11)
    with mp.workdps(60):
        s, n = mp.mpf(0), 0
        while True:
            t = (-mp.mpf(x)) ** n * mp.rgamma(mp.mpf(alpha) * n + 1)
            s += t
            n += 1
            if n > 20 and abs(t) < mp.mpf("1e-30"):
                break
        truth = float(s)
    assert abs(res.value - truth) <= res.abs_err + 1e-13
