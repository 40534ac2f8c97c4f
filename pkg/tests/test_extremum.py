import math

import numpy as np
import pytest

from fracwave import (
    DomainError,
    coefficients,
    hyperbola_track,
    mainardi_m_prime,
    max_location,
    max_location_coeff,
    max_value,
    max_value_coeff,
    product_constant,
    propagation_speed,
)
from fracwave.green_function import _similarity_batch

# ---------------------------------------------------------------------------
# frozen truth: bisection of the 200-digit brute derivative series for c,
# the matching 200-digit kernel value halved for m (independent of both
# package routes: the quadrature scan and the dd derivative polish)

COEFF_ORACLE = {
    # nu: (c, m)
    0.55: (0.33196420165879104, 0.26202044666914353),
    0.61: (0.66898098398970537, 0.25490351519721804),
    0.69: (1.0068054691716544, 0.2723086397047821),
    0.75: (1.17178047130882, 0.31187239438863958),
    0.85: (1.2753355864567467, 0.49341003285117415),
    0.9: (1.247810853510608, 0.75170927702915187),
    0.95: (1.1659976177618541, 1.5841923289631571),
    0.99: (1.0491682771422187, 8.6517353331095716),
}

M_HALF = 0.5 / math.sqrt(math.pi)


def test_coefficients_match_frozen_roots():
    for nu, (c_true, m_true) in COEFF_ORACLE.items():
        co = coefficients(nu)
        assert abs(co.c - c_true) <= co.c_tol + 1e-12
        assert abs(co.m - m_true) <= co.m_tol + 1e-12
        assert co.c_tol <= 1e-8
        assert co.m_tol <= 1e-9


def test_derivative_vanishes_at_the_computed_maximizer():
    for nu in (0.61, 0.75, 0.9):
        c = coefficients(nu).c
        assert abs(mainardi_m_prime(nu, c).value) <= 1e-9
        # and changes sign across it
        assert mainardi_m_prime(nu, c - 1e-5).value > 0.0
        assert mainardi_m_prime(nu, c + 1e-5).value < 0.0


def test_diffusion_endpoint_values():
    assert max_location_coeff(0.5) == 0.0
    assert max_value_coeff(0.5, 0.0) == pytest.approx(M_HALF, rel=1e-15)
    assert max_location(0.5, 7.0) == 0.0
    assert max_value(0.5, 4.0) == pytest.approx(M_HALF / 2.0, rel=1e-15)
    assert propagation_speed(0.5, 3.0) == 0.0
    assert product_constant(0.5) == 0.0
    co = coefficients(0.5)
    assert (co.c, co.m) == (0.0, pytest.approx(M_HALF, rel=1e-15))


def test_wave_endpoint_values():
    assert max_location_coeff(1.0) == 1.0
    assert max_location(1.0, 2.5) == 2.5
    assert propagation_speed(1.0, 0.01) == 1.0
    # the pulse height is not a number there
    with pytest.raises(DomainError):
        max_value(1.0, 1.0)
    with pytest.raises(DomainError):
        max_value_coeff(1.0, 1.0)
    with pytest.raises(DomainError):
        product_constant(1.0)
    with pytest.raises(DomainError):
        coefficients(1.0)


def test_orders_above_the_cap_are_refused():
    with pytest.raises(DomainError):
        coefficients(0.996)
    # the cap itself is computable; root from an extended-precision bisection
    co = coefficients(0.995)
    assert co.c == pytest.approx(1.02791801022557, abs=1e-8)
    assert co.m == pytest.approx(17.6184508499407, rel=1e-9)


def test_coefficients_are_cached():
    assert coefficients(0.8) is coefficients(0.8)


def test_value_coeff_evaluates_at_the_given_location():
    co = coefficients(0.75)
    assert max_value_coeff(0.75, co.c) == pytest.approx(co.m, abs=1e-9)
    # a deliberately offset location gives a strictly lower value
    assert max_value_coeff(0.75, co.c - 0.3) < co.m


def test_scan_agrees_with_the_polished_root():
    # 1e-3 grid argmax against the derivative root
    for nu in (0.7, 0.9):
        c = coefficients(nu).c
        rs = np.arange(0.0, 2.0, 1e-3)
        vals, _ = _similarity_batch(nu, rs, 1e-8)
        assert abs(float(rs[vals.argmax()]) - c) <= 2e-3


def test_location_and_value_follow_the_power_laws():
    co = coefficients(0.8)
    for t in (0.2, 1.0, 9.0):
        assert max_location(0.8, t) == pytest.approx(co.c * t ** 0.8, rel=1e-14)
        assert max_value(0.8, t) == pytest.approx(co.m * t ** -0.8, rel=1e-14)


def test_speed_decays_like_t_to_nu_minus_one():
    v1 = propagation_speed(0.75, 1.0)
    assert v1 == pytest.approx(0.75 * coefficients(0.75).c, rel=1e-14)
    ts = np.geomspace(0.01, 100.0, 9)
    vs = [propagation_speed(0.75, float(t)) for t in ts]
    assert all(a > b for a, b in zip(vs, vs[1:]))
    # faster than the wave pulse early, slower late
    assert vs[0] > 1.0 > vs[-1]


def test_hyperbola_track_has_constant_product():
    co = coefficients(0.8)
    pts = hyperbola_track(0.8, np.geomspace(0.1, 10.0, 7))
    for x_star, g_star in pts:
        assert x_star * g_star == pytest.approx(co.c * co.m, rel=1e-9)
    with pytest.raises(DomainError):
        hyperbola_track(0.5, [1.0, 2.0])
    with pytest.raises(DomainError):
        hyperbola_track(0.8, [1.0, 0.0])


def test_product_interpolates_between_zero_and_infinity():
    ps = [product_constant(nu) for nu in (0.55, 0.7, 0.85, 0.95)]
    assert all(a < b for a, b in zip(ps, ps[1:]))
    assert 0.05 < ps[0] < ps[-1] < 10.0


def test_requested_location_tolerance_is_enforced():
    from fracwave import NonConvergence

    with pytest.raises(NonConvergence):
        coefficients(0.75, tol=1e-13)
