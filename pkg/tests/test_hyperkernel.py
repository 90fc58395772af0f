"""Kernel-level oracles and invariants.

Frozen reference values were computed independently with mpmath at 40
decimal digits (gamma ratios, 2F1/1F1 points, Appell F1 via
``mpmath.appellf1``, Humbert Phi1 via a brute-force high-precision
double sum, Euler integrals via ``mpmath.quad``) or follow from exact
closed forms (Chu-Vandermonde, Gauss summation, binomial cases).
"""

import math

import pytest
import scipy.special
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from assocpoly import (
    DenominatorPole,
    DomainError,
    EulerIntegrand,
    IllConditioned,
    PoleArgument,
    SeriesConfig,
    SingularIntegrand,
    ZeroPochhammer,
    appell_f1,
    euler_integral,
    gamma_ratio,
    gamma_value,
    gauss_2f1,
    humbert_phi1,
    hyp_terminating,
    kummer_1f1,
    pochhammer,
    pochhammer_log,
)


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


# ---------------------------------------------------------------------------
# Pochhammer and gamma machinery
# ---------------------------------------------------------------------------


def test_pochhammer_empty_product():
    assert pochhammer(0.37, 0) == 1.0
    assert pochhammer(-5.0, 0) == 1.0


def test_pochhammer_rising_factorial():
    assert pochhammer(2.0, 3) == 24.0


def test_pochhammer_hits_zero():
    assert pochhammer(-3.0, 5) == 0.0


def test_pochhammer_log_small_case():
    mag, phase = pochhammer_log(2.0, 3)
    assert rel(mag, math.log(24.0)) < 1e-14
    assert phase == 1.0


def test_pochhammer_log_zero_raises():
    with pytest.raises(ZeroPochhammer):
        pochhammer_log(-3.0, 5)


def test_pochhammer_log_large_matches_loggamma():
    # magnitude of (1.5)_100 equals lgamma(101.5) - lgamma(1.5)
    mag, phase = pochhammer_log(1.5, 100)
    assert rel(mag, 366.16648043291199722) < 1e-12
    assert phase == 1.0


def test_pochhammer_log_negative_base_phase():
    mag, phase = pochhammer_log(-2.5, 3)
    # (-2.5)(-1.5)(-0.5) = -1.875
    assert phase == -1.0
    assert rel(math.exp(mag), 1.875) < 1e-13


def test_gamma_value_pole():
    with pytest.raises(PoleArgument):
        gamma_value(0.0)
    with pytest.raises(PoleArgument):
        gamma_value(-3.0)
    assert rel(gamma_value(0.5), math.sqrt(math.pi)) < 1e-15


def test_gamma_ratio_integer_steps():
    assert rel(gamma_ratio(5.0, 1.0, 0.0), 5.0) < 1e-14
    assert rel(gamma_ratio(0.0, 3.0, 1.0), 2.0) < 1e-14


def test_gamma_ratio_frozen_oracle():
    assert rel(gamma_ratio(50.0, 0.7, 0.2), 7.0675756515492072) < 1e-13
    # within 1% of 50^0.5
    assert abs(gamma_ratio(50.0, 0.7, 0.2) / math.sqrt(50.0) - 1.0) < 0.01


def test_gamma_ratio_pole():
    with pytest.raises(PoleArgument):
        gamma_ratio(0.0, 0.0, 1.0)


def test_gamma_ratio_stirling_bound():
    # |Gamma(z+a)/Gamma(z+b) z^(b-a) - 1| <= 2|a-b||a+b-1|/z
    a, b = 0.7, 0.2
    for z in (50.0, 200.0):
        dev = abs(gamma_ratio(z, a, b) * z ** (b - a) - 1.0)
        assert dev <= 2.0 * abs(a - b) * abs(a + b - 1.0) / z


@given(
    a=st.floats(-4.0, 4.0),
    m=st.integers(0, 8),
    n=st.integers(0, 8),
)
def test_pochhammer_addition_law(a, m, n):
    # (a)_{m+n} = (a)_m (a+m)_n
    lhs = pochhammer(a, m + n)
    rhs = pochhammer(a, m) * pochhammer(a + m, n)
    assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs), abs(rhs))


@given(a=st.floats(0.1, 6.0), k=st.integers(0, 40))
def test_pochhammer_log_consistent_with_product(a, k):
    mag, phase = pochhammer_log(a, k)
    direct = pochhammer(a, k)
    assert phase == 1.0
    assert rel(math.exp(mag), direct) < 1e-11


# ---------------------------------------------------------------------------
# Terminating series
# ---------------------------------------------------------------------------


def test_terminating_chu_vandermonde():
    # 2F1(-3, 2; 4; 1) = (4-2)_3 / (4)_3 = 24/120
    assert rel(hyp_terminating([-3.0, 2.0], [4.0], 1.0, 3), 0.2) < 1e-14


def test_terminating_3f2_small():
    assert rel(hyp_terminating([-2.0, 1.0, 2.0], [2.0, 3.0], 1.0, 2), 0.5) < 1e-14


def test_terminating_binomial():
    # 2F1(-2, 1; 1; 0.3) = (1 - 0.3)^2
    assert rel(hyp_terminating([-2.0, 1.0], [1.0], 0.3, 2), 0.49) < 1e-14


def test_terminating_denominator_pole():
    with pytest.raises(DenominatorPole):
        hyp_terminating([-3.0, 1.0], [-1.5, -1.0], 1.0, 3)


@given(
    n=st.integers(0, 12),
    b=st.floats(-3.0, 3.0),
    c=st.floats(0.3, 5.0),
)
def test_terminating_chu_vandermonde_property(n, b, c):
    lhs = hyp_terminating([-float(n), b], [c], 1.0, n)
    rhs = pochhammer(c - b, n) / pochhammer(c, n)
    assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(lhs), abs(rhs))


# ---------------------------------------------------------------------------
# Gauss 2F1
# ---------------------------------------------------------------------------


def test_gauss_2f1_equal_bc_binomial():
    out = gauss_2f1(0.5, 3.0, 3.0, 0.5)
    assert rel(out.value, math.sqrt(2.0)) < 1e-13
    assert out.converged


def test_gauss_2f1_terminating_zero():
    assert abs(gauss_2f1(-2.0, -1.0, 2.0, -1.0).value) < 1e-14


def test_gauss_2f1_generic_point():
    assert rel(gauss_2f1(0.3, 1.2, 0.9, 0.5).value,
               1.3333734867193642) < 1e-12


def test_gauss_2f1_at_one_gauss_summation():
    assert rel(gauss_2f1(0.3, 0.4, 2.0, 1.0).value,
               1.1054192265872007) < 1e-12


def test_gauss_2f1_near_one_connection():
    assert rel(gauss_2f1(0.25, 0.75, 1.5, 0.97).value,
               1.3056537796268350) < 1e-11


def test_gauss_2f1_negative_argument():
    assert rel(gauss_2f1(-0.4, 0.9, 1.3, -2.5).value,
               1.4777134977239057) < 1e-11


def test_gauss_2f1_pfaff_invariant():
    for a, b, c, z in ((0.3, 1.2, 2.1, 0.45), (-1.5, 0.7, 0.9, -0.6)):
        base = gauss_2f1(a, b, c, z).value
        pfaff = (1.0 - z) ** (-a) * gauss_2f1(a, c - b, c, z / (z - 1.0)).value
        assert rel(base, pfaff) < 1e-12


def test_gauss_2f1_euler_invariant():
    for a, b, c, z in ((0.3, 1.2, 2.1, 0.45), (2.2, -0.4, 3.3, 0.3)):
        base = gauss_2f1(a, b, c, z).value
        euler = (1.0 - z) ** (c - a - b) * gauss_2f1(c - a, c - b, c, z).value
        assert rel(base, euler) < 1e-12


def test_gauss_2f1_large_parameter_asymptotic_shrinks():
    # 2F1(a + eps*lam, b; c + lam; z) -> (1 - eps*z)^(-b); deviation must
    # shrink by at least 5x between lam = 1e2 and lam = 1e3.
    a, b, c, z = 0.3, 1.2, 0.9, 0.5
    for eps in (0.0, 1.0):
        devs = []
        for lam in (1e2, 1e3):
            value = gauss_2f1(a + eps * lam, b, c + lam, z).value
            devs.append(abs(value - (1.0 - eps * z) ** (-b)))
        assert devs[1] <= devs[0] / 5.0


@settings(max_examples=60, deadline=None)
@given(
    a=st.floats(-3.0, 3.0),
    b=st.floats(-3.0, 3.0),
    c=st.floats(0.3, 5.0),
    z=st.floats(-0.9, 0.9),
)
def test_gauss_2f1_matches_scipy(a, b, c, z):
    try:
        mine = gauss_2f1(a, b, c, z).value
    except (IllConditioned, DomainError, PoleArgument):
        assume(False)
    ref = float(scipy.special.hyp2f1(a, b, c, z))
    assume(math.isfinite(ref))
    assert abs(mine - ref) <= 1e-8 * max(1.0, abs(ref))


# ---------------------------------------------------------------------------
# Kummer 1F1
# ---------------------------------------------------------------------------


def test_kummer_exponential_case():
    assert rel(kummer_1f1(1.0, 2.0, 1.0).value, math.e - 1.0) < 1e-13


def test_kummer_frozen_negative_argument():
    assert rel(kummer_1f1(0.8, 1.7, -3.2).value,
               0.33760072127030674) < 1e-12


def test_kummer_transformation_invariant():
    for a, b, z in ((0.7, 1.9, -1.5), (-1.3, 0.8, 0.6), (2.4, 3.1, 2.0)):
        base = kummer_1f1(a, b, z).value
        flip = math.exp(z) * kummer_1f1(b - a, b, -z).value
        assert rel(base, flip) < 1e-12


def test_kummer_first_parameter_zero_is_one():
    assert kummer_1f1(0.0, 0.7, -2.0).value == 1.0


@settings(max_examples=60, deadline=None)
@given(
    a=st.floats(-3.0, 3.0),
    b=st.floats(0.3, 5.0),
    z=st.floats(-5.0, 5.0),
)
def test_kummer_matches_scipy(a, b, z):
    mine = kummer_1f1(a, b, z).value
    ref = float(scipy.special.hyp1f1(a, b, z))
    assume(math.isfinite(ref))
    assert abs(mine - ref) <= 1e-8 * max(1.0, abs(ref))


# ---------------------------------------------------------------------------
# Appell F1 and Humbert Phi1
# ---------------------------------------------------------------------------


def test_appell_f1_frozen_oracle():
    out = appell_f1(0.8, 0.6, 1.1, 2.3, 0.3, -0.4)
    assert rel(out.value, 0.9331609234608286) < 1e-12
    assert out.converged


def test_appell_f1_reduces_to_2f1_on_diagonal():
    lhs = appell_f1(0.9, 0.4, 1.3, 2.2, 0.3, 0.3).value
    rhs = gauss_2f1(0.9, 1.7, 2.2, 0.3).value
    assert rel(lhs, rhs) < 1e-12


def test_appell_f1_transformation_invariant():
    alpha, b1, b2, sigma, x, y = 0.8, 0.6, 1.1, 2.3, -0.3, 0.2
    base = appell_f1(alpha, b1, b2, sigma, x, y).value
    xp, yp = x / (x - 1.0), y / (y - 1.0)
    trans = ((1.0 - x) ** (-b1) * (1.0 - y) ** (-b2)
             * appell_f1(sigma - alpha, b1, b2, sigma, xp, yp).value)
    assert rel(base, trans) < 1e-12


def test_appell_f1_outside_domain_raises():
    with pytest.raises(DomainError):
        appell_f1(0.8, 0.6, 1.1, 2.3, 1.2, 3.5)


def test_humbert_phi1_frozen_oracle():
    out = humbert_phi1(0.7, 1.5, 2.2, 0.4, -0.9)
    assert rel(out.value, 0.9327821388312732) < 1e-12
    assert out.converged


def test_humbert_phi1_confluence_limit_of_f1():
    mu = 1.0e6
    for alpha, lam, sigma, x, y in (
        (0.8, 0.6, 2.3, 0.3, -0.7),
        (1.4, -0.5, 1.9, -0.2, 1.1),
    ):
        lhs = appell_f1(alpha, lam, mu, sigma, x, y / mu).value
        rhs = humbert_phi1(alpha, lam, sigma, x, y).value
        assert rel(lhs, rhs) < 1e-5


def test_humbert_phi1_x_outside_disk_raises():
    with pytest.raises(DomainError):
        humbert_phi1(0.7, 1.5, 2.2, 1.0, -0.9)


def test_humbert_phi1_sigma_pole_raises():
    with pytest.raises(PoleArgument):
        humbert_phi1(0.7, 1.5, -2.0, 0.4, -0.9)


def test_humbert_phi1_second_variable_only_is_kummer():
    # lam = 0 kills the x series: Phi1(a, 0; s; x, y) = 1F1(a; s; y)
    lhs = humbert_phi1(0.9, 0.0, 1.8, 0.5, -1.1).value
    rhs = kummer_1f1(0.9, 1.8, -1.1).value
    assert rel(lhs, rhs) < 1e-13


# ---------------------------------------------------------------------------
# Euler integrals
# ---------------------------------------------------------------------------


def test_euler_integral_constant():
    out = euler_integral(EulerIntegrand(1.0))
    assert rel(out.value, 1.0) < 1e-13


def test_euler_integral_power_weight():
    assert rel(euler_integral(EulerIntegrand(0.5)).value, 2.0) < 1e-12


def test_euler_integral_single_factor():
    # int_0^1 u (1 - u/2)^(-1) du = 4 ln 2 - 2
    out = euler_integral(EulerIntegrand(2.0, ((0.5, -1.0),)))
    assert rel(out.value, 0.7725887222397812) < 1e-12


def test_euler_integral_exponential_scale():
    out = euler_integral(EulerIntegrand(1.0, (), -1.0))
    assert rel(out.value, 0.6321205588285577) < 1e-12


def test_euler_integral_two_factors_and_exp():
    out = euler_integral(EulerIntegrand(1.5, ((0.3, 2.2), (0.8, -0.6)), 0.4))
    assert rel(out.value, 0.85608225801690866) < 1e-11


def test_euler_integral_nonpositive_gamma_raises():
    with pytest.raises(DomainError):
        euler_integral(EulerIntegrand(0.0))
    with pytest.raises(DomainError):
        euler_integral(EulerIntegrand(-1.5))


def test_euler_integral_singular_base_raises():
    with pytest.raises(SingularIntegrand):
        euler_integral(EulerIntegrand(1.0, ((1.0, -0.5),)))


# ---------------------------------------------------------------------------
# Series configuration plumbing
# ---------------------------------------------------------------------------


def test_series_config_validation():
    with pytest.raises(ValueError):
        SeriesConfig(rel_tol=0.0)
    with pytest.raises(ValueError):
        SeriesConfig(max_terms=0)


def test_eval_outcome_error_estimate_honours_tolerance():
    cfg = SeriesConfig(rel_tol=1e-12)
    out = gauss_2f1(0.3, 1.2, 0.9, 0.5, cfg)
    assert out.converged
    assert out.err_estimate <= 1e-12 * abs(out.value) * 10.0
    assert out.terms_used <= cfg.max_terms
