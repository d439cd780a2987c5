import warnings
from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbgen.asym import (
    bernoulli, bernoulli_integral, bernoulli_integral_with_bound, bessel_I, beta, context,
    corollary_diff, d_coeff, d_coeff_series, expansion, g_m1_coeff, g_m1_coeff_series,
    log_pk_asymptotic, log_ratio, pk_asymptotic, profile_P, profile_window, theorem1_estimate,
    theorem2_ratio,
)
from hilbgen.asym.estimates import _SERIES_CUTOFF
from hilbgen.errors import RangeExceeded
from hilbgen.genfun import a, p_colored


# --- Bernoulli numbers -------------------------------------------------------

def test_bernoulli_small():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(12) == Fraction(-691, 2730)
    assert all(bernoulli(2 * j + 1) == 0 for j in range(1, 11))


def test_bernoulli_generating_function():
    # x/(e^x - 1) at x = 1/3 from the first 40 terms
    x = mp.mpf(1) / 3
    series = mp.fsum(mp.mpf(bernoulli(j).numerator) / bernoulli(j).denominator * x**j / mp.factorial(j)
                     for j in range(40))
    assert abs(series - x / mp.expm1(x)) < mp.mpf(10) ** -14


def test_bernoulli_negative():
    with pytest.raises(ValueError):
        bernoulli(-1)


# --- d coefficients ----------------------------------------------------------

@pytest.mark.parametrize("k", [1, 2, 24])
@pytest.mark.parametrize("m", range(6))
def test_d_closed_forms(m, k):
    assert d_coeff(m, k, 1) == Fraction(1, 6)
    assert d_coeff(m, k, 2) == Fraction(1, 30) - Fraction(k, 144)
    assert d_coeff(m, k, 3) == (Fraction(23, 2520) - Fraction(m * m, 60) - Fraction(k, 720)
                                + Fraction(k * k, 6912))


def test_d_k3_values():
    assert d_coeff(3, 24, 2) == Fraction(-2, 15)
    assert d_coeff(0, 24, 3) == Fraction(149, 2520)


@given(st.integers(-8, 8), st.integers(-8, 8), st.sampled_from([1, 2, 24]))
def test_d3_difference(m, r, k):
    assert d_coeff(m, k, 3) - d_coeff(r, k, 3) == Fraction(r * r - m * m, 60)


@pytest.mark.parametrize("m", range(6))
def test_two_taylor_routes_agree(m):
    for ell in range(1, 7):
        assert g_m1_coeff(m, ell) == g_m1_coeff_series(m, ell)
        for k in (1, 24):
            assert d_coeff(m, k, ell) == d_coeff_series(m, k, ell)


def test_expansion_object():
    e = expansion(1, 24, 3)
    assert [ell for ell, _ in e.terms] == [1, 2, 3]
    z = Fraction(1, 10)
    assert e(z) == sum(d_coeff(1, 24, ell) * z**ell for ell in (1, 2, 3))
    with pytest.raises(ValueError):
        d_coeff(0, 24, 0)


# --- Bessel ------------------------------------------------------------------

def test_bessel_half_integer_closed_forms():
    ctx = context(256)
    for x in (Fraction(1, 5), 1, 7, 40):
        xv = ctx.mpf(x.numerator) / x.denominator if isinstance(x, Fraction) else ctx.mpf(x)
        s = ctx.sqrt(2 / (ctx.pi * xv))
        assert abs(bessel_I(Fraction(1, 2), x) / (s * ctx.sinh(xv)) - 1) < 1e-12
        assert abs(bessel_I(Fraction(-1, 2), x) / (s * ctx.cosh(xv)) - 1) < 1e-12
    assert mp.nstr(bessel_I(Fraction(1, 2), 1), 10) == "0.9376748882"


def test_bessel_integer_order_symmetry():
    assert bessel_I(-13, 10) == bessel_I(13, 10)


def test_bessel_leading_asymptotic():
    ctx = context(128)
    lead = ctx.exp(50) / ctx.sqrt(100 * ctx.pi)
    assert abs(bessel_I(0, 50) / lead - 1) < 0.01


def test_bessel_against_mpmath():
    ref_ctx = context(160)
    for order in (Fraction(-29, 2), -14, Fraction(7, 3), 0):
        nu = ref_ctx.mpf(Fraction(order).numerator) / Fraction(order).denominator
        for x in (3, 80, 600):
            ref = ref_ctx.besseli(nu, x)
            assert abs(bessel_I(order, x, 128) / ref - 1) < 1e-30


def test_bessel_rejects_nonpositive_argument():
    with pytest.raises(ValueError):
        bessel_I(1, 0)


# --- beta / estimates --------------------------------------------------------

def test_beta_identities():
    ctx = context(256)
    assert abs(beta(6, 1) - ctx.pi) < 1e-70
    assert abs(beta(24, 4) - ctx.pi) < 1e-70
    assert abs(beta(24, 100) ** 2 * 600 / ctx.pi**2 - 24) < 1e-70


@pytest.mark.parametrize("m", [1, 3])
def test_bessel_estimate_even_in_m(m):
    assert theorem1_estimate(m, 24, 60, 3) == theorem1_estimate(-m, 24, 60, 3)


def test_bessel_estimate_single_term():
    ctx = context(256)
    k, n = 24, 70
    x = ctx.pi * ctx.sqrt(ctx.mpf(2 * k * n) / 3)
    manual = (ctx.power(2 * ctx.pi, -ctx.mpf(k) / 2) / 6 * ctx.power(n, -ctx.mpf(4 + k) / 4)
              * ctx.power(ctx.pi * ctx.sqrt(ctx.mpf(k) / 6), 2 + ctx.mpf(k) / 2)
              * ctx.besseli(-2 - k // 2, x))
    assert abs(theorem1_estimate(0, k, n, 1) / manual - 1) < 1e-60


def test_bessel_estimate_converges():
    devs = [abs(log_ratio(theorem1_estimate(0, 24, n, 3), a(0, 24, n)) - 1) for n in (50, 100, 200, 400)]
    assert all(d2 < d1 for d1, d2 in zip(devs, devs[1:]))


def test_bessel_estimate_term_consistency():
    rel = []
    for n in (50, 100, 200, 400):
        e3, e4 = theorem1_estimate(0, 24, n, 3), theorem1_estimate(0, 24, n, 4)
        rel.append(abs((e4 - e3) / e3))
    assert all(r2 < r1 for r1, r2 in zip(rel, rel[1:]))


def test_pair_difference_trivial_cases():
    assert corollary_diff(3, 3, 24, 50) == 0
    assert corollary_diff(1, 4, 24, 50) == -corollary_diff(4, 1, 24, 50)


def test_pair_difference_converges():
    devs = [abs(1 / log_ratio(corollary_diff(0, 2, 24, n), a(0, 24, n) - a(2, 24, n)) - 1)
            for n in (100, 200, 400)]
    assert all(d2 < d1 for d1, d2 in zip(devs, devs[1:]))


def test_log_pk_identity():
    ctx = context(256)
    for k, n in ((1, 10), (24, 333)):
        lhs = log_pk_asymptotic(k, n) - ctx.pi * ctx.sqrt(ctx.mpf(2 * k * n) / 3)
        rhs = ctx.log(2) + ctx.mpf(k + 1) / 4 * ctx.log(ctx.mpf(k) / 3) - ctx.mpf(k + 3) / 4 * ctx.log(8 * ctx.mpf(n))
        assert abs(lhs - rhs) < 1e-70


def test_pk_asymptotic_trend():
    devs = [abs(pk_asymptotic(24, n) / p_colored(24, n) - 1) for n in (100, 200, 400)]
    assert all(d2 < d1 for d1, d2 in zip(devs, devs[1:]))


def test_pk_asymptotic_k1_inverse_sqrt_rate():
    # (ratio - 1) sqrt(n) settles near a constant for plain partitions
    c = [(pk_asymptotic(1, n) / p_colored(1, n) - 1) * mp.sqrt(n) for n in (250, 1000)]
    assert 0.3 < c[1] < 0.6
    assert abs(c[1] / c[0] - 1) < 0.05


def test_log_ratio_handles_huge_integers():
    big = 3**5000
    ctx = context(256)
    est = ctx.mpf(big) * (1 + ctx.mpf(10) ** -30)
    assert abs(log_ratio(est, big) - 1 - ctx.mpf(10) ** -30) < 1e-60
    assert log_ratio(-est, big) < 0
    with pytest.raises(ZeroDivisionError):
        log_ratio(est, 0)


# --- profile -----------------------------------------------------------------

def test_profile_at_zero():
    ctx = context(256)
    b = ctx.mpf(3) / 7
    assert abs(profile_P(0, b) - b / 6) < 1e-70


@settings(deadline=None)
@given(st.floats(0.01, 30), st.floats(0.05, 2))
def test_profile_even(m, b):
    assert profile_P(m, b) == profile_P(-m, b)


def test_profile_branches_agree_at_cutoff():
    ctx = context(256)
    b = ctx.mpf(1) / 2
    edge = ctx.mpf(_SERIES_CUTOFF.numerator) / _SERIES_CUTOFF.denominator / b
    eps = ctx.mpf(10) ** -40
    inside, outside = profile_P(edge - eps, b), profile_P(edge + eps, b)
    assert abs(inside - outside) < 1e-35


@pytest.mark.parametrize("bv", [0.2, 0.5, 1.3])
def test_profile_normalisation_and_variance(bv):
    mp.mp.dps = 30
    try:
        P = lambda m: profile_P(m, bv, 128)  # noqa: E731
        pts = [-mp.inf, -1, 0, 1, mp.inf]
        mass = mp.quad(P, pts)
        var = mp.quad(lambda m: m * m * P(m), pts)
        assert abs(mass - 1) < 1e-6
        assert abs(var / (2 * mp.pi**2 / (3 * mp.mpf(bv) ** 2)) - 1) < 1e-6
    finally:
        mp.mp.dps = 15


def test_profile_window_values():
    assert profile_window(24, 200) == pytest.approx(1.98757, abs=1e-5)
    assert int(profile_window(24, 800)) == 5


def test_profile_ratio_at_zero():
    ctx = context(256)
    row = theorem2_ratio(0, 24, 200)
    assert row.in_window
    assert abs(row.profile_value - row.beta_k / 6) < 1e-60
    assert abs(row.exact_ratio - ctx.mpf(a(0, 24, 200)) / p_colored(24, 200)) < 1e-60


def test_profile_ratio_even():
    assert theorem2_ratio(1, 24, 300).relative_deviation == theorem2_ratio(-1, 24, 300).relative_deviation


def test_profile_ratio_outside_window_warns():
    with pytest.warns(RangeExceeded):
        row = theorem2_ratio(3, 24, 200)
    assert not row.in_window


def test_profile_deviation_shape_constant_stable():
    fitted = []
    with warnings.catch_warnings():
        warnings.simplefilter("error", RangeExceeded)
        for n in (200, 400, 800):
            b = beta(24, n)
            reach = int(profile_window(24, n))
            fitted.append(max(abs(theorem2_ratio(m, 24, n).relative_deviation)
                              / (mp.sqrt(b) * mp.cbrt(m)) for m in range(1, reach + 1)))
    assert max(fitted) / min(fitted) < 2


# --- Bernoulli integral ------------------------------------------------------

def test_bernoulli_integral_first_values():
    ctx = context(256)
    assert abs(bernoulli_integral(1) - 1 / (6 * ctx.pi)) < 1e-60
    assert abs(bernoulli_integral(2) - 1 / (30 * ctx.pi)) < 1e-60


@pytest.mark.parametrize("j", range(1, 6))
def test_bernoulli_integral_matches_closed_form(j):
    ctx = context(256)
    B = bernoulli(2 * j)
    exact = (-1) ** (j + 1) * ctx.mpf(B.numerator) / B.denominator / ctx.pi
    value, tail = bernoulli_integral_with_bound(j)
    assert abs(value / exact - 1) < 1e-8
    assert tail < 1e-70
