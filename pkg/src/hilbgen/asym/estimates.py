"""Asymptotic formulas for a_{m,k}(n), p_k(n) and the limiting profile.

Every quantity carrying ``exp(pi sqrt(2kn/3))`` is computed at >= 128 bits;
comparisons against exact integers go through ``log_ratio``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from ..errors import RangeExceeded
from .bernoulli import bernoulli
from .bessel import bessel_I
from .taylor import d_coeff
from .xfloat import DEFAULT_PRECISION, MIN_PRECISION, context, to_ctx


def _prec(precision: int) -> int:
    if precision < MIN_PRECISION:
        raise ValueError(f"asymptotic evaluations need >= {MIN_PRECISION} bits")
    return precision


def beta(k: int, n: int, precision: int = DEFAULT_PRECISION):
    """pi sqrt(k / (6 n)), the radius parameter of the coefficient contour."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ctx = context(precision)
    return ctx.pi * ctx.sqrt(ctx.mpf(k) / (6 * n))


def _bessel_argument(ctx, k: int, n: int):
    return ctx.pi * ctx.sqrt(ctx.mpf(2 * k * n) / 3)


def theorem1_estimate(m: int, k: int, n: int, N: int, precision: int = DEFAULT_PRECISION):
    """Truncated N-term Bessel expansion of a_{m,k}(n)."""
    if n < 1 or N < 1:
        raise ValueError("n and N must be >= 1")
    prec = _prec(precision)
    ctx = context(prec)
    x = _bessel_argument(ctx, k, n)
    scale = ctx.pi * ctx.sqrt(ctx.mpf(k) / 6)
    half_k = Fraction(k, 2)
    total = ctx.mpf(0)
    for ell in range(1, N + 1):
        d = d_coeff(m, k, ell)
        if not d:
            continue
        order = -1 - ell - half_k
        term = to_ctx(ctx, d)
        term *= ctx.power(n, -to_ctx(ctx, Fraction(2 + 2 * ell + k, 4)))
        term *= ctx.power(scale, to_ctx(ctx, 1 + ell + half_k))
        term *= bessel_I(order, x, prec)
        total += term
    return total * ctx.power(2 * ctx.pi, -to_ctx(ctx, half_k))


def corollary_diff(m: int, r: int, k: int, n: int, precision: int = DEFAULT_PRECISION):
    """Leading term of a_{m,k}(n) - a_{r,k}(n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ctx = context(_prec(precision))
    c = ctx.mpf(4) / 15 * ctx.pi**3 * (r * r - m * m)
    c *= ctx.power(8 * ctx.mpf(n), -ctx.mpf(9 + k) / 4)
    c *= ctx.power(ctx.mpf(k) / 3, ctx.mpf(k + 7) / 4)
    return c * ctx.exp(_bessel_argument(ctx, k, n))


def log_pk_asymptotic(k: int, n: int, precision: int = DEFAULT_PRECISION):
    ctx = context(_prec(precision))
    return (ctx.log(2) + ctx.mpf(k + 1) / 4 * ctx.log(ctx.mpf(k) / 3)
            - ctx.mpf(k + 3) / 4 * ctx.log(8 * ctx.mpf(n)) + _bessel_argument(ctx, k, n))


def pk_asymptotic(k: int, n: int, precision: int = DEFAULT_PRECISION):
    """2 (k/3)^((k+1)/4) (8n)^(-(k+3)/4) exp(pi sqrt(2kn/3))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return context(_prec(precision)).exp(log_pk_asymptotic(k, n, precision))


def log_ratio(estimate, exact: int, precision: int = DEFAULT_PRECISION):
    """``estimate / exact`` formed as exp(log|estimate| - log|exact|) with sign."""
    ctx = context(precision)
    if exact == 0:
        raise ZeroDivisionError("exact value is zero")
    est = to_ctx(ctx, estimate)
    if est == 0:
        return ctx.mpf(0)
    sign = 1 if (est > 0) == (exact > 0) else -1
    # log of a big int without rounding it to a float first
    bits = abs(exact).bit_length()
    shift = max(0, bits - (precision + 8))
    log_exact = ctx.log(ctx.mpf(abs(exact) >> shift)) + shift * ctx.ln2
    return sign * ctx.exp(ctx.log(abs(est)) - log_exact)


# --- profile -----------------------------------------------------------------

_SERIES_CUTOFF = Fraction(1, 8)


def _profile_series(ctx, x):
    """f(x) = sum_{j>=1} B_{2j} x^{2j-2} / (2j-2)!, the regular part of P/beta."""
    x2 = x * x
    total = ctx.mpf(0)
    power = ctx.mpf(1)
    fact = 1
    tol = ctx.ldexp(1, -ctx.prec - 4)
    j = 1
    while True:
        b = bernoulli(2 * j)
        term = to_ctx(ctx, b) * power / fact
        total += term
        if j > 1 and abs(term) < tol * abs(total):
            break
        power *= x2
        fact *= (2 * j - 1) * (2 * j)
        j += 1
    return total


def profile_P(m, beta_value, precision: int = DEFAULT_PRECISION):
    """(beta/4) csch^2(beta m/2) (beta m coth(beta m/2) - 2); beta/6 at m = 0."""
    ctx = context(precision + 16)
    b = to_ctx(ctx, beta_value)
    if b <= 0:
        raise ValueError("beta must be positive")
    x = b * to_ctx(ctx, m)
    if abs(x) < to_ctx(ctx, _SERIES_CUTOFF):
        val = b * _profile_series(ctx, x)
    else:
        h = x / 2
        val = b / 4 / ctx.sinh(h) ** 2 * (x * ctx.coth(h) - 2)
    return context(precision).mpf(val)


def profile_window(k: int, n: int) -> float:
    """Largest |m| covered by the limiting-profile statement."""
    return math.sqrt(n / (6 * k)) * math.log(n) / math.pi


@dataclass(frozen=True)
class ProfileRow:
    m: int
    k: int
    n: int
    exact_ratio: object
    profile_value: object
    relative_deviation: object
    beta_k: object
    in_window: bool


def theorem2_ratio(m: int, k: int, n: int, precision: int = DEFAULT_PRECISION) -> ProfileRow:
    """Compare a_{m,k}(n)/p_k(n) with P(m, beta_k).

    Outside the window a RangeExceeded warning is issued and the row is
    still computed, with ``in_window`` False.
    """
    from ..genfun import a, p_colored

    in_window = abs(m) <= profile_window(k, n)
    if not in_window:
        warnings.warn(RangeExceeded(f"|m|={abs(m)} exceeds the profile window at n={n}, k={k}"),
                      stacklevel=2)
    ctx = context(precision)
    ratio = to_ctx(ctx, Fraction(a(m, k, n), p_colored(k, n)))
    b = beta(k, n, precision)
    P = profile_P(m, b, precision)
    return ProfileRow(m, k, n, ratio, P, ratio / P - 1, b, in_window)


# --- Bernoulli integral ------------------------------------------------------

def bernoulli_integral_with_bound(j: int, precision: int = DEFAULT_PRECISION):
    """(quadrature of int_0^U u^{2j}/sinh(pi u)^2 du, bound on the [U, inf) tail)."""
    if j < 1:
        raise ValueError("j must be >= 1")
    ctx = context(precision + 32)
    two_pi = 2 * ctx.pi
    target = ctx.ldexp(1, -precision - 8)
    # for u >= U >= 1: 1/sinh(pi u)^2 <= 4 e^{-2 pi u} / (1 - e^{-2 pi})^2
    pref = 4 / (1 - ctx.exp(-two_pi)) ** 2
    U = 8
    while True:
        tail = pref * ctx.gammainc(2 * j + 1, two_pi * U) / two_pi ** (2 * j + 1)
        if tail < target:
            break
        U *= 2
    pts = [ctx.mpf(0), ctx.mpf(1) / 2] + [ctx.mpf(2**i) for i in range(0, int(math.log2(U)) + 1)]
    value = ctx.quad(lambda u: u ** (2 * j) / ctx.sinh(ctx.pi * u) ** 2, pts)
    out = context(precision)
    return out.mpf(value), out.mpf(tail)


def bernoulli_integral(j: int, precision: int = DEFAULT_PRECISION):
    """int_0^inf u^{2j}/sinh(pi u)^2 du by quadrature with a controlled tail."""
    return bernoulli_integral_with_bound(j, precision)[0]
