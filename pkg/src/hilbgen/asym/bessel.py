"""Modified Bessel function I_nu(x) by its ascending series."""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import PrecisionLoss
from .xfloat import DEFAULT_PRECISION, context, to_ctx

_GUARD_BITS = 24
_MIN_CORRECT_BITS = 30


def _as_order(order):
    """Return (Fraction or None, value) so integer orders can be detected exactly."""
    if isinstance(order, int):
        return Fraction(order)
    if isinstance(order, Fraction):
        return order
    if isinstance(order, float) and order.is_integer():
        return Fraction(int(order))
    return None


def _series(ctx, nu, x):
    """Sum (x/2)^(nu+2j) / (j! Gamma(nu+j+1)); returns (sum, max |term|, terms)."""
    h = x / 2
    h2 = h * h
    term = h**nu / ctx.gamma(nu + 1)
    total = term
    biggest = abs(term)
    tol = ctx.ldexp(1, -(ctx.prec - 16))
    j = 0
    peak = float(h)  # terms grow until j ~ x/2
    while True:
        j += 1
        term = term * h2 / (j * (nu + j))
        total += term
        a = abs(term)
        if a > biggest:
            biggest = a
        if j > peak and a <= tol * abs(total):
            break
    return total, biggest, j


def bessel_I(order, x, precision: int = DEFAULT_PRECISION):
    """I_order(x) for x > 0, correct to about ``precision`` bits.

    Negative integer orders use I_{-n} = I_n.  For other negative orders the
    early series terms alternate in sign; the working precision is raised
    by the observed cancellation and the sum recomputed when needed.
    Raises PrecisionLoss if fewer than 30 bits can be certified.
    """
    exact = _as_order(order)
    if exact is not None and exact.denominator == 1 and exact < 0:
        exact = -exact
        order = exact
    wp = precision + _GUARD_BITS
    for _ in range(4):
        ctx = context(wp)
        nu = to_ctx(ctx, order)
        if nu < 0 and ctx.isint(nu):
            nu = -nu
        xv = to_ctx(ctx, x)
        if xv <= 0:
            raise ValueError("bessel_I requires x > 0")
        total, biggest, nterms = _series(ctx, nu, xv)
        if total == 0:
            raise PrecisionLoss("ascending series summed to zero")
        lost = max(0.0, float(ctx.log(biggest / abs(total), 2)))
        rounding = math.log2(nterms + 1)
        correct = wp - lost - rounding - 1
        if correct >= precision:
            break
        wp += int(lost + rounding) + _GUARD_BITS
    if correct < _MIN_CORRECT_BITS:
        raise PrecisionLoss(f"only {correct:.0f} correct bits in I_{order}({x})")
    out = context(precision)
    return out.mpf(total)
