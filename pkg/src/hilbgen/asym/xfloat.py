"""Per-call precision contexts for extended-precision arithmetic.

mpmath keeps precision on a context object, and several of its routines
temporarily raise ``ctx.prec`` internally.  To keep precision a per-call
parameter (and avoid sharing a mutable context across threads) each thread
gets its own context per requested precision.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from numbers import Rational

import mpmath
from mpmath import MPContext

DEFAULT_PRECISION = 256
MIN_PRECISION = 128

_local = threading.local()


def context(precision: int = DEFAULT_PRECISION) -> MPContext:
    """A private mpmath context working at ``precision`` bits."""
    cache = getattr(_local, "contexts", None)
    if cache is None:
        cache = _local.contexts = {}
    ctx = cache.get(precision)
    if ctx is None:
        ctx = MPContext()
        ctx.prec = precision
        cache[precision] = ctx
    return ctx


def to_ctx(ctx: MPContext, value):
    """Convert ints, Fractions, floats, strings and mpmath numbers into ``ctx``."""
    if isinstance(value, bool):
        value = int(value)
    if isinstance(value, int):
        return ctx.mpf(value)
    if isinstance(value, Rational):
        return ctx.mpf(value.numerator) / value.denominator
    if isinstance(value, complex):
        return ctx.mpc(value)
    if hasattr(value, "_mpc_"):
        return ctx.mpc(value)
    return ctx.mpf(value)


def to_global(value) -> mpmath.mpf:
    """Re-home a value in mpmath's default context (for printing / mixing)."""
    if hasattr(value, "_mpc_"):
        return mpmath.mpc(value)
    return mpmath.mpf(value)


def frac(value: Fraction, precision: int = DEFAULT_PRECISION):
    ctx = context(precision)
    return to_ctx(ctx, value)
