"""Product evaluations of eta, theta, g and f_k at complex arguments.

``precision <= 53`` selects a vectorised numpy path (arrays broadcast);
larger precisions evaluate scalars with mpmath.  Fractional powers are
always taken as exponentials of tau and w (``q^{1/24} = e^{2 pi i tau/24}``,
``zeta^{1/2} = e^{pi i w}``), which fixes the branch consistently.
"""

from __future__ import annotations

import math

import numpy as np

from ..asym.xfloat import context
from ..errors import ConvergenceTooSlow, PoleProximity

DOUBLE = 53
_Q_LIMIT = 1 - 2.0**-8


def _check_tau(tau_imag_min: float) -> None:
    if tau_imag_min <= 0:
        raise ValueError("tau must lie in the upper half-plane")
    if math.exp(-2 * math.pi * tau_imag_min) >= _Q_LIMIT:
        raise ConvergenceTooSlow(f"|q| = e^(-2 pi {tau_imag_min:.3g}) is too close to 1")


def default_cutoff(tau_imag: float, precision: int, w_imag: float = 0.0) -> int:
    """Factors to keep so the dropped tail is below 2^-precision."""
    decay = 2 * math.pi * tau_imag
    need = precision * math.log(2) + 2 * math.pi * abs(w_imag)
    return int(math.ceil(need / decay)) + 2


def _is_double(precision: int) -> bool:
    return precision <= DOUBLE


def _min_imag(x) -> float:
    return float(np.min(np.imag(np.asarray(x, dtype=complex))))


def _max_abs_imag(x) -> float:
    return float(np.max(np.abs(np.imag(np.asarray(x, dtype=complex)))))


# --- numpy path ----------------------------------------------------------------

def _eta_np(tau, cutoff):
    tau = np.asarray(tau, dtype=complex)
    q = np.exp(2j * np.pi * tau)
    prod = np.ones_like(q)
    qn = np.ones_like(q)
    for _ in range(cutoff):
        qn = qn * q
        prod = prod * (1 - qn)
    return np.exp(2j * np.pi * tau / 24) * prod


def _theta_np(w, tau, cutoff):
    w = np.asarray(w, dtype=complex)
    tau = np.asarray(tau, dtype=complex)
    q = np.exp(2j * np.pi * tau)
    zeta = np.exp(2j * np.pi * w)
    inv = 1 / zeta
    prod = 1 - inv  # n = 1 factor of (1 - zeta^-1 q^{n-1})
    qn = np.ones_like(q)
    for _ in range(cutoff):
        qn = qn * q
        prod = prod * (1 - qn) * (1 - zeta * qn) * (1 - inv * qn)
    return 1j * np.exp(1j * np.pi * w) * np.exp(1j * np.pi * tau / 4) * prod


# --- mpmath path ---------------------------------------------------------------

def _eta_mp(ctx, tau, cutoff):
    q = ctx.expjpi(2 * tau)
    prod = ctx.mpc(1)
    qn = ctx.mpc(1)
    for _ in range(cutoff):
        qn *= q
        prod *= 1 - qn
    return ctx.expjpi(tau / 12) * prod


def _theta_mp(ctx, w, tau, cutoff):
    q = ctx.expjpi(2 * tau)
    zeta = ctx.expjpi(2 * w)
    inv = 1 / zeta
    prod = 1 - inv
    qn = ctx.mpc(1)
    for _ in range(cutoff):
        qn *= q
        prod *= (1 - qn) * (1 - zeta * qn) * (1 - inv * qn)
    return ctx.j * ctx.expjpi(w) * ctx.expjpi(tau / 4) * prod


# --- public ------------------------------------------------------------------

def eval_eta(tau, cutoff: int | None = None, precision: int = DOUBLE):
    """eta(tau) = q^{1/24} prod_{n>=1} (1 - q^n)."""
    im = _min_imag(tau) if _is_double(precision) else float(context(64).mpc(tau).imag)
    _check_tau(im)
    if cutoff is None:
        cutoff = default_cutoff(im, precision)
    if _is_double(precision):
        return _eta_np(tau, cutoff)
    ctx = context(precision)
    return _eta_mp(ctx, ctx.mpc(tau), cutoff)


def eval_theta(w, tau, cutoff: int | None = None, precision: int = DOUBLE):
    """theta(w; tau) = i zeta^{1/2} q^{1/8} (q;q) (zeta q;q) (zeta^{-1};q)."""
    if _is_double(precision):
        im, wim = _min_imag(tau), _max_abs_imag(w)
    else:
        c = context(64)
        im, wim = float(c.mpc(tau).imag), abs(float(c.mpc(w).imag))
    _check_tau(im)
    if cutoff is None:
        cutoff = default_cutoff(im, precision, wim)
    if _is_double(precision):
        return _theta_np(w, tau, cutoff)
    ctx = context(precision)
    return _theta_mp(ctx, ctx.mpc(w), ctx.mpc(tau), cutoff)


def eval_g(w, tau, cutoff: int | None = None, precision: int = DOUBLE):
    """g(w; tau) = i (zeta^{1/2} - zeta^{-1/2}) eta^3 / theta."""
    th = eval_theta(w, tau, cutoff, precision)
    eta = eval_eta(tau, cutoff, precision)
    floor = 2.0 ** (-precision / 2)
    if _is_double(precision):
        if np.any(np.abs(th) < floor):
            raise PoleProximity("theta(w; tau) vanishes to working precision")
        w = np.asarray(w, dtype=complex)
        half = np.exp(1j * np.pi * w)
        return 1j * (half - 1 / half) * eta**3 / th
    ctx = context(precision)
    if abs(th) < floor:
        raise PoleProximity("theta(w; tau) vanishes to working precision")
    half = ctx.expjpi(ctx.mpc(w))
    return ctx.j * (half - 1 / half) * eta**3 / th


def eval_f(k: int, w, tau, cutoff: int | None = None, precision: int = DOUBLE):
    """g^2 / eta^k times q^{k/24}: the integer-exponent normalisation of f_k."""
    g = eval_g(w, tau, cutoff, precision)
    eta = eval_eta(tau, cutoff, precision)
    if _is_double(precision):
        tau = np.asarray(tau, dtype=complex)
        return g**2 / eta**k * np.exp(2j * np.pi * tau * k / 24)
    ctx = context(precision)
    return g**2 / eta**k * ctx.expjpi(ctx.mpc(tau) * k / 12)


def eval_qpoch_inverse(tau, k: int, cutoff: int | None = None, precision: int = DOUBLE):
    """1 / (q;q)_inf^k."""
    eta = eval_eta(tau, cutoff, precision)
    if _is_double(precision):
        tau = np.asarray(tau, dtype=complex)
        return np.exp(2j * np.pi * tau * k / 24) / eta**k
    ctx = context(precision)
    return ctx.expjpi(ctx.mpc(tau) * k / 12) / eta**k
