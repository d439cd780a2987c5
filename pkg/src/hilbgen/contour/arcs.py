"""Major/minor arc decomposition of the coefficient integral, measured numerically.

On the circle |q| = e^{-beta} write q = e^{-z} with z = beta - 2 pi i u and
u in [-1/2, 1/2).  Then a_{m,k}(n) = int f_{m,k} e^{n z} du.  The major arc
is |u| <= beta / (2 pi) (phase of q within [-beta, beta]); the minor arc is
the rest.  On the major arc the integrand is peeled apart as

    f_{m,k} = (g_{m,1} + g_{m,2}) / (q;q)^k
    1/(q;q)^k ~ (z/2pi)^{k/2} e^{-kz/24 + k pi^2/(6z)}
    e^{-kz/24} g_{m,1}(z) ~ sum_{l<=N} d_{m,k}(l) z^l

and E1, E2, E3 are the integrals of the successive remainders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..asym.taylor import d_coeff
from ..asym.xfloat import context, to_ctx
from .modular import eval_g, eval_qpoch_inverse
from .quadrature import ContourConfig

_GL_NODES = 20


def _legendre(a: float, b: float, panels: int):
    x, wts = np.polynomial.legendre.leggauss(_GL_NODES)
    edges = np.linspace(a, b, panels + 1)
    nodes, weights = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        half = (hi - lo) / 2
        nodes.append(lo + half * (x + 1))
        weights.append(half * wts)
    return np.concatenate(nodes), np.concatenate(weights)


# --- g_{m,1} and the leading-order approximation of g^2 ----------------------

def _approx_factor(ctx, w, z):
    """sin^2(pi w) e^{4 pi^2 w^2/z} / sinh^2(2 pi^2 w/z), without the (z/2pi)^-2."""
    if w == 0:
        return (z / (2 * ctx.pi)) ** 2
    a = 4 * ctx.pi**2 / z
    # 1/sinh^2(x) = 4 e^{-2x} / (1 - e^{-2x})^2 keeps large |x| finite
    return ctx.sin(ctx.pi * w) ** 2 * 4 * ctx.exp(a * (w * w - w)) / ctx.expm1(-a * w) ** 2


def g_m1_numeric(m: int, z, precision: int = 96):
    """(8 pi^2/z^2) int_0^{1/2} sin^2(pi w) e^{4 pi^2 w^2/z} cos(2 pi m w) / sinh^2(2 pi^2 w/z) dw."""
    ctx = context(precision)
    z = ctx.mpmathify(z)
    if ctx.re(z) <= 0:
        raise ValueError("g_m1_numeric needs Re z > 0")
    # the integrand changes on the scale |z| / 4 pi^2 near w = 0
    s = abs(z) / (4 * ctx.pi**2)
    pts = [ctx.mpf(0)]
    while pts[-1] * 2 + s < ctx.mpf(1) / 2 and len(pts) < 40:
        pts.append(pts[-1] * 2 + s)
    pts.append(ctx.mpf(1) / 2)
    val = ctx.quad(lambda w: _approx_factor(ctx, w, z) * ctx.cos(2 * ctx.pi * m * w), pts)
    return 8 * ctx.pi**2 / z**2 * val


def approximation_residual(w, z, precision: int = 128):
    """|g(w; iz/2pi)^2 - A| / |A| for the leading approximation A.

    The residual decays like e^{-4 pi^2 Re(1/z)(1-w)}, so the working
    precision is raised to resolve it.
    """
    c64 = context(64)
    decay = float(4 * c64.pi**2 * c64.re(1 / c64.mpmathify(z)) * (1 - c64.mpmathify(w).real))
    prec = max(precision, int(decay / math.log(2)) + 64)
    ctx = context(prec)
    z = ctx.mpmathify(z)
    w = ctx.mpmathify(w)
    tau = ctx.j * z / (2 * ctx.pi)
    g2 = eval_g(w, tau, precision=prec) ** 2
    approx = _approx_factor(ctx, w, z) / (z / (2 * ctx.pi)) ** 2
    return context(precision).mpf(abs(g2 - approx) / abs(approx))


# --- bounds ------------------------------------------------------------------

def _log_bounds(k: int, n: int, N: int) -> dict[str, float]:
    main = math.pi * math.sqrt(2 * k * n / 3)
    ln = math.log(n)
    return {
        "E": -(k - 6) / 4 * ln + main * (1 - 3 / (4 * math.pi**2)),
        "E1": (-k / 4 + 0.5) * ln + main - 1.5 * math.pi * math.sqrt(6 * n / k),
        "E2": (-k / 4 - 1) * ln + main - 4 * math.pi * math.sqrt(6 * n / k),
        "E3": (-1 - N / 2 - k / 4) * ln + main,
    }


@dataclass(frozen=True)
class ArcSplitReport:
    k: int
    n: int
    m: int
    taylor_terms: int
    M_major: complex
    E_minor: complex
    E1: float
    E2: float
    E3: float
    bound_ratios: dict

    @property
    def total(self) -> complex:
        return self.M_major + self.E_minor


# --- probe -------------------------------------------------------------------

def _f_coeff_np(cfg: ContourConfig, tau: np.ndarray) -> np.ndarray:
    """f_{m,k}(tau) at each tau by the offset w-trapezoid."""
    Nw = cfg.samples_w
    w = (np.arange(Nw) + 0.5) / Nw
    g2 = eval_g(w[:, None], tau[None, :]) ** 2
    coeff = (g2 * np.exp(-2j * np.pi * cfg.m * w)[:, None]).mean(axis=0)
    return coeff * eval_qpoch_inverse(tau, cfg.k)


def _g_m2_np(m: int, tau: np.ndarray, z: np.ndarray, panels: int = 4) -> np.ndarray:
    """2 int_0^{1/2} (g^2 - A) cos(2 pi m w) dw at each (tau, z) pair."""
    w, wts = _legendre(0.0, 0.5, panels)
    W, Z = w[:, None], z[None, :]
    g2 = eval_g(W, tau[None, :]) ** 2
    a = 4 * np.pi**2 / Z
    A = np.sin(np.pi * W) ** 2 * 4 * np.exp(a * (W * W - W)) / np.expm1(-a * W) ** 2
    A = A / (Z / (2 * np.pi)) ** 2
    return 2 * ((g2 - A) * np.cos(2 * np.pi * m * W) * wts[:, None]).sum(axis=0)


def arc_split_probe(cfg: ContourConfig, taylor_terms: int = 3, mp_precision: int = 128,
                    major_panels: int = 3, minor_panels: int = 48) -> ArcSplitReport:
    """Measure M, E, E1, E2, E3 for (m, k, n) on the circle |q| = e^{-beta_k}."""
    if cfg.n < 1:
        raise ValueError("the arc split needs n >= 1")
    k, n, m, N = cfg.k, cfg.n, cfg.m, taylor_terms
    beta = cfg.radius_beta
    y = cfg.tau_imag

    def integrate(lo, hi, panels):
        u, wts = _legendre(lo, hi, panels)
        tau = u + 1j * y
        vals = _f_coeff_np(cfg, tau) * np.exp(n * (beta - 2j * np.pi * u))
        return complex((vals * wts).sum())

    M = integrate(-y, y, 4 * major_panels)
    E = integrate(y, 1 - y, minor_panels)

    # E1 in double precision: g_{m,2} is resolved far above rounding for n <= 40
    u, wts = _legendre(-y, y, major_panels)
    tau = u + 1j * y
    z = beta - 2j * np.pi * u
    g2 = _g_m2_np(m, tau, z)
    E1 = abs(complex((g2 * eval_qpoch_inverse(tau, k) * np.exp(n * z) * wts).sum()))

    # E2 and E3 cancel to ~e^{-4 pi^2/beta} and z^{N+1} respectively: use mpmath
    ctx = context(mp_precision)
    d = [to_ctx(ctx, d_coeff(m, k, ell)) for ell in range(1, N + 1)]
    e2 = ctx.mpc(0)
    e3 = ctx.mpc(0)
    for ui, wi in zip(u, wts):
        zi = ctx.mpf(beta) - 2 * ctx.j * ctx.pi * ctx.mpf(float(ui))
        taui = ctx.j * zi / (2 * ctx.pi)
        g1 = g_m1_numeric(m, zi, mp_precision)
        modular = (zi / (2 * ctx.pi)) ** (ctx.mpf(k) / 2) * ctx.exp(k * ctx.pi**2 / (6 * zi))
        inv = eval_qpoch_inverse(taui, k, precision=mp_precision)
        weight = ctx.mpf(float(wi)) * ctx.exp(n * zi)
        e2 += weight * g1 * (inv - modular * ctx.exp(-k * zi / 24))
        taylor = sum(dl * zi ** (ell + 1) for ell, dl in enumerate(d))
        e3 += weight * modular * (ctx.exp(-k * zi / 24) * g1 - taylor)
    E2, E3 = float(abs(e2)), float(abs(e3))

    logs = _log_bounds(k, n, N)
    measured = {"E": abs(E), "E1": E1, "E2": E2, "E3": E3}
    ratios = {key: (math.exp(math.log(v) - logs[key]) if v > 0 else 0.0)
              for key, v in measured.items()}
    return ArcSplitReport(k, n, m, N, M, E, E1, E2, E3, ratios)
