"""Numerical extraction of a_{m,k}(n) by a two-dimensional contour integral.

a_{m,k}(n) = int_0^1 int_0^1 f_k(w; u + i y) e^{-2 pi i (m w + n u)} e^{2 pi n y} dw du
with y = beta_k / (2 pi), so |q| = e^{-beta_k}.  The integrand is smooth and
periodic in both variables, so the trapezoid rule converges geometrically.
The w-grid is offset by half a step to avoid the removable point w = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import QuadratureUnstable
from .modular import DOUBLE, default_cutoff, eval_f

_ROW_CHUNK = 64


def _is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


@dataclass(frozen=True)
class ContourConfig:
    k: int = 24
    n: int = 0
    m: int = 0
    samples_w: int = 1024
    samples_u: int = 1024
    precision: int = DOUBLE
    product_cutoff: int | None = None
    tolerance: float = 1e-6
    radius_beta: float = field(init=False)

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not (_is_power_of_two(self.samples_w) and _is_power_of_two(self.samples_u)):
            raise ValueError("sample counts must be powers of two")
        if self.precision > DOUBLE:
            raise ValueError("the grid oracle runs in double precision")
        # beta_k(max(n, 1)): n = 0 uses the n = 1 radius
        b = math.pi * math.sqrt(self.k / (6 * max(self.n, 1)))
        object.__setattr__(self, "radius_beta", b)
        if self.product_cutoff is not None:
            floor = default_cutoff(self.tau_imag, self.precision // 2)
            if self.product_cutoff < floor:
                raise ValueError(f"product_cutoff {self.product_cutoff} < {floor} needed here")

    @property
    def tau_imag(self) -> float:
        return self.radius_beta / (2 * math.pi)

    def doubled(self) -> "ContourConfig":
        return ContourConfig(self.k, self.n, self.m, 2 * self.samples_w, 2 * self.samples_u,
                             self.precision, self.product_cutoff, self.tolerance)


def _w_profile(cfg: ContourConfig) -> np.ndarray:
    """h(w_j) = mean_u f_k(w_j; u + iy) e^{-2 pi i n u} e^{2 pi n y}."""
    Nw, Nu = cfg.samples_w, cfg.samples_u
    y = cfg.tau_imag
    w = (np.arange(Nw) + 0.5) / Nw
    u = np.arange(Nu) / Nu
    tau = u + 1j * y
    phase = np.exp(-2j * np.pi * cfg.n * u) * math.exp(2 * math.pi * cfg.n * y)
    out = np.empty(Nw, dtype=complex)
    for start in range(0, Nw, _ROW_CHUNK):
        ws = w[start:start + _ROW_CHUNK, None]
        vals = eval_f(cfg.k, ws, tau[None, :], cfg.product_cutoff, cfg.precision)
        out[start:start + _ROW_CHUNK] = (vals * phase[None, :]).mean(axis=1)
    return out


def _extract(cfg: ContourConfig, ms) -> tuple[dict[int, float], float]:
    """Values for each m and the integrand scale max |h| that bounds rounding noise."""
    h = _w_profile(cfg)
    w = (np.arange(cfg.samples_w) + 0.5) / cfg.samples_w
    vals = {m: complex(np.mean(h * np.exp(-2j * np.pi * m * w))).real for m in ms}
    return vals, float(np.max(np.abs(h)))


def _check(coarse: dict, fine: dict, tol: float, scale: float) -> None:
    for m, v in fine.items():
        delta = abs(v - coarse[m])
        if delta > tol * max(1.0, abs(v), scale):
            raise QuadratureUnstable(f"m={m}: doubling samples moved the value by {delta:.3g}")


def contour_row(cfg: ContourConfig, ms, check: bool = True) -> dict[int, float]:
    """Numerical a_{m,k}(n) for every m in ``ms`` from a single grid.

    With ``check`` the grid is doubled in both directions and the refined
    values are returned; QuadratureUnstable is raised if any of them moved
    by more than ``cfg.tolerance`` relative to the integrand scale.
    """
    ms = list(ms)
    coarse, _ = _extract(cfg, ms)
    if not check:
        return coarse
    fine, scale = _extract(cfg.doubled(), ms)
    _check(coarse, fine, cfg.tolerance, scale)
    return fine


def contour_a(cfg: ContourConfig, check: bool = True) -> float:
    """Numerical a_{m,k}(n) for ``cfg.m``; see ``contour_row``."""
    return contour_row(cfg, [cfg.m], check)[cfg.m]


def contour_delta(cfg: ContourConfig, exact: int) -> float:
    """|numerical - exact| without the doubling check."""
    return abs(contour_a(cfg, check=False) - exact)
