"""Exact Taylor coefficients of g_{m,1}(z) and of exp(-kz/24) g_{m,1}(z).

Two independent routes are provided.  ``g_m1_coeff`` sums the closed
Bernoulli triple sum term by term; ``g_m1_coeff_series`` expands the
integrand of g_{m,1} (after w = z u / 2 pi) as a truncated bivariate
polynomial in (z, u) and integrates each power of u against
``1/sinh(pi u)^2`` via ``int_0^inf u^{2p}/sinh(pi u)^2 du = (-1)^{p+1} B_{2p}/pi``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .bernoulli import bernoulli

_D_CACHE: dict[tuple[int, int, int], Fraction] = {}
_G_CACHE: dict[tuple[int, int], Fraction] = {}
_LOCK = threading.Lock()


def g_m1_coeff(m: int, ell: int) -> Fraction:
    """Coefficient of z^ell in g_{m,1}(z) (zero for ell < 1)."""
    if ell < 1:
        return Fraction(0)
    key = (m * m, ell)
    hit = _G_CACHE.get(key)
    if hit is not None:
        return hit
    m2 = m * m
    total = Fraction(0)
    # exponent 2(l1 + l2) + j - 1 == ell
    for s in range(1, (ell + 1) // 2 + 1):  # s = l1 + l2
        j = ell + 1 - 2 * s
        if j < 0:
            continue
        B = bernoulli(2 * (s + j))
        if not B:
            continue
        inner = Fraction(0)
        for l2 in range(0, s):
            l1 = s - l2
            inner += Fraction(m2**l2, factorial(2 * l1) * factorial(2 * l2))
        total += (-1) ** j * B * inner / factorial(j)
    total *= 2
    with _LOCK:
        _G_CACHE.setdefault(key, total)
    return total


def d_coeff(m: int, k: int, ell: int) -> Fraction:
    """d_{m,k}(ell): coefficient of z^ell in exp(-k z / 24) g_{m,1}(z)."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    key = (m * m, k, ell)
    hit = _D_CACHE.get(key)
    if hit is not None:
        return hit
    c = Fraction(-k, 24)
    total = Fraction(0)
    for i in range(0, ell):
        total += g_m1_coeff(m, ell - i) * c**i / factorial(i)
    with _LOCK:
        _D_CACHE.setdefault(key, total)
    return total


def clear_caches() -> None:
    """Drop memoised coefficients (for tests that perturb Bernoulli data)."""
    with _LOCK:
        _D_CACHE.clear()
        _G_CACHE.clear()


@dataclass(frozen=True)
class AsymExpansion:
    """Truncated expansion ``sum_{ell=1}^N d_{m,k}(ell) z^ell``."""

    m: int
    k: int
    N: int
    terms: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        if [ell for ell, _ in self.terms] != list(range(1, self.N + 1)):
            raise ValueError("terms must cover ell = 1..N without gaps")

    def __call__(self, z):
        return sum((d.numerator * z**ell / d.denominator for ell, d in self.terms), 0 * z)


def expansion(m: int, k: int, N: int) -> AsymExpansion:
    return AsymExpansion(m, k, N, tuple((ell, d_coeff(m, k, ell)) for ell in range(1, N + 1)))


# --- second route ------------------------------------------------------------

def _poly_mul(a: dict, b: dict, zmax: int) -> dict:
    out: dict[tuple[int, int], Fraction] = {}
    for (za, ua), ca in a.items():
        for (zb, ub), cb in b.items():
            z = za + zb
            if z > zmax:
                continue
            key = (z, ua + ub)
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def g_m1_coeff_series(m: int, ell: int) -> Fraction:
    """Same quantity as ``g_m1_coeff`` by bivariate series composition.

    g_{m,1}(z) = (4/z) sum_p [u^{2p}] F(z, u) (-1)^{p+1} B_{2p}, where
    F = sin(zu/2)^2 cos(mzu) exp(z u^2).
    """
    if ell < 1:
        return Fraction(0)
    zmax = ell + 1
    # sin^2(x/2) = (1 - cos x)/2 with x = z u
    sin2 = {(2 * i, 2 * i): Fraction((-1) ** (i + 1), 2 * factorial(2 * i))
            for i in range(1, zmax // 2 + 1)}
    cosm = {(2 * i, 2 * i): Fraction((-1) ** i * m ** (2 * i), factorial(2 * i))
            for i in range(0, zmax // 2 + 1)}
    expo = {(j, 2 * j): Fraction(1, factorial(j)) for j in range(0, zmax + 1)}
    F = _poly_mul(_poly_mul(sin2, cosm, zmax), expo, zmax)
    total = Fraction(0)
    for (z, u), c in F.items():
        if z == zmax:
            p = u // 2
            total += c * (-1) ** (p + 1) * bernoulli(2 * p)
    return 4 * total


def d_coeff_series(m: int, k: int, ell: int) -> Fraction:
    """d_{m,k}(ell) from ``g_m1_coeff_series`` convolved with exp(-kz/24)."""
    c = Fraction(-k, 24)
    return sum((g_m1_coeff_series(m, ell - i) * c**i / factorial(i) for i in range(ell)),
               Fraction(0))
