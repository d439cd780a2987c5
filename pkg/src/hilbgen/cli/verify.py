"""The invariant checklist behind ``hilbgen verify``."""

from __future__ import annotations

import cmath
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from ..asym import bessel_I, d_coeff, profile_P
from ..asym.taylor import clear_caches
from ..asym.xfloat import context
from ..contour import ContourConfig, contour_row, eval_eta, eval_theta
from ..genfun import a, a_row, sum_rule_check
from ..series import QZSeries, invert, mul, one
from .config import RunConfig

VERIFY_N = 20  # largest n for the exact invariants
ORACLE_N = 8


@dataclass(frozen=True)
class CheckResult:
    key: str
    name: str
    passed: bool
    detail: str
    seconds: float

    def as_dict(self) -> dict:
        return {"key": self.key, "name": self.name, "passed": self.passed,
                "detail": self.detail, "seconds": round(self.seconds, 3)}


def _random_series(rng: random.Random, order: int, unit: bool = False) -> QZSeries:
    terms = {}
    for n in range(order + 1):
        for m in range(-n, n + 1):
            if rng.random() < 0.5:
                terms[(n, m)] = rng.randint(-5, 5)
    if unit:
        terms[(0, 0)] = rng.choice((1, -1))
    return QZSeries.from_terms(terms, order)


def _ring(cfg: RunConfig) -> str | None:
    rng = random.Random(20240611)
    for _ in range(5):
        x, y, z = (_random_series(rng, 6) for _ in range(3))
        if (x * y) * z != x * (y * z):
            return "multiplication is not associative"
        if x * (y + z) != x * y + x * z:
            return "multiplication does not distribute over addition"
        if x * y != y * x:
            return "multiplication is not commutative"
        u = _random_series(rng, 6, unit=True)
        if mul(u, invert(u)) != one(6):
            return "inverse of a unit does not round-trip"
    return None


def _symmetry(cfg: RunConfig) -> str | None:
    for n in range(VERIFY_N + 1):
        row = a_row(cfg.k, n)
        for m, v in row.items():
            if row.get(-m, 0) != v:
                return f"a({m},{cfg.k},{n}) != a({-m},{cfg.k},{n})"
    return None


def _positivity(cfg: RunConfig) -> str | None:
    for n in range(VERIFY_N + 1):
        for m in range(-n - 2, n + 3):
            v = a(m, 24, n)
            if (abs(m) <= n) != (v > 0) or (abs(m) > n and v != 0):
                return f"a({m},24,{n}) = {v} breaks the support/positivity pattern"
    return None


def _sum_rule(cfg: RunConfig) -> str | None:
    for n in range(VERIFY_N + 1):
        if not sum_rule_check(cfg.k, n):
            return f"sum over m of a(m,{cfg.k},{n}) differs from p_{cfg.k}({n})"
    return None


def _d_closed_form(cfg: RunConfig) -> str | None:
    clear_caches()
    for k in (1, 2, 24):
        for m in range(6):
            expected = (
                Fraction(1, 6),
                Fraction(1, 30) - Fraction(k, 144),
                Fraction(23, 2520) - Fraction(m * m, 60) - Fraction(k, 720) + Fraction(k * k, 6912),
            )
            for ell, want in enumerate(expected, start=1):
                got = d_coeff(m, k, ell)
                if got != want:
                    return f"d_({m},{k})({ell}) = {got}, expected {want}"
    return None


def _bessel(cfg: RunConfig) -> str | None:
    ctx = context(cfg.precision_bits)
    tol = ctx.ldexp(1, -cfg.precision_bits + 8)
    for x in (Fraction(1, 3), 2, 17, 60):
        xv = ctx.mpf(x.numerator) / x.denominator if isinstance(x, Fraction) else ctx.mpf(x)
        scale = ctx.sqrt(2 / (ctx.pi * xv))
        for order, want in ((Fraction(1, 2), scale * ctx.sinh(xv)),
                            (Fraction(-1, 2), scale * ctx.cosh(xv))):
            got = bessel_I(order, x, cfg.precision_bits)
            if abs(got / want - 1) > tol:
                return f"I_{order}({x}) off by {ctx.nstr(abs(got / want - 1), 3)}"
    return None


def _profile(cfg: RunConfig) -> str | None:
    ctx = context(96)
    for b in (Fraction(1, 2), Fraction(1, 5)):
        bv = ctx.mpf(b.numerator) / b.denominator
        P = lambda m: profile_P(m, bv, 128)  # noqa: E731
        pts = [-ctx.inf, -1, 0, 1, ctx.inf]
        mass = ctx.quad(P, pts)
        var = ctx.quad(lambda m: m * m * P(m), pts)
        want = 2 * ctx.pi**2 / (3 * bv * bv)
        if abs(mass - 1) > 1e-12 or abs(var / want - 1) > 1e-12:
            return f"beta={b}: mass {ctx.nstr(mass, 15)}, variance ratio {ctx.nstr(var / want, 15)}"
    return None


def _oracle(cfg: RunConfig) -> str | None:
    for n in range(ORACLE_N + 1):
        vals = contour_row(ContourConfig(k=24, n=n, samples_w=64, samples_u=64), range(-n, n + 1))
        for m, v in vals.items():
            exact = a(m, 24, n)
            if abs(v - exact) > 1e-3 * abs(exact):
                return f"contour value {v!r} vs exact a({m},24,{n}) = {exact}"
    return None


def _modular(cfg: RunConfig) -> str | None:
    rng = random.Random(7)
    for _ in range(5):
        tau = complex(rng.uniform(-0.5, 0.5), rng.uniform(0.6, 1.4))
        w = complex(rng.uniform(0.05, 0.45), rng.uniform(-0.1, 0.1))
        root = (-1j * tau) ** 0.5
        lhs, rhs = eval_eta(-1 / tau), root * eval_eta(tau)
        if abs(lhs / rhs - 1) > 1e-8:
            return f"eta inversion fails at tau={tau}"
        lhs = eval_theta(w / tau, -1 / tau)
        rhs = -1j * root * cmath.exp(1j * cmath.pi * w * w / tau) * eval_theta(w, tau)
        if abs(lhs / rhs - 1) > 1e-8:
            return f"theta inversion fails at (w, tau)=({w}, {tau})"
    return None


CHECKS = (
    ("ring", "series ring axioms", _ring),
    ("symmetry", "m -> -m symmetry", _symmetry),
    ("positivity", "support and positivity", _positivity),
    ("sum-rule", "sum rule", _sum_rule),
    ("d-coeff", "d_coeff closed form", _d_closed_form),
    ("bessel", "Bessel closed forms", _bessel),
    ("profile", "profile normalization", _profile),
    ("oracle", "oracle equivalence", _oracle),
    ("modular", "modular identities", _modular),
)
CHECK_KEYS = tuple(key for key, _, _ in CHECKS)


def cmd_verify(cfg: RunConfig) -> list[CheckResult]:
    """Run every check whose key is not in ``cfg.skip``, in a fixed order."""
    results = []
    for key, name, fn in CHECKS:
        if key in cfg.skip:
            continue
        start = time.perf_counter()
        try:
            problem = fn(cfg)
        except Exception as exc:  # a crash is a failed check, reported by name
            problem = f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(key, name, problem is None, problem or "ok",
                                   time.perf_counter() - start))
    return results

