"""Hodge data of surfaces, Goettsche's product and chi_y genera of K3^[n]."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from ..series import LaurentPoly, QZSeries, one
from ..series.qzseries import _div_sparse_binomial, _mul_sparse_binomial
from .products import a


@dataclass(frozen=True)
class HodgeDiamond:
    """Hodge numbers ``h[(p, r)]`` of a smooth projective surface."""

    h: Mapping[tuple[int, int], int]
    projective: bool = True

    def __post_init__(self):
        full = {}
        for (p, r), v in self.h.items():
            if not (0 <= p <= 2 and 0 <= r <= 2):
                raise ValueError(f"Hodge index ({p}, {r}) outside 0..2")
            if v < 0:
                raise ValueError(f"negative Hodge number h^{p},{r} = {v}")
            full[(p, r)] = int(v)
        for p in range(3):
            for r in range(3):
                full.setdefault((p, r), 0)
        object.__setattr__(self, "h", full)
        if self.projective:
            for (p, r), v in full.items():
                if full[(r, p)] != v or full[(2 - p, 2 - r)] != v:
                    raise ValueError("Hodge symmetry / Poincare duality violated")

    def __getitem__(self, pr: tuple[int, int]) -> int:
        return self.h[pr]

    def polynomial(self) -> LaurentPoly:
        """``sum h^{p,r} x^p y^r`` as a y-polynomial with x-polynomial coefficients."""
        rows: dict[int, LaurentPoly] = {}
        for (p, r), v in self.h.items():
            if v:
                rows[r] = rows.get(r, LaurentPoly()) + LaurentPoly.monomial(p, v)
        return LaurentPoly.from_dict(rows)

    @property
    def euler_number(self) -> int:
        return sum((-1) ** (p + r) * v for (p, r), v in self.h.items())


K3 = HodgeDiamond({(0, 0): 1, (2, 0): 1, (0, 2): 1, (2, 2): 1, (1, 1): 20})


def gottsche_series(hodge: HodgeDiamond, order: int) -> QZSeries:
    """``sum_n e(S^[n]; x, y) x^-n y^-n q^n`` to ``q**order``.

    Coefficients are Laurent polynomials in y whose coefficients are Laurent
    polynomials in x.
    """
    result = one(order)
    for (p, r), h in sorted(hodge.h.items()):
        if not h:
            continue
        mono = LaurentPoly.monomial(r - 1, LaurentPoly.monomial(p - 1, 1))
        odd = (p + r) % 2 == 1
        for n in range(1, order + 1):
            for _ in range(h):
                if odd:
                    result = _mul_sparse_binomial(result, n, mono)
                else:
                    result = _div_sparse_binomial(result, n, mono)
    return result


def specialize_xy(series: QZSeries, x: int = -1, y_sign: int = -1) -> QZSeries:
    """Substitute ``x -> x`` and ``y -> y_sign * zeta`` (``y_sign = ±1``)."""
    if y_sign not in (1, -1):
        raise ValueError("y_sign must be +1 or -1")

    def inner(c):
        return c.evaluate(x) if isinstance(c, LaurentPoly) else c

    def row(poly: LaurentPoly) -> LaurentPoly:
        return LaurentPoly.from_dict({r: (y_sign if r % 2 else 1) * inner(c)
                                      for r, c in poly.terms()})

    return series.map_coeffs(row)


@dataclass(frozen=True)
class ChiYPolynomial:
    """``chi_y(K3^[n]) = sum_r coefficients[r] y^r``."""

    n: int
    coefficients: tuple[int, ...] = field(default=())

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, y):
        return sum(c * y**r for r, c in enumerate(self.coefficients))

    def is_palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]


def chi_y(n: int) -> ChiYPolynomial:
    """chi_y genus of the Hilbert scheme of n points on a K3 surface.

    Index convention: ``chi^r = (-1)^(m+n) a_{m,24}(n)`` with ``r = m + n``,
    so that ``r`` runs over ``0..2n``.  At n = 1 this gives
    ``2 - 20 y + 2 y^2``, the chi_y genus of K3 itself.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    coeffs = [(-1) ** (m + n) * a(m, 24, n) for m in range(-n, n + 1)]
    return ChiYPolynomial(n, tuple(coeffs))
