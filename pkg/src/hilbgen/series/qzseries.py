"""Truncated power series in q with Laurent-polynomial coefficients in zeta."""

from __future__ import annotations

from typing import Any, Iterable, Sequence

from ..errors import InvalidShift, NonUnitConstantTerm, OrderExceeded
from .laurent import LaurentPoly, unit_inverse

_ZERO = LaurentPoly()
_ONE = LaurentPoly.monomial(0, 1)


class QZSeries:
    """``sum_{n=0}^{order} coeffs[n](zeta) q^n + O(q^{order+1})``.

    Instances are immutable; every operation returns a new series whose
    order is the minimum of its operands' orders.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[LaurentPoly], order: int | None = None):
        cs = [c if isinstance(c, LaurentPoly) else LaurentPoly.monomial(0, c)
              for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        if len(cs) < order + 1:
            cs.extend([_ZERO] * (order + 1 - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs[: order + 1]))

    def __setattr__(self, name, value):
        raise AttributeError("QZSeries is immutable")

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], Any], order: int) -> "QZSeries":
        """Build from ``{(n, m): c}`` meaning ``c zeta^m q^n``; terms past
        ``order`` are dropped."""
        rows: list[dict[int, Any]] = [{} for _ in range(order + 1)]
        for (n, m), c in terms.items():
            if 0 <= n <= order:
                rows[n][m] = rows[n].get(m, 0) + c
        return cls([LaurentPoly.from_dict(r) for r in rows], order)

    def __getitem__(self, n: int) -> LaurentPoly:
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, QZSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def truncate(self, order: int) -> "QZSeries":
        if order > self.order:
            raise OrderExceeded(f"cannot extend series of order {self.order} to {order}")
        return QZSeries(self.coeffs[: order + 1], order)

    def map_coeffs(self, fn) -> "QZSeries":
        return QZSeries([fn(c) for c in self.coeffs], self.order)

    def mirror(self) -> "QZSeries":
        """Substitute ``zeta -> 1/zeta``."""
        return self.map_coeffs(LaurentPoly.mirror)

    def __add__(self, other: "QZSeries") -> "QZSeries":
        return add(self, other)

    def __sub__(self, other: "QZSeries") -> "QZSeries":
        return add(self, negate(other))

    def __neg__(self) -> "QZSeries":
        return negate(self)

    def __mul__(self, other: "QZSeries") -> "QZSeries":
        return mul(self, other)

    def __pow__(self, e: int) -> "QZSeries":
        return power(self, e)

    def __repr__(self) -> str:
        shown = ", ".join(repr(c) for c in self.coeffs[:4])
        more = ", ..." if self.order >= 4 else ""
        return f"QZSeries(order={self.order}, [{shown}{more}])"


def zero(order: int) -> QZSeries:
    return QZSeries([], order)


def one(order: int) -> QZSeries:
    return QZSeries([_ONE], order)


def monomial(n: int, m: int, c: Any = 1, order: int = 0) -> QZSeries:
    """``c zeta^m q^n`` truncated at ``order`` (zero if ``n > order``)."""
    return QZSeries.from_terms({(n, m): c}, order)


def from_univariate(coeffs: Sequence[Any], order: int | None = None) -> QZSeries:
    """Embed a plain q-series (no zeta dependence)."""
    return QZSeries([LaurentPoly.monomial(0, c) for c in coeffs], order)


def add(a: QZSeries, b: QZSeries) -> QZSeries:
    order = min(a.order, b.order)
    return QZSeries([a.coeffs[i] + b.coeffs[i] for i in range(order + 1)], order)


def negate(a: QZSeries) -> QZSeries:
    return QZSeries([-c for c in a.coeffs], a.order)


def mul(a: QZSeries, b: QZSeries) -> QZSeries:
    """Truncated Cauchy product (schoolbook)."""
    order = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    a_nz = [i for i in range(order + 1) if ac[i]]
    b_nz = [j for j in range(order + 1) if bc[j]]
    out: list[LaurentPoly] = [_ZERO] * (order + 1)
    for i in a_nz:
        ai = ac[i]
        for j in b_nz:
            if i + j > order:
                break
            out[i + j] = out[i + j] + ai * bc[j]
    return QZSeries(out, order)


def invert(a: QZSeries) -> QZSeries:
    """Multiplicative inverse; the q^0 coefficient must be a unit monomial."""
    u_inv = unit_inverse(a.coeffs[0])
    if u_inv is None:
        raise NonUnitConstantTerm(f"constant term {a.coeffs[0]!r} is not a unit monomial")
    u_inv = u_inv if isinstance(u_inv, LaurentPoly) else LaurentPoly.monomial(0, u_inv)
    order = a.order
    ac = a.coeffs
    a_nz = [i for i in range(1, order + 1) if ac[i]]
    out: list[LaurentPoly] = [u_inv]
    for n in range(1, order + 1):
        acc = _ZERO
        for i in a_nz:
            if i > n:
                break
            acc = acc + ac[i] * out[n - i]
        out.append(-(acc * u_inv))
    return QZSeries(out, order)


def power(a: QZSeries, e: int) -> QZSeries:
    """``a**e`` for ``e >= 0`` by repeated squaring."""
    if e < 0:
        raise ValueError("exponent must be non-negative; use invert() first")
    result = one(a.order)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def pochhammer(zeta_shift: int, q_shift: int, order: int) -> QZSeries:
    """``prod_{n>=0} (1 - zeta^s q^{t+n})`` truncated at ``order``."""
    if q_shift < 1:
        raise InvalidShift(f"q shift must be >= 1, got {q_shift}")
    result = one(order)
    for e in range(q_shift, order + 1):
        result = _mul_sparse_binomial(result, e, LaurentPoly.monomial(zeta_shift, -1))
    return result


def _mul_sparse_binomial(a: QZSeries, e: int, c: LaurentPoly) -> QZSeries:
    """``a * (1 + c q^e)`` without a full Cauchy product."""
    out = list(a.coeffs)
    for n in range(a.order, e - 1, -1):
        src = a.coeffs[n - e]
        if src:
            out[n] = out[n] + c * src
    return QZSeries(out, a.order)


def _div_sparse_binomial(a: QZSeries, e: int, c: LaurentPoly) -> QZSeries:
    """``a / (1 - c q^e)`` by the forward recurrence ``out[n] += c out[n-e]``."""
    out = list(a.coeffs)
    for n in range(e, a.order + 1):
        src = out[n - e]
        if src:
            out[n] = out[n] + c * src
    return QZSeries(out, a.order)


def coeff(a: QZSeries, n: int, m: int) -> Any:
    """Coefficient of ``zeta^m q^n``."""
    if n < 0:
        raise ValueError("q exponent must be non-negative")
    if n > a.order:
        raise OrderExceeded(f"q^{n} requested from a series known to O(q^{a.order + 1})")
    return a.coeffs[n][m]
