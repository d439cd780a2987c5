"""Dense Laurent polynomials in a single variable.

Coefficients may be Python ints or, for nested multivariate use, other
``LaurentPoly`` instances.  Anything supporting ``+``, ``-``, ``*`` and
``bool`` works.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator


def _is_zero(c: Any) -> bool:
    return not c


class LaurentPoly:
    """Immutable ``sum_i coeffs[i] * x**(low + i)`` kept in trimmed form.

    The zero polynomial is stored as ``low == 0`` with no coefficients.
    """

    __slots__ = ("low", "coeffs")

    def __init__(self, coeffs: Iterable[Any] = (), low: int = 0):
        cs = list(coeffs)
        start = 0
        while start < len(cs) and _is_zero(cs[start]):
            start += 1
        end = len(cs)
        while end > start and _is_zero(cs[end - 1]):
            end -= 1
        if start == end:
            object.__setattr__(self, "low", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "low", low + start)
            object.__setattr__(self, "coeffs", tuple(cs[start:end]))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def monomial(cls, exponent: int, coeff: Any = 1) -> "LaurentPoly":
        return cls((coeff,), exponent)

    @classmethod
    def from_dict(cls, terms: dict[int, Any]) -> "LaurentPoly":
        terms = {e: c for e, c in terms.items() if not _is_zero(c)}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        zero = 0
        return cls([terms.get(e, zero) for e in range(lo, hi + 1)], lo)

    # -- inspection -------------------------------------------------------

    @property
    def high(self) -> int:
        """Largest exponent present; ``low - 1`` for the zero polynomial."""
        return self.low + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, exponent: int) -> Any:
        i = exponent - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def terms(self) -> Iterator[tuple[int, Any]]:
        for i, c in enumerate(self.coeffs):
            if not _is_zero(c):
                yield self.low + i, c

    def to_dict(self) -> dict[int, Any]:
        return dict(self.terms())

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.monomial(0, other)
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        off = self.low - lo
        for i, c in enumerate(self.coeffs):
            out[off + i] = c
        off = other.low - lo
        for i, c in enumerate(other.coeffs):
            out[off + i] = out[off + i] + c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly([-c for c in self.coeffs], self.low)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.monomial(0, other)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            if _is_zero(other):
                return LaurentPoly()
            return LaurentPoly([c * other for c in self.coeffs], self.low)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LaurentPoly()
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for j, bj in enumerate(b):
            if _is_zero(bj):
                continue
            for i, ai in enumerate(a):
                out[i + j] = out[i + j] + ai * bj
        return LaurentPoly(out, self.low + other.low)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return LaurentPoly(self.coeffs, self.low + k)

    def mirror(self) -> "LaurentPoly":
        """Substitute ``x -> 1/x``."""
        return LaurentPoly(reversed(self.coeffs), -self.high)

    def map_coeffs(self, fn: Callable[[Any], Any]) -> "LaurentPoly":
        return LaurentPoly([fn(c) for c in self.coeffs], self.low)

    def evaluate(self, x: Any) -> Any:
        """Value at ``x``; exact for int ``x`` (a Fraction if a negative
        power of ``|x| > 1`` occurs)."""
        total = 0
        for e, c in self.terms():
            if e >= 0:
                p = x**e
            elif isinstance(x, int):
                p = x ** (-e) if x in (1, -1) else Fraction(1, x ** (-e))
            else:
                p = 1 / x ** (-e)
            total = total + c * p
        return total

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.low == other.low and self.coeffs == other.coeffs
        if not self.coeffs:
            return _is_zero(other)
        return self.is_monomial() and self.low == 0 and self.coeffs[0] == other

    def __hash__(self) -> int:
        # constants hash like the scalar they compare equal to
        if not self.coeffs:
            return hash(0)
        if self.low == 0 and self.is_monomial():
            return hash(self.coeffs[0])
        return hash((self.low, self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "LaurentPoly(0)"
        parts = [f"{c!r}*z^{e}" for e, c in self.terms()]
        return "LaurentPoly(" + " + ".join(parts) + ")"


def unit_inverse(c: Any) -> Any:
    """Inverse of a unit monomial (``±1`` or a monomial with unit coefficient).

    Returns ``None`` when ``c`` is not such a unit.
    """
    if isinstance(c, LaurentPoly):
        if not c.is_monomial():
            return None
        inner = unit_inverse(c.coeffs[0])
        if inner is None:
            return None
        return LaurentPoly.monomial(-c.low, inner)
    if c == 1 or c == -1:
        return int(c)
    return None
