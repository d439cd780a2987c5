"""Exact truncated q-series with Laurent-polynomial coefficients in zeta."""

from ..errors import InvalidShift, NonUnitConstantTerm, OrderExceeded
from .dense import divide_by_pochhammers, euler_power
from .laurent import LaurentPoly, unit_inverse
from .qzseries import (
    QZSeries,
    add,
    coeff,
    from_univariate,
    invert,
    monomial,
    mul,
    negate,
    one,
    pochhammer,
    power,
    zero,
)

__all__ = [
    "LaurentPoly", "QZSeries",
    "add", "mul", "negate", "invert", "power", "pochhammer", "coeff",
    "zero", "one", "monomial", "from_univariate", "unit_inverse",
    "euler_power", "divide_by_pochhammers",
    "InvalidShift", "NonUnitConstantTerm", "OrderExceeded",
]
