"""Exact Bernoulli numbers, convention ``x / (e^x - 1) = sum B_m x^m / m!``."""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

# Write-once table: entries are appended, never modified.
_TABLE: list[Fraction] = [Fraction(1)]
_LOCK = threading.Lock()


def bernoulli(j: int) -> Fraction:
    """B_j, with B_1 = -1/2.

    Multiplying the generating function by ``(e^x - 1)/x`` gives
    ``sum_{i=0}^{m} C(m+1, i) B_i = 0`` for ``m >= 1``.
    """
    if j < 0:
        raise ValueError("Bernoulli index must be non-negative")
    if j < len(_TABLE):
        return _TABLE[j]
    with _LOCK:
        while len(_TABLE) <= j:
            m = len(_TABLE)
            s = sum(comb(m + 1, i) * _TABLE[i] for i in range(m))
            _TABLE.append(-s / (m + 1))
    return _TABLE[j]
