"""Exact expansions of g, f_k = g^2 / eta^k and the colored partition numbers.

All fractional prefactors are normalised away.  Starting from

    theta(w) = i zeta^{1/2} q^{1/8} (q;q) (zeta q;q) (zeta^{-1};q)
    g        = i (zeta^{1/2} - zeta^{-1/2}) eta^3 / theta

and using ``(zeta^{-1};q) = (1 - zeta^{-1}) (zeta^{-1} q;q)`` together with
``zeta^{1/2} (1 - zeta^{-1}) = zeta^{1/2} - zeta^{-1/2}``, everything cancels
except

    g = (q;q)^2 / ((zeta q;q) (zeta^{-1} q;q)).

Dropping ``q^{-k/24}`` from ``1/eta^k`` leaves ``f_k = g^2 / (q;q)^k``, whose
``zeta^m q^n`` coefficient is ``a_{m,k}(n)``.
"""

from __future__ import annotations

import threading

from ..errors import OrderExceeded
from ..series import QZSeries, coeff, divide_by_pochhammers, euler_power

_F_CACHE: dict[tuple[int, int], QZSeries] = {}
_F_LOCK = threading.Lock()
_MIN_BUILD_ORDER = 16


def g_series(order: int) -> QZSeries:
    """Expansion of g(w; tau) in (zeta, q) up to ``q**order``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    return divide_by_pochhammers(euler_power(2, order), order, (1, -1))


def f_series(k: int, order: int) -> QZSeries:
    """Expansion of ``g^2 / (q;q)^k``; memoised per ``(k, order)``."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if order < 0:
        raise ValueError("order must be non-negative")
    key = (k, order)
    cached = _F_CACHE.get(key)
    if cached is not None:
        return cached
    with _F_LOCK:
        cached = _F_CACHE.get(key)
        if cached is None:
            # g^2/(q;q)^k = (q;q)^(4-k) / ((zeta q;q)(zeta^-1 q;q))^2
            cached = divide_by_pochhammers(euler_power(4 - k, order), order, (1, 1, -1, -1))
            _F_CACHE[key] = cached
    return cached


def _series_covering(k: int, n: int) -> QZSeries:
    best = None
    for (kk, order), s in list(_F_CACHE.items()):
        if kk == k and order >= n and (best is None or order < best.order):
            best = s
    if best is None:
        best = f_series(k, max(n, _MIN_BUILD_ORDER))
    return best


def a(m: int, k: int, n: int) -> int:
    """Exact coefficient a_{m,k}(n)."""
    if n < 0:
        raise OrderExceeded("n must be non-negative")
    if abs(m) > n:
        return 0
    return coeff(_series_covering(k, n), n, m)


def a_row(k: int, n: int) -> dict[int, int]:
    """All nonzero ``{m: a_{m,k}(n)}`` for fixed n."""
    return _series_covering(k, n)[n].to_dict()


_P_TABLES: dict[int, tuple[int, ...]] = {}
_P_LOCK = threading.Lock()


def colored_partitions(k: int, order: int) -> tuple[int, ...]:
    """``(p_k(0), ..., p_k(order))``."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    table = _P_TABLES.get(k)
    if table is None or len(table) <= order:
        with _P_LOCK:
            table = _P_TABLES.get(k)
            if table is None or len(table) <= order:
                table = tuple(euler_power(-k, max(order, _MIN_BUILD_ORDER)))
                _P_TABLES[k] = table
    return table[: order + 1]


def p_colored(k: int, n: int) -> int:
    """Number of partitions of n into parts carrying k colors."""
    if n < 0:
        return 0
    return colored_partitions(k, n)[n]


def sum_rule_check(k: int, n: int) -> bool:
    """True iff ``sum_m a_{m,k}(n) == p_k(n)``."""
    return sum(a_row(k, n).values()) == p_colored(k, n)
