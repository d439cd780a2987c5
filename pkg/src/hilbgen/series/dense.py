"""Fast exact builders for Euler-type products at large truncation order.

The generic ``mul``/``invert`` route costs O(N^4) big-integer operations for
a full bivariate series, which is out of reach at N ~ 10^3.  Products of the
form

    U(q) / prod_s (zeta^s q; q)_inf

(U univariate) only ever need the recurrence ``T[j] += zeta^s T[j-t]`` for
each factor ``1/(1 - zeta^s q^t)``.  That recurrence is run here on a 2-D
object array of Python ints, vectorised over whole blocks of ``t`` rows:
rows ``[b, b+t)`` only read rows ``[b-t, b)``, which are already final.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from .laurent import LaurentPoly
from .qzseries import QZSeries


@lru_cache(maxsize=None)
def _sigma_table(order: int) -> tuple[int, ...]:
    sig = [0] * (order + 1)
    for d in range(1, order + 1):
        for n in range(d, order + 1, d):
            sig[n] += d
    return tuple(sig)


def euler_power(e: int, order: int) -> list[int]:
    """Coefficients of ``(q;q)_inf**e`` up to ``q**order``, any integer ``e``.

    Uses the logarithmic-derivative recurrence
    ``n c_n = -e * sum_{j=1}^n sigma(j) c_{n-j}``; the division is exact.
    """
    if order < 0:
        return []
    sig = _sigma_table(order)
    c = [0] * (order + 1)
    c[0] = 1
    for n in range(1, order + 1):
        s = 0
        for j in range(1, n + 1):
            s += sig[j] * c[n - j]
        c[n] = (-e * s) // n
    return c


def divide_by_pochhammers(base: Sequence[int], order: int,
                          zeta_shifts: Sequence[int]) -> QZSeries:
    """``base(q) / prod_{s in zeta_shifts} (zeta^s q; q)_inf`` to ``q**order``.

    Shifts must lie in {-1, 0, 1}; then the zeta-support of the ``q^j`` row
    stays inside ``[-j, j]``, which bounds the slices touched.
    """
    if any(abs(s) > 1 for s in zeta_shifts):
        raise ValueError("only zeta shifts in {-1, 0, 1} are supported")
    N = order
    width = 2 * N + 1
    grid = np.zeros((N + 1, width), dtype=object)
    col = list(base[: N + 1]) + [0] * max(0, N + 1 - len(base))
    grid[:, N] = col
    for s in zeta_shifts:
        for t in range(1, N + 1):
            b = t
            while b <= N:
                e = min(b + t, N + 1)
                r = b - 1  # support radius of the source rows
                lo, hi = N - r, N + r + 1
                grid[b:e, lo + s:hi + s] += grid[b - t:e - t, lo:hi]
                b = e
    rows = []
    for j in range(N + 1):
        r = min(j * max((abs(s) for s in zeta_shifts), default=0), N)
        rows.append(LaurentPoly(grid[j, N - r:N + r + 1].tolist(), -r))
    return QZSeries(rows, N)
