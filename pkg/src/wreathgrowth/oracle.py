"""Brute-force cross-checks.

Nothing here touches the optimized kernels: products are expanded by full
convolution with explicit geometric series, and conjugacy types are counted
by listing partitions slot by slot.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .qseries import EulerProduct, Series

NAIVE_MAX_ORDER = 120
SYM_LIMITS = (4, 25)  # (max M, max n)
ALT_LIMITS = (3, 20)


def _convolve(a: list[int], b: list[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    for j, bj in enumerate(b):
        if bj:
            for i in range(order + 1 - j):
                out[i + j] += a[i] * bj
    return out


def naive_coefficients(p: EulerProduct | Iterable[tuple[int, int]], order: int) -> Series:
    """Expand an Euler product factor by factor with full convolutions."""
    if not 0 <= order <= NAIVE_MAX_ORDER:
        raise ValueError(f"naive expansion supports 0 <= order <= {NAIVE_MAX_ORDER}")
    factors = p.factors if isinstance(p, EulerProduct) else tuple(p)
    c = [1] + [0] * order
    for a, e in factors:
        for n in range(1, order // a + 1):
            step = a * n
            if e < 0:
                # 1/(1 - q^step) = 1 + q^step + q^(2 step) + ...
                f = [1 if i % step == 0 else 0 for i in range(order + 1)]
            else:
                f = [0] * (order + 1)
                f[0], f[step] = 1, -1
            for _ in range(abs(e)):
                c = _convolve(c, f, order)
    return Series.from_integers(c)


def _partitions(n: int, cap: int) -> Iterable[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _count(n: int, even_parts_only: bool) -> int:
    return sum(
        1 for lam in _partitions(n, n) if not even_parts_only or len(lam) % 2 == 0
    )


def _compositions(n: int, slots: int) -> Iterable[tuple[int, ...]]:
    if slots == 1:
        yield (n,)
        return
    for w in range(n + 1):
        for rest in _compositions(n - w, slots - 1):
            yield (w,) + rest


def sym_type_count(m: int, n: int) -> int:
    """Number of m-tuples of partitions with total weight n."""
    if not (1 <= m <= SYM_LIMITS[0] and 0 <= n <= SYM_LIMITS[1]):
        raise ValueError(f"sym_type_count limited to 1<=M<={SYM_LIMITS[0]}, 0<=n<={SYM_LIMITS[1]}")
    total = 0
    for ws in _compositions(n, m):
        prod = 1
        for w in ws:
            prod *= _count(w, False)
        total += prod
    return total


def alt_type_count(m: int, n: int) -> int:
    """Families of m pairs (alpha, beta), beta with an even number of parts, total weight n."""
    if not (1 <= m <= ALT_LIMITS[0] and 0 <= n <= ALT_LIMITS[1]):
        raise ValueError(f"alt_type_count limited to 1<=M<={ALT_LIMITS[0]}, 0<=n<={ALT_LIMITS[1]}")
    total = 0
    for ws in _compositions(n, 2 * m):
        prod = 1
        for slot, w in enumerate(ws):
            prod *= _count(w, slot % 2 == 1)
            if not prod:
                break
        total += prod
    return total
