"""Integer partitions, divisor sums and hook lengths.

Partitions are plain tuples of weakly decreasing positive ints; the empty
tuple is the partition of 0.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator, Sequence

from . import kernels
from .qseries import EulerProduct, Series, expand_product

Partition = tuple[int, ...]


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def conjugate(parts: Sequence[int]) -> Partition:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def enumerate_partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """Yield the partitions of n in lexicographically decreasing order.

    With ``largest`` set, only partitions whose first part equals it are
    produced; iterating largest = n, n-1, ..., 1 covers the same stream in
    the same order, which is how callers shard the work.
    """
    if n < 0:
        return
    if n == 0:
        if largest in (None, 0):
            yield ()
        return
    if largest is None:
        a, lo = [n], 0
    else:
        if not 1 <= largest <= n:
            return
        a, rest = [largest], n - largest
        while rest:
            a.append(min(largest, rest))
            rest -= a[-1]
        lo = 1
    while True:
        yield tuple(a)
        # advance: rightmost part > 1 at index >= lo drops by one, tail refilled greedily
        i = len(a) - 1
        while i >= lo and a[i] == 1:
            i -= 1
        if i < lo:
            return
        rem = len(a) - i
        v = a[i] - 1
        del a[i:]
        a.append(v)
        while rem > v:
            a.append(v)
            rem -= v
        if rem:
            a.append(rem)


_p_cache = [1]


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    while len(_p_cache) <= n:
        m = len(_p_cache)
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * _p_cache[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * _p_cache[m - g2]
            k += 1
        _p_cache.append(total)
    return _p_cache[n]


def parts_parity_counts(n: int) -> tuple[int, int]:
    """(even, odd): partitions of n split by parity of the number of parts."""
    # t[k][m] = partitions of m into exactly k parts = t[k-1][m-1] + t[k][m-k]
    even = odd = 0
    prev = [1] + [0] * n
    for k in range(1, n + 1):
        cur = [0] * (n + 1)
        for m in range(k, n + 1):
            cur[m] = prev[m - 1] + cur[m - k]
        if k % 2:
            odd += cur[n]
        else:
            even += cur[n]
        prev = cur
    if n == 0:
        even = 1
    return even, odd


def even_parts_count(n: int) -> int:
    """p_e(n): partitions of n into an even number of parts (p_e(0) = 1)."""
    if n < 0:
        return 0
    return parts_parity_counts(n)[0]


def hook_lengths(parts: Sequence[int]) -> list[list[int]]:
    """Hook lengths of each box, laid out like the Ferrers diagram."""
    if not is_partition(parts):
        raise ValueError(f"not a partition: {tuple(parts)}")
    return kernels.hook_rows(list(parts))


def hook_multiset(parts: Sequence[int]) -> Counter:
    return Counter(h for row in hook_lengths(parts) for h in row)


def sigma(k: int, n: int) -> int:
    """Sum of d**k over the divisors d of n."""
    if n <= 0:
        raise ValueError(f"sigma needs n >= 1, got {n}")
    total, d = 0, 1
    while d * d <= n:
        if n % d == 0:
            total += d**k
            e = n // d
            if e != d:
                total += e**k
        d += 1
    return total


def sigma1_table(n: int) -> list[int]:
    """[0, sigma_1(1), ..., sigma_1(n)] by sieving."""
    table = [0] * (n + 1)
    for d in range(1, n + 1):
        for m in range(d, n + 1, d):
            table[m] += d
    return table


def validate_exponents(e: Sequence[int]) -> tuple[int, ...]:
    e = tuple(int(x) for x in e)
    if any(x < 0 for x in e):
        raise ValueError(f"exponent entries must be nonnegative: {e}")
    if not any(e):
        raise ValueError("exponent vector must be nonzero")
    return e


def generalized_partition_series(e: Sequence[int], order: int) -> Series:
    """Expansion of prod_n (1-q^n)^(-e_1) ... (1-q^(kn))^(-e_k)."""
    e = validate_exponents(e)
    return expand_product(
        EulerProduct(tuple((m, -em) for m, em in enumerate(e, start=1) if em)), order
    )
