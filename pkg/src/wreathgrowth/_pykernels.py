"""Pure-Python integer kernels.

Reference implementation of the hot loops.  ``_ckernels.pyx`` mirrors every
function here with identical semantics; ``kernels`` picks one at import.
All inputs and outputs are lists of Python ints.
"""

from __future__ import annotations

from operator import mul


def mul_trunc(a: list[int], b: list[int], n: int) -> list[int]:
    """Cauchy product of ``a`` and ``b`` truncated after degree ``n``."""
    a = (a + [0] * (n + 1 - len(a)))[: n + 1]
    rb = (b + [0] * (n + 1 - len(b)))[n::-1]
    out = [0] * (n + 1)
    for k in range(n + 1):
        out[k] = sum(map(mul, a[: k + 1], rb[n - k :]))
    return out


def expand_euler(factors: list[tuple[int, int]], n: int) -> list[int]:
    """Coefficients of prod_{j>=1} (1 - q^(a*j))^e over ``factors`` up to q^n."""
    c = [0] * (n + 1)
    c[0] = 1
    for a, e in factors:
        if e == 0:
            continue
        for step in range(a, n + 1, a):
            for _ in range(abs(e)):
                if e < 0:
                    # divide by (1 - q^step): ascending prefix sums
                    for i in range(step, n + 1):
                        c[i] += c[i - step]
                else:
                    for i in range(n, step - 1, -1):
                        c[i] -= c[i - step]
    return c


def log_derivative_recurrence(w: list[int], n: int) -> list[int]:
    """Solve k*a[k] = sum_{j=1..k} w[j]*a[k-j] with a[0] = 1.

    This is the coefficient relation q*F' = F*W for F = exp(sum w_j q^j / j).
    Raises ``ArithmeticError`` if some a[k] is not an integer.
    """
    a = [1]
    for k in range(1, n + 1):
        s = sum(map(mul, w[1 : k + 1], reversed(a)))
        ak, r = divmod(s, k)
        if r:
            raise ArithmeticError(f"non-integral coefficient at degree {k}")
        a.append(ak)
    return a


def inverse_scaled(s: list[int], n: int) -> list[int]:
    """Return u with u[k] = s[0]^(k+1) * [q^k](1/s), all integers.

    Uses u[0] = 1, u[k] = -sum_{i=1..k} s[i] * s[0]^(i-1) * u[k-i].
    """
    s0 = s[0]
    if s0 == 0:
        raise ZeroDivisionError("constant term is zero")
    scaled = [0] * (n + 1)
    p = 1
    for i in range(1, n + 1):
        scaled[i] = s[i] * p if i < len(s) else 0
        p *= s0
    u = [1]
    for k in range(1, n + 1):
        u.append(-sum(map(mul, scaled[1 : k + 1], reversed(u))))
    return u


def hook_rows(parts: list[int]) -> list[list[int]]:
    """Hook lengths of the Ferrers diagram of ``parts``, row by row."""
    if not parts:
        return []
    conj = [0] * parts[0]
    for p in parts:
        for j in range(p):
            conj[j] += 1
    return [[p - j + conj[j] - i - 1 for j in range(p)] for i, p in enumerate(parts)]


def _next_partition(a: list[int], lo: int) -> bool:
    """Advance ``a[lo:]`` to the next partition in lex-decreasing order.

    The parts at positions < lo are frozen.  Returns False when exhausted.
    """
    i = len(a) - 1
    while i >= lo and a[i] == 1:
        i -= 1
    if i < lo:
        return False
    rem = len(a) - i  # ones after i plus the unit removed from a[i]
    v = a[i] - 1
    del a[i:]
    a.append(v)
    while rem > v:
        a.append(v)
        rem -= v
    if rem:
        a.append(rem)
    return True


def hook_sum(n: int, p: int, q: int, largest: int) -> int:
    """Integer numerator of the hook-product sum over partitions of ``n``.

    For z = p/q returns sum_lambda f_lambda^2 * prod_h (q*h^2 - p), where
    f_lambda = n!/prod_h h.  The true sum of prod_h (1 - z/h^2) equals this
    value divided by q^n * (n!)^2.  If ``largest`` > 0 only partitions with
    that largest part are visited, otherwise all of them.
    """
    if n == 0:
        return 1
    nfact = 1
    for i in range(2, n + 1):
        nfact *= i
    if largest > 0:
        if largest > n:
            return 0
        a = [largest]
        rest = n - largest
        while rest:
            a.append(min(largest, rest))
            rest -= a[-1]
        lo = 1
    else:
        a = [n]
        lo = 0
    total = 0
    while True:
        num = 1
        hprod = 1
        for row in hook_rows(a):
            for h in row:
                num *= q * h * h - p
                hprod *= h
        f = nfact // hprod
        total += num * f * f
        if not _next_partition(a, lo):
            break
    return total
