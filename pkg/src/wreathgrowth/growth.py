"""Conjugacy growth series of H wr Sym(X) and H wr Alt(X).

Two routes produce every coefficient: direct expansion of the infinite
products, and recurrences obtained from the logarithmic derivative
(the F-hat polynomials / Newton convolution).  A third route, the hook
product sum over partitions, covers the symmetric case.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, lcm
from typing import Sequence

from . import kernels
from .partitions import enumerate_partitions, sigma, sigma1_table
from .qseries import (
    EulerProduct,
    IntegralityError,
    Series,
    expand_product,
    series_add,
    series_pow,
)

FHAT_MAX_N = 30


class Kind(enum.Enum):
    SYM = "sym"
    ALT = "alt"


@dataclass(frozen=True)
class GroupSpec:
    """A wreath product H wr Sym(X) or H wr Alt(X); ``m`` counts conjugacy classes of H."""

    kind: Kind
    m: int

    def __post_init__(self):
        if not isinstance(self.kind, Kind):
            object.__setattr__(self, "kind", Kind(self.kind))
        if int(self.m) != self.m or self.m < 1:
            raise ValueError(f"m must be a positive integer, got {self.m!r}")

    @property
    def effective(self) -> int:
        """M for Sym, 2M for Alt: the total exponent driving the growth."""
        return self.m if self.kind is Kind.SYM else 2 * self.m

    def __str__(self) -> str:
        return f"{self.kind.name} {self.m}"


SYM_BASE = "sym-base"
ALT_BASE = "alt-base"


# -- F-hat polynomials -------------------------------------------------------

@dataclass(frozen=True)
class FhatPolynomial:
    """Explicit F-hat_n as (exponent vector (m_1..m_{n-1}), coefficient) terms."""

    n: int
    terms: tuple[tuple[tuple[int, ...], Fraction], ...]

    def evaluate(self, values: Sequence) -> Fraction:
        if self.n == 1:
            return Fraction(0)
        vals = [Fraction(v) for v in values]
        if len(vals) != self.n - 1:
            raise ValueError(f"F-hat_{self.n} takes {self.n - 1} values, got {len(vals)}")
        # integer evaluation: v_i = a_i/D, every coefficient times lcm(1..n) is integral
        D = lcm(*(v.denominator for v in vals))
        a = [v.numerator * (D // v.denominator) for v in vals]
        L = lcm(*range(1, self.n + 1))
        powers: dict[tuple[int, int], int] = {}
        total = 0
        for exps, coeff in self.terms:
            k = sum(exps)
            t = coeff.numerator * (L // coeff.denominator) * D ** (self.n - k)
            for i, m in enumerate(exps):
                if m:
                    key = (i, m)
                    if key not in powers:
                        powers[key] = a[i] ** m
                    t *= powers[key]
            total += t
        return Fraction(total, L * D**self.n)

    def __str__(self) -> str:
        out = []
        for exps, coeff in self.terms:
            mono = " ".join(
                f"x{i}" if m == 1 else f"x{i}^{m}" for i, m in enumerate(exps, start=1) if m
            )
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            body = mono if mag == 1 else f"{mag} {mono}"
            if not out:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f"{sign} {body}")
        return " ".join(out)


def fhat_polynomial(n: int, max_n: int = FHAT_MAX_N) -> FhatPolynomial:
    """Materialize F-hat_n; terms are sorted lexicographically decreasing by exponents."""
    if not 2 <= n <= max_n:
        raise ValueError(f"F-hat_n is materialized only for 2 <= n <= {max_n}, got {n}")
    terms = []
    for lam in enumerate_partitions(n):
        if lam == (n,):
            continue
        exps = [0] * (n - 1)
        for part in lam:
            exps[part - 1] += 1
        k = len(lam)
        denom = math.prod(factorial(m) for m in exps)
        terms.append((tuple(exps), Fraction((-1) ** k * factorial(k - 1), denom)))
    terms.sort(key=lambda t: t[0], reverse=True)
    return FhatPolynomial(n, tuple(terms))


def fhat_eval(n: int, values: Sequence, method: str = "auto") -> Fraction:
    """F-hat_n(v_1, ..., v_{n-1}), with F-hat_1 = 0.

    ``method`` is 'polynomial' (explicit terms), 'convolution' (Newton form)
    or 'auto' (convolution; the two agree exactly).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if len(values) != n - 1:
        raise ValueError(f"F-hat_{n} takes {n - 1} values, got {len(values)}")
    if n == 1:
        return Fraction(0)
    if method == "polynomial":
        return fhat_polynomial(n).evaluate(values)
    if method not in ("auto", "convolution"):
        raise ValueError(f"unknown method {method!r}")
    ell = log_coefficients(list(values) + [0])
    v = [Fraction(0)] + [Fraction(x) for x in values]
    return sum((ell[i - 1] * v[n - i] for i in range(1, n)), Fraction(0)) / n


def log_coefficients(values: Sequence) -> list[Fraction]:
    """[k * [q^k] log(1 + v_1 q + v_2 q^2 + ...)] for k = 1..len(values).

    Newton's recurrence l_k = k v_k - sum_{i<k} l_i v_{k-i}.  When the v are
    elementary symmetric values e_k of X_1..X_r this gives l_k = (-1)^(k-1) s_k
    with s_k the k-th power sum.
    """
    v = [Fraction(0)] + [Fraction(x) for x in values]
    ell = [Fraction(0)] * len(v)
    for k in range(1, len(v)):
        ell[k] = k * v[k] - sum(ell[i] * v[k - i] for i in range(1, k))
    return ell[1:]


# -- series builders ---------------------------------------------------------

def _require_counts(s: Series, what: str) -> Series:
    if not s.is_integral() or any(c < 0 for c in s.integers()):
        raise IntegralityError(f"{what}: coefficients are not nonnegative integers")
    return s


def alt_base_series(order: int) -> Series:
    return series_add(
        expand_product(EulerProduct(((1, -2),)), order),
        expand_product(EulerProduct(((2, -1),)), order),
        Fraction(1, 2),
        Fraction(1, 2),
    )


def growth_series(g: GroupSpec | str, order: int) -> Series:
    """Conjugacy growth series truncated at ``order``.

    ``g`` is 'sym-base' (Sym(X)), 'alt-base' (Alt(X)), or a GroupSpec.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if g == SYM_BASE:
        s = expand_product(EulerProduct(((1, -1),)), order)
    elif g == ALT_BASE:
        s = alt_base_series(order)
    elif isinstance(g, GroupSpec):
        if g.kind is Kind.SYM:
            s = expand_product(EulerProduct(((1, -g.m),)), order)
        else:
            s = series_pow(alt_base_series(order), g.m)
    else:
        raise ValueError(f"unknown growth selector {g!r}")
    return _require_counts(s, str(g))


# -- symmetric recurrence ----------------------------------------------------

def eta_power_coefficients(r, order: int) -> Series:
    """Coefficients of prod_n (1-q^n)^r for rational r.

    n*p(n) = -r * sum_{j=1..n} sigma_1(j) p(n-j), p(0) = 1.
    """
    r = Fraction(r)
    sig = sigma1_table(order)
    if r.denominator == 1:
        w = [-r.numerator * s for s in sig]
        return Series.from_integers(kernels.log_derivative_recurrence(w, order))
    p = [Fraction(1)]
    for n in range(1, order + 1):
        p.append(-r * sum(sig[j] * p[n - j] for j in range(1, n + 1)) / n)
    return Series(p)


def gamma_sym_recurrence(m: int, order: int, method: str = "convolution") -> Series:
    """gamma(n) = F-hat_n(gamma(1..n-1)) + m*sigma_1(n)/n.

    'convolution' runs the equivalent integer recurrence
    n*gamma(n) = m * sum_j sigma_1(j) gamma(n-j); 'fhat' evaluates the
    explicit polynomials term by term (n <= 30).
    """
    if m < 1:
        raise ValueError("m must be positive")
    if method == "convolution":
        w = [m * s for s in sigma1_table(order)]
        try:
            coeffs = kernels.log_derivative_recurrence(w, order)
        except ArithmeticError as exc:
            raise IntegralityError(str(exc)) from exc
        return _require_counts(Series.from_integers(coeffs), f"SYM {m} recurrence")
    if method == "fhat":
        g = [Fraction(1)]
        for n in range(1, order + 1):
            g.append(fhat_eval(n, g[1:], "polynomial" if n > 1 else "auto")
                     + Fraction(m * sigma(1, n), n))
        return _require_counts(Series(g), f"SYM {m} F-hat recurrence")
    raise ValueError(f"unknown method {method!r}")


# -- hook product sum --------------------------------------------------------

def _hook_shard(args: tuple[int, int, int, int]) -> int:
    n, p, q, largest = args
    return kernels.hook_sum(n, p, q, largest)


def no_coefficient(r, n: int, threads: int = 1) -> Fraction:
    """Sum over partitions of n of prod_h (1 - (1+r)/h^2): [q^n] prod (1-q^k)^r.

    With ``threads`` > 1 the partitions are sharded by largest part across
    worker processes; the exact sum does not depend on the schedule.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    z = 1 + Fraction(r)
    p, q = z.numerator, z.denominator
    if n == 0:
        return Fraction(1)
    if threads > 1:
        jobs = [(n, p, q, j) for j in range(n, 0, -1)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            total = sum(pool.map(_hook_shard, jobs))
    else:
        total = kernels.hook_sum(n, p, q, 0)
    return Fraction(total, q**n * factorial(n) ** 2)


# -- alternating recurrence --------------------------------------------------

@dataclass(frozen=True)
class AltSummand:
    """Coefficients a_k(0..N) of prod (1-q^n)^(-2k) (1-q^(2n))^(-(m-k))."""

    m: int
    k: int
    coeffs: tuple[int, ...]


def b_divisor_sum(m: int, k: int, n: int) -> int:
    """sum_{d | n} d * [(-1)^(n/d) (k - m) - (k + m)]."""
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            sign = -1 if (n // d) % 2 else 1
            total += d * (sign * (k - m) - (k + m))
    return total


def alt_weights(m: int, k: int, order: int) -> list[int]:
    """c(j) = 2k*sigma_1(j) + 2(m-k)*sigma_1(j/2)[j even]; equals -b_divisor_sum."""
    sig = sigma1_table(order)
    return [
        2 * k * sig[j] + (2 * (m - k) * sig[j // 2] if j % 2 == 0 else 0)
        for j in range(order + 1)
    ]


def alt_summand(m: int, k: int, order: int, method: str = "convolution") -> AltSummand:
    if m < 1:
        raise ValueError("m must be positive")
    if not 0 <= k <= m:
        raise ValueError(f"k must lie in [0, {m}], got {k}")
    if method == "convolution":
        try:
            coeffs = kernels.log_derivative_recurrence(alt_weights(m, k, order), order)
        except ArithmeticError as exc:
            raise IntegralityError(str(exc)) from exc
    elif method == "fhat":
        a = [Fraction(1)]
        for n in range(1, order + 1):
            a.append(fhat_eval(n, a[1:]) - Fraction(b_divisor_sum(m, k, n), n))
        if any(x.denominator != 1 for x in a):
            raise IntegralityError(f"a_{k} is not integral")
        coeffs = [int(x) for x in a]
    else:
        raise ValueError(f"unknown method {method!r}")
    return AltSummand(m, k, tuple(coeffs))


def gamma_alt_recurrence(m: int, order: int, method: str = "convolution") -> Series:
    """gamma(n) = 2^-m * sum_{k=0..m} C(m,k) a_k(n)."""
    if m < 1:
        raise ValueError("m must be positive")
    acc = [0] * (order + 1)
    for k in range(m + 1):
        c = comb(m, k)
        for n, a in enumerate(alt_summand(m, k, order, method).coeffs):
            acc[n] += c * a
    out = []
    for n, x in enumerate(acc):
        q, rem = divmod(x, 2**m)
        if rem:
            raise IntegralityError(f"ALT {m}: coefficient {n} is not integral")
        out.append(q)
    return _require_counts(Series.from_integers(out), f"ALT {m} recurrence")


# -- growth rate --------------------------------------------------------------

@dataclass(frozen=True)
class GrowthRate:
    """coefficient * pi * sqrt(radicand)."""

    coefficient: int
    radicand: Fraction

    @property
    def value(self) -> float:
        return self.coefficient * math.pi * math.sqrt(self.radicand)

    def __str__(self) -> str:
        c = "" if self.coefficient == 1 else str(self.coefficient)
        return f"{c}pi*sqrt({self.radicand})"


def growth_rate(g: GroupSpec) -> GrowthRate:
    """limsup log gamma(n)/sqrt(n): pi*sqrt(2M/3) for Sym, 2pi*sqrt(M/3) for Alt."""
    if g.kind is Kind.SYM:
        return GrowthRate(1, Fraction(2 * g.m, 3))
    return GrowthRate(2, Fraction(g.m, 3))
