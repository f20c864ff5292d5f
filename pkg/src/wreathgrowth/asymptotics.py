"""Leading-order asymptotics for generalized partition functions and growth series.

Every estimate is carried as a natural logarithm; the float value is only
materialized when it fits in a double.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import gcd
from typing import Sequence

from .growth import GroupSpec, Kind
from .partitions import validate_exponents

LOG2 = math.log(2.0)
_PI = Decimal("3.141592653589793238462643383279502884197")


@dataclass(frozen=True)
class Estimate:
    log: float

    @property
    def value(self) -> float | None:
        """exp(log), or None when it would overflow a double."""
        try:
            return math.exp(self.log)
        except OverflowError:
            return None

    @property
    def overflow(self) -> bool:
        return self.value is None


@dataclass(frozen=True)
class AsymptoticParams:
    d: int
    gamma_total: int
    delta: Fraction
    a_const: float
    log_prefactor: float


def cdf_params(e: Sequence[int]) -> AsymptoticParams:
    """Parameters d, gamma, delta, A = pi^2 delta/6 and log(lambda) for exponent vector e."""
    e = validate_exponents(e)
    active = [m for m, em in enumerate(e, start=1) if em]
    d = gcd(*active)
    gamma_total = 0
    delta = Fraction(0)
    log_lam = 0.0
    for j in range(1, len(e) // d + 1):
        edm = e[d * j - 1]
        if not edm:
            continue
        gamma_total += edm
        delta += Fraction(edm, j)
        log_lam += edm / 2 * math.log(j / (2 * math.pi))
    return AsymptoticParams(d, gamma_total, delta, math.pi**2 * float(delta) / 6, log_lam)


def cdf_estimate(e: Sequence[int], n: int) -> Estimate:
    """Estimate of p(d*n)_e; ``n`` is the reduced index, not the series index."""
    if n < 1:
        raise ValueError("n must be >= 1")
    par = cdf_params(e)
    g, A = par.gamma_total, par.a_const
    return Estimate(
        par.log_prefactor
        + (1 + g) / 4 * math.log(A)
        - math.log(2 * math.sqrt(math.pi))
        - (3 + g) / 4 * math.log(n)
        + 2 * math.sqrt(A * n)
    )


def cdf_estimate_at_index(e: Sequence[int], index: int) -> Estimate:
    """Estimate of the coefficient of q^index; index must be a multiple of d."""
    d = cdf_params(e).d
    if index < 1 or index % d:
        raise ValueError(f"series index {index} is not a positive multiple of d={d}")
    return cdf_estimate(e, index // d)


def _closed_log(kind: Kind, m: int, n: int) -> Decimal:
    """Log of the Sym / Alt closed form, evaluated with 40 significant digits."""
    with localcontext() as ctx:
        ctx.prec = 40
        m_, n_ = Decimal(m), Decimal(n)
        ln2, ln3 = Decimal(2).ln(), Decimal(3).ln()
        if kind is Kind.SYM:
            return ((1 + m_) / 4 * m_.ln() - (5 + 3 * m_) / 4 * ln2 - (1 + m_) / 4 * ln3
                    - (3 + m_) / 4 * n_.ln() + _PI * (2 * n_ * m_ / 3).sqrt())
        return ((1 + 2 * m_) / 4 * m_.ln() - (1 + 2 * m_) * ln2 - (1 + 2 * m_) / 4 * ln3
                - (3 + 2 * m_) / 4 * n_.ln() + 2 * _PI * (n_ * m_ / 3).sqrt())


def sym_estimate(m: int, n: int) -> Estimate:
    """Closed form for the Sym wreath product with m classes."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Estimate(float(_closed_log(Kind.SYM, m, n)))


def alt_estimate(m: int, n: int) -> Estimate:
    """Closed form for the Alt wreath product with m classes (dominant k = m term)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Estimate(float(_closed_log(Kind.ALT, m, n)))


def alt_binomial_terms(m: int, index: int) -> list[Estimate | None]:
    """Per-k estimates of 2^-m C(m,k) a_k(index), k = 0..m.

    a_k has exponent vector (2k, m-k).  For k = 0 only even indices are
    reachable; the entry is None when the term vanishes identically.
    """
    out: list[Estimate | None] = []
    for k in range(m + 1):
        e = (2 * k, m - k)
        d = cdf_params(e).d
        if index % d:
            out.append(None)
            continue
        weight = math.log(math.comb(m, k)) - m * LOG2
        out.append(Estimate(weight + cdf_estimate_at_index(e, index).log))
    return out


def alt_full_estimate(m: int, index: int) -> Estimate:
    """Sum of all binomial terms (log-sum-exp)."""
    logs = [t.log for t in alt_binomial_terms(m, index) if t is not None]
    top = max(logs)
    return Estimate(top + math.log(sum(math.exp(x - top) for x in logs)))


def estimate(g: GroupSpec, n: int) -> Estimate:
    return sym_estimate(g.m, n) if g.kind is Kind.SYM else alt_estimate(g.m, n)


def ratio_estimate(g1: GroupSpec, g2: GroupSpec, n: int) -> Estimate:
    """Closed-form asymptotic of gamma_g1(n) / gamma_g2(n).

    Written out per pair of kinds so the exponential parts cancel exactly;
    evaluated in 40-digit decimal so the result is correctly rounded even
    when both logs are in the thousands.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    with localcontext() as ctx:
        ctx.prec = 40
        a, b, n_ = Decimal(g1.m), Decimal(g2.m), Decimal(n)
        ln2, ln3n = Decimal(2).ln(), (3 * n_).ln()
        s = _PI * (2 * n_ / 3).sqrt()
        if g1.kind is Kind.SYM and g2.kind is Kind.SYM:
            log = ((1 + a) / 4 * a.ln() - (1 + b) / 4 * b.ln()
                   + Decimal("0.75") * (b - a) * ln2 + (b - a) / 4 * ln3n
                   + s * (a.sqrt() - b.sqrt()))
        elif g1.kind is Kind.SYM:
            log = ((1 + a) / 4 * a.ln() - (1 + 2 * b) / 4 * b.ln()
                   + (8 * b - 3 * a - 1) / 4 * ln2 + (2 * b - a) / 4 * ln3n
                   + s * (a.sqrt() - (2 * b).sqrt()))
        elif g2.kind is Kind.SYM:
            log = ((1 + 2 * a) / 4 * a.ln() - (1 + b) / 4 * b.ln()
                   + (1 + 3 * b - 8 * a) / 4 * ln2 + (b - 2 * a) / 4 * ln3n
                   + s * ((2 * a).sqrt() - b.sqrt()))
        else:
            log = ((1 + 2 * a) / 4 * a.ln() - (1 + 2 * b) / 4 * b.ln()
                   + (b - a) * 2 * ln2 + (b - a) / 2 * ln3n
                   + 2 * _PI * (n_ / 3).sqrt() * (a.sqrt() - b.sqrt()))
    return Estimate(float(log))


class RatioTag(enum.Enum):
    ZERO = "zero"
    INFINITE = "infinite"
    FINITE = "finite"


@dataclass(frozen=True)
class RatioClass:
    tag: RatioTag
    value: float | None = None

    def __str__(self) -> str:
        return f"{self.tag.name} {self.value:g}" if self.value is not None else self.tag.name


def classify_ratio(g1: GroupSpec, g2: GroupSpec) -> RatioClass:
    """Limit of gamma_g1(n)/gamma_g2(n): zero, infinite, or a finite positive constant."""
    e1, e2 = g1.effective, g2.effective
    if e1 < e2:
        return RatioClass(RatioTag.ZERO)
    if e1 > e2:
        return RatioClass(RatioTag.INFINITE)
    if g1.kind is g2.kind:
        return RatioClass(RatioTag.FINITE, 1.0)
    if g1.kind is Kind.SYM:
        return RatioClass(RatioTag.FINITE, float(2**g2.m))
    return RatioClass(RatioTag.FINITE, 2.0 ** -g1.m)
