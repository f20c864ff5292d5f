"""Named cross-verification checks behind ``wreathgrowth verify``.

Each check compares two independent routes to the same numbers and raises
``CheckFailure`` on the first disagreement.  ``quick`` shrinks the ranges;
``full`` uses the complete ranges.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import asymptotics as asy
from .growth import (
    ALT_BASE,
    GroupSpec,
    Kind,
    alt_weights,
    b_divisor_sum,
    fhat_eval,
    fhat_polynomial,
    gamma_alt_recurrence,
    gamma_sym_recurrence,
    growth_rate,
    growth_series,
    no_coefficient,
)
from .oracle import alt_type_count, naive_coefficients, sym_type_count
from .partitions import (
    even_parts_count,
    hook_lengths,
    partition_count,
)
from .qseries import EulerProduct, Series, expand_product, series_add, series_mul

F = Fraction

FHAT_REFERENCE: dict[int, dict[tuple[int, ...], Fraction]] = {
    2: {(2,): F(1, 2)},
    3: {(3, 0): F(-1, 3), (1, 1): F(1)},
    4: {(4, 0, 0): F(1, 4), (2, 1, 0): F(-1), (0, 2, 0): F(1, 2), (1, 0, 1): F(1)},
    5: {
        (5, 0, 0, 0): F(-1, 5), (3, 1, 0, 0): F(1), (2, 0, 1, 0): F(-1),
        (1, 2, 0, 0): F(-1), (1, 0, 0, 1): F(1), (0, 1, 1, 0): F(1),
    },
    6: {
        (6, 0, 0, 0, 0): F(1, 6), (4, 1, 0, 0, 0): F(-1), (3, 0, 1, 0, 0): F(1),
        (2, 2, 0, 0, 0): F(3, 2), (2, 0, 0, 1, 0): F(-1), (1, 1, 1, 0, 0): F(-2),
        (1, 0, 0, 0, 1): F(1), (0, 3, 0, 0, 0): F(-1, 3), (0, 1, 0, 1, 0): F(1),
        (0, 0, 2, 0, 0): F(1, 2),
    },
}

GOLDEN_PARTITION = (6, 4, 3, 1, 1)
GOLDEN_HOOKS = [[10, 7, 6, 4, 2, 1], [7, 4, 3, 1], [5, 2, 1], [2], [1]]


class CheckFailure(AssertionError):
    pass


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise CheckFailure(msg)


@dataclass(frozen=True)
class Params:
    full: bool
    threads: int = 1

    def pick(self, quick, full):
        return full if self.full else quick


def check_sym_recurrence(p: Params) -> str:
    ms, order = p.pick((range(1, 5), 80), (range(1, 13), 200))
    for m in ms:
        rec = gamma_sym_recurrence(m, order)
        prod = growth_series(GroupSpec(Kind.SYM, m), order)
        _expect(rec == prod, f"SYM M={m}: recurrence differs from product")
    return f"M in {ms.start}..{ms.stop - 1}, N={order}"


def check_alt_recurrence(p: Params) -> str:
    ms, order = p.pick((range(1, 4), 80), (range(1, 9), 150))
    for m in ms:
        rec = gamma_alt_recurrence(m, order)
        prod = growth_series(GroupSpec(Kind.ALT, m), order)
        _expect(rec == prod, f"ALT M={m}: recurrence differs from product")
    return f"M in {ms.start}..{ms.stop - 1}, N={order}"


def check_b_identity(p: Params) -> str:
    nmax, mmax = p.pick((120, 5), (500, 10))
    for m in range(1, mmax + 1):
        for k in range(m + 1):
            w = alt_weights(m, k, nmax)
            for n in range(1, nmax + 1):
                _expect(-b_divisor_sum(m, k, n) == w[n], f"b_k mismatch at M={m}, k={k}, n={n}")
    return f"n<={nmax}, k<=M<={mmax}"


def check_hook_sum(p: Params) -> str:
    mmax, nmax = p.pick((3, 20), (6, 35))
    for m in range(1, mmax + 1):
        target = growth_series(GroupSpec(Kind.SYM, m), nmax).integers()
        for n in range(nmax + 1):
            v = no_coefficient(-m, n, threads=p.threads)
            _expect(v.denominator == 1 and v >= 0, f"hook sum M={m}, n={n} not a count: {v}")
            _expect(v == target[n], f"hook sum M={m}, n={n}: {v} != {target[n]}")
    return f"M<={mmax}, n<={nmax}"


def check_fhat_golden(p: Params) -> str:
    for n, ref in FHAT_REFERENCE.items():
        got = dict(fhat_polynomial(n).terms)
        _expect(got == ref, f"F-hat_{n} terms differ from reference")
    return "n=2..6"


def check_fhat_equivalence(p: Params) -> str:
    nmax, trials = p.pick((10, 20), (20, 100))
    rng = random.Random(20240101)
    for n in range(2, nmax + 1):
        poly = fhat_polynomial(n)
        for _ in range(trials):
            vals = [F(rng.randint(-10, 10), rng.randint(1, 10)) for _ in range(n - 1)]
            _expect(poly.evaluate(vals) == fhat_eval(n, vals, "convolution"),
                    f"F-hat_{n} explicit vs convolution at {vals}")
    return f"n<={nmax}, {trials} random inputs each"


def check_eq12(p: Params) -> str:
    order = p.pick(80, 200)
    lhs = series_mul(
        Series.from_integers(partition_count(n) for n in range(order + 1)),
        Series.from_integers(even_parts_count(n) for n in range(order + 1)),
    )
    rhs = series_add(
        expand_product(EulerProduct(((1, -2),)), order),
        expand_product(EulerProduct(((2, -1),)), order),
        F(1, 2), F(1, 2),
    )
    _expect(lhs == rhs, "partition x even-part-count product differs from the Euler form")
    _expect(growth_series(ALT_BASE, order) == lhs, "alt-base series differs")
    return f"order {order}"


def check_hook_golden(p: Params) -> str:
    _expect(hook_lengths(GOLDEN_PARTITION) == GOLDEN_HOOKS, "hook lengths of (6,4,3,1,1)")
    return "(6,4,3,1,1)"


def check_oracle_types(p: Params) -> str:
    sm, sn, am, an = p.pick((3, 12, 2, 10), (4, 20, 3, 15))
    for m in range(1, sm + 1):
        c = growth_series(GroupSpec(Kind.SYM, m), sn).integers()
        for n in range(sn + 1):
            _expect(sym_type_count(m, n) == c[n], f"sym types M={m}, n={n}")
    for m in range(1, am + 1):
        c = growth_series(GroupSpec(Kind.ALT, m), an).integers()
        for n in range(an + 1):
            _expect(alt_type_count(m, n) == c[n], f"alt types M={m}, n={n}")
    return f"sym M<={sm} n<={sn}; alt M<={am} n<={an}"


def random_euler_product(rng: random.Random) -> EulerProduct:
    nfac = rng.randint(1, 3)
    return EulerProduct(tuple((rng.randint(1, 4), rng.randint(-5, 5)) for _ in range(nfac)))


def check_oracle_naive(p: Params) -> str:
    count, maxorder = p.pick((15, 40), (50, 80))
    rng = random.Random(7)
    for _ in range(count):
        prod = random_euler_product(rng)
        order = rng.randint(0, maxorder)
        _expect(naive_coefficients(prod, order) == expand_product(prod, order),
                f"naive vs fast expansion for {prod.factors} at order {order}")
    return f"{count} random products, order<={maxorder}"


def check_asym_closed_forms(p: Params) -> str:
    for m in range(1, 13):
        for n in (10, 10**2, 10**3, 10**4, 10**5, 10**6):
            a = asy.sym_estimate(m, n).log
            b = asy.cdf_estimate((m,), n).log
            _expect(abs(a - b) <= 1e-12 * abs(b), f"SYM M={m} n={n}: {a} vs {b}")
            a = asy.alt_estimate(m, n).log
            b = asy.cdf_estimate((2 * m,), n).log - m * math.log(2)
            _expect(abs(a - b) <= 1e-12 * abs(b), f"ALT M={m} n={n}: {a} vs {b}")
    return "M<=12, n=10..1e6, rel 1e-12"


def relative_errors(g: GroupSpec, ns: list[int]) -> list[float]:
    exact = growth_series(g, max(ns)).integers()
    return [abs(math.exp(asy.estimate(g, n).log - math.log(exact[n])) - 1) for n in ns]


def check_asym_convergence(p: Params) -> str:
    ns = p.pick([100, 150, 200], [100, 200, 300, 400, 500])
    out, bad = [], []
    for g in (GroupSpec(Kind.SYM, 10), GroupSpec(Kind.ALT, 5)):
        errs = relative_errors(g, ns)
        _expect(all(x > y for x, y in zip(errs, errs[1:])), f"{g}: errors not decreasing {errs}")
        out.append(f"{g}: {errs[-1]:.4f} at n={ns[-1]}")
        if p.full and not errs[-1] < 0.05:
            bad.append(out[-1])
    _expect(not bad, "|estimate/exact - 1| must be < 0.05: " + "; ".join(bad))
    return "; ".join(out)


def expected_verdict(g1: GroupSpec, g2: GroupSpec) -> tuple[str, float | None]:
    """The twelve ratio verdicts, spelled out case by case."""
    a, b = g1.m, g2.m
    if g1.kind is Kind.SYM and g2.kind is Kind.SYM:
        lhs, rhs, lim = a, b, 1.0
    elif g1.kind is Kind.SYM:
        lhs, rhs, lim = a, 2 * b, 2.0**b
    elif g2.kind is Kind.SYM:
        lhs, rhs, lim = 2 * a, b, 2.0**-a
    else:
        lhs, rhs, lim = a, b, 1.0
    if lhs < rhs:
        return "ZERO", None
    if lhs > rhs:
        return "INFINITE", None
    return "FINITE", lim


def check_ratio_classification(p: Params) -> str:
    mmax = p.pick(4, 8)
    seen = set()
    specs = [GroupSpec(k, m) for k in Kind for m in range(1, mmax + 1)]
    for g1 in specs:
        for g2 in specs:
            tag, lim = expected_verdict(g1, g2)
            got = asy.classify_ratio(g1, g2)
            _expect(got.tag.name == tag and got.value == lim, f"{g1} / {g2}: {got} != {tag} {lim}")
            seen.add((g1.kind, g2.kind, tag))
            r4 = asy.ratio_estimate(g1, g2, 10**4).log
            r6 = asy.ratio_estimate(g1, g2, 10**6).log
            if tag == "ZERO":
                _expect(r6 < r4, f"{g1} / {g2}: ratio not decreasing")
            elif tag == "INFINITE":
                _expect(r6 > r4, f"{g1} / {g2}: ratio not increasing")
            else:
                _expect(abs(math.exp(r6) / lim - 1) < 0.1, f"{g1} / {g2}: ratio far from {lim}")
            direct = asy.estimate(g1, 10**4).log - asy.estimate(g2, 10**4).log
            _expect(abs(direct - r4) <= 1e-12 * max(1.0, abs(direct)),
                    f"{g1} / {g2}: closed-form ratio vs quotient of estimates")
    _expect(len(seen) == 12, f"only {len(seen)} of 12 verdict kinds exercised")
    return f"M<={mmax}, 12 verdict kinds"


def check_growth_rate(p: Params) -> str:
    ns = p.pick([20, 40, 80], [500])
    out, bad = [], []
    for g in [GroupSpec(Kind.SYM, m) for m in (1, 5, 10)] + [GroupSpec(Kind.ALT, m) for m in (1, 5)]:
        c = growth_series(g, max(ns)).integers()
        rate = growth_rate(g).value
        ratios = [math.log(c[n]) / math.sqrt(n) / rate for n in ns]
        out.append(f"{g}: {ratios[-1]:.4f}")
        if p.full:
            if not abs(ratios[-1] - 1) < 0.1:
                bad.append(out[-1])
        else:
            _expect(all(x < y < 1 for x, y in zip(ratios, ratios[1:])),
                    f"{g}: log gamma(n)/sqrt(n) not rising toward the rate: {ratios}")
    _expect(not bad, "log gamma(500)/sqrt(500) / rate must be within 10% of 1: " + "; ".join(bad))
    return "; ".join(out)


CHECKS: dict[str, Callable[[Params], str]] = {
    "sym-recurrence": check_sym_recurrence,
    "alt-recurrence": check_alt_recurrence,
    "b-divisor-identity": check_b_identity,
    "hook-sum": check_hook_sum,
    "fhat-golden": check_fhat_golden,
    "fhat-equivalence": check_fhat_equivalence,
    "alt-base-identity": check_eq12,
    "hook-golden": check_hook_golden,
    "oracle-types": check_oracle_types,
    "oracle-naive": check_oracle_naive,
    "asym-closed-forms": check_asym_closed_forms,
    "asym-convergence": check_asym_convergence,
    "ratio-classification": check_ratio_classification,
    "growth-rate": check_growth_rate,
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def run_checks(level: str = "quick", threads: int = 1, names=None) -> list[CheckResult]:
    if level not in ("quick", "full"):
        raise ValueError(f"unknown level {level!r}")
    params = Params(full=level == "full", threads=threads)
    results = []
    for name, fn in CHECKS.items():
        if names is not None and name not in names:
            continue
        t0 = time.perf_counter()
        try:
            detail, ok = fn(params), True
        except Exception as exc:  # any failure is reported by name
            detail, ok = f"{type(exc).__name__}: {exc}", False
        results.append(CheckResult(name, ok, detail, time.perf_counter() - t0))
    return results
