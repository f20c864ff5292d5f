import random
from fractions import Fraction
from math import comb, pi, sqrt

import pytest

from wreathgrowth.growth import (
    ALT_BASE,
    SYM_BASE,
    GroupSpec,
    Kind,
    alt_summand,
    alt_weights,
    b_divisor_sum,
    eta_power_coefficients,
    fhat_eval,
    fhat_polynomial,
    gamma_alt_recurrence,
    gamma_sym_recurrence,
    growth_rate,
    growth_series,
    log_coefficients,
    no_coefficient,
)
from wreathgrowth.partitions import sigma
from wreathgrowth.qseries import IntegralityError, Series, expand_product

F = Fraction
SYM = lambda m: GroupSpec(Kind.SYM, m)  # noqa: E731
ALT = lambda m: GroupSpec(Kind.ALT, m)  # noqa: E731


def random_rational(rng, bound=10):
    return F(rng.randint(-bound, bound), rng.randint(1, bound))


def elementary_from_roots(roots):
    # coefficients of prod (1 + x_i q) are the elementary values e_k
    e = [F(1)]
    for x in roots:
        e = [a + x * b for a, b in zip(e + [0], [0] + e)]
    return e


def test_group_spec_validation():
    assert SYM(3).effective == 3 and ALT(3).effective == 6
    assert GroupSpec("alt", 2).kind is Kind.ALT
    assert str(ALT(5)) == "ALT 5"
    for bad in (0, -1, 1.5):
        with pytest.raises(ValueError):
            GroupSpec(Kind.SYM, bad)


def test_fhat_small_polynomials():
    assert fhat_polynomial(2).terms == (((2,), F(1, 2)),)
    assert fhat_polynomial(3).terms == (((3, 0), F(-1, 3)), ((1, 1), F(1)))
    assert str(fhat_polynomial(3)) == "-1/3 x1^3 + x1 x2"
    assert str(fhat_polynomial(4)) == "1/4 x1^4 - x1^2 x2 + x1 x3 + 1/2 x2^2"
    for bad in (1, 31):
        with pytest.raises(ValueError):
            fhat_polynomial(bad)


@pytest.mark.parametrize("n", range(2, 13))
def test_fhat_term_invariants(n):
    poly = fhat_polynomial(n)
    count = expand_product([(1, -1)], n)[n] - 1
    assert len(poly.terms) == count
    exps = [e for e, _ in poly.terms]
    assert exps == sorted(exps, reverse=True)
    for e, c in poly.terms:
        assert sum(i * m for i, m in enumerate(e, start=1)) == n
        k = sum(e)
        denom = 1
        for m in e:
            for j in range(2, m + 1):
                denom *= j
        fact = 1
        for j in range(2, k):
            fact *= j
        assert c == F((-1) ** k * fact, denom)


def test_fhat_eval_examples():
    assert fhat_eval(1, ()) == 0
    for m in (1, 4, 10):
        assert fhat_eval(2, (m,)) == F(m * m, 2)
    m = 2
    assert fhat_eval(3, (m, F(m * (m + 3), 2))) == F(22, 3)
    assert fhat_eval(3, (m, F(m * (m + 3), 2)), method="polynomial") == F(22, 3)
    with pytest.raises(ValueError):
        fhat_eval(3, (1,))
    with pytest.raises(ValueError):
        fhat_eval(2, (1,), method="magic")


def test_fhat_methods_agree_on_random_inputs():
    rng = random.Random(11)
    for n in range(2, 21):
        poly = fhat_polynomial(n)
        for _ in range(100 if n <= 12 else 10):
            v = [random_rational(rng) for _ in range(n - 1)]
            assert poly.evaluate(v) == fhat_eval(n, v)


def test_newton_identity_from_random_roots():
    rng = random.Random(5)
    for n in range(1, 9):
        roots = [random_rational(rng) for _ in range(n)]
        v = elementary_from_roots(roots)[1:]
        ell = log_coefficients(v)
        power_sums = [sum(x**k for x in roots) for k in range(1, n + 1)]
        assert ell == [(-1) ** (k - 1) * s for k, s in enumerate(power_sums, start=1)]
        # s_k - s_{k-1} e_1 + ... + (-1)^k k e_k = 0
        e = [F(1)] + v
        for k in range(1, n + 1):
            total = sum((-1) ** i * power_sums[k - i - 1] * e[i] for i in range(k))
            total += (-1) ** k * k * e[k]
            assert total == 0


def test_growth_series_examples(backend):
    assert growth_series(SYM(10), 1)[1] == 10
    assert growth_series(ALT(5), 10)[10] == 176963
    assert growth_series(ALT(1), 2) == Series([1, 1, 3])
    assert growth_series(ALT_BASE, 6) == growth_series(ALT(1), 6)
    assert growth_series(SYM_BASE, 5) == Series([1, 1, 2, 3, 5, 7])
    with pytest.raises(ValueError):
        growth_series("nope", 3)


def test_sym_recurrence_examples(backend):
    for m in (1, 2, 7):
        assert gamma_sym_recurrence(m, 1)[1] == m
    assert gamma_sym_recurrence(10, 10)[10] == 1605340
    assert gamma_sym_recurrence(3, 2)[2] == 9


@pytest.mark.parametrize("m", range(1, 13))
def test_sym_recurrence_equals_product(m, backend):
    assert gamma_sym_recurrence(m, 200) == growth_series(SYM(m), 200)


@pytest.mark.parametrize("m", [1, 3, 10])
def test_sym_recurrence_through_explicit_polynomials(m):
    assert gamma_sym_recurrence(m, 20, method="fhat") == growth_series(SYM(m), 20)


def test_no_coefficient_examples(backend):
    for m in (1, 3, 9):
        assert no_coefficient(-m, 1) == m
    assert no_coefficient(-10, 10) == 1605340
    assert all(no_coefficient(0, n) == 0 for n in range(1, 8))
    assert no_coefficient(5, 0) == 1


@pytest.mark.parametrize("m", range(1, 7))
def test_hook_sum_equals_product(m, backend):
    n_max = 20 if m > 2 else 24
    coeffs = growth_series(SYM(m), n_max).coeffs
    for n in range(n_max + 1):
        v = no_coefficient(-m, n)
        assert v.denominator == 1 and v >= 0
        assert v == coeffs[n]


def test_hook_sum_rational_exponent():
    rng = random.Random(3)
    for _ in range(6):
        r = F(rng.randint(-10, 10), rng.randint(1, 10))
        ref = eta_power_coefficients(r, 14)
        for n in range(15):
            assert no_coefficient(r, n) == ref[n]


def test_eta_power_integer_case_matches_product():
    for r in (-3, 1, 2):
        assert eta_power_coefficients(r, 40) == expand_product([(1, r)], 40)


def test_hook_sum_threads_are_schedule_independent():
    assert no_coefficient(F(-7, 3), 14, threads=3) == no_coefficient(F(-7, 3), 14)


def test_alt_summand_examples(backend):
    for m in range(1, 6):
        for k in range(m + 1):
            a = alt_summand(m, k, 2).coeffs
            assert a[0] == 1
            assert a[1] == 2 * k
            assert a[2] == 2 * k * k + 2 * k + m
    assert alt_summand(1, 0, 4).coeffs == (1, 0, 1, 0, 2)
    with pytest.raises(ValueError):
        alt_summand(3, 4, 5)


def test_alt_summand_matches_product(backend):
    for m in range(1, 6):
        for k in range(m + 1):
            ref = expand_product([(1, -2 * k), (2, -(m - k))], 60).integers()
            assert list(alt_summand(m, k, 60).coeffs) == ref
            assert list(alt_summand(m, k, 25, method="fhat").coeffs) == ref[:26]


def test_alt_recurrence_examples():
    assert gamma_alt_recurrence(5, 1)[1] == 5
    assert gamma_alt_recurrence(5, 10)[10] == 176963
    assert gamma_alt_recurrence(1, 2)[2] == 3


@pytest.mark.parametrize("m", range(1, 9))
def test_alt_recurrence_equals_product(m, backend):
    assert gamma_alt_recurrence(m, 150) == growth_series(ALT(m), 150)


def test_binomial_sum_needs_the_k_zero_term():
    m, order = 3, 12
    partial = [
        sum(comb(m, k) * alt_summand(m, k, order).coeffs[n] for k in range(1, m + 1))
        for n in range(order + 1)
    ]
    full = growth_series(ALT(m), order).integers()
    assert [F(x, 2**m) for x in partial] != full


def test_b_divisor_identity():
    for m in range(1, 11):
        for k in range(m + 1):
            w = alt_weights(m, k, 500)
            for n in range(1, 501):
                assert -b_divisor_sum(m, k, n) == w[n]


def test_simplified_divisor_form_differs_from_generating_function():
    # the shortcut sum_{delta | n} delta*[(-1)^delta (k-M) - (k+M)] in place of
    # (1/n) sum_{d | n} d*[(-1)^(n/d) (k-M) - (k+M)] breaks already at n = 2
    m, k, n = 3, 1, 2

    def shortcut(n):
        return sum(
            d * ((-1) ** d * (k - m) - (k + m)) for d in range(1, n + 1) if n % d == 0
        )

    def reciprocal(n):
        return sum(
            F((-1) ** d * (k - m) - (k + m), d) for d in range(1, n + 1) if n % d == 0
        )

    for j in range(1, 30):
        assert reciprocal(j) == F(b_divisor_sum(m, k, j), j)
    a = [F(1)]
    for j in range(1, n + 1):
        a.append(fhat_eval(j, a[1:]) - shortcut(j))
    assert a[2] != alt_summand(m, k, 2).coeffs[2] == 2 * k * k + 2 * k + m


def test_integrality_guard_fires_on_corrupted_weights(monkeypatch):
    from wreathgrowth import growth

    def corrupted(n):
        table = [sigma(1, j) if j else 0 for j in range(n + 1)]
        table[2] += 1
        return table

    monkeypatch.setattr(growth, "sigma1_table", corrupted)
    with pytest.raises(IntegralityError):
        gamma_sym_recurrence(1, 10)
    with pytest.raises(IntegralityError):
        gamma_alt_recurrence(1, 10)


def test_growth_rate_examples():
    r = growth_rate(SYM(6))
    assert (r.coefficient, r.radicand) == (1, 4)
    assert r.value == pytest.approx(2 * pi)
    r = growth_rate(ALT(3))
    assert (r.coefficient, r.radicand) == (2, 1)
    assert r.value == pytest.approx(2 * pi)
    for m in range(1, 13):
        assert growth_rate(SYM(m)).value == pytest.approx(pi * sqrt(2 * m / 3))
        assert growth_rate(ALT(m)).value == pytest.approx(2 * pi * sqrt(m / 3))
