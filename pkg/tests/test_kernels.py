import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wreathgrowth import kernels

from conftest import brute_partitions

ints = st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=30)


def naive_mul(a, b, n):
    out = [0] * (n + 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j <= n:
                out[i + j] += x * y
    return out


@given(ints, ints, st.integers(0, 35))
def test_mul_trunc_matches_naive(a, b, n):
    for name in kernels.available():
        assert kernels.module(name).mul_trunc(a, b, n) == naive_mul(a, b, n)


@given(st.lists(st.tuples(st.integers(1, 4), st.integers(-4, 4)), max_size=3), st.integers(0, 40))
@settings(max_examples=50)
def test_expand_euler_backends_agree(factors, n):
    results = {name: kernels.module(name).expand_euler(factors, n) for name in kernels.available()}
    assert len(set(map(tuple, results.values()))) == 1


def test_expand_euler_pentagonal():
    # prod (1 - q^n): exponents at generalized pentagonal numbers
    for name in kernels.available():
        c = kernels.module(name).expand_euler([(1, 1)], 15)
        assert c == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1]


@given(st.lists(st.integers(-50, 50), min_size=2, max_size=25).filter(lambda s: s[0] != 0))
def test_inverse_scaled_inverts(s):
    n = len(s) - 1
    for name in kernels.available():
        u = kernels.module(name).inverse_scaled(s, n)
        # t_k = u_k / s0^(k+1); check s*t == 1 after scaling by s0^(n+1)
        s0 = s[0]
        scaled = [u[k] * s0 ** (n - k) for k in range(n + 1)]
        prod = naive_mul(s, scaled, n)
        assert prod == [s0 ** (n + 1)] + [0] * n


def test_log_derivative_recurrence_non_integral():
    for name in kernels.available():
        with pytest.raises(ArithmeticError):
            kernels.module(name).log_derivative_recurrence([0, 1, 0, 0], 3)  # exp(q) is not integral


@pytest.mark.parametrize("n", range(0, 13))
def test_hook_sum_shards_cover_all(n):
    for name in kernels.available():
        k = kernels.module(name)
        whole = k.hook_sum(n, 7, 3, 0)
        if n:
            assert sum(k.hook_sum(n, 7, 3, j) for j in range(1, n + 1)) == whole


def test_hook_rows_backends_agree():
    rng = random.Random(3)
    parts = brute_partitions(12)
    for lam in rng.sample(parts, 40):
        rows = {tuple(map(tuple, kernels.module(b).hook_rows(list(lam)))) for b in kernels.available()}
        assert len(rows) == 1


def test_use_rejects_unknown():
    with pytest.raises(ValueError):
        kernels.use("fortran")
