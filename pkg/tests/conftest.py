import pytest

from wreathgrowth import kernels


@pytest.fixture(params=kernels.available())
def backend(request):
    """Run a test once per available kernel backend."""
    previous = kernels.BACKEND
    kernels.use(request.param)
    yield request.param
    kernels.use(previous)


def brute_partitions(n, cap=None):
    """All partitions of n as tuples, by plain recursion (test oracle)."""
    cap = n if cap is None else cap
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, cap), 0, -1):
        out += [(first,) + rest for rest in brute_partitions(n - first, first)]
    return out
