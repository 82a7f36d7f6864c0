from __future__ import annotations

import numpy as np
import pytest

from swkernel import IrrepSpace, coset_grid, decompose_tensor_family, default_resolution


@pytest.fixture(scope="session")
def family_of():
    def get(n, lam):
        return decompose_tensor_family(IrrepSpace(n, lam))
    return get


@pytest.fixture(scope="session")
def default_grid():
    cache = {}

    def get(n, lam):
        key = (n, lam)
        if key not in cache:
            cache[key] = coset_grid(n, default_resolution(n, lam))
        return cache[key]
    return get


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_operator(rng, dim, hermitian=False):
    x = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return (x + x.conj().T) / 2 if hermitian else x


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
