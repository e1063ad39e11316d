from __future__ import annotations

import numpy as np
import pytest

from graphpow import _pykernels
from graphpow._backend import NATIVE_AVAILABLE, available, default_name, get_backend
from graphpow.generators import random_regular
from graphpow.graph import power

needs_native = pytest.mark.skipif(not NATIVE_AVAILABLE, reason="compiled kernels not built")


def test_python_always_available():
    assert "python" in available()
    assert get_backend("python") is _pykernels


def test_env_override(monkeypatch):
    monkeypatch.setenv("GRAPHPOW_BACKEND", "python")
    assert default_name() == "python"
    assert get_backend() is _pykernels


def test_unknown_backend():
    with pytest.raises(ValueError):
        get_backend("fortran")


@needs_native
@pytest.mark.parametrize("k", [2, 3, 5])
def test_power_backends_agree(k):
    g = random_regular(600, 4, seed=7)
    assert power(g, k, backend="native") == power(g, k, backend="python")


@needs_native
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_profile_backends_agree(n):
    for k in (1, 2, 4):
        a = get_backend("native").edge_subset_profile(n, k)
        b = get_backend("python").edge_subset_profile(n, k)
        for x, y in zip(a, b):
            assert np.array_equal(x, y)


@needs_native
@pytest.mark.parametrize("n", [1, 2, 3, 5, 6])
def test_tree_minima_backends_agree(n):
    ca, ma = get_backend("native").tree_power_minima(n, 5)
    cb, mb = get_backend("python").tree_power_minima(n, 5)
    assert ca == cb == max(1, n ** (n - 2))
    assert list(ma) == list(mb)


def test_threads_bit_identical():
    g = random_regular(5000, 6, seed=3)
    single = power(g, 3, threads=1)
    assert power(g, 3, threads=4) == single
    assert power(g, 3, threads=4).rows == single.rows
