import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

from cyclemagic import _accel, kernels

needs_numba = pytest.mark.skipif(not _accel.HAVE_NUMBA, reason="numba not installed")


@st.composite
def weight_problems(draw):
    n_el = draw(st.integers(1, 40))
    labels = draw(arrays(np.int64, n_el, elements=st.integers(0, 10**6)))
    rows = draw(st.integers(0, 30))
    width = draw(st.sampled_from([6, 8]))
    members = draw(arrays(np.int64, (rows, width), elements=st.integers(0, n_el - 1)))
    return labels, members


@given(weight_problems())
def test_python_kernels_agree(problem):
    labels, members = problem
    loop = kernels.make_kernels(lambda f: f).cycle_weights(labels, members)
    np.testing.assert_array_equal(loop, kernels.PY.cycle_weights(labels, members))


@needs_numba
@given(weight_problems())
def test_jit_weights_match_numpy(problem):
    labels, members = problem
    np.testing.assert_array_equal(kernels.jit_kernels().cycle_weights(labels, members),
                                  kernels.cycle_weights_numpy(labels, members))


@needs_numba
@given(st.lists(st.booleans(), min_size=12, max_size=12),
       arrays(np.int64, (5, 2), elements=st.integers(0, 3)),
       arrays(np.int64, 5, elements=st.integers(0, 40)),
       st.integers(-1, 60))
def test_feasibility_agrees(used_bits, cneed, cpart, const):
    used = np.array([0] + [int(b) for b in used_bits] + [0], dtype=np.uint8)
    pool_lo = np.array([1, 6], dtype=np.int64)
    pool_hi = np.array([5, 12], dtype=np.int64)
    args = (used, pool_lo, pool_hi, cpart, cneed, const)
    assert kernels.jit_kernels().feasible(*args) == kernels.PY.feasible(*args)


@pytest.mark.parametrize("value, expected", [("1", False), ("true", False), ("0", True), ("", True)])
def test_disable_flag(value, expected):
    env = dict(os.environ, **{_accel.DISABLE_ENV: value})
    out = subprocess.run([sys.executable, "-c", "from cyclemagic import _accel; print(_accel.USE_NUMBA)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == str(expected and _accel.HAVE_NUMBA)


def test_active_follows_flag(monkeypatch):
    monkeypatch.setattr(_accel, "USE_NUMBA", False)
    assert kernels.active() is kernels.PY
