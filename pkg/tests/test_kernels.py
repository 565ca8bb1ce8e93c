import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_front, table
from maxtb import _kernels
from maxtb._kernels import python as py
from maxtb.diagram import parse_pd
from maxtb.generators import braid_closure, random_braid
from maxtb.kauffman import slot_involution

compiled = pytest.mark.skipif(_kernels.BACKEND == "python", reason="compiled kernel not built")


def test_backend_is_named():
    assert _kernels.BACKEND in ("cython", "python")


@compiled
def test_compiled_matches_fallback_on_table():
    for r in table()[:40]:
        p = slot_involution(parse_pd(r["pd"]))
        assert _kernels.dubrovnik_regular(p, {}) == py.dubrovnik_regular(p, {})
        assert _kernels.canonical_code(p) == py.canonical_code(p)


@compiled
@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_compiled_matches_fallback_on_braids(seed):
    word, s = random_braid(random.Random(seed), max_strands=4, max_length=8)
    p = slot_involution(braid_closure(word, s))
    assert _kernels.dubrovnik_regular(p, {}) == py.dubrovnik_regular(p, {})


@compiled
@settings(max_examples=80, deadline=None)
@given(st.data())
def test_ruling_search_parity(data):
    f = random_front(lambda lo, hi: data.draw(st.integers(lo, hi)), max_crossings=8)
    kinds, pos = f.kernel_input()
    n = f.num_crossings
    assert _kernels.ruling_masks(kinds, pos, n) == py.ruling_masks(kinds, pos, n)


def test_canonical_code_ignores_crossing_order():
    d = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]")
    e = parse_pd("X[5,3,6,2] X[1,5,2,4] X[3,1,4,6]")
    assert py.canonical_code(slot_involution(d)) == py.canonical_code(slot_involution(e))


def test_delta_power_zero_is_one():
    assert py.delta_power(0) == {(0, 0): 1}


@pytest.mark.parametrize("k", [_kernels, py], ids=["selected", "python"])
def test_canonical_code_rejects_disconnected_codes(k):
    # two separate one-crossing kinks
    with pytest.raises(ValueError):
        k.canonical_code([3, 2, 1, 0, 7, 6, 5, 4])


def test_environment_forces_the_fallback():
    import os
    import subprocess
    import sys

    env = dict(os.environ, MAXTB_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from maxtb import _kernels; print(_kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
