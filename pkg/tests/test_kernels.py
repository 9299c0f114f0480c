import os
import random
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ugig import _kernels_py, kernels
from ugig.graph import _csr, random_tree

from conftest import bipartite_graphs

compiled = pytest.importorskip("ugig._kernels")


@given(bipartite_graphs(max_side=6))
def test_girth_kernels_agree(g):
    n, indptr, indices = _csr(g)
    assert compiled.girth_csr(n, indptr, indices) == _kernels_py.girth_csr(n, indptr, indices)


def test_girth_kernels_agree_on_trees():
    t = random_tree(300, random.Random(5))
    args = _csr(t)
    assert compiled.girth_csr(*args) == _kernels_py.girth_csr(*args) == 0


@given(st.integers(1, 7), st.integers(1, 7), st.integers(0, 10**6))
def test_cross_free_kernels_agree(nr, nc, seed):
    rng = random.Random(seed)
    masks = [rng.getrandbits(nc) for _ in range(nr)]
    a = compiled.cross_free_search(masks, nc)
    b = _kernels_py.cross_free_search(masks, nc)
    assert (a is None) == (b is None)


def test_switch():
    assert kernels.IMPLEMENTATION in ("cython", "python")
    code = "from ugig import kernels; print(kernels.IMPLEMENTATION)"
    env = dict(os.environ, UGIG_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
