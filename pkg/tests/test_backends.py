import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import exponents

from wonderlie.polyalg import _kernels, _pykernels

ck = pytest.importorskip("wonderlie.polyalg._ckernels")

sparse_rows = st.lists(st.dictionaries(st.integers(0, 7), st.integers(-20, 20).filter(bool), max_size=6), max_size=10)


@given(sparse_rows)
def test_echelon_rank_agrees(rows):
    assert ck.echelon_rank([dict(r) for r in rows], 8) == _pykernels.echelon_rank([dict(r) for r in rows], 8)


@given(sparse_rows)
def test_rref_agrees(rows):
    assert ck.rref([dict(r) for r in rows], 8) == _pykernels.rref([dict(r) for r in rows], 8)


@given(sparse_rows, st.sampled_from([2, 3, 101, 2147483647]))
def test_rank_mod_p_agrees(rows, p):
    rows = [{k: v % p for k, v in r.items() if v % p} for r in rows]
    assert ck.rank_mod_p([dict(r) for r in rows], 8, p) == _pykernels.rank_mod_p([dict(r) for r in rows], 8, p)


@given(st.dictionaries(exponents(3), st.integers(-9, 9).filter(bool), max_size=6),
       st.dictionaries(exponents(3), st.integers(-9, 9).filter(bool), max_size=6))
def test_mul_terms_agrees(a, b):
    assert ck.mul_terms(a, b) == _pykernels.mul_terms(a, b)


def test_compiled_backend_selected_by_default():
    assert _kernels.BACKEND == "cython"


def test_env_var_forces_fallback():
    code = ("from wonderlie.polyalg import BACKEND; from wonderlie.covariants import graded_kernel;"
            "from wonderlie.lie import adjoint, sl;"
            "print(BACKEND, [len(graded_kernel('phi', adjoint(sl(2)), d)) for d in range(1, 5)])")
    env = dict(os.environ, WONDERLIE_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split(None, 1) == ["python", "[1, 3, 6, 10]\n"]
