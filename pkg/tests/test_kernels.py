"""The compiled core and the pure-Python fallback must agree exactly."""

import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from whapar import _kernels_py as py
from whapar import kernels

try:
    from whapar import _kernels as cy
except ImportError:  # extension not built
    cy = None

needs_cy = pytest.mark.skipif(cy is None, reason="compiled extension not built")
BACKENDS = [py] + ([cy] if cy else [])
small_q = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@needs_cy
@given(st.integers(1, 5).flatmap(lambda c: st.lists(st.lists(small_q, min_size=c, max_size=c), max_size=6)
                                 .map(lambda rows: (rows, c))))
def test_rref_parity(data):
    rows, ncols = data
    assert cy.rref_dense(rows, ncols) == py.rref_dense(rows, ncols)
    assert cy.rref_dense([tuple(r) for r in rows], ncols) == py.rref_dense(rows, ncols)


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.__name__)
def test_rref_accepts_tuples_and_ints(mod):
    red, piv = mod.rref_dense([(2, 4), (Fraction(1, 2), 3)], 2)
    assert piv == [0, 1]
    assert red == [(1, 0), (0, 1)]


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.__name__)
def test_rref_rejects_ragged_rows(mod):
    with pytest.raises(ValueError):
        mod.rref_dense([[1, 2], [1]], 2)


sparse_vecs = st.lists(st.dictionaries(st.integers(0, 12), small_q, max_size=4), max_size=12)


@needs_cy
@given(sparse_vecs)
def test_sparse_echelon_parity(vecs):
    a, b = py.SparseEchelon(), cy.SparseEchelon()
    for v in vecs:
        assert a.add(v) == b.add(v)
    assert a.rows == b.rows
    probe = {k: Fraction(k + 1) for k in range(13)}
    assert a.reduce(probe) == b.reduce(probe)


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.__name__)
@given(vecs=sparse_vecs)
def test_sparse_echelon_reduces_members_to_zero(mod, vecs):
    e = mod.SparseEchelon()
    for v in vecs:
        e.add(v)
    for v in vecs:
        assert e.reduce(v) == {}
    for p, row in e.rows.items():
        assert row[p] == 1 and max(row) == p


def _rewriter(mod):
    # x y -> y x, y y -> y, x x -> 1 (a small complete system on letters 0=x, 1=y)
    rw = mod.WordRewriter()
    rw.set_rule((0, 1), {(1, 0): Fraction(1)})
    rw.set_rule((1, 1), {(1,): Fraction(1)})
    rw.set_rule((0, 0), {(): Fraction(1)})
    return rw


words = st.lists(st.integers(0, 1), max_size=8).map(tuple)


@needs_cy
@given(words)
def test_word_rewriter_parity(w):
    assert _rewriter(py).normal_word(w) == _rewriter(cy).normal_word(w)
    assert _rewriter(py).find(w) == _rewriter(cy).find(w)


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.__name__)
def test_word_rewriter_normal_forms(mod):
    rw = _rewriter(mod)
    assert rw.normal_word((0, 1, 0)) == {(1,): 1}
    assert rw.normal_form({(0, 0): Fraction(2), (): Fraction(-2)}) == {}
    assert rw.is_normal((1, 0)) and not rw.is_normal((1, 1))
    rw.drop_rule((0, 0))
    assert rw.normal_word((0, 0)) == {(0, 0): 1}


def test_backend_selection_respects_env():
    code = "from whapar import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, WHAPAR_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND in ("python", "cython")


def test_fallback_builds_same_hpar():
    code = ("from whapar.constructors import cyclic_group, groupoid_algebra\n"
            "from whapar.hpar import build_hpar\n"
            "hp = build_hpar(groupoid_algebra(cyclic_group(3)))\n"
            "print(hp.words, sorted(hp.carrier.table().items()))")
    outs = set()
    for flag in ("1", "0"):
        env = dict(os.environ, WHAPAR_PURE_PYTHON=flag)
        outs.add(subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                                check=True).stdout)
    assert len(outs) == 1
