import dataclasses
from itertools import product

import pytest

from conftest import SMALL, algebra, hpar, ok
from whapar.errors import PreconditionError
from whapar.exactlin import ONE, Matrix
from whapar.hpar import hpar_presentation
from whapar.qisg import build_qisg, check_qisg, delta_partial_rep

COCOMMUTATIVE = SMALL + ["Klein", "Z4"]
_cache = {}


def qisg(name):
    if name not in _cache:
        _cache[name] = build_qisg(hpar(name))
    return _cache[name]


@pytest.mark.parametrize("name", COCOMMUTATIVE)
def test_qisg_axioms(name):
    q = qisg(name)
    ok(q.report)
    rep = ok(check_qisg(q))
    assert {"QISG3(ii) I*S*I=I", "QISG3(ii) S*I*S=S", "QISG4", "unital S(1)=1"} <= set(rep.checked)


@pytest.mark.parametrize("name", COCOMMUTATIVE)
def test_delta_on_brackets_is_a_partial_rep(name):
    pr, rep = delta_partial_rep(qisg(name))
    ok(rep)


@pytest.mark.parametrize("name", ["Z2", "Z3"])
def test_convolutions_commute(name):
    q = qisg(name)
    C = q.hp.carrier
    I = Matrix.identity(q.hp.dim)
    IS, SI = q.convolve(I, q.pseudo_antipode), q.convolve(q.pseudo_antipode, I)
    for x, y in product(range(q.hp.dim), repeat=2):
        u, v = IS.col_sparse(x), SI.col_sparse(y)
        assert C.mul(u, v) == C.mul(v, u)


def test_unit_preservation_depends_on_objects():
    assert qisg("Z3").info["unit_preserving"]
    assert not qisg("discrete2").info["unit_preserving"]
    assert not qisg("pair2").info["unit_preserving"]


def test_group_case_delta_is_bracket_diagonal():
    q = qisg("Z2")
    hp = q.hp
    N = hp.dim
    for i in range(hp.base.dim):
        b = hp.br({i: ONE})
        expect = {x * N + y: c * d for x, c in b.items() for y, d in b.items()}
        assert q.D(b) == expect


def test_non_cocommutative_is_rejected():
    with pytest.raises(PreconditionError, match="not cocommutative"):
        build_qisg(hpar_presentation(algebra("sweedler")))


def test_broken_antipode_is_caught():
    q = qisg("Z3")
    bad = dataclasses.replace(q, pseudo_antipode=Matrix.identity(q.hp.dim))
    failed = check_qisg(bad).failed_axioms()
    assert "QISG3(ii) I*S*I=I" in failed
