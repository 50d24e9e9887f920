import dataclasses

import pytest

from conftest import SMALL, hpar, ok
from whapar.algebroid import BalancedTensor, build_algebroid, check_hopf_algebroid, word_value
from whapar.errors import PreconditionError
from whapar.exactlin import ONE, Matrix

AXIOMS = [
    "base maps", "S bijective", "S(A)=A~",
    "Delta_l bimodule", "eps_l bimodule", "Takeuchi l", "eps_l counit",
    "Delta_r bimodule", "eps_r bimodule", "Takeuchi r", "eps_r counit",
    "antipode (i)", "antipode (ii)", "antipode (iii)", "antipode (iv)",
    "Delta_l multiplicative", "Delta_r multiplicative", "eps_l product", "eps_r product",
    "eps_l o s", "eps_r o s~", "Delta_l coassociative", "Delta_r coassociative",
]

_cache = {}


def algebroid(name, convention="bohm"):
    key = (name, convention)
    if key not in _cache:
        _cache[key] = build_algebroid(hpar(name), convention=convention)
    return _cache[key]


@pytest.mark.parametrize("name", SMALL)
def test_full_checklist(name):
    had = algebroid(name)
    ok(had.report)
    rep = ok(check_hopf_algebroid(had))
    assert set(AXIOMS) <= set(rep.checked)


@pytest.mark.parametrize("name", ["Z2", "pair2"])
def test_literal_convention_agrees_on_groupoids(name):
    a, b = algebroid(name), algebroid(name, "literal")
    ok(check_hopf_algebroid(b))
    assert a.delta_l == b.delta_l and a.delta_r == b.delta_r
    assert a.eps_l == b.eps_l and a.eps_r == b.eps_r


@pytest.mark.parametrize("name", SMALL)
def test_counit_sections(name):
    had = algebroid(name)
    for j in range(had.A.dim):
        assert had.El(had.s.apply_sparse({j: ONE})) == {j: ONE}
    for j in range(had.At.dim):
        assert had.Er(had.s_tilde.apply_sparse({j: ONE})) == {j: ONE}


@pytest.mark.parametrize("name", SMALL)
def test_antipode_twists_base_actions(name):
    had = algebroid(name)
    C = had.hp.carrier
    S = had.S.apply_sparse
    for j in range(had.A.dim):
        ta = had.t.apply_sparse({j: ONE})
        sa = had.s.apply_sparse({j: ONE})
        for k in range(had.At.dim):
            tb = had.t_tilde.apply_sparse({k: ONE})
            sb = had.s_tilde.apply_sparse({k: ONE})
            for x in range(had.N):
                lhs = S(C.mul_many(ta, {x: ONE}, tb))
                assert lhs == C.mul_many(sb, S({x: ONE}), sa)


@pytest.mark.parametrize("name", SMALL)
def test_inverse_antipode(name):
    had = algebroid(name)
    assert had.S @ had.Sp == Matrix.identity(had.N) == had.Sp @ had.S


def test_balanced_tensor_dimension_for_group():
    # over a one-object group the base algebra has a single idempotent; balancing cuts the square
    had = algebroid("Z2")
    assert had.left.dim + had.left.kernel_dim == had.N ** 2
    assert had.left.dim < had.N ** 2


def test_balanced_projection_kernel_is_the_relation_span():
    had = algebroid("pair2")
    L = had.left
    C = had.hp.carrier
    N = had.N
    for a in range(had.A.dim):
        ta = had.t.apply_sparse({a: ONE})
        sa = had.s.apply_sparse({a: ONE})
        for x in range(N):
            for y in range(N):
                lhs = {i * N + j: c * d for i, c in C.mul(ta, {x: ONE}).items()
                       for j, d in {y: ONE}.items()}
                rhs = {i * N + j: c * d for i, c in {x: ONE}.items() for j, d in C.mul(sa, {y: ONE}).items()}
                assert L.equal(lhs, rhs)


def test_mutated_antipode_is_caught():
    had = algebroid("Z3")
    bad = dataclasses.replace(had, S=Matrix.identity(had.N), report=had.report)
    rep = check_hopf_algebroid(bad, coassoc=False)
    failed = rep.failed_axioms()
    assert "S bijective" in failed
    assert "antipode (iii)" in failed or "antipode (iv)" in failed


def test_mutated_counit_is_caught():
    had = algebroid("Z2")
    E = had.eps_l
    ent = list(E.entries)
    ent[0] = ent[0] + 1
    bad = dataclasses.replace(had, eps_l=Matrix(E.rows, E.cols, ent))
    failed = check_hopf_algebroid(bad, coassoc=False).failed_axioms()
    assert any(a.startswith("eps_l") for a in failed)


def test_requires_invertible_certified_input():
    hp = hpar("Z2")
    with pytest.raises(PreconditionError):
        build_algebroid(dataclasses.replace(hp, certification="heuristic: dimension-plateau"))


def test_word_value():
    mul = lambda x, y: x + y  # noqa: E731  (free monoid on strings)
    assert word_value(mul, "", ["a", "b"], (0, 1, 1)) == "abb"
    assert word_value(mul, "", ["a", "b"], (0, 1, 1), anti=True) == "bba"


def test_balanced_tensor_without_relations():
    bt = BalancedTensor(2, 2, [])
    assert bt.dim == 4 and bt.kernel_dim == 0
