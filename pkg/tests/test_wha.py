from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import SMALL, algebra, ok
from whapar.exactlin import ONE, Matrix
from whapar.io import load
from whapar.wha import (canonical_projections, check_weak_hopf, generated_subalgebra, lemma21_suite,
                        counital_subalgebra_suite, matrix_algebra, check_algebra)

CORPUS = SMALL + ["sweedler"]


@pytest.mark.parametrize("name", CORPUS)
def test_axioms_and_identities(name):
    h = algebra(name)
    ok(check_weak_hopf(h))
    ok(lemma21_suite(h))
    ok(counital_subalgebra_suite(h))


@pytest.mark.parametrize("name", CORPUS)
def test_counital_maps_are_idempotent(name):
    h = algebra(name)
    p = canonical_projections(h)
    assert p.eps_t @ p.eps_t == p.eps_t
    assert p.eps_s @ p.eps_s == p.eps_s
    assert p.Ht.dim == p.Hs.dim


@pytest.mark.parametrize("name", CORPUS)
def test_supplied_antipode_inverse(name):
    h = algebra(name)
    assert h.antipode @ h.antipode_inverse == Matrix.identity(h.dim)


def test_counital_images_of_groupoid_algebra_are_object_span():
    h = algebra("pair2")
    p = canonical_projections(h)
    assert p.Ht.dim == 2


@pytest.mark.parametrize("fixture, axiom, witness", [
    ("broken.json", "iii", (1, 1)),
    ("broken_counit.json", "ii", (1,)),
])
def test_perturbed_fixtures_fail_with_named_witness(fixture, axiom, witness):
    rep = check_weak_hopf(load(fixture).hopf)
    assert not rep.ok
    f = rep.first_failure
    assert (f.axiom, f.witness) == (axiom, witness)


def test_broken_fixture_failure_sets():
    assert check_weak_hopf(load("broken.json").hopf).failed_axioms() == ["iii", "iv", "vi", "vii", "viii"]
    assert check_weak_hopf(load("broken_counit.json").hopf).failed_axioms() == ["ii", "iv", "vi", "vii"]


@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=2), min_size=8, max_size=8))
def test_eps_t_idempotent_on_random_elements(coeffs):
    h = algebra("sweedler")
    x = {i: c for i, c in enumerate(coeffs) if c}
    once = h.eps_t(x)
    assert h.eps_t(once) == once
    assert h.eps_s(h.eps_s(x)) == h.eps_s(x)


@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=2), min_size=4, max_size=4),
       st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=2), min_size=4, max_size=4))
def test_delta_multiplicative_on_random_elements(a, b):
    h = algebra("pair2")
    x = {i: c for i, c in enumerate(a) if c}
    y = {i: c for i, c in enumerate(b) if c}
    lhs = h.delta(h.mul(x, y))
    rhs = {}
    dx, dy = h.delta(x), h.delta(y)
    for (p, q), c in dx.items():
        for (r, s), d in dy.items():
            for u, e in h.mul_basis(p, r).items():
                for v, f in h.mul_basis(q, s).items():
                    rhs[(u, v)] = rhs.get((u, v), 0) + c * d * e * f
    assert lhs == {k: v for k, v in rhs.items() if v}


def test_matrix_algebra_and_generated_subalgebra():
    m2 = matrix_algebra(2)
    ok(check_algebra(m2))
    sub = generated_subalgebra(m2, [{0: ONE}])
    assert sub.dim == 2
    full = generated_subalgebra(m2, [{1: ONE}, {2: ONE}])
    assert full.dim == 4
    for i, j in product(range(sub.dim), repeat=2):
        assert sub.contains(m2.mul(sub.include({i: ONE}), sub.include({j: ONE})))
