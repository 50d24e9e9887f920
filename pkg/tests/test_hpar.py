from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import SMALL, algebra, ecalc, groupoid, hpar, hpar_or_presentation, ok
from test_constructors import ORACLE, brute_force_br
from whapar.errors import NotStabilizedError, PreconditionError
from whapar.exactlin import ONE
from whapar.hpar import (HparPresentation, algebra_object_roundtrip, apar_action, apar_action_suite,
                         birget_rhodes_oracle, bracket_rep_check, build_hpar, hpar_presentation, propee_suite,
                         relation_instances, smash_iso_check, universal_factorization)
from whapar.io import load
from whapar.partial import check_partial_action, identity_rep, pi0, smash_product
from whapar.wha import check_algebra, is_cocommutative


@pytest.mark.parametrize("name", ["trivial", "Z2", "Z3", "Klein", "Z4"])
def test_dimension_equals_brute_force_br_count(name):
    elems, inv, e = ORACLE[name]
    assert hpar(name).dim == brute_force_br(elems, None, inv, e)


def test_small_dimensions():
    assert [hpar(n).dim for n in ("trivial", "Z2", "Z3", "discrete2", "pair2")] == [1, 3, 8, 2, 6]


@pytest.mark.parametrize("name", SMALL + ["Klein"])
def test_oracle_report(name):
    rep = ok(birget_rhodes_oracle(groupoid(name), hpar(name), ecalc(name)))
    assert rep.info["oracle"] == hpar(name).dim
    assert rep.info["apar_matches_objects"]


@pytest.mark.parametrize("name", SMALL)
def test_carrier_and_bracket(name):
    hp = hpar(name)
    assert hp.certified
    ok(check_algebra(hp.carrier))
    ok(bracket_rep_check(hp))
    assert hp.words == sorted(hp.words, key=lambda w: (len(w), w))


@pytest.mark.parametrize("name", SMALL)
def test_relations_vanish_in_carrier(name):
    hp = hpar(name)
    for fam, wit, r in relation_instances(hp.base):
        assert hp.reduce(r) == {}, (fam, wit)


@pytest.mark.parametrize("name", SMALL)
def test_e_calculus(name):
    rep = ok(propee_suite(hpar(name), ecalc(name)))
    letters = set("abcdefghijklm")
    assert letters <= set(rep.checked)
    assert {"Sinv-a", "Sinv-b", "Sinv-c", "Sinv-d", "E_g idempotent"} <= set(rep.checked)
    assert ("n" in rep.checked) == is_cocommutative(algebra(name))


@pytest.mark.parametrize("name", SMALL)
def test_apar_action(name):
    hp, ee = hpar(name), ecalc(name)
    pa = apar_action(hp, ee)
    ok(apar_action_suite(hp, ee, pa))


@pytest.mark.parametrize("name", SMALL)
def test_smash_isomorphism(name):
    rep = ok(smash_iso_check(hpar(name), ecalc(name)))
    assert {"Phi.pi-hat=id", "pi-hat.Phi=id"} <= set(rep.checked)


@pytest.mark.parametrize("name", SMALL)
def test_identity_rep_factorization(name):
    hp = hpar(name)
    M, rep = universal_factorization(hp, identity_rep(hp.base))
    ok(rep)
    assert rep.passed("two-routes")


words_z3 = st.lists(st.integers(0, 2), max_size=5).map(tuple)


@given(words_z3, words_z3)
def test_reduction_is_multiplicative(u, v):
    hp = hpar("Z3")
    C = hp.carrier
    assert hp.reduce_word(u + v) == C.mul(hp.reduce_word(u), hp.reduce_word(v))


def test_trajectory_is_recorded():
    assert hpar("Z3").trajectory == [3, 7, 9, 8, 8, 8]
    assert hpar("Z2").trajectory == [2, 3, 3, 3, 3, 3]


def test_low_degree_bound_does_not_stabilize():
    with pytest.raises(NotStabilizedError) as exc:
        build_hpar(algebra("Z3"), max_degree=2)
    assert exc.value.trajectory == [3, 7]
    assert exc.value.complete is False


def test_bad_degree():
    with pytest.raises(PreconditionError):
        build_hpar(algebra("Z2"), max_degree=0)


def test_sweedler_is_infinite_dimensional():
    with pytest.raises(NotStabilizedError) as exc:
        build_hpar(algebra("sweedler"))
    assert exc.value.complete is True
    assert exc.value.trajectory == [8, 57, 22, 26, 30, 34]
    pres = hpar_presentation(algebra("sweedler"))
    assert isinstance(pres, HparPresentation)
    words, finite = pres.normal_words(6)
    assert not finite
    # the trajectory is taken mid-completion; with all rules known the counts grow by 4 per degree
    final = [sum(1 for w in words if len(w) <= d) for d in range(1, 7)]
    assert final == [8, 18, 22, 26, 30, 34]
    assert final[2:] == pres.trajectory[2:]


@pytest.mark.parametrize("path", ["sweedler_q.parrep.json", "z2_partial.parrep.json"])
def test_universal_factorization_of_bundled_reps(path):
    pr = load(path).obj
    hp = hpar_or_presentation("sweedler" if pr.h.name == "sweedler_pair" else "Z2")
    _, rep = universal_factorization(hp, pr)
    ok(rep)
    assert rep.passed("two-routes") and rep.passed("pi-hat.[.]=pi")


def test_sweedler_identity_rep_factors_through_presentation():
    hp = hpar_or_presentation("sweedler")
    f, rep = universal_factorization(hp, identity_rep(algebra("sweedler")))
    ok(rep)
    assert f({(1, 2): ONE}) == algebra("sweedler").mul_basis(1, 2)


@pytest.mark.parametrize("path", ["sweedler_q.action.json", "z2_eps.action.json", "pair2_target.action.json"])
def test_algebra_object_round_trip(path):
    pa = load(path).obj
    check_partial_action(pa)
    hp = hpar_or_presentation({"sweedler_pair": "sweedler", "Q[Z2]": "Z2", "Q[pair2]": "pair2"}[pa.h.name])
    rep = ok(algebra_object_roundtrip(hp, pa))
    assert rep.passed("round-trip")


@pytest.mark.parametrize("path", ["sweedler_q.action.json", "pair2_target.action.json"])
def test_pi0_factorization(path):
    pa = load(path).obj
    check_partial_action(pa)
    hp = hpar_or_presentation({"sweedler_pair": "sweedler", "Q[pair2]": "pair2"}[pa.h.name])
    _, rep = universal_factorization(hp, pi0(smash_product(pa)))
    ok(rep)


def test_e_of_group_likes_are_idempotent():
    hp, ee = hpar("Z3"), ecalc("Z3")
    C = hp.carrier
    for g in hp.base.group_likes():
        eg = ee.e({g: ONE})
        assert C.mul(eg, eg) == eg
