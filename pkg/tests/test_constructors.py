from itertools import combinations, product

import pytest

from conftest import GROUPOIDS, algebra, groupoid, ok
from whapar.constructors import (FiniteGroupoid, birget_rhodes, birget_rhodes_count, groupoid_from_group,
                                 sweedler_pair)
from whapar.errors import InputError
from whapar.wha import check_weak_hopf, is_cocommutative


def brute_force_br(elements, mul, inv, e):
    """Count pairs (A, g) with A a subset of the group containing e and g^-1.

    Works on plain Python values and never touches the groupoid machinery.
    """
    count = 0
    for g in elements:
        for r in range(len(elements) + 1):
            for a in combinations(elements, r):
                if e in a and inv(g) in a:
                    count += 1
    return count


def _cyclic(n):
    return list(range(n)), (lambda x: (-x) % n), 0


def _klein():
    return [(0, 0), (0, 1), (1, 0), (1, 1)], (lambda x: x), (0, 0)


ORACLE = {"trivial": _cyclic(1), "Z2": _cyclic(2), "Z3": _cyclic(3), "Z4": _cyclic(4), "Klein": _klein()}


@pytest.mark.parametrize("name", sorted(ORACLE))
def test_birget_rhodes_count_matches_brute_force(name):
    elems, inv, e = ORACLE[name]
    expected = brute_force_br(elems, None, inv, e)
    assert birget_rhodes_count(groupoid(name)) == expected
    assert len(birget_rhodes(groupoid(name))) == expected


def test_known_br_sizes():
    assert [birget_rhodes_count(groupoid(n)) for n in ("trivial", "Z2", "Z3")] == [1, 3, 8]
    assert birget_rhodes_count(groupoid("discrete2")) == 2


@pytest.mark.parametrize("name", sorted(GROUPOIDS))
def test_birget_rhodes_expansion_is_a_groupoid(name):
    br = birget_rhodes(groupoid(name))
    exp = br.as_groupoid()
    assert len(exp.arrows) == len(br)


@pytest.mark.parametrize("name", sorted(GROUPOIDS))
def test_groupoid_algebra_is_cocommutative_weak_hopf(name):
    h = algebra(name)
    ok(check_weak_hopf(h))
    assert is_cocommutative(h)
    assert h.antipode @ h.antipode == h.antipode.__class__.identity(h.dim)


def test_group_algebra_degenerates_to_hopf():
    h = algebra("Z3")
    one = h.one
    assert h.delta_one() == {(a, a): c for a, c in one.items()}
    for i, j in product(range(h.dim), repeat=2):
        assert h.eps(h.mul_basis(i, j)) == h.eps({i: 1}) * h.eps({j: 1})


def test_groupoid_delta_one_is_not_one_tensor_one():
    h = algebra("discrete2")
    assert len(h.delta_one()) == 2


def test_sweedler_pair():
    h = sweedler_pair()
    ok(check_weak_hopf(h))
    assert h.dim == 8 and not is_cocommutative(h)
    assert h.delta_one() == {(0, 0): 1, (4, 4): 1}


def test_invalid_groupoids_are_rejected():
    with pytest.raises(InputError):
        groupoid_from_group([0, 1, 2], lambda a, b: (a * b) % 3)
    g = groupoid("Z2")
    comp = dict(g.compose)
    comp[("a", "a")] = "a"
    with pytest.raises(InputError):
        FiniteGroupoid(g.objects, g.arrows, g.source, g.target, g.identity, comp, g.inverse)
    with pytest.raises(InputError):
        FiniteGroupoid(g.objects, g.arrows, g.source, g.target, {}, g.compose, g.inverse)
