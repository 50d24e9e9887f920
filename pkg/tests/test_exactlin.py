from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from whapar.exactlin import (Matrix, Subspace, as_fraction, fmt_q, image, kernel_basis, kron, rank, rref,
                             solve_membership, sp_add, sp_from_dense, sp_to_dense, tensor_vec, vec)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(rationals, min_size=r * c, max_size=r * c).map(lambda e: Matrix(r, c, e))))


def square(n):
    return st.lists(rationals, min_size=n * n, max_size=n * n).map(lambda e: Matrix(n, n, e))


@given(matrices())
def test_rref_idempotent(m):
    r, piv = rref(m)
    r2, piv2 = rref(r)
    assert r2 == r and piv2 == piv


@given(matrices())
def test_rank_nullity(m):
    assert rank(m) + kernel_basis(m).dim == m.cols


@given(matrices())
def test_kernel_vectors_are_annihilated(m):
    for v in kernel_basis(m).basis:
        assert not any(m.apply(v))


@given(matrices())
def test_rref_pivots_increase_and_are_normalised(m):
    r, piv = rref(m)
    assert piv == sorted(set(piv))
    for i, p in enumerate(piv):
        assert r[i, p] == 1
        assert all(r[k, p] == 0 for k in range(m.rows) if k != i)


@given(matrices(), st.integers(0, 10))
def test_fractions_reduced(m, _):
    r, _ = rref(m)
    for x in r.entries:
        assert isinstance(x, Fraction) and x.denominator >= 1


@given(square(2), square(2), square(3))
def test_kron_associative(a, b, c):
    assert kron(kron(a, b), c) == kron(a, kron(b, c))


@given(square(2), square(2), square(3), rationals)
def test_kron_bilinear(a, b, c, s):
    assert kron(a + b, c) == kron(a, c) + kron(b, c)
    assert kron(c, a * s) == kron(c, a) * s


@given(square(2), square(3), st.lists(rationals, min_size=2, max_size=2), st.lists(rationals, min_size=3, max_size=3))
def test_kron_index_convention(a, b, v, w):
    v, w = vec(v), vec(w)
    assert kron(a, b).apply(tensor_vec(v, w)) == tensor_vec(a.apply(v), b.apply(w))


@given(square(3), square(3))
def test_matmul_is_composition(a, b):
    v = vec([1, -2, 3])
    assert (a @ b).apply(v) == a.apply(b.apply(v))


def test_inverse():
    m = Matrix.from_rows([[2, 1], [1, 1]])
    assert m @ m.inverse() == Matrix.identity(2)
    with pytest.raises(Exception):
        Matrix.from_rows([[1, 2], [2, 4]]).inverse()


def test_subspace_membership_and_coordinates():
    s = Subspace(3, [vec([1, 1, 0]), vec([0, 1, 1])])
    assert s.dim == 2
    assert vec([1, 2, 1]) in s
    assert vec([1, 0, 0]) not in s
    c = solve_membership(s, [2, 3, 1])
    assert s.vector(c) == vec([2, 3, 1])
    assert solve_membership(s, [1, 0, 0]) is None


def test_image_and_kernel_of_projection():
    p = Matrix.from_rows([[1, 0], [0, 0]])
    assert image(p).dim == 1 and kernel_basis(p).dim == 1


def test_scalars_are_exact():
    assert as_fraction("3/6") == Fraction(1, 2)
    with pytest.raises(TypeError):
        as_fraction(0.5)
    assert fmt_q(Fraction(-4, 6)) == "-2/3" and fmt_q(3) == "3"


@given(st.lists(rationals, min_size=1, max_size=6))
def test_sparse_dense_roundtrip(v):
    v = vec(v)
    assert sp_to_dense(sp_from_dense(v), len(v)) == v
    assert sp_add(sp_from_dense(v), {k: -c for k, c in sp_from_dense(v).items()}) == {}
