"""Quantum inverse semigroup structure on ``H_par`` for a cocommutative base.

``Delta([h1]...[hn]) = [h1_(1)]...[hn_(1)] (x) [h1_(2)]...[hn_(2)]`` on the
plain (unbalanced) tensor square of the carrier, and the pseudo-antipode
``S([h1]...[hn]) = [S(hn)]...[S(h1)]``.
"""

from dataclasses import dataclass, field
from itertools import product

from .algebroid import anti_extension, apply_at, elem_value, pair_mul, tensor_elem, word_value
from .errors import InconsistencyError, PreconditionError
from .exactlin import ONE, Matrix, sp_axpy
from .hpar import HparAlgebra, relation_instances
from .partial import PartialRep, check_partial_rep
from .report import Report
from .wha import generated_subalgebra, is_cocommutative

__all__ = ["QisgData", "build_qisg", "check_qisg", "delta_partial_rep"]


class _PairAlgebra:
    """``C (x) C`` with factorwise product; just enough for span closures."""

    def __init__(self, C):
        self.C = C
        self.dim = C.dim * C.dim
        self.one = tensor_elem(C.one, C.one, N=C.dim)
        self.name = "%s(x)%s" % (C.name, C.name)

    def mul(self, x, y):
        return pair_mul(self.C, x, y)


@dataclass
class QisgData:
    hp: HparAlgebra
    delta: list
    pseudo_antipode: Matrix
    letters: list
    report: Report
    info: dict = field(default_factory=dict)

    def D(self, x):
        out = {}
        for i, c in x.items():
            sp_axpy(out, c, self.delta[i])
        return out

    def convolve(self, *maps):
        """Matrix of ``f1 * f2 * ... * fk`` (``k`` = 2 or 3) via iterated ``Delta``."""
        C, N = self.hp.carrier, self.hp.dim
        cols = []
        for x in range(N):
            v = self.delta[x]
            k = 2
            while k < len(maps):
                v = apply_at(v, N, k, 0, self.delta, 2)
                k += 1
            out = {}
            for key, c in v.items():
                idx = []
                for _ in range(k):
                    key, r = divmod(key, N)
                    idx.append(r)
                idx.reverse()
                sp_axpy(out, c, C.mul_many(*(f.col_sparse(i) for f, i in zip(maps, idx))))
            cols.append(out)
        return Matrix.from_sparse_columns(cols, N)


def build_qisg(hp):
    h = hp.base
    if not is_cocommutative(h):
        raise PreconditionError("not cocommutative")
    if not hp.certified:
        raise PreconditionError("H_par build is not certified")
    C, N = hp.carrier, hp.dim
    rep = Report("qisg-build:%s" % h.name)
    letters = []
    for i in range(h.dim):
        v = {}
        for (p, q), c in h.coalg.comult[i].items():
            sp_axpy(v, c, tensor_elem(hp.br({p: ONE}), hp.br({q: ONE}), N=N))
        letters.append(v)
    P = _PairAlgebra(C)
    # Delta need not preserve the unit: it is a unital algebra map into the
    # corner u (C (x) C) u with u = [1_(1)] (x) [1_(2)], so the empty word goes
    # to u, and killing the generators of the defining ideal is exactly
    # well-definedness
    u = {}
    for i, c in h.one.items():
        sp_axpy(u, c, letters[i])
    rep.check("Delta(1) idempotent", P.mul(u, u), u, ())
    for i, v in enumerate(letters):
        rep.check("Delta(1) unit on letters", P.mul(u, v), v, (i, "left"))
        rep.check("Delta(1) unit on letters", P.mul(v, u), v, (i, "right"))
    for fam, wit, r in relation_instances(h):
        rep.check("Delta well-defined", elem_value(P.mul, u, letters, r), {}, (fam,) + tuple(wit))
    if not rep.ok:
        f = rep.first_failure
        raise InconsistencyError("Delta is not well defined: %s at %s" % (f.axiom, f.witness))
    delta = [word_value(P.mul, u, letters, w) for w in hp.words]
    S, srep = anti_extension(hp, [hp.br(h.S_basis(i)) for i in range(h.dim)], "S")
    rep.merge(srep, prefix="S")
    return QisgData(hp, delta, S, letters, rep, info={"dim": N, "unit_preserving": u == P.one})


def check_qisg(q):
    """QISG2, QISG3 (i) and (ii), QISG4 and unitality on carrier basis elements."""
    hp, C, N = q.hp, q.hp.carrier, q.hp.dim
    rep = Report("qisg:%s" % hp.base.name)
    S = q.pseudo_antipode
    for x, y in product(range(N), repeat=2):
        rep.check("QISG2 multiplicative", q.D(C.mul_basis(x, y)), pair_mul(C, q.delta[x], q.delta[y]), (x, y))
    for x in range(N):
        rep.check("QISG2 coassociative", apply_at(q.delta[x], N, 2, 0, q.delta, 2),
                  apply_at(q.delta[x], N, 2, 1, q.delta, 2), (x,))
    for x, y in product(range(N), repeat=2):
        rep.check("QISG3(i)", S.apply_sparse(C.mul_basis(x, y)), C.mul(S.col_sparse(y), S.col_sparse(x)), (x, y))
    I = Matrix.identity(N)
    rep.check("QISG3(ii) I*S*I=I", q.convolve(I, S, I), I, ())
    rep.check("QISG3(ii) S*I*S=S", q.convolve(S, I, S), S, ())
    left, right = q.convolve(I, S), q.convolve(S, I)
    for x, y in product(range(N), repeat=2):
        u, v = left.col_sparse(x), right.col_sparse(y)
        rep.check("QISG4", C.mul(u, v), C.mul(v, u), (x, y))
    rep.check("unital S(1)=1", S.apply_sparse(C.one), C.one, ())
    rep.info.update(q.info)
    return rep


def delta_partial_rep(q):
    """``h -> [h_1] (x) [h_2]`` as a partial representation into the algebra it generates.

    The generated subalgebra is unital with respect to ``delta(1)``, which
    differs from ``1 (x) 1`` as soon as ``Delta(1_H) != 1 (x) 1``.
    """
    h = q.hp.base
    P = _PairAlgebra(q.hp.carrier)
    one = {}
    for i, c in h.one.items():
        sp_axpy(one, c, q.letters[i])
    sub = generated_subalgebra(P, q.letters, unit=one, name="delta(H)")
    images = []
    for i, v in enumerate(q.letters):
        c = sub.coords(v)
        if c is None:
            raise InconsistencyError("delta(%d) lies outside the generated subalgebra" % i)
        images.append(c)
    pr = PartialRep(h, sub.algebra, images, name="delta")
    return pr, check_partial_rep(pr)
