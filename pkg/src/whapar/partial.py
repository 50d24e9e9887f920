"""Partial actions, partial representations, partial modules, smash products
and covariant pairs over a finite-dimensional weak Hopf algebra.

A partial representation ``pi: H -> B`` is stored as the list of images of the
basis of ``H`` (sparse elements of ``B``). Every identity is checked on basis
tuples of ``H`` (and of the module algebra, where one is involved).
"""

import random
from dataclasses import dataclass, field
from itertools import product

from .errors import InconsistencyError, InputError, PreconditionError
from .exactlin import (
    ONE, ZERO, Fraction, Matrix, Subspace, as_fraction, sp_axpy, sp_clean,
    sp_from_dense, sp_scale, sp_to_dense,
)
from .kernels import SparseEchelon
from .report import Report
from .wha import (
    FinDimAlgebra, _projections, check_algebra, generated_subalgebra, lin,
    matrix_algebra, matrix_to_element,
)

__all__ = [
    "PartialAction", "PartialRep", "PartialModule", "SmashProduct", "CovariantPair",
    "check_partial_action", "check_partial_rep", "six_equiv_suite", "six_equiv_values",
    "search_pr6_counterexample", "globality_criterion", "hs_ht_suite",
    "endo_rep_from_action", "smash_product", "pi0", "phi0", "check_covariant_pair",
    "covariant_factorization", "check_partial_module", "module_from_rep",
    "module_from_action", "rep_from_module", "identity_rep", "epsilon_action",
    "regular_action", "target_action", "smash_factor_suite",
]


# -- partial actions ---------------------------------------------------------

class PartialAction:
    """Linear map ``H (x) A -> A``; ``act[(i, j)]`` is ``e_i . a_j``."""

    def __init__(self, h, a, act, name="action"):
        self.h = h
        self.a = a
        self.name = name
        t = [[{} for _ in range(a.dim)] for _ in range(h.dim)]
        for (i, j), v in act.items():
            if not (0 <= i < h.dim and 0 <= j < a.dim):
                raise InputError("%s: action index (%d, %d) out of range" % (name, i, j))
            for k in v:
                if not 0 <= k < a.dim:
                    raise InputError("%s: action target %d out of range" % (name, k))
            t[i][j] = sp_clean({k: as_fraction(c) for k, c in v.items()})
        self._t = t
        self.symmetric = None

    def table(self):
        return {(i, j): dict(self._t[i][j]) for i in range(self.h.dim) for j in range(self.a.dim)
                if self._t[i][j]}

    def act_basis(self, i, j):
        return self._t[i][j]

    def act(self, x, y):
        out = {}
        for i, c in x.items():
            ti = self._t[i]
            for j, d in y.items():
                if ti[j]:
                    sp_axpy(out, c * d, ti[j])
        return out

    def matrix(self, x):
        """Matrix of ``a -> x . a`` on ``A``."""
        n = self.a.dim
        return Matrix.from_sparse_columns([self.act(x, {j: ONE}) for j in range(n)], n)

    def with_entries(self, changes, name=None):
        """Copy with ``act[(i, j)]`` replaced by the given sparse vectors."""
        t = self.table()
        for k, v in changes.items():
            t[k] = v
        return PartialAction(self.h, self.a, t, name=name or self.name + "*")

    def __repr__(self):
        return "PartialAction(%s on %s)" % (self.h.name, self.a.name)


def epsilon_action(h, name="eps-action"):
    """``h . 1 = eps(h)`` on the ground field.

    A partial action only when ``eps(1) = 1``, that is for Hopf algebras;
    for weak ones the counit action lives on ``H_t`` (:func:`target_action`).
    """
    q = FinDimAlgebra(1, {(0, 0): {0: ONE}}, [ONE], labels=["1"], name="Q")
    act = {(i, 0): {0: h.coalg.counit[i]} for i in range(h.dim) if h.coalg.counit[i]}
    return PartialAction(h, q, act, name=name)


def regular_action(h, name="adjoint-action"):
    """The adjoint map ``h . a = h_1 a S(h_2)`` of ``H`` on itself.

    A global module algebra action when ``H`` is a Hopf algebra; for a genuinely
    weak ``H`` it usually is not one (use :func:`target_action`).
    """
    act = {}
    for i in range(h.dim):
        for j in range(h.dim):
            v = {}
            for (p, q), c in h.coalg.comult[i].items():
                sp_axpy(v, c, h.mul(h.mul({p: ONE}, {j: ONE}), h.S_basis(q)))
            if v:
                act[(i, j)] = v
    return PartialAction(h, h.alg, act, name=name)


def target_action(h, name="target-action"):
    """The global action ``h . z = eps_t(hz)`` of ``H`` on ``H_t``."""
    proj = _projections(h)
    gens = [sp_from_dense(z) for z in proj.Ht.basis]
    sub = generated_subalgebra(h.alg, gens, name="Ht")
    act = {}
    for i in range(h.dim):
        for j, z in enumerate(sub.vectors):
            c = sub.coords(h.eps_t(h.mul({i: ONE}, z)))
            if c is None:
                raise InconsistencyError("eps_t left H_t")
            if c:
                act[(i, j)] = c
    return PartialAction(h, sub.algebra, act, name=name)


def check_partial_action(pa):
    """PA1-PA3, the symmetry flag (PA4), and the two structural propositions.

    PA4 never counts as a failure; its truth value is stored in
    ``pa.symmetric`` and in ``report.info["symmetric"]``.
    """
    h, A = pa.h, pa.a
    rep = Report("partial-action:%s" % pa.name)
    nH, nA = h.dim, A.dim
    one = A.one
    hone = [pa.act({i: ONE}, one) for i in range(nH)]

    # PA1 h.(ab) = (h1.a)(h2.b)
    for i in range(nH):
        d = h.coalg.comult[i]
        for j, k in product(range(nA), repeat=2):
            lhs = pa.act({i: ONE}, A.mul_basis(j, k))
            rhs = {}
            for (p, q), c in d.items():
                sp_axpy(rhs, c, A.mul(pa.act_basis(p, j), pa.act_basis(q, k)))
            rep.check("PA1", lhs, rhs, (i, j, k))
    # PA2 1.a = a
    for j in range(nA):
        rep.check("PA2", pa.act(h.one, {j: ONE}), {j: ONE}, (j,))
    # PA3 and PA4
    pa4_fail = None
    for i, k in product(range(nH), repeat=2):
        d = h.coalg.comult[i]
        for j in range(nA):
            lhs = pa.act({i: ONE}, pa.act_basis(k, j))
            r3, r4 = {}, {}
            for (p, q), c in d.items():
                sp_axpy(r3, c, A.mul(hone[p], pa.act(h.mul_basis(q, k), {j: ONE})))
                sp_axpy(r4, c, A.mul(pa.act(h.mul_basis(p, k), {j: ONE}), hone[q]))
            rep.check("PA3", lhs, r3, (i, k, j))
            if pa4_fail is None and lhs != r4:
                pa4_fail = (i, k, j)
    pa.symmetric = pa4_fail is None
    rep.info["symmetric"] = pa.symmetric
    if pa4_fail is not None:
        rep.info["PA4_witness"] = list(pa4_fail)

    # (h.a)(k.b) = (1_1 h . a)(1_2 k . b)
    d1 = h.delta_one()
    for i, k in product(range(nH), repeat=2):
        for j, l in product(range(nA), repeat=2):
            lhs = A.mul(pa.act_basis(i, j), pa.act_basis(k, l))
            rhs = {}
            for (p, q), c in d1.items():
                sp_axpy(rhs, c, A.mul(pa.act(h.mul_basis(p, i), {j: ONE}),
                                      pa.act(h.mul_basis(q, k), {l: ONE})))
            rep.check("product-compat", lhs, rhs, (i, k, j, l))

    # w.(h.a) = wh.a for w in H_s (and H_t when symmetric)
    proj = _projections(h)
    families = [("Hs-compat", proj.Hs)]
    if pa.symmetric:
        families.append(("Ht-compat", proj.Ht))
    else:
        rep.skip("Ht-compat", "action is not symmetric")
    for axiom, space in families:
        for w in space.basis:
            ws = sp_from_dense(w)
            for i, j in product(range(nH), range(nA)):
                lhs = pa.act(ws, pa.act_basis(i, j))
                rhs = pa.act(h.mul(ws, {i: ONE}), {j: ONE})
                rep.check(axiom, lhs, rhs, (w, i, j))
    return rep


# -- partial representations -------------------------------------------------

class PartialRep:
    """A linear map ``pi: H -> target`` given by the images of basis elements."""

    def __init__(self, h, target, pi, name="pi"):
        self.h = h
        self.target = target
        self.name = name
        if isinstance(pi, Matrix):
            if pi.shape != (target.dim, h.dim):
                raise InputError("%s: matrix shape %s, expected %d x %d" % (name, pi.shape, target.dim, h.dim))
            images = [pi.col_sparse(i) for i in range(h.dim)]
        else:
            images = [sp_clean({k: as_fraction(c) for k, c in v.items()}) for v in pi]
            if len(images) != h.dim:
                raise InputError("%s: %d images for dimension %d" % (name, len(images), h.dim))
        for v in images:
            for k in v:
                if not 0 <= k < target.dim:
                    raise InputError("%s: target index %d out of range" % (name, k))
        self.images = images

    @property
    def matrix(self):
        return Matrix.from_sparse_columns(self.images, self.target.dim)

    def __call__(self, x):
        return lin(lambda i: self.images[i], x)

    def basis(self, i):
        return self.images[i]

    def __repr__(self):
        return "PartialRep(%s: %s -> %s)" % (self.name, self.h.name, self.target.name)


def identity_rep(h):
    return PartialRep(h, h.alg, [{i: ONE} for i in range(h.dim)], name="id")


class _RepCtx:
    """Cached images used by the partial representation identities."""

    def __init__(self, pr):
        self.pr = pr
        h = pr.h
        self.h = h
        self.B = pr.target
        self.P = pr.images
        self.PS = [pr(h.S_basis(i)) for i in range(h.dim)]

    def pi(self, x):
        return self.pr(x)

    def mul(self, *xs):
        return self.B.mul_many(*xs)


def _pr_axioms(pr, rep, which=("PR1", "PR2", "PR3", "PR4", "PR5", "PR6")):
    c = _RepCtx(pr)
    h, B, P, PS = c.h, c.B, c.P, c.PS
    n = h.dim
    if "PR1" in which:
        rep.check("PR1", c.pi(h.one), B.one, ("1",))
    for i, k in product(range(n), repeat=2):
        dk = h.coalg.comult[k]
        di = h.coalg.comult[i]
        if "PR2" in which:
            lhs, rhs = {}, {}
            for (p, q), x in dk.items():
                sp_axpy(lhs, x, c.mul(P[i], P[p], PS[q]))
                sp_axpy(rhs, x, B.mul(c.pi(h.mul_basis(i, p)), PS[q]))
            rep.check("PR2", lhs, rhs, (i, k))
        if "PR3" in which:
            lhs, rhs = {}, {}
            for (p, q), x in dk.items():
                sp_axpy(lhs, x, c.mul(P[i], PS[p], P[q]))
                sp_axpy(rhs, x, B.mul(c.pi(h.mul({i: ONE}, h.S_basis(p))), P[q]))
            rep.check("PR3", lhs, rhs, (i, k))
        if "PR4" in which:
            lhs, rhs = {}, {}
            for (p, q), x in di.items():
                sp_axpy(lhs, x, c.mul(P[p], PS[q], P[k]))
                sp_axpy(rhs, x, B.mul(P[p], c.pi(h.mul(h.S_basis(q), {k: ONE}))))
            rep.check("PR4", lhs, rhs, (i, k))
        if "PR5" in which:
            lhs, rhs = {}, {}
            for (p, q), x in di.items():
                sp_axpy(lhs, x, c.mul(PS[p], P[q], P[k]))
                sp_axpy(rhs, x, B.mul(PS[p], c.pi(h.mul_basis(q, k))))
            rep.check("PR5", lhs, rhs, (i, k))
    if "PR6" in which:
        for i in range(n):
            rhs = {}
            for (p, q, r), x in h.sweedler(i, 3).items():
                sp_axpy(rhs, x, c.mul(P[p], PS[q], P[r]))
            rep.check("PR6", P[i], rhs, (i,))
    return rep


def check_partial_rep(pr):
    """PR1-PR6 on all basis pairs."""
    return _pr_axioms(pr, Report("partial-rep:%s" % pr.name))


def six_equiv_values(pr):
    """Truth values of the equivalent conditions (i)-(iv), plus (v)-(vii) when
    the antipode is invertible."""
    c = _RepCtx(pr)
    h, B, P, PS = c.h, c.B, c.P, c.PS
    n = h.dim
    d1 = h.delta_one()
    vals = {}
    ok = True
    for i in range(n):
        rhs = {}
        for (p, q, r), x in h.sweedler(i, 3).items():
            sp_axpy(rhs, x, c.mul(P[p], PS[q], P[r]))
        if rhs != P[i]:
            ok = False
            break
    vals["i"] = ok
    v2, v3 = {}, {}
    for (a, b), x in d1.items():
        sp_axpy(v2, x, B.mul(P[a], PS[b]))
        sp_axpy(v3, x, B.mul(PS[a], P[b]))
    vals["ii"] = v2 == B.one
    vals["iii"] = v3 == B.one
    ok = True
    for i in range(n):
        rhs = {}
        for (p, q, r), x in h.sweedler(i, 3).items():
            sp_axpy(rhs, x, c.mul(PS[p], P[q], PS[r]))
        if rhs != PS[i]:
            ok = False
            break
    vals["iv"] = ok
    if h.has_invertible_antipode:
        PSi = [pr(h.Sinv_basis(i)) for i in range(n)]
        ok = True
        for i in range(n):
            rhs = {}
            for (p, q, r), x in h.sweedler(i, 3).items():
                sp_axpy(rhs, x, c.mul(P[r], PSi[q], P[p]))
            if rhs != P[i]:
                ok = False
                break
        vals["v"] = ok
        v6, v7 = {}, {}
        for (a, b), x in d1.items():
            sp_axpy(v6, x, B.mul(PSi[b], P[a]))
            sp_axpy(v7, x, B.mul(P[b], PSi[a]))
        vals["vi"] = v6 == B.one
        vals["vii"] = v7 == B.one
    return vals


def six_equiv_suite(pr):
    """For a map satisfying PR1-PR5, all listed conditions agree."""
    rep = Report("equivalences:%s" % pr.name)
    pre = _pr_axioms(pr, Report("pre"), which=("PR1", "PR2", "PR3", "PR4", "PR5"))
    if not pre.ok:
        rep.skip("equivalence", "PR1-PR5 fail (%s)" % ", ".join(pre.failed_axioms()))
        return rep
    vals = six_equiv_values(pr)
    rep.info["values"] = dict(vals)
    if not pr.h.has_invertible_antipode:
        rep.skip("v-vii", "antipode is not invertible")
    ref = vals["i"]
    for k, v in vals.items():
        rep.check("equivalence", v, ref, (k,))
    return rep


def search_pr6_counterexample(h, seed=0, samples=200, exhaustive_limit=6):
    """Look for a map satisfying PR1-PR5 but not PR6.

    Scalar maps with values in {-1, 0, 1} are enumerated exhaustively when
    ``dim H <= exhaustive_limit`` and sampled otherwise; 2 x 2 matrix maps with
    entries in {-1, 0, 1} are always sampled. Every PR1-PR5 candidate is fed
    through ``six_equiv_suite``.
    """
    rng = random.Random(seed)
    rep = Report("pr6-search:%s" % h.name)
    rep.info["seed"] = seed
    n = h.dim
    q = FinDimAlgebra(1, {(0, 0): {0: ONE}}, [ONE], labels=["1"], name="Q")
    m2 = matrix_algebra(2)
    vals = (Fraction(-1), ZERO, ONE)

    def scalar_candidates():
        if n <= exhaustive_limit:
            for t in product(vals, repeat=n):
                yield t
        else:
            for _ in range(samples):
                yield tuple(rng.choice(vals) for _ in range(n))

    tried = passing = violating = 0
    for t in scalar_candidates():
        pr = PartialRep(h, q, [{0: x} for x in t], name="scan")
        tried += 1
        if pr(h.one) != q.one:
            continue
        pre = _pr_axioms(pr, Report("pre"), which=("PR2", "PR3", "PR4", "PR5"))
        if not pre.ok:
            continue
        passing += 1
        sub = six_equiv_suite(pr)
        if not sub.info.get("values", {}).get("i", True):
            violating += 1
        for f in sub.failures:
            rep.fail("equivalence", (t,) + f.witness, f.lhs, f.rhs)
        rep.touch("equivalence")
    for _ in range(samples):
        imgs = [{k: rng.choice(vals) for k in range(4)} for _ in range(n)]
        pr = PartialRep(h, m2, imgs, name="scan2")
        tried += 1
        if pr(h.one) != m2.one:
            continue
        pre = _pr_axioms(pr, Report("pre"), which=("PR2", "PR3", "PR4", "PR5"))
        if not pre.ok:
            continue
        passing += 1
        sub = six_equiv_suite(pr)
        if not sub.info.get("values", {}).get("i", True):
            violating += 1
        for f in sub.failures:
            rep.fail("equivalence", f.witness, f.lhs, f.rhs)
        rep.touch("equivalence")
    rep.info.update(tried=tried, pr1_to_pr5=passing, pr6_violations=violating)
    rep.info["result"] = ("counterexample found" if violating
                          else "no counterexample found at this dimension")
    return rep


def globality_criterion(pr):
    """The three equivalent characterisations of a global representation."""
    c = _RepCtx(pr)
    h, B, P, PS = c.h, c.B, c.P, c.PS
    n = h.dim
    rep = Report("globality:%s" % pr.name)
    t_ok = s_ok = True
    for i in range(n):
        a, b = {}, {}
        for (p, q), x in h.coalg.comult[i].items():
            sp_axpy(a, x, B.mul(P[p], PS[q]))
            sp_axpy(b, x, B.mul(PS[p], P[q]))
        if a != c.pi(h.eps_t({i: ONE})):
            t_ok = False
        if b != c.pi(h.eps_s({i: ONE})):
            s_ok = False
    mult = all(B.mul(P[i], P[k]) == c.pi(h.mul_basis(i, k)) for i, k in product(range(n), repeat=2))
    rep.info.update(eps_t=t_ok, eps_s=s_ok, multiplicative=mult, **{"global": mult})
    rep.check("equivalence", t_ok, mult, ("eps_t",))
    rep.check("equivalence", s_ok, mult, ("eps_s",))
    return rep


def hs_ht_suite(pr):
    """pi behaves multiplicatively against H_s and H_t on either side."""
    c = _RepCtx(pr)
    h, B, P = c.h, c.B, c.P
    proj = _projections(h)
    rep = Report("Hs-Ht:%s" % pr.name)
    for w in proj.Hs.basis:
        ws = sp_from_dense(w)
        pw = c.pi(ws)
        for i in range(h.dim):
            rep.check("wh", B.mul(pw, P[i]), c.pi(h.mul(ws, {i: ONE})), (w, i))
            rep.check("hw", B.mul(P[i], pw), c.pi(h.mul({i: ONE}, ws)), (w, i))
    for z in proj.Ht.basis:
        zs = sp_from_dense(z)
        pz = c.pi(zs)
        for i in range(h.dim):
            rep.check("hz", B.mul(P[i], pz), c.pi(h.mul({i: ONE}, zs)), (z, i))
            rep.check("zh", B.mul(pz, P[i]), c.pi(h.mul(zs, {i: ONE})), (z, i))
    return rep


def endo_rep_from_action(pa):
    """``h -> (a -> h . a)`` into ``End(A)`` for a symmetric partial action."""
    if pa.symmetric is None:
        check_partial_action(pa)
    if not pa.symmetric:
        raise PreconditionError("%s is not symmetric" % pa.name)
    end = matrix_algebra(pa.a.dim, name="End(%s)" % pa.a.name)
    imgs = [matrix_to_element(pa.matrix({i: ONE})) for i in range(pa.h.dim)]
    pr = PartialRep(pa.h, end, imgs, name="endo(%s)" % pa.name)
    rep = check_partial_rep(pr)
    if not rep.ok:
        f = rep.first_failure
        raise InconsistencyError("endomorphism representation fails %s at %s" % (f.axiom, f.witness))
    return pr


# -- partial modules ---------------------------------------------------------

class PartialModule:
    """Vector space of dimension ``dim`` with ``act[(i, m)] = e_i . m_m``."""

    def __init__(self, h, dim, act, name="module"):
        self.h = h
        self.dim = dim
        self.name = name
        t = [[{} for _ in range(dim)] for _ in range(h.dim)]
        for (i, j), v in act.items():
            if not (0 <= i < h.dim and 0 <= j < dim):
                raise InputError("%s: action index (%d, %d) out of range" % (name, i, j))
            t[i][j] = sp_clean({k: as_fraction(c) for k, c in v.items()})
        self._t = t

    def table(self):
        return {(i, j): dict(self._t[i][j]) for i in range(self.h.dim) for j in range(self.dim)
                if self._t[i][j]}

    def act(self, x, m):
        out = {}
        for i, c in x.items():
            ti = self._t[i]
            for j, d in m.items():
                if ti[j]:
                    sp_axpy(out, c * d, ti[j])
        return out


def module_from_action(pa):
    return PartialModule(pa.h, pa.a.dim, pa.table(), name="mod(%s)" % pa.name)


def module_from_rep(pr):
    """The target of ``pr`` acted on by ``h . m = pi(h) m``."""
    B = pr.target
    act = {}
    for i in range(pr.h.dim):
        for j in range(B.dim):
            v = B.mul(pr.images[i], {j: ONE})
            if v:
                act[(i, j)] = v
    return PartialModule(pr.h, B.dim, act, name="mod(%s)" % pr.name)


def rep_from_module(pm):
    """``pi_.(h) = (m -> h . m)`` into ``End(M)``."""
    n = pm.dim
    end = matrix_algebra(n, name="End(%s)" % pm.name)
    imgs = []
    for i in range(pm.h.dim):
        cols = [pm.act({i: ONE}, {j: ONE}) for j in range(n)]
        imgs.append(matrix_to_element(Matrix.from_sparse_columns(cols, n)))
    return PartialRep(pm.h, end, imgs, name="rep(%s)" % pm.name)


def check_partial_module(pm):
    """PM1-PM6 on basis pairs, cross-checked against PR1-PR6 of the induced map."""
    h = pm.h
    rep = Report("partial-module:%s" % pm.name)
    n = h.dim
    S = h.S_basis
    A = pm.act
    for m in range(pm.dim):
        rep.check("PM1", A(h.one, {m: ONE}), {m: ONE}, (m,))
    for i, k in product(range(n), repeat=2):
        di, dk = h.coalg.comult[i], h.coalg.comult[k]
        ei, ek = {i: ONE}, {k: ONE}
        for m in range(pm.dim):
            em = {m: ONE}
            l2, r2, l3, r3, l4, r4, l5, r5 = ({} for _ in range(8))
            for (p, q), x in dk.items():
                ep = {p: ONE}
                inner = A(S(q), em)
                sp_axpy(l2, x, A(ei, A(ep, inner)))
                sp_axpy(r2, x, A(h.mul(ei, ep), inner))
                inner = A({q: ONE}, em)
                sp_axpy(l3, x, A(ei, A(S(p), inner)))
                sp_axpy(r3, x, A(h.mul(ei, S(p)), inner))
            km = A(ek, em)
            for (p, q), x in di.items():
                ep = {p: ONE}
                sp_axpy(l4, x, A(ep, A(S(q), km)))
                sp_axpy(r4, x, A(ep, A(h.mul(S(q), ek), em)))
                sp_axpy(l5, x, A(S(p), A({q: ONE}, km)))
                sp_axpy(r5, x, A(S(p), A(h.mul({q: ONE}, ek), em)))
            rep.check("PM2", l2, r2, (i, k, m))
            rep.check("PM3", l3, r3, (i, k, m))
            rep.check("PM4", l4, r4, (i, k, m))
            rep.check("PM5", l5, r5, (i, k, m))
    for i in range(n):
        for m in range(pm.dim):
            em = {m: ONE}
            lhs = {}
            for (p, q, r), x in h.sweedler(i, 3).items():
                sp_axpy(lhs, x, A({p: ONE}, A(S(q), A({r: ONE}, em))))
            rep.check("PM6", lhs, A({i: ONE}, em), (i, m))
    pr_ok = check_partial_rep(rep_from_module(pm)).ok
    rep.info["induced_rep_ok"] = pr_ok
    rep.check("module<->rep", pr_ok, rep.ok, ("induced",))
    return rep


# -- smash products ----------------------------------------------------------

class SmashProduct:
    """``A (x)_{H_t} H`` for a partial action, with its partial smash subalgebra.

    Ambient basis ``a_i # e_j`` has index ``i * dim H + j``. The carrier is the
    quotient by ``(a <| z) # h - a # zh`` with ``a <| z = a (S_R^-1(z) . 1_A)``;
    carrier coordinates are the ambient indices that are not pivots of the
    relation echelon form.
    """

    def __init__(self, pa):
        self.pa = pa
        h, A = pa.h, pa.a
        self.h, self.A = h, A
        self.nH, self.nA = h.dim, A.dim
        proj = _projections(h)
        self.proj = proj
        self._sr_inv = self._build_sr_inverse(proj)
        ech = SparseEchelon()
        self.relations = []
        for z in proj.Ht.basis:
            zs = sp_from_dense(z)
            w = self._sr_inv(zs)
            one_act = pa.act(w, A.one)
            for a in range(A.dim):
                ar = A.mul({a: ONE}, one_act)
                for j in range(h.dim):
                    r = self.tensor(ar, {j: ONE})
                    sp_axpy(r, -ONE, self.tensor({a: ONE}, h.mul(zs, {j: ONE})))
                    r = sp_clean(r)
                    if r:
                        self.relations.append(r)
                        ech.add(r)
        self.echelon = ech
        n = self.nA * self.nH
        self.keys = [k for k in range(n) if k not in ech]
        self.pos = {k: i for i, k in enumerate(self.keys)}
        self.dim = len(self.keys)
        table = {}
        for x, y in product(range(self.dim), repeat=2):
            v = self.project(self.amb_mul({self.keys[x]: ONE}, {self.keys[y]: ONE}))
            if v:
                table[(x, y)] = v
        labels = ["%s#%s" % (A.labels[k // self.nH], h.labels[k % self.nH]) for k in self.keys]
        self.algebra = FinDimAlgebra(self.dim, table, self.elem(A.one, h.one), labels=labels,
                                     name="%s#%s" % (A.name, h.name))
        self.wd_report = self._well_defined()
        if not self.wd_report.ok:
            f = self.wd_report.first_failure
            raise InconsistencyError("smash multiplication not well defined (%s at %s)" % (f.axiom, f.witness))
        gens = [self.under({a: ONE}, {j: ONE}) for a in range(A.dim) for j in range(h.dim)]
        self.unit = self.under(A.one, h.one)
        self.partial = generated_subalgebra(self.algebra, gens, unit=self.unit, name="psmash")
        self.generators_rank = Subspace(self.dim, [sp_to_dense(g, self.dim) for g in gens]).dim

    def _build_sr_inverse(self, proj):
        h = self.h
        ws = [sp_from_dense(w) for w in proj.Hs.basis]
        imgs = [sp_to_dense(h.S(w), h.dim) for w in ws]
        try:
            space = Subspace(h.dim, imgs, keep_basis=True)
        except ValueError as exc:
            raise InconsistencyError("S restricted to H_s is not injective") from exc

        def inv(z):
            c = space.coordinates(sp_to_dense(z, h.dim))
            if c is None:
                raise InconsistencyError("element outside S(H_s)")
            out = {}
            for cj, w in zip(c, ws):
                sp_axpy(out, cj, w)
            return out
        return inv

    def sr_inverse(self, z):
        return self._sr_inv(z)

    def tensor(self, a, x):
        nH = self.nH
        return {i * nH + j: c * d for i, c in a.items() for j, d in x.items()}

    def amb_mul(self, u, v):
        """``(a # h)(b # g) = a (h_1 . b) # h_2 g`` on ambient vectors."""
        h, A, pa, nH = self.h, self.A, self.pa, self.nH
        out = {}
        for k1, c1 in u.items():
            a, hi = divmod(k1, nH)
            d = h.coalg.comult[hi]
            for k2, c2 in v.items():
                b, g = divmod(k2, nH)
                for (p, q), x in d.items():
                    left = A.mul({a: ONE}, pa.act_basis(p, b))
                    if left:
                        sp_axpy(out, c1 * c2 * x, self.tensor(left, h.mul_basis(q, g)))
        return out

    def project(self, v):
        r = self.echelon.reduce(v)
        return {self.pos[k]: c for k, c in r.items()}

    def lift(self, x):
        return {self.keys[i]: c for i, c in x.items()}

    def elem(self, a, x):
        """Class of ``a # x``."""
        return self.project(self.tensor(a, x))

    def under(self, a, x):
        """Class of ``(a # x)(1 # 1) = a (x_1 . 1) # x_2``."""
        h, A, pa = self.h, self.A, self.pa
        out = {}
        for i, c in x.items():
            for (p, q), d in h.coalg.comult[i].items():
                sp_axpy(out, c * d, self.tensor(A.mul(a, pa.act({p: ONE}, A.one)), {q: ONE}))
        return self.project(out)

    def _well_defined(self):
        rep = Report("smash-well-defined")
        n = self.nA * self.nH
        for r_i, r in enumerate(self.relations):
            for k in range(n):
                e = {k: ONE}
                rep.check("right-ideal", self.project(self.amb_mul(r, e)), {}, (r_i, k))
                rep.check("left-ideal", self.project(self.amb_mul(e, r)), {}, (r_i, k))
        return rep

    def in_partial(self, x):
        return self.partial.contains(x)

    def partial_coords(self, x):
        c = self.partial.coords(x)
        if c is None:
            raise InconsistencyError("element is outside the partial smash product")
        return c


def smash_product(pa):
    """Smash product of a symmetric partial action (validated first)."""
    if pa.symmetric is None:
        rep = check_partial_action(pa)
        if not rep.ok:
            raise PreconditionError("%s is not a partial action (%s)" % (pa.name, ", ".join(rep.failed_axioms())))
    if not pa.symmetric:
        raise PreconditionError("%s is not symmetric" % pa.name)
    return SmashProduct(pa)


def smash_factor_suite(sp):
    """``a #_ h = (a #_ 1)(1 #_ h)`` and the embedding ``a -> a #_ 1``."""
    rep = Report("smash-factor")
    A, h, C = sp.A, sp.h, sp.algebra
    for a, j in product(range(A.dim), range(h.dim)):
        lhs = sp.under({a: ONE}, {j: ONE})
        rhs = C.mul(sp.under({a: ONE}, h.one), sp.under(A.one, {j: ONE}))
        rep.check("factor", lhs, rhs, (a, j))
    phi = [sp.under({a: ONE}, h.one) for a in range(A.dim)]
    for a, b in product(range(A.dim), repeat=2):
        rep.check("embed-mult", C.mul(phi[a], phi[b]), lin(lambda k: phi[k], A.mul_basis(a, b)), (a, b))
    rep.check("embed-unit", lin(lambda k: phi[k], A.one), sp.unit, ("1",))
    rank = Subspace(C.dim, [sp_to_dense(v, C.dim) for v in phi]).dim
    rep.check("embed-injective", rank, A.dim, ("rank",))
    unit_rep = check_algebra(sp.partial.algebra)
    for f in unit_rep.failures:
        rep.fail("partial-smash-unital", f.witness, f.lhs, f.rhs)
    rep.touch("partial-smash-unital")
    return rep


def pi0(sp):
    """``h -> 1 #_ h`` into the partial smash product (validated)."""
    imgs = [sp.partial_coords(sp.under(sp.A.one, {i: ONE})) for i in range(sp.nH)]
    pr = PartialRep(sp.h, sp.partial.algebra, imgs, name="pi0")
    rep = check_partial_rep(pr)
    if not rep.ok:
        f = rep.first_failure
        raise InconsistencyError("pi0 fails %s at %s" % (f.axiom, f.witness))
    return pr


def phi0(sp):
    """``a -> a #_ 1`` as a matrix into partial smash coordinates."""
    cols = [sp.partial_coords(sp.under({a: ONE}, sp.h.one)) for a in range(sp.nA)]
    return Matrix.from_sparse_columns(cols, sp.partial.dim)


# -- covariant pairs ---------------------------------------------------------

@dataclass
class CovariantPair:
    pa: PartialAction
    phi: Matrix
    pi: PartialRep
    name: str = "cp"

    def phi_of(self, a):
        return self.phi.apply_sparse(a)


def check_covariant_pair(cp):
    """CP1, CP2 and the covariant-pair consequences for ``pi``.

    ``CP0`` records that ``phi`` is a unital algebra morphism, which the
    definition presupposes.
    """
    pa, pr = cp.pa, cp.pi
    h, A, B = pa.h, pa.a, pr.target
    rep = Report("covariant-pair:%s" % cp.name)
    if cp.phi.shape != (B.dim, A.dim):
        raise InputError("phi has shape %s, expected %d x %d" % (cp.phi.shape, B.dim, A.dim))
    phi = [cp.phi_of({a: ONE}) for a in range(A.dim)]
    f = lambda x: lin(lambda k: phi[k], x)  # noqa: E731
    for a, b in product(range(A.dim), repeat=2):
        rep.check("CP0", B.mul(phi[a], phi[b]), f(A.mul_basis(a, b)), (a, b))
    rep.check("CP0", f(A.one), B.one, ("1",))
    c = _RepCtx(pr)
    P, PS = c.P, c.PS
    for i in range(h.dim):
        d = h.coalg.comult[i]
        for a in range(A.dim):
            lhs = f(pa.act_basis(i, a))
            rhs = {}
            l2, r2 = {}, {}
            for (p, q), x in d.items():
                sp_axpy(rhs, x, B.mul_many(P[p], phi[a], PS[q]))
                sp_axpy(l2, x, B.mul_many(phi[a], PS[p], P[q]))
                sp_axpy(r2, x, B.mul_many(PS[p], P[q], phi[a]))
            rep.check("CP1", lhs, rhs, (i, a))
            rep.check("CP2", l2, r2, (i, a))
    for i in range(h.dim):
        r1, r2 = {}, {}
        for (p, q, r), x in h.sweedler(i, 3).items():
            sp_axpy(r1, x, B.mul_many(P[p], PS[q], P[r]))
            sp_axpy(r2, x, B.mul_many(PS[p], P[q], PS[r]))
        rep.check("pi-sandwich", P[i], r1, (i,))
        rep.check("piS-sandwich", PS[i], r2, (i,))
    return rep


def covariant_factorization(cp, sp):
    """The morphism ``a #_ h -> phi(a) pi(h)`` on the partial smash product.

    Returns ``(Phi, report)`` where ``Phi`` is a matrix from partial smash
    coordinates to the target of ``cp.pi``.
    """
    pa, pr = cp.pa, cp.pi
    B = pr.target
    rep = Report("covariant-factorization:%s" % cp.name)
    phi = [cp.phi_of({a: ONE}) for a in range(sp.nA)]

    def tilde(v):
        out = {}
        for k, c in v.items():
            a, j = divmod(k, sp.nH)
            sp_axpy(out, c, B.mul(phi[a], pr.images[j]))
        return out

    for r_i, r in enumerate(sp.relations):
        rep.check("balanced", tilde(r), {}, (r_i,))
    if not rep.ok:
        f = rep.first_failure
        raise InconsistencyError("phi(a) pi(h) is not H_t-balanced at relation %s" % (f.witness,))
    full = [tilde(sp.lift({x: ONE})) for x in range(sp.dim)]
    cols = [lin(lambda x: full[x], v) for v in sp.partial.vectors]
    Phi = Matrix.from_sparse_columns(cols, B.dim)
    P = sp.partial.algebra
    for x, y in product(range(P.dim), repeat=2):
        rep.check("multiplicative", B.mul(cols[x], cols[y]), Phi.apply_sparse(P.mul_basis(x, y)), (x, y))
    rep.check("unital", Phi.apply_sparse(P.one), B.one, ("1",))
    p0 = pi0(sp)
    f0 = phi0(sp)
    for i in range(sp.nH):
        rep.check("Phi.pi0=pi", Phi.apply_sparse(p0.images[i]), pr.images[i], (i,))
    for a in range(sp.nA):
        rep.check("Phi.phi0=phi", Phi.apply_sparse(f0.col_sparse(a)), phi[a], (a,))
    return Phi, rep
