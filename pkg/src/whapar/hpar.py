"""The universal algebra ``H_par`` of partial representations.

``H_par = T(H) / I`` where ``I`` is generated by the six defining relation
families, instantiated on basis elements (they are multilinear). Words over
the basis of ``H`` are tuples of basis indices.

The quotient is computed by degree-bounded rewriting: relation instances and
overlap ambiguities are normalised in increasing degree under the
degree-lexicographic order, each non-zero remainder becoming a rewrite rule
``lead -> tail``. Normal words (those avoiding every lead) always span the
quotient. They are a basis when either

* no ambiguity is left pending (diamond lemma), or
* the algebra built on normal words is associative and unital, the bracket
  is a partial representation into it, and the brackets generate it.

The second test is the closure certificate: it gives a surjection from
``H_par`` onto the candidate, which together with the spanning property forces
an isomorphism. A build that passes either test is ``certified``.
"""

import heapq
import sys
from dataclasses import dataclass, field
from itertools import product

from .errors import InconsistencyError, NotStabilizedError, PreconditionError
from .exactlin import ONE, Matrix, Subspace, sp_axpy, sp_clean, sp_from_dense, sp_to_dense
from .kernels import SparseEchelon, WordRewriter
from .partial import (
    CovariantPair, PartialAction, PartialRep, check_partial_action, check_partial_rep,
    covariant_factorization, endo_rep_from_action, pi0, smash_product,
)
from .report import Report
from .wha import FinDimAlgebra, check_algebra, generated_subalgebra, is_cocommutative, lin

__all__ = [
    "HparAlgebra", "HparPresentation", "hpar_presentation", "EElements", "build_hpar", "relation_instances", "bracket_rep_check",
    "universal_factorization", "e_calculus", "propee_suite", "apar_action",
    "smash_iso_check", "birget_rhodes_oracle", "algebra_object_roundtrip",
    "DEFAULT_MAX_DEGREE",
]

DEFAULT_MAX_DEGREE = 6

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


def _wkey(w):
    return (len(w), w)


def word_tensor(*elems):
    """Expansion of ``x1 (x) ... (x) xn`` (sparse elements of H) over words."""
    out = {(): ONE}
    for x in elems:
        nxt = {}
        for w, c in out.items():
            for i, d in x.items():
                k = w + (i,)
                nxt[k] = nxt.get(k, 0) + c * d
        out = nxt
    return sp_clean(out)


def _wadd(out, c, v):
    for w, x in v.items():
        y = out.get(w, 0) + c * x
        if y:
            out[w] = y
        else:
            out.pop(w, None)


def relation_instances(h):
    """The relation families on basis elements: list of ``(family, witness, element)``."""
    out = []
    e = lambda i: {i: ONE}  # noqa: E731
    S = h.S_basis
    r1 = word_tensor(h.one)
    _wadd(r1, -ONE, {(): ONE})
    out.append(("wHpar1", (), r1))
    n = h.dim
    for i, k in product(range(n), repeat=2):
        r2, r3, r4, r5 = {}, {}, {}, {}
        for (p, q), c in h.coalg.comult[k].items():
            _wadd(r2, c, word_tensor(e(i), e(p), S(q)))
            _wadd(r2, -c, word_tensor(h.mul_basis(i, p), S(q)))
            _wadd(r3, c, word_tensor(e(i), S(p), e(q)))
            _wadd(r3, -c, word_tensor(h.mul(e(i), S(p)), e(q)))
        for (p, q), c in h.coalg.comult[i].items():
            _wadd(r4, c, word_tensor(e(p), S(q), e(k)))
            _wadd(r4, -c, word_tensor(e(p), h.mul(S(q), e(k))))
            _wadd(r5, c, word_tensor(S(p), e(q), e(k)))
            _wadd(r5, -c, word_tensor(S(p), h.mul_basis(q, k)))
        for name, r in (("wHpar2", r2), ("wHpar3", r3), ("wHpar4", r4), ("wHpar5", r5)):
            if r:
                out.append((name, (i, k), r))
    for i in range(n):
        r6 = {(i,): ONE}
        for (p, q, r), c in h.sweedler(i, 3).items():
            _wadd(r6, -c, word_tensor(e(p), S(q), e(r)))
        if r6:
            out.append(("wHpar6", (i,), r6))
    return out


class _Completion:
    """Degree-ordered rewriting completion over words in ``n`` letters."""

    def __init__(self, n):
        self.n = n
        self.rw = WordRewriter()
        self.heap = []
        self.seq = 0
        self.processed = 0

    def push(self, elem, degree=None):
        if not elem:
            return
        if degree is None:
            degree = max(len(w) for w in elem)
        heapq.heappush(self.heap, (degree, self.seq, elem))
        self.seq += 1

    def _add_rule(self, f):
        rw = self.rw
        lead = max(f, key=_wkey)
        c = f[lead]
        tail = {w: -x / c for w, x in f.items() if w != lead}
        # older rules whose lead contains the new one become redundant
        L = len(lead)
        for old in [w for w in rw.rules if len(w) > L]:
            if any(old[i:i + L] == lead for i in range(len(old) - L + 1)):
                t = rw.rules[old]
                rw.drop_rule(old)
                elem = {old: ONE}
                _wadd(elem, -ONE, t)
                self.push(elem, len(old))
        rw.set_rule(lead, tail)
        for other in list(rw.rules):
            self._ambiguities(lead, other)
            if other != lead:
                self._ambiguities(other, lead)

    def _ambiguities(self, a, b):
        """Overlaps ``a = XY``, ``b = YZ`` with ``Y`` non-empty and proper."""
        rules = self.rw.rules
        for k in range(1, min(len(a), len(b))):
            if a[len(a) - k:] == b[:k]:
                x, z = a[:len(a) - k], b[k:]
                elem = {}
                for w, c in rules[b].items():
                    _wadd(elem, c, {x + w: ONE})
                for w, c in rules[a].items():
                    _wadd(elem, -c, {w + z: ONE})
                self.push(elem, len(a) + len(z))

    def run(self, max_degree, on_degree=None):
        """Process pending elements up to ``max_degree``; returns True if none remain."""
        current = 0
        while self.heap and self.heap[0][0] <= max_degree:
            deg, _, elem = heapq.heappop(self.heap)
            while on_degree is not None and deg > current:
                on_degree(current)
                current += 1
            f = self.rw.normal_form(elem)
            self.processed += 1
            if f:
                self._add_rule(f)
        while on_degree is not None and current <= max_degree:
            on_degree(current)
            current += 1
        return not self.heap

    def normal_words(self, max_len):
        """Normal words of length <= ``max_len`` and whether the set is finite."""
        rw = self.rw
        lengths = sorted(rw.lengths)
        level = [()]
        out = [()]
        for _ in range(max_len):
            nxt = []
            for w in level:
                for x in range(self.n):
                    v = w + (x,)
                    if not any(L <= len(v) and v[len(v) - L:] in rw.rules for L in lengths):
                        nxt.append(v)
            if not nxt:
                return out, True
            out.extend(nxt)
            level = nxt
        return out, False


@dataclass
class HparAlgebra:
    """A computed ``H_par``: carrier on normal words plus the bracket map."""

    base: object
    carrier: FinDimAlgebra
    words: list
    bracket: Matrix
    rewriter: object
    word_degree: int
    trajectory: list
    certification: str
    complete: bool
    max_degree: int
    certificate: Report = None
    info: dict = field(default_factory=dict)

    @property
    def dim(self):
        return self.carrier.dim

    @property
    def certified(self):
        return self.certification == "closure-certificate"

    def reduce_word(self, word):
        """Carrier coordinates of the class of a word."""
        pos = self._pos
        return {pos[w]: c for w, c in self.rewriter.normal_word(tuple(word)).items()}

    def reduce(self, elem):
        pos = self._pos
        return {pos[w]: c for w, c in self.rewriter.normal_form(elem).items()}

    def br(self, x):
        """``[x]`` for a sparse element ``x`` of ``H``."""
        return self.bracket.apply_sparse(x)

    @property
    def bracket_rep(self):
        return PartialRep(self.base, self.carrier, self.bracket, name="[.]")

    def __post_init__(self):
        self._pos = {w: i for i, w in enumerate(self.words)}

    def summary(self):
        return "dim=%d, degree=%d, %s" % (self.dim, self.word_degree, self.certification)


def _word_label(h, w):
    if not w:
        return "1"
    return "".join("[%s]" % h.labels[i] for i in w)


def build_hpar(h, max_degree=DEFAULT_MAX_DEGREE, certify=True):
    """Compute ``H_par`` of ``h`` with rewriting bounded by ``max_degree``.

    Raises :class:`NotStabilizedError` (carrying the dimension trajectory)
    when the normal words do not form a finite set by the bound, or when the
    rule set is incomplete and the closure certificate fails.
    """
    if max_degree < 1:
        raise PreconditionError("max_degree must be positive")
    comp = _Completion(h.dim)
    for _, _, r in relation_instances(h):
        comp.push(r)
    trajectory = []

    def record(d):
        words, _ = comp.normal_words(d)
        trajectory.append(len(words))

    complete = comp.run(max_degree, on_degree=lambda d: record(d) if d >= 1 else None)
    words, finite = comp.normal_words(max_degree + 1)
    if not finite:
        if complete:
            msg = ("rewriting system for %s is complete but normal words of every length up to %d "
                   "survive: the algebra is infinite-dimensional" % (h.name, max_degree + 1))
        else:
            msg = "normal words of %s do not terminate by degree %d" % (h.name, max_degree)
        raise NotStabilizedError(msg, trajectory=trajectory, max_degree=max_degree, complete=complete)
    words.sort(key=_wkey)
    pos = {w: i for i, w in enumerate(words)}
    rw = comp.rw
    n = len(words)
    table = {}
    for a, b in product(range(n), repeat=2):
        v = {pos[w]: c for w, c in rw.normal_word(words[a] + words[b]).items()}
        if v:
            table[(a, b)] = v
    unit = {pos[()]: ONE}
    carrier = FinDimAlgebra(n, table, unit, labels=[_word_label(h, w) for w in words],
                            name="Hpar(%s)" % h.name)
    cols = [{pos[w]: c for w, c in rw.normal_word((i,)).items()} for i in range(h.dim)]
    bracket = Matrix.from_sparse_columns(cols, n)
    cert = Report("closure-certificate")
    if certify or not complete:
        check_algebra(carrier, cert)
        pr = PartialRep(h, carrier, bracket, name="[.]")
        cert.merge(check_partial_rep(pr), prefix="bracket")
        gen = generated_subalgebra(carrier, cols, name="gen")
        cert.check("generated", gen.dim, n, ("rank",))
    if complete:
        if cert.checked and not cert.ok:
            raise InconsistencyError("complete rewriting system but carrier check failed: %s"
                                     % ", ".join(cert.failed_axioms()))
        certification = "closure-certificate"
    elif cert.ok:
        certification = "closure-certificate"
    else:
        raise NotStabilizedError(
            "rewriting for %s incomplete at degree %d and closure certificate failed (%s)"
            % (h.name, max_degree, ", ".join(cert.failed_axioms())),
            trajectory=trajectory, max_degree=max_degree, complete=False)
    hp = HparAlgebra(
        base=h, carrier=carrier, words=words, bracket=bracket, rewriter=rw,
        word_degree=max(len(w) for w in words), trajectory=trajectory,
        certification=certification, complete=complete, max_degree=max_degree,
        certificate=cert,
        info={"rules": len(rw.rules), "processed": comp.processed,
              "pending": len(comp.heap), "route": "diamond-lemma" if complete else "algebra-check"},
    )
    return hp


class HparPresentation:
    """``H_par`` given by a complete rewriting system, finite or not.

    Normal words are a basis (diamond lemma), so maps out of ``H_par`` are
    determined on words and exist exactly when they kill every rule.
    """

    def __init__(self, base, rewriter, trajectory, max_degree):
        self.base = base
        self.rewriter = rewriter
        self.trajectory = trajectory
        self.max_degree = max_degree
        self.complete = True

    @property
    def rules(self):
        return self.rewriter.rules

    def normal_words(self, max_len):
        comp = _Completion(self.base.dim)
        comp.rw = self.rewriter
        return comp.normal_words(max_len)

    def reduce(self, elem):
        return self.rewriter.normal_form(elem)


def hpar_presentation(h, max_degree=DEFAULT_MAX_DEGREE):
    """Complete rewriting system for ``H_par``; raises when ambiguities remain."""
    comp = _Completion(h.dim)
    for _, _, r in relation_instances(h):
        comp.push(r)
    trajectory = []
    complete = comp.run(max_degree, on_degree=lambda d: trajectory.append(len(comp.normal_words(d)[0]))
                        if d >= 1 else None)
    if not complete:
        raise NotStabilizedError("rewriting for %s incomplete at degree %d" % (h.name, max_degree),
                                 trajectory=trajectory, max_degree=max_degree, complete=False)
    return HparPresentation(h, comp.rw, trajectory, max_degree)


def bracket_rep_check(hp):
    return check_partial_rep(hp.bracket_rep)


# -- universal property ------------------------------------------------------

def _extend_by_generators(hp, pr):
    """pi-hat built from the carrier multiplication alone.

    Pairs ``(x, y)`` with ``pi-hat(x) = y`` are propagated from ``(1, 1_B)`` by
    ``(x [e_i], y pi(e_i))`` and kept in an echelon form where carrier
    coordinates dominate. A pair whose carrier part vanishes but whose
    value does not shows the assignment is not well defined.
    """
    C, B = hp.carrier, pr.target
    off = B.dim
    ech = SparseEchelon()
    brs = [hp.bracket.col_sparse(i) for i in range(hp.base.dim)]
    consistent = True
    queue = [(C.one, B.one)]
    while queue:
        x, y = queue.pop()
        v = {off + k: c for k, c in x.items()}
        v.update(y)
        r = ech.reduce(v)
        if not r:
            continue
        if max(r) < off:
            consistent = False
            continue
        ech.add(r)
        for i, b in enumerate(brs):
            queue.append((C.mul(x, b), B.mul(y, pr.images[i])))
    if sum(1 for p in ech.rows if p >= off) != C.dim:
        raise InconsistencyError("brackets do not generate the carrier")
    cols = [sp_clean({k: -c for k, c in ech.reduce({off + j: ONE}).items()}) for j in range(C.dim)]
    return Matrix.from_sparse_columns(cols, B.dim), consistent


def universal_factorization(hp, pr):
    """The algebra morphism ``pi-hat: H_par -> B`` with ``pi-hat [h] = pi(h)``.

    Returns ``(matrix, report)``. The matrix is built on normal words
    (``pi-hat(w) = pi(w_1)...pi(w_k)``) and cross-checked against the
    generator-extension route, which never looks at words.
    """
    if pr.h is not hp.base and pr.h.dim != hp.base.dim:
        raise PreconditionError("partial representation over a different base")
    if isinstance(hp, HparPresentation):
        return _factor_presentation(hp, pr)
    C, B = hp.carrier, pr.target
    rep = Report("universal-factorization:%s" % pr.name)
    cols = []
    for w in hp.words:
        y = B.one
        for i in w:
            y = B.mul(y, pr.images[i])
        cols.append(y)
    M = Matrix.from_sparse_columns(cols, B.dim)
    M2, consistent = _extend_by_generators(hp, pr)
    rep.check("well-defined", consistent, True, ("generator-extension",))
    rep.check("two-routes", M == M2, True, ("word", "generator"))
    for a, b in product(range(C.dim), repeat=2):
        rep.check("multiplicative", M.apply_sparse(C.mul_basis(a, b)), B.mul(cols[a], cols[b]), (a, b))
    rep.check("unital", M.apply_sparse(C.one), B.one, ("1",))
    for i in range(hp.base.dim):
        rep.check("pi-hat.[.]=pi", M.apply_sparse(hp.bracket.col_sparse(i)), pr.images[i], (i,))
    rep.info["rank"] = M.rank()
    if not rep.passed("well-defined"):
        raise InconsistencyError("pi-hat is not well defined on the carrier of %s" % hp.carrier.name)
    return M, rep


def _word_value(pr, w):
    B = pr.target
    y = B.one
    for i in w:
        y = B.mul(y, pr.images[i])
    return y


def _elem_value(pr, elem):
    out = {}
    for w, c in elem.items():
        sp_axpy(out, c, _word_value(pr, w))
    return out


def _factor_presentation(hp, pr, degree=None):
    """pi-hat on a complete presentation.

    Existence is decided exactly: ``w -> pi(w_1)...pi(w_k)`` kills the ideal
    iff it kills each rule ``lead - tail`` (the rules generate the ideal).
    The second route evaluates the defining relation instances directly.
    Both routes are then compared on every word up to ``degree``.
    Returns ``(evaluator, report)`` with ``evaluator(elem)`` acting on
    word combinations.
    """
    h, B = hp.base, pr.target
    degree = min(hp.max_degree, 4) if degree is None else degree
    rep = Report("universal-factorization:%s" % pr.name)
    for lead, tail in sorted(hp.rules.items(), key=lambda kv: _wkey(kv[0])):
        elem = {lead: ONE}
        _wadd(elem, -ONE, tail)
        rep.check("kills-rules", _elem_value(pr, elem), {}, (lead,))
    for fam, wit, r in relation_instances(h):
        rep.check("kills-relations", _elem_value(pr, r), {}, (fam,) + tuple(wit))
    words, _ = hp.normal_words(degree)
    level = [()]
    for _ in range(degree):
        level = [w + (x,) for w in level for x in range(h.dim)]
        for w in level:
            rep.check("two-routes", _elem_value(pr, hp.reduce({w: ONE})), _word_value(pr, w), (w,))
    short = [w for w in words if 2 * len(w) <= degree]
    for u, v in product(short, repeat=2):
        rep.check("multiplicative", _elem_value(pr, hp.reduce({u + v: ONE})),
                  B.mul(_word_value(pr, u), _word_value(pr, v)), (u, v))
    rep.check("unital", _word_value(pr, ()), B.one, ("1",))
    for i in range(h.dim):
        rep.check("pi-hat.[.]=pi", _elem_value(pr, hp.reduce({(i,): ONE})), pr.images[i], (i,))
    rep.info["degree"] = degree
    if not rep.passed("kills-rules"):
        raise InconsistencyError("pi-hat is not well defined: %s" % rep.first_failure)
    return (lambda elem: _elem_value(pr, hp.reduce(elem))), rep


# -- E-calculus ---------------------------------------------------------------

@dataclass
class EElements:
    hp: HparAlgebra
    E: Matrix
    Etilde: Matrix
    apar: object
    apar_tilde: object

    def e(self, x):
        return self.E.apply_sparse(x)

    def et(self, x):
        return self.Etilde.apply_sparse(x)


def e_calculus(hp):
    """``E_h = [h_1][S(h_2)]``, ``E~_h = [S(h_1)][h_2]`` and the algebras they generate."""
    h, C = hp.base, hp.carrier
    ecols, tcols = [], []
    for i in range(h.dim):
        e, t = {}, {}
        for (p, q), c in h.coalg.comult[i].items():
            sp_axpy(e, c, C.mul(hp.br({p: ONE}), hp.br(h.S_basis(q))))
            sp_axpy(t, c, C.mul(hp.br(h.S_basis(p)), hp.br({q: ONE})))
        ecols.append(e)
        tcols.append(t)
    E = Matrix.from_sparse_columns(ecols, C.dim)
    Et = Matrix.from_sparse_columns(tcols, C.dim)
    apar = generated_subalgebra(C, ecols, name="Apar")
    apar_t = generated_subalgebra(C, tcols, name="Apar~")
    if apar.dim > C.dim or apar_t.dim > C.dim:
        raise InconsistencyError("saturation exceeded the carrier dimension")
    return EElements(hp, E, Et, apar, apar_t)


def propee_suite(hp, ee=None):
    """Items (a)-(n) of the E-calculus and, with an invertible antipode, the
    four S^-1 identities (ids ``Sinv-a`` to ``Sinv-d``)."""
    ee = ee or e_calculus(hp)
    h, C = hp.base, hp.carrier
    rep = Report("E-calculus:%s" % h.name)
    n = h.dim
    br, E, Et, S = hp.br, ee.e, ee.et, h.S
    mul = C.mul_many
    one_e = lambda i: {i: ONE}  # noqa: E731
    inv = h.has_invertible_antipode
    Si = h.Sinv if inv else None
    rep.check("E_1=1", E(h.one), C.one, ("1",))
    for i, k in product(range(n), repeat=2):
        hh, kk = one_e(i), one_e(k)
        d2 = h.coalg.comult[i]
        d3 = h.sweedler(i, 3)

        def s2(f):
            out = {}
            for (p, q), c in d2.items():
                sp_axpy(out, c, f({p: ONE}, {q: ONE}))
            return out

        def s3(f):
            out = {}
            for (p, q, r), c in d3.items():
                sp_axpy(out, c, f({p: ONE}, {q: ONE}, {r: ONE}))
            return out

        w = (i, k)
        rep.check("a", mul(E(kk), br(S(hh))), s2(lambda a, b: mul(br(S(a)), E(h.mul(b, kk)))), w)
        rep.check("b", mul(br(hh), E(kk)), s2(lambda a, b: mul(E(h.mul(a, kk)), br(b))), w)
        rep.check("d", mul(Et(kk), br(hh)), s2(lambda a, b: mul(br(a), Et(h.mul(kk, b)))), w)
        rep.check("e", mul(br(S(hh)), Et(kk)), s2(lambda a, b: mul(Et(h.mul(kk, a)), br(S(b)))), w)
        rep.check("g", mul(br(hh), E(kk)), s2(lambda a, b: mul(br(a), E(kk), Et(b))), w)
        rep.check("h", mul(E(kk), br(S(hh))), s2(lambda a, b: mul(Et(a), E(kk), br(S(b)))), w)
        rep.check("i", mul(Et(kk), br(hh)), s2(lambda a, b: mul(E(a), Et(kk), br(b))), w)
        rep.check("j", mul(br(S(hh)), Et(kk)), s2(lambda a, b: mul(br(S(a)), Et(kk), E(b))), w)
        rep.check("k", mul(E(hh), Et(kk)), mul(Et(kk), E(hh)), w)
        if inv:
            rep.check("l", s3(lambda a, b, c: mul(Et(h.mul_many(kk, Si(c), a)), Et(b))),
                      mul(Et(hh), Et(kk)), w)
            rep.check("Sinv-a", mul(E(kk), br(hh)), s2(lambda a, b: mul(br(b), E(h.mul(Si(a), kk)))), w)
            rep.check("Sinv-b", mul(br(hh), Et(kk)), s2(lambda a, b: mul(Et(h.mul(kk, Si(b))), br(a))), w)
            rep.check("Sinv-c", mul(E(kk), br(hh)), s2(lambda a, b: mul(Et(Si(b)), E(kk), br(a))), w)
            rep.check("Sinv-d", mul(br(hh), Et(kk)), s2(lambda a, b: mul(br(b), Et(kk), E(Si(a)))), w)
    if not inv:
        rep.skip("l", "antipode is not invertible")
        rep.skip("Sinv", "antipode is not invertible")
    for i in range(n):
        hh = one_e(i)
        d2, d3 = h.coalg.comult[i], h.sweedler(i, 3)
        c_lhs, f_lhs, m_lhs = {}, {}, {}
        for (p, q), c in d2.items():
            sp_axpy(c_lhs, c, mul(E({p: ONE}), E({q: ONE})))
            sp_axpy(f_lhs, c, mul(Et({p: ONE}), Et({q: ONE})))
        for (p, q, r), c in d3.items():
            sp_axpy(m_lhs, c, mul(E(h.mul({p: ONE}, S({r: ONE}))), E({q: ONE})))
        rep.check("c", c_lhs, E(hh), (i,))
        rep.check("f", f_lhs, Et(hh), (i,))
        rep.check("m", m_lhs, E(hh), (i,))
    if is_cocommutative(h):
        for i, k in product(range(n), repeat=2):
            rep.check("n", mul(E(one_e(i)), E(one_e(k))), mul(E(one_e(k)), E(one_e(i))), (i, k))
    else:
        rep.skip("n", "not cocommutative")
    for g in h.group_likes():
        eg = E({g: ONE})
        rep.check("E_g idempotent", C.mul(eg, eg), eg, (g,))
    return rep


def apar_action(hp, ee):
    """``h . a = [h_1] a [S(h_2)]`` on ``A_par``, validated as a symmetric partial action."""
    h, C = hp.base, hp.carrier
    A = ee.apar
    act = {}
    for i in range(h.dim):
        for j, a in enumerate(A.vectors):
            v = {}
            for (p, q), c in h.coalg.comult[i].items():
                sp_axpy(v, c, C.mul_many(hp.br({p: ONE}), a, hp.br(h.S_basis(q))))
            cv = A.coords(v)
            if cv is None:
                raise InconsistencyError("[h_1] a [S(h_2)] left A_par (h=%s)" % h.labels[i])
            if cv:
                act[(i, j)] = cv
    pa = PartialAction(h, A.algebra, act, name="Apar-action")
    rep = check_partial_action(pa)
    if not rep.ok or not pa.symmetric:
        raise InconsistencyError("A_par action fails: %s" % rep.summary())
    return pa


def apar_action_suite(hp, ee, pa):
    """``h . E_k = E_{h_1 k} E_{h_2}`` on basis pairs."""
    h = hp.base
    A = ee.apar
    rep = Report("Apar-action")
    for i, k in product(range(h.dim), repeat=2):
        ek = A.coords(ee.e({k: ONE}))
        lhs = A.include(pa.act({i: ONE}, ek))
        rhs = {}
        for (p, q), c in h.coalg.comult[i].items():
            sp_axpy(rhs, c, hp.carrier.mul(ee.e(h.mul_basis(p, k)), ee.e({q: ONE})))
        rep.check("h.E_k", lhs, rhs, (i, k))
    rep.merge(check_partial_action(pa), prefix="PA")
    return rep


def smash_iso_check(hp, ee):
    """``H_par`` against the partial smash product of ``A_par``.

    Builds pi-hat (universal factorization of ``h -> 1 # h``) and Phi
    (covariant factorization of the inclusion with the bracket) and checks
    that they are mutually inverse.
    """
    h = hp.base
    rep = Report("smash-iso:%s" % h.name)
    if not h.has_invertible_antipode:
        rep.skip("iso", "antipode is not invertible")
        return rep
    pa = apar_action(hp, ee)
    sp = smash_product(pa)
    p0 = pi0(sp)
    pihat, r1 = universal_factorization(hp, p0)
    rep.merge(r1, prefix="pi-hat")
    incl = ee.apar.inclusion
    cp = CovariantPair(pa, incl, hp.bracket_rep, name="(incl,[.])")
    Phi, r2 = covariant_factorization(cp, sp)
    rep.merge(r2, prefix="Phi")
    rep.info["dims"] = {"Hpar": hp.dim, "Apar": ee.apar.dim, "smash": sp.dim,
                        "partial_smash": sp.partial.dim}
    if sp.partial.dim != hp.dim:
        rep.fail("dimension", ("Hpar", "partial smash"), hp.dim, sp.partial.dim)
        return rep
    rep.check("Phi.pi-hat=id", Phi @ pihat == Matrix.identity(hp.dim), True, ("Hpar",))
    rep.check("pi-hat.Phi=id", pihat @ Phi == Matrix.identity(sp.partial.dim), True, ("smash",))
    return rep


def birget_rhodes_oracle(g, hp, ee=None):
    """Dimension of ``H_par`` of a groupoid algebra against ``|G^BR|``."""
    from .constructors import birget_rhodes

    br = birget_rhodes(g)
    rep = Report("birget-rhodes:%s" % g.name)
    rep.check("dim", hp.dim, len(br), ("Hpar", "G^BR"))
    ee = ee or e_calculus(hp)
    objects = sum(1 for (_, gi) in br.elements if g.arrows[gi] in g.identity.values())
    rep.info.update(hpar_dim=hp.dim, oracle=len(br), br_objects=objects, apar_dim=ee.apar.dim,
                    apar_matches_objects=ee.apar.dim == objects)
    return rep


def _e_words(h, i):
    out = {}
    for (p, q), c in h.coalg.comult[i].items():
        _wadd(out, c, word_tensor({p: ONE}, h.S_basis(q)))
    return out


def _word_mul(x, y):
    out = {}
    for u, c in x.items():
        for v, d in y.items():
            out[u + v] = out.get(u + v, 0) + c * d
    return sp_clean(out)


def algebra_object_roundtrip(hp, pa, depth=2):
    """Symmetric partial action -> algebra object over ``A_par`` -> action again.

    ``B`` becomes an ``H_par``-module through the universal factorization of
    its endomorphism representation; the ``A_par`` bimodule structure is
    ``E_h b = (h . 1_B) b`` and ``b E_h = b (h . 1_B)``. Elements of ``H_par``
    are handled as word combinations, so ``hp`` may be an :class:`HparAlgebra`
    or a complete :class:`HparPresentation`; ``A_par`` is probed on products of
    at most ``depth`` generators ``E_h``.
    """
    h = hp.base
    B = pa.a
    nB = B.dim
    rep = Report("algebra-object:%s" % pa.name)
    pr = endo_rep_from_action(pa)
    _, r = universal_factorization(hp, pr)
    rep.merge(r, prefix="pi-hat")

    def act_by(x, b):
        m = _elem_value(pr, x)
        out = {}
        for k, c in m.items():
            i, j = divmod(k, nB)
            if j in b:
                sp_axpy(out, c * b[j], {i: ONE})
        return out

    h1 = [pa.act({i: ONE}, B.one) for i in range(h.dim)]
    gens = [_e_words(h, i) for i in range(h.dim)]
    for i, eh in enumerate(gens):
        rep.check("E_h 1_B = h.1_B", act_by(eh, B.one), h1[i], (i,))
        rep.check("E_h 1_B = 1_B E_h", act_by(eh, B.one), B.mul(B.one, h1[i]), (i,))
        for b in range(nB):
            rep.check("E_h b = (h.1_B) b", act_by(eh, {b: ONE}), B.mul(h1[i], {b: ONE}), (i, b))
    probes = [((), {(): ONE})]
    level = [((), {(): ONE})]
    for _ in range(depth):
        level = [(t + (i,), _word_mul(x, g)) for t, x in level for i, g in enumerate(gens)]
        probes.extend(level)
    for t, a in probes:
        a1 = act_by(a, B.one)
        for b, c in product(range(nB), repeat=2):
            left = B.mul(B.mul({b: ONE}, a1), {c: ONE})
            right = B.mul({b: ONE}, act_by(a, {c: ONE}))
            rep.check("balanced", left, right, (t, b, c))
    back = {}
    for i in range(h.dim):
        for b in range(nB):
            v = act_by({(i,): ONE}, {b: ONE})
            if v:
                back[(i, b)] = v
    rep.check("round-trip", back, pa.table(), ("act",))
    return rep
