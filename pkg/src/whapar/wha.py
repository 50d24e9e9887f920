"""Finite-dimensional weak Hopf algebras given by structure constants.

Elements are sparse dicts ``{basis index: Fraction}``; an element of an
n-fold tensor power is a dict keyed by n-tuples of basis indices. All axiom
checks run on basis tuples, which suffices by multilinearity.
"""

from dataclasses import dataclass, field
from itertools import product

from .errors import InconsistencyError, InputError
from .exactlin import (
    ONE, ZERO, Matrix, Subspace, as_fraction, image, kernel_basis, sp_axpy,
    sp_clean, sp_from_dense, sp_to_dense,
)
from .report import Report

__all__ = [
    "FinDimAlgebra", "FinDimCoalgebra", "WeakHopfAlgebra", "CanonicalProjections",
    "Subalgebra", "check_algebra", "check_coalgebra", "check_weak_hopf",
    "canonical_projections", "lemma21_suite", "counital_subalgebra_suite", "is_cocommutative",
    "generated_subalgebra", "tensor_of", "tensor_mul", "tensor_axpy", "lin",
    "matrix_algebra", "matrix_to_element", "element_to_matrix",
]


# -- sparse tensor helpers -------------------------------------------------

def tensor_of(*elems):
    """``x1 (x) ... (x) xn`` for sparse elements, keyed by index tuples."""
    out = {(): ONE}
    for x in elems:
        nxt = {}
        for key, c in out.items():
            for i, d in x.items():
                nxt[key + (i,)] = c * d
        out = nxt
    return out


def tensor_axpy(out, c, t):
    return sp_axpy(out, c, t)


def tensor_mul(alg, x, y):
    """Factorwise product of two tensors of equal rank over ``alg``."""
    out = {}
    for kx, cx in x.items():
        for ky, cy in y.items():
            acc = {(): cx * cy}
            for a, b in zip(kx, ky):
                pr = alg.mul_basis(a, b)
                acc = {k + (m,): c * d for k, c in acc.items() for m, d in pr.items()}
            sp_axpy(out, ONE, acc)
    return out


def lin(f, x):
    """Extend ``f`` (basis index -> sparse vector) linearly to ``x``."""
    out = {}
    for i, c in x.items():
        sp_axpy(out, c, f(i))
    return out


# -- algebras and coalgebras -----------------------------------------------

class FinDimAlgebra:
    """Associative algebra on basis ``0..dim-1`` given by a sparse table."""

    def __init__(self, dim, table, unit, labels=None, name="A"):
        self.dim = int(dim)
        self.name = name
        self.labels = list(labels) if labels is not None else ["b%d" % i for i in range(self.dim)]
        if len(self.labels) != self.dim:
            raise InputError("%s: %d labels for dimension %d" % (name, len(self.labels), self.dim))
        t = [[{} for _ in range(self.dim)] for _ in range(self.dim)]
        for (i, j), v in table.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise InputError("%s: product index (%d, %d) out of range" % (name, i, j))
            for k in v:
                if not 0 <= k < self.dim:
                    raise InputError("%s: product target %d out of range" % (name, k))
            t[i][j] = sp_clean({k: as_fraction(c) for k, c in v.items()})
        self._t = t
        if isinstance(unit, dict):
            self.one = sp_clean({k: as_fraction(c) for k, c in unit.items()})
        else:
            unit = list(unit)
            if len(unit) != self.dim:
                raise InputError("%s: unit has %d entries, expected %d" % (name, len(unit), self.dim))
            self.one = sp_from_dense(unit)
        for k in self.one:
            if not 0 <= k < self.dim:
                raise InputError("%s: unit index %d out of range" % (name, k))

    @classmethod
    def from_tensor(cls, m, unit, labels=None, name="A"):
        """From a dense tensor ``m[i][j][k]`` (coefficient of e_k in e_i e_j)."""
        n = len(m)
        table = {}
        for i in range(n):
            if len(m[i]) != n:
                raise InputError("%s: multiplication tensor is not %d x %d x %d" % (name, n, n, n))
            for j in range(n):
                if len(m[i][j]) != n:
                    raise InputError("%s: multiplication tensor is not %d x %d x %d" % (name, n, n, n))
                row = {k: as_fraction(c) for k, c in enumerate(m[i][j]) if c}
                if row:
                    table[(i, j)] = row
        return cls(n, table, unit, labels, name)

    def mult_tensor(self):
        return [[list(sp_to_dense(self._t[i][j], self.dim)) for j in range(self.dim)]
                for i in range(self.dim)]

    def table(self):
        return {(i, j): dict(self._t[i][j]) for i in range(self.dim) for j in range(self.dim)
                if self._t[i][j]}

    def basis(self, i):
        return {i: ONE}

    def mul_basis(self, i, j):
        return self._t[i][j]

    def mul(self, x, y):
        out = {}
        t = self._t
        for i, a in x.items():
            ti = t[i]
            for j, b in y.items():
                p = ti[j]
                if p:
                    sp_axpy(out, a * b, p)
        return out

    def mul_many(self, *xs):
        out = self.one
        for x in xs:
            out = self.mul(out, x)
        return out

    def left_matrix(self, x):
        """Matrix of ``y -> x y``."""
        return Matrix.from_sparse_columns([self.mul(x, {j: ONE}) for j in range(self.dim)], self.dim)

    def right_matrix(self, x):
        return Matrix.from_sparse_columns([self.mul({j: ONE}, x) for j in range(self.dim)], self.dim)

    def dense(self, x):
        return sp_to_dense(x, self.dim)

    def fmt(self, x):
        if not x:
            return "0"
        parts = []
        for k in sorted(x):
            c = x[k]
            parts.append(("%s*%s" % (c, self.labels[k])) if c != 1 else self.labels[k])
        return " + ".join(parts)

    def __repr__(self):
        return "FinDimAlgebra(%s, dim=%d)" % (self.name, self.dim)


class FinDimCoalgebra:
    """Coalgebra on basis ``0..dim-1``; ``comult[i]`` is ``{(j, k): c}``."""

    def __init__(self, dim, comult, counit):
        self.dim = int(dim)
        if len(comult) != self.dim:
            raise InputError("comultiplication given for %d basis elements, expected %d" % (len(comult), self.dim))
        self.comult = []
        for i, d in enumerate(comult):
            for (j, k) in d:
                if not (0 <= j < self.dim and 0 <= k < self.dim):
                    raise InputError("coproduct of basis %d has index (%d, %d) out of range" % (i, j, k))
            self.comult.append(sp_clean({jk: as_fraction(c) for jk, c in d.items()}))
        counit = list(counit)
        if len(counit) != self.dim:
            raise InputError("counit has %d entries, expected %d" % (len(counit), self.dim))
        self.counit = tuple(as_fraction(c) for c in counit)

    def delta(self, x):
        out = {}
        for i, c in x.items():
            sp_axpy(out, c, self.comult[i])
        return out

    def eps(self, x):
        e = self.counit
        return sum((c * e[i] for i, c in x.items()), ZERO)


@dataclass
class Subalgebra:
    """A subalgebra ``B`` of ``ambient`` with its own basis and inclusion."""

    ambient: FinDimAlgebra
    algebra: FinDimAlgebra
    inclusion: Matrix
    space: Subspace
    vectors: list = field(default_factory=list)

    @property
    def dim(self):
        return self.algebra.dim

    def coords(self, x):
        """Coordinates (sparse) of an ambient element, or None if outside."""
        c = self.space.coordinates(sp_to_dense(x, self.ambient.dim))
        return None if c is None else sp_from_dense(c)

    def include(self, y):
        return self.inclusion.apply_sparse(y)

    def contains(self, x):
        return sp_to_dense(x, self.ambient.dim) in self.space


def generated_subalgebra(alg, gens, unit=None, name="B"):
    """Span-closure of ``gens`` and ``unit`` under multiplication.

    ``unit`` defaults to the unit of ``alg``; pass another idempotent to get
    a non-unital subalgebra of ``alg`` unital with respect to it.
    """
    from .kernels import SparseEchelon

    unit = alg.one if unit is None else unit
    ech = SparseEchelon()
    basis = []

    def offer(v):
        v = sp_clean(v)
        if v and ech.add(v) is not None:
            basis.append(v)
            return True
        return False

    offer(unit)
    for g in gens:
        offer(g)
    done = 0
    while done < len(basis):
        new_hi = len(basis)
        for i in range(done, new_hi):
            b = basis[i]
            for j in range(new_hi):
                a = basis[j]
                offer(alg.mul(a, b))
                offer(alg.mul(b, a))
        done = new_hi
    n = alg.dim
    space = Subspace(n, [sp_to_dense(v, n) for v in basis], keep_basis=True)
    k = len(basis)
    table = {}
    for i in range(k):
        for j in range(k):
            c = space.coordinates(sp_to_dense(alg.mul(basis[i], basis[j]), n))
            if c is None:
                raise InconsistencyError("span closure of %s is not multiplicatively closed" % name)
            c = sp_from_dense(c)
            if c:
                table[(i, j)] = c
    u = space.coordinates(sp_to_dense(unit, n))
    sub = FinDimAlgebra(k, table, u, labels=["%s%d" % (name, i) for i in range(k)], name=name)
    incl = Matrix.from_sparse_columns(basis, n)
    return Subalgebra(alg, sub, incl, space, basis)


# -- weak Hopf algebras ----------------------------------------------------

class WeakHopfAlgebra:
    """Algebra plus coalgebra on a shared basis, with antipode matrix ``S``.

    ``antipode`` uses the column convention: column i is ``S(e_i)``.
    """

    def __init__(self, alg, coalg, antipode, antipode_inverse=None, name="H"):
        if alg.dim != coalg.dim:
            raise InputError("algebra dimension %d != coalgebra dimension %d" % (alg.dim, coalg.dim))
        if antipode.shape != (alg.dim, alg.dim):
            raise InputError("antipode has shape %s, expected %d x %d" % (antipode.shape, alg.dim, alg.dim))
        if antipode_inverse is not None and antipode_inverse.shape != antipode.shape:
            raise InputError("antipode inverse has shape %s" % (antipode_inverse.shape,))
        self.alg = alg
        self.coalg = coalg
        self.antipode = antipode
        self._sinv_supplied = antipode_inverse is not None
        self._sinv = antipode_inverse
        self._sinv_tried = antipode_inverse is not None
        self.name = name
        self._sw = {}

    # algebra side
    @property
    def dim(self):
        return self.alg.dim

    @property
    def labels(self):
        return self.alg.labels

    @property
    def one(self):
        return self.alg.one

    def basis(self, i):
        return {i: ONE}

    def mul(self, x, y):
        return self.alg.mul(x, y)

    def mul_basis(self, i, j):
        return self.alg.mul_basis(i, j)

    def mul_many(self, *xs):
        return self.alg.mul_many(*xs)

    # coalgebra side
    def delta(self, x):
        return self.coalg.delta(x)

    def eps(self, x):
        return self.coalg.eps(x)

    def sweedler(self, i, n):
        """``Delta^(n-1)(e_i)`` as ``{(j1, ..., jn): c}``."""
        key = (i, n)
        hit = self._sw.get(key)
        if hit is not None:
            return hit
        if n == 1:
            res = {(i,): ONE}
        else:
            res = {}
            for k, c in self.sweedler(i, n - 1).items():
                for (a, b), d in self.coalg.comult[k[-1]].items():
                    kk = k[:-1] + (a, b)
                    v = res.get(kk, ZERO) + c * d
                    if v:
                        res[kk] = v
                    else:
                        res.pop(kk, None)
        self._sw[key] = res
        return res

    def sweedler_elem(self, x, n):
        out = {}
        for i, c in x.items():
            sp_axpy(out, c, self.sweedler(i, n))
        return out

    # antipode
    def S_basis(self, i):
        return self.antipode.col_sparse(i)

    def S(self, x):
        return self.antipode.apply_sparse(x)

    @property
    def antipode_inverse(self):
        """Inverse antipode matrix (supplied or computed), or None if singular."""
        if not self._sinv_tried:
            self._sinv_tried = True
            try:
                self._sinv = self.antipode.inverse()
            except ValueError:
                self._sinv = None
        return self._sinv

    @property
    def antipode_inverse_supplied(self):
        return self._sinv_supplied

    @property
    def has_invertible_antipode(self):
        return self.antipode_inverse is not None

    def Sinv_basis(self, i):
        m = self.antipode_inverse
        if m is None:
            raise InconsistencyError("antipode is not invertible")
        return m.col_sparse(i)

    def Sinv(self, x):
        m = self.antipode_inverse
        if m is None:
            raise InconsistencyError("antipode is not invertible")
        return m.apply_sparse(x)

    # counital maps
    def delta_one(self):
        return self.delta(self.one)

    def eps_t(self, x):
        out = {}
        for (a, b), c in self.delta_one().items():
            e = self.eps(self.mul({a: ONE}, x))
            if e:
                out[b] = out.get(b, ZERO) + c * e
        return sp_clean(out)

    def eps_s(self, x):
        out = {}
        for (a, b), c in self.delta_one().items():
            e = self.eps(self.mul(x, {b: ONE}))
            if e:
                out[a] = out.get(a, ZERO) + c * e
        return sp_clean(out)

    def map_matrix(self, f):
        return Matrix.from_sparse_columns([f({i: ONE}) for i in range(self.dim)], self.dim)

    def group_likes(self):
        """Basis indices ``i`` with ``Delta(e_i) = e_i (x) e_i``."""
        return [i for i in range(self.dim) if self.coalg.comult[i] == {(i, i): ONE}]

    def fmt(self, x):
        return self.alg.fmt(x)

    def __repr__(self):
        return "WeakHopfAlgebra(%s, dim=%d)" % (self.name, self.dim)


# -- checks ----------------------------------------------------------------

def check_algebra(a, report=None):
    """Associativity on basis triples and the two unit laws."""
    rep = report if report is not None else Report("algebra:%s" % a.name)
    n = a.dim
    rep.touch("assoc")
    for i, j in product(range(n), repeat=2):
        ij = a.mul_basis(i, j)
        for k in range(n):
            lhs = a.mul(ij, {k: ONE})
            rhs = a.mul({i: ONE}, a.mul_basis(j, k))
            if lhs != rhs:
                rep.fail("assoc", (i, j, k), lhs, rhs)
    for i in range(n):
        e = {i: ONE}
        rep.check("unit-left", a.mul(a.one, e), e, (i,))
        rep.check("unit-right", a.mul(e, a.one), e, (i,))
    return rep


def check_coalgebra(c, report=None):
    rep = report if report is not None else Report("coalgebra")
    n = c.dim
    for i in range(n):
        d = c.comult[i]
        left = {}
        right = {}
        for (a, b), x in d.items():
            for (p, q), y in c.comult[a].items():
                k = (p, q, b)
                left[k] = left.get(k, ZERO) + x * y
            for (p, q), y in c.comult[b].items():
                k = (a, p, q)
                right[k] = right.get(k, ZERO) + x * y
        rep.check("coassoc", sp_clean(left), sp_clean(right), (i,))
        el, er = {}, {}
        for (a, b), x in d.items():
            sp_axpy(el, x * c.counit[a], {b: ONE})
            sp_axpy(er, x * c.counit[b], {a: ONE})
        rep.check("counit-left", el, {i: ONE}, (i,))
        rep.check("counit-right", er, {i: ONE}, (i,))
    return rep


def check_weak_hopf(h, exhaustive=True):
    """Decide axioms (i)-(viii) on basis elements, pairs and triples.

    Failures of the algebra/coalgebra structure are recorded under ``i`` and
    ``ii``; the remaining axioms are still evaluated.
    """
    rep = Report("weak-hopf:%s" % h.name)
    n = h.dim
    sub = check_algebra(h.alg)
    rep.touch("i")
    for f in sub.failures:
        rep.fail("i", f.witness, f.lhs, f.rhs)
    sub = check_coalgebra(h.coalg)
    rep.touch("ii")
    for f in sub.failures:
        rep.fail("ii", f.witness, f.lhs, f.rhs)

    # (iii) Delta(kh) = Delta(k) Delta(h)
    for k, i in product(range(n), repeat=2):
        lhs = h.delta(h.mul_basis(k, i))
        rhs = tensor_mul(h.alg, h.coalg.comult[k], h.coalg.comult[i])
        rep.check("iii", lhs, rhs, (k, i))

    # (iv) eps(k h1) eps(h2 g) = eps(k h g) = eps(k h2) eps(h1 g)
    e2 = [[h.eps(h.mul_basis(a, b)) for b in range(n)] for a in range(n)]
    for i in range(n):
        d = h.coalg.comult[i]
        for k, g in product(range(n), repeat=2):
            mid = h.eps(h.mul(h.mul_basis(k, i), {g: ONE}))
            left = sum((c * e2[k][a] * e2[b][g] for (a, b), c in d.items()), ZERO)
            right = sum((c * e2[k][b] * e2[a][g] for (a, b), c in d.items()), ZERO)
            rep.check("iv", left, mid, (k, i, g))
            rep.check("iv", right, mid, (k, i, g))

    # (v) (1 (x) D(1))(D(1) (x) 1) = D^2(1) = (D(1) (x) 1)(1 (x) D(1))
    d1 = h.delta_one()
    d2 = h.sweedler_elem(h.one, 3)
    one_d1 = {}
    d1_one = {}
    for (a, b), c in d1.items():
        sp_axpy(one_d1, c, tensor_of(h.one, {a: ONE}, {b: ONE}))
        sp_axpy(d1_one, c, tensor_of({a: ONE}, {b: ONE}, h.one))
    rep.check("v", tensor_mul(h.alg, one_d1, d1_one), d2, ("1",))
    rep.check("v", tensor_mul(h.alg, d1_one, one_d1), d2, ("1",))

    # (vi)-(viii)
    for i in range(n):
        d = h.coalg.comult[i]
        x = {i: ONE}
        vi, vii = {}, {}
        for (a, b), c in d.items():
            sp_axpy(vi, c, h.mul({a: ONE}, h.S_basis(b)))
            sp_axpy(vii, c, h.mul(h.S_basis(a), {b: ONE}))
        rep.check("vi", vi, h.eps_t(x), (i,))
        rep.check("vii", vii, h.eps_s(x), (i,))
        viii = {}
        for (a, b, c3), c in h.sweedler(i, 3).items():
            sp_axpy(viii, c, h.mul_many(h.S_basis(a), {b: ONE}, h.S_basis(c3)))
        rep.check("viii", viii, h.S_basis(i), (i,))

    if h.antipode_inverse_supplied:
        ident = Matrix.identity(n)
        rep.check("S-inverse", h.antipode @ h.antipode_inverse, ident, ("S*Sinv",))
        rep.check("S-inverse", h.antipode_inverse @ h.antipode, ident, ("Sinv*S",))
    return rep


@dataclass(frozen=True)
class CanonicalProjections:
    eps_t: Matrix
    eps_s: Matrix
    Ht: Subspace
    Hs: Subspace


def _kernel_of(h, f):
    """Kernel of the linear map ``z -> f(z)`` into sparse tensors."""
    n = h.dim
    cols = [f({i: ONE}) for i in range(n)]
    keys = sorted({k for c in cols for k in c})
    m = Matrix.from_columns([tuple(c.get(k, ZERO) for k in keys) for c in cols], len(keys)) if keys \
        else Matrix.zeros(0, n)
    return kernel_basis(m)


def counital_subalgebra_suite(h, proj=None):
    """Characterisations of H_t and H_s through the coproduct."""
    proj = proj or _projections(h)
    rep = Report("counital-subalgebras:%s" % h.name)
    n = h.dim
    d1 = h.delta_one()

    def t_char(z):
        r = dict(h.delta(z))
        for (a, b), c in d1.items():
            sp_axpy(r, -c, tensor_of(h.mul({a: ONE}, z), {b: ONE}))
        return r

    def s_char(w):
        r = dict(h.delta(w))
        for (a, b), c in d1.items():
            sp_axpy(r, -c, tensor_of({a: ONE}, h.mul(w, {b: ONE})))
        return r

    rep.check("Ht-char", _kernel_of(h, t_char), proj.Ht, ("Ht",))
    rep.check("Hs-char", _kernel_of(h, s_char), proj.Hs, ("Hs",))
    for z in proj.Ht.basis:
        zs = sp_from_dense(z)
        alt = {}
        for (a, b), c in d1.items():
            sp_axpy(alt, c, tensor_of(h.mul(zs, {a: ONE}), {b: ONE}))
        rep.check("Ht-char", h.delta(zs), alt, (z,))
        # Delta(H_t) lies in H (x) H_t
        dz = h.delta(zs)
        for j in range(n):
            comp = {b: c for (a, b), c in dz.items() if a == j}
            rep.require("Delta(Ht)", sp_to_dense(comp, n) in proj.Ht, (z, j))
    for w in proj.Hs.basis:
        ws = sp_from_dense(w)
        alt = {}
        for (a, b), c in d1.items():
            sp_axpy(alt, c, tensor_of({a: ONE}, h.mul({b: ONE}, ws)))
        rep.check("Hs-char", h.delta(ws), alt, (w,))
        dw = h.delta(ws)
        for j in range(n):
            comp = {a: c for (a, b), c in dw.items() if b == j}
            rep.require("Delta(Hs)", sp_to_dense(comp, n) in proj.Hs, (w, j))
    return rep


def _projections(h):
    et = h.map_matrix(h.eps_t)
    es = h.map_matrix(h.eps_s)
    return CanonicalProjections(et, es, image(et), image(es))


def canonical_projections(h):
    """``eps_t``, ``eps_s`` and their images, validated against their characterisations."""
    proj = _projections(h)
    rep = counital_subalgebra_suite(h, proj)
    if not rep.ok:
        f = rep.first_failure
        raise InconsistencyError("counital subalgebra characterisation fails (%s at %s)" % (f.axiom, f.witness))
    return proj


def lemma21_suite(h):
    """The five standard identities, per basis element."""
    rep = Report("counit-identities:%s" % h.name)
    n = h.dim
    d1 = h.delta_one()
    S = h.S_basis
    for i in range(n):
        x = {i: ONE}
        sw3 = h.sweedler(i, 3)
        l1, l2, l4, l5 = {}, {}, {}, {}
        for (a, b, c), k in sw3.items():
            ea, eb, ec = {a: ONE}, {b: ONE}, {c: ONE}
            sp_axpy(l1, k, tensor_of(ea, h.mul(eb, S(c))))
            sp_axpy(l2, k, tensor_of(h.mul(S(a), eb), ec))
            sp_axpy(l4, k, tensor_of(ea, h.mul(S(b), ec)))
            sp_axpy(l5, k, tensor_of(h.mul(ea, S(b)), ec))
        r1, r2, r4, r5 = {}, {}, {}, {}
        for (a, b), k in d1.items():
            ea, eb = {a: ONE}, {b: ONE}
            sp_axpy(r1, k, tensor_of(h.mul(ea, x), eb))
            sp_axpy(r2, k, tensor_of(ea, h.mul(x, eb)))
            sp_axpy(r4, k, tensor_of(h.mul(x, ea), S(b)))
            sp_axpy(r5, k, tensor_of(S(a), h.mul(eb, x)))
        rep.check("1", l1, r1, (i,))
        rep.check("2", l2, r2, (i,))
        rep.check("4", l4, r4, (i,))
        rep.check("5", l5, r5, (i,))
    rep.check("3", h.S(h.one), h.one, ("1",))
    # keep the numbering order readable in reports
    rep.checked.sort()
    return rep


def is_cocommutative(h):
    for d in h.coalg.comult:
        for (a, b), c in d.items():
            if d.get((b, a), ZERO) != c:
                return False
    return True


def matrix_algebra(n, name=None):
    """``M_n(Q)`` on matrix units; ``E_ij`` has index ``i * n + j``."""
    table = {}
    for i, j, l in product(range(n), repeat=3):
        table[(i * n + j, j * n + l)] = {i * n + l: ONE}
    unit = {i * n + i: ONE for i in range(n)}
    labels = ["E%d%d" % (i, j) for i in range(n) for j in range(n)]
    return FinDimAlgebra(n * n, table, unit, labels=labels, name=name or "M%d" % n)


def matrix_to_element(m):
    """Element of ``matrix_algebra(n)`` for an n x n Matrix."""
    n = m.rows
    return {i * n + j: m[i, j] for i in range(n) for j in range(n) if m[i, j]}


def element_to_matrix(x, n):
    ent = [ZERO] * (n * n)
    for k, c in x.items():
        ent[k] = c
    return Matrix(n, n, ent)
