"""Concrete weak Hopf algebras: groupoid algebras, the Sweedler pair, and the
Birget-Rhodes expansion of a finite groupoid.

Groupoid conventions: ``compose(g, h) = gh`` is defined iff
``source(g) == target(h)``; then ``source(gh) = source(h)`` and
``target(gh) = target(g)``. ``d`` is the source and ``r`` the target.
"""

from dataclasses import dataclass, field
from itertools import product

from .errors import InconsistencyError, InputError
from .exactlin import ONE, Matrix
from .wha import FinDimAlgebra, FinDimCoalgebra, WeakHopfAlgebra

__all__ = [
    "FiniteGroupoid", "BirgetRhodesGroupoid", "groupoid_from_group", "trivial_group",
    "cyclic_group", "klein_group", "discrete_groupoid", "pair_groupoid",
    "groupoid_algebra", "sweedler_pair", "birget_rhodes", "birget_rhodes_count",
    "H4_LABELS",
]


@dataclass
class FiniteGroupoid:
    """Finite groupoid with explicitly listed identities.

    Arrows and objects are referred to by label; ``compose`` maps composable
    label pairs ``(g, h)`` to ``gh``.
    """

    objects: list
    arrows: list
    source: dict
    target: dict
    identity: dict
    compose: dict
    inverse: dict
    name: str = "G"
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {a: i for i, a in enumerate(self.arrows)}
        self.validate()

    def index(self, arrow):
        return self._index[arrow]

    def composable(self, g, h):
        return self.source[g] == self.target[h]

    def validate(self):
        """Raise InputError unless every groupoid axiom holds."""
        if len(set(self.arrows)) != len(self.arrows):
            raise InputError("%s: duplicate arrow labels" % self.name)
        if len(set(self.objects)) != len(self.objects):
            raise InputError("%s: duplicate object labels" % self.name)
        objs = set(self.objects)
        for a in self.arrows:
            for m, what in ((self.source, "source"), (self.target, "target"), (self.inverse, "inverse")):
                if a not in m:
                    raise InputError("%s: arrow %r has no %s" % (self.name, a, what))
            if self.source[a] not in objs or self.target[a] not in objs:
                raise InputError("%s: arrow %r has an unknown endpoint" % (self.name, a))
            if self.inverse[a] not in self._index:
                raise InputError("%s: inverse of %r is not an arrow" % (self.name, a))
        for o in self.objects:
            i = self.identity.get(o)
            if i not in self._index:
                raise InputError("%s: object %r has no identity arrow" % (self.name, o))
            if self.source[i] != o or self.target[i] != o:
                raise InputError("%s: identity %r of %r has wrong endpoints" % (self.name, i, o))
        for (g, h), gh in self.compose.items():
            if g not in self._index or h not in self._index or gh not in self._index:
                raise InputError("%s: composition (%r, %r) -> %r uses unknown arrows" % (self.name, g, h, gh))
            if not self.composable(g, h):
                raise InputError("%s: (%r, %r) composed but source(%r) != target(%r)" % (self.name, g, h, g, h))
        for g, h in product(self.arrows, repeat=2):
            if self.composable(g, h):
                gh = self.compose.get((g, h))
                if gh is None:
                    raise InputError("%s: composable pair (%r, %r) has no composite" % (self.name, g, h))
                if self.source[gh] != self.source[h] or self.target[gh] != self.target[g]:
                    raise InputError("%s: composite %r of (%r, %r) has wrong endpoints" % (self.name, gh, g, h))
        for g in self.arrows:
            if self.compose[(self.identity[self.target[g]], g)] != g or \
                    self.compose[(g, self.identity[self.source[g]])] != g:
                raise InputError("%s: identity law fails at %r" % (self.name, g))
            gi = self.inverse[g]
            if not (self.composable(g, gi) and self.composable(gi, g)):
                raise InputError("%s: inverse of %r is not composable with it" % (self.name, g))
            if self.compose[(g, gi)] != self.identity[self.target[g]] or \
                    self.compose[(gi, g)] != self.identity[self.source[g]]:
                raise InputError("%s: inverse law fails at %r" % (self.name, g))
        c = self.compose
        for g, h, k in product(self.arrows, repeat=3):
            if self.composable(g, h) and self.composable(h, k):
                if c[(c[(g, h)], k)] != c[(g, c[(h, k)])]:
                    raise InputError("%s: associativity fails at (%r, %r, %r)" % (self.name, g, h, k))

    def __len__(self):
        return len(self.arrows)


def groupoid_from_group(elements, mul, name="G"):
    """One-object groupoid from a group multiplication function."""
    elements = list(elements)
    comp = {(a, b): mul(a, b) for a in elements for b in elements}
    ident = [e for e in elements if all(comp[(e, a)] == a for a in elements)]
    if len(ident) != 1:
        raise InputError("%s: no unique identity element" % name)
    e = ident[0]
    inv = {}
    for a in elements:
        cands = [b for b in elements if comp[(a, b)] == e]
        if len(cands) != 1:
            raise InputError("%s: element %r has no unique inverse" % (name, a))
        inv[a] = cands[0]
    return FiniteGroupoid(
        objects=["*"], arrows=elements,
        source={a: "*" for a in elements}, target={a: "*" for a in elements},
        identity={"*": e}, compose=comp, inverse=inv, name=name,
    )


def trivial_group():
    return groupoid_from_group(["e"], lambda a, b: "e", name="trivial")


def _cyc_label(i):
    return "e" if i == 0 else ("a" if i == 1 else "a%d" % i)


def cyclic_group(n):
    labels = [_cyc_label(i) for i in range(n)]
    pos = {l: i for i, l in enumerate(labels)}
    return groupoid_from_group(labels, lambda x, y: labels[(pos[x] + pos[y]) % n], name="Z%d" % n)


def klein_group():
    labels = ["e", "a", "b", "c"]
    pos = {l: i for i, l in enumerate(labels)}
    return groupoid_from_group(labels, lambda x, y: labels[pos[x] ^ pos[y]], name="Z2xZ2")


def discrete_groupoid(n):
    objs = ["o%d" % i for i in range(n)]
    arrows = ["id%d" % i for i in range(n)]
    return FiniteGroupoid(
        objects=objs, arrows=arrows,
        source=dict(zip(arrows, objs)), target=dict(zip(arrows, objs)),
        identity=dict(zip(objs, arrows)),
        compose={(a, a): a for a in arrows}, inverse={a: a for a in arrows},
        name="discrete%d" % n,
    )


def pair_groupoid(n):
    """Exactly one arrow ``(i, j)`` from ``j`` to ``i`` for every pair of objects."""
    objs = ["o%d" % i for i in range(n)]
    lab = {(i, j): ("id%d" % i if i == j else "g%d%d" % (i, j)) for i in range(n) for j in range(n)}
    arrows = [lab[(i, j)] for i in range(n) for j in range(n)]
    src = {lab[(i, j)]: objs[j] for i, j in lab}
    tgt = {lab[(i, j)]: objs[i] for i, j in lab}
    comp = {(lab[(i, j)], lab[(j, k)]): lab[(i, k)] for i in range(n) for j in range(n) for k in range(n)}
    return FiniteGroupoid(
        objects=objs, arrows=arrows, source=src, target=tgt,
        identity={objs[i]: lab[(i, i)] for i in range(n)},
        compose=comp, inverse={lab[(i, j)]: lab[(j, i)] for i, j in lab},
        name="pair%d" % n,
    )


def groupoid_algebra(g):
    """The groupoid algebra: Delta(g) = g (x) g, eps(g) = 1, S(g) = g^-1."""
    n = len(g.arrows)
    idx = g.index
    table = {}
    for a, b in product(g.arrows, repeat=2):
        if g.composable(a, b):
            table[(idx(a), idx(b))] = {idx(g.compose[(a, b)]): ONE}
    unit = {idx(g.identity[o]): ONE for o in g.objects}
    alg = FinDimAlgebra(n, table, unit, labels=list(g.arrows), name="Q[%s]" % g.name)
    coalg = FinDimCoalgebra(n, [{(i, i): ONE} for i in range(n)], [ONE] * n)
    s = Matrix.from_sparse_columns([{idx(g.inverse[a]): ONE} for a in g.arrows], n)
    return WeakHopfAlgebra(alg, coalg, s, antipode_inverse=s, name="Q[%s]" % g.name)


# -- the Sweedler pair ------------------------------------------------------

H4_LABELS = ["1", "x", "g", "h"]

# products in H4 on the basis 1, x, g, h with h = xg = -gx
_H4_MUL = {
    (0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1}, (0, 3): {3: 1},
    (1, 0): {1: 1}, (1, 2): {3: 1},
    (2, 0): {2: 1}, (2, 1): {3: -1}, (2, 2): {0: 1}, (2, 3): {1: -1},
    (3, 0): {3: 1}, (3, 2): {1: 1},
}
_H4_COMULT = [
    {(0, 0): 1},
    {(1, 0): 1, (2, 1): 1},
    {(2, 2): 1},
    {(3, 2): 1, (0, 3): 1},
]
_H4_COUNIT = [1, 0, 1, 0]
_H4_S = [{0: 1}, {3: 1}, {2: 1}, {1: -1}]
_H4_SINV = [{0: 1}, {3: -1}, {2: 1}, {1: 1}]


def sweedler_pair():
    """Two orthogonal copies ``e_a``, ``f_a`` of Sweedler's four-dimensional
    Hopf algebra; a weak Hopf algebra with ``Delta(1) = e_1 (x) e_1 + f_1 (x) f_1``.

    Basis order: e1, ex, eg, eh, f1, fx, fg, fh.
    """
    labels = ["e" + a for a in H4_LABELS] + ["f" + a for a in H4_LABELS]
    table = {}
    comult = []
    for off in (0, 4):
        for (i, j), v in _H4_MUL.items():
            table[(i + off, j + off)] = {k + off: c for k, c in v.items()}
    for off in (0, 4):
        for d in _H4_COMULT:
            comult.append({(a + off, b + off): c for (a, b), c in d.items()})
    counit = _H4_COUNIT + _H4_COUNIT
    alg = FinDimAlgebra(8, table, {0: ONE, 4: ONE}, labels=labels, name="sweedler_pair")
    coalg = FinDimCoalgebra(8, comult, counit)
    s = Matrix.from_sparse_columns([{k + off: c for k, c in d.items()} for off in (0, 4) for d in _H4_S], 8)
    sinv = Matrix.from_sparse_columns([{k + off: c for k, c in d.items()} for off in (0, 4) for d in _H4_SINV], 8)
    return WeakHopfAlgebra(alg, coalg, s, antipode_inverse=sinv, name="sweedler_pair")


# -- Birget-Rhodes expansion ------------------------------------------------

@dataclass
class BirgetRhodesGroupoid:
    """Pairs ``(A, g)`` with ``A`` a bitmask over ``base.arrows``.

    ``product(x, y)`` follows the rule (A, g)(B, h) = (B, gh) when g, h are
    composable and A = hB.
    """

    base: FiniteGroupoid
    elements: list
    _pos: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._pos = {e: i for i, e in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def subset(self, mask):
        return frozenset(a for i, a in enumerate(self.base.arrows) if mask >> i & 1)

    def translate(self, h, mask):
        """Bitmask of ``hB`` for ``B`` given by ``mask``."""
        g = self.base
        out = 0
        for i, b in enumerate(g.arrows):
            if mask >> i & 1:
                out |= 1 << g.index(g.compose[(h, b)])
        return out

    def product(self, x, y):
        (amask, gi), (bmask, hi) = x, y
        g, h = self.base.arrows[gi], self.base.arrows[hi]
        if not self.base.composable(g, h):
            return None
        if amask != self.translate(h, bmask):
            return None
        return (bmask, self.base.index(self.base.compose[(g, h)]))

    def label(self, x):
        mask, gi = x
        members = ",".join(a for i, a in enumerate(self.base.arrows) if mask >> i & 1)
        return "({%s},%s)" % (members, self.base.arrows[gi])

    def as_groupoid(self):
        """The expansion as a FiniteGroupoid; construction validates all axioms."""
        g = self.base
        lab = {x: self.label(x) for x in self.elements}
        idents = [x for x in self.elements if g.arrows[x[1]] == g.identity[g.source[g.arrows[x[1]]]]]
        objects = []
        identity = {}
        obj_key = {}
        for x in idents:
            o = "[%s]" % lab[x]
            obj_key[(x[0], g.target[g.arrows[x[1]]])] = o
            objects.append(o)
            identity[o] = lab[x]
        src, tgt, inv, comp = {}, {}, {}, {}
        for x in self.elements:
            mask, gi = x
            a = g.arrows[gi]
            src[lab[x]] = obj_key[(mask, g.source[a])]
            tmask = self.translate(a, mask)
            tgt[lab[x]] = obj_key[(tmask, g.target[a])]
            inv[lab[x]] = lab[(tmask, g.index(g.inverse[a]))]
        for x, y in product(self.elements, repeat=2):
            p = self.product(x, y)
            if p is not None:
                if p not in self._pos:
                    raise InconsistencyError("product %s.%s leaves the expansion" % (lab[x], lab[y]))
                comp[(lab[x], lab[y])] = lab[p]
        return FiniteGroupoid(objects, [lab[x] for x in self.elements], src, tgt, identity, comp, inv,
                              name="BR(%s)" % g.name)


def birget_rhodes(g):
    """Enumerate all admissible ``(A, g)`` by subset enumeration over ``Y_g``."""
    elements = []
    for gi, a in enumerate(g.arrows):
        ys = [i for i, b in enumerate(g.arrows) if g.target[b] == g.source[a]]
        required = (1 << g.index(g.identity[g.source[a]])) | (1 << g.index(g.inverse[a]))
        free = [i for i in ys if not required >> i & 1]
        for bits in range(1 << len(free)):
            mask = required
            for k, i in enumerate(free):
                if bits >> k & 1:
                    mask |= 1 << i
            elements.append((mask, gi))
    br = BirgetRhodesGroupoid(g, elements)
    try:
        br.as_groupoid()
    except InputError as exc:
        raise InconsistencyError("Birget-Rhodes expansion is not a groupoid: %s" % exc) from exc
    return br


def birget_rhodes_count(g):
    """|G^BR| from the closed form sum over arrows of 2^(|Y_g| - |{d(g), g^-1}|)."""
    total = 0
    for a in g.arrows:
        y = sum(1 for b in g.arrows if g.target[b] == g.source[a])
        fixed = len({g.identity[g.source[a]], g.inverse[a]})
        total += 2 ** (y - fixed)
    return total
