"""JSON input and output.

Every file is an object with a ``"format"`` key:

``whapar-algebra/1``
    A weak Hopf algebra candidate. ``labels``; ``mult`` as ``[i, j, k, c]``
    (coefficient ``c`` of ``e_k`` in ``e_i e_j``); ``unit`` as ``[k, c]``;
    ``comult`` as ``[i, j, k, c]`` (coefficient of ``e_j (x) e_k`` in
    ``Delta(e_i)``); ``counit`` as a list; ``antipode`` and the optional
    ``antipode_inverse`` as ``[i, j, c]`` (coefficient of ``e_i`` in the image
    of ``e_j``).
``whapar-groupoid/1``
    ``objects``; ``arrows`` as ``{"label", "source", "target"}``;
    ``identities`` mapping objects to arrows; ``compose`` as ``[g, h, gh]``
    for every composable pair; optional ``inverse`` (derived when absent).
``whapar-action/1``
    A partial action: ``hopf`` (file reference or inline algebra/groupoid),
    ``module_algebra`` (``dim``, ``mult``, ``unit``, optional ``labels``),
    ``act`` as ``[i, j, k, c]`` (coefficient of ``a_k`` in ``e_i . a_j``).
``whapar-parrep/1``
    A linear map ``pi``: ``hopf``, ``target`` (an algebra as above or
    ``{"matrix_algebra": n}``), ``images`` as ``[i, k, c]`` (coefficient of
    target basis ``k`` in ``pi(e_i)``).

Rationals are strings ``"p/q"`` (integers are accepted as well). File
references are resolved relative to the referring file, then against the
bundled fixtures.
"""

import json
from fractions import Fraction
from pathlib import Path

from .constructors import FiniteGroupoid, groupoid_algebra
from .errors import InputError
from .exactlin import Matrix, fmt_q
from .partial import PartialAction, PartialRep
from .wha import FinDimAlgebra, FinDimCoalgebra, WeakHopfAlgebra, matrix_algebra

__all__ = [
    "FIXTURES", "resolve_path", "load", "load_hopf", "parse_algebra", "parse_groupoid",
    "dump_algebra", "dump_groupoid", "dump_action", "dump_parrep", "dump_hpar", "Loaded",
]

FIXTURES = Path(__file__).with_name("fixtures")

ALGEBRA = "whapar-algebra/1"
GROUPOID = "whapar-groupoid/1"
ACTION = "whapar-action/1"
PARREP = "whapar-parrep/1"


class Loaded:
    """Result of :func:`load`: the parsed object plus provenance."""

    def __init__(self, kind, obj, path, digest, groupoid=None, hopf=None):
        self.kind = kind
        self.obj = obj
        self.path = path
        self.digest = digest
        self.groupoid = groupoid
        self.hopf = hopf


def resolve_path(path, relative_to=None):
    p = Path(path)
    cands = [p]
    if relative_to is not None and not p.is_absolute():
        cands.insert(0, Path(relative_to).parent / p)
    cands.append(FIXTURES / p.name)
    for c in cands:
        if c.is_file():
            return c
    raise InputError("%s: no such file (also looked in the bundled fixtures)" % path)


def _q(x, where):
    if isinstance(x, bool):
        raise InputError("%s: expected a rational, got %r" % (where, x))
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError("%s: %r is not a rational of the form p/q" % (where, x)) from None
    raise InputError("%s: expected a rational string, got %r" % (where, x))


def _idx(x, n, where):
    if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < n:
        raise InputError("%s: index %r out of range 0..%d" % (where, x, n - 1))
    return x


def _field(d, key, where, kind=None):
    if not isinstance(d, dict) or key not in d:
        raise InputError("%s: missing field %r" % (where, key))
    v = d[key]
    if kind is not None and not isinstance(v, kind):
        raise InputError("%s/%s: expected %s" % (where, key, kind.__name__))
    return v


def _entries(rows, arity, n, where):
    """Validated ``[i, ..., c]`` rows as (index tuple, Fraction)."""
    out = []
    if not isinstance(rows, list):
        raise InputError("%s: expected a list" % where)
    for r, row in enumerate(rows):
        w = "%s[%d]" % (where, r)
        if not isinstance(row, list) or len(row) != arity + 1:
            raise InputError("%s: expected %d indices and a coefficient" % (w, arity))
        dims = n if isinstance(n, tuple) else (n,) * arity
        idx = tuple(_idx(row[k], dims[k], w) for k in range(arity))
        out.append((idx, _q(row[arity], w)))
    return out


def _accumulate(entries, where):
    seen = {}
    for idx, c in entries:
        if idx in seen:
            raise InputError("%s: duplicate entry %s" % (where, list(idx)))
        seen[idx] = c
    return seen


def _load_json(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError("%s: %s" % (path, exc.strerror or exc)) from None
    try:
        return json.loads(text), text
    except json.JSONDecodeError as exc:
        raise InputError("%s:%d:%d: %s" % (path, exc.lineno, exc.colno, exc.msg)) from None


def _plain_algebra(d, where, name="A"):
    n = _field(d, "dim", where, int) if "dim" in d else len(_field(d, "labels", where, list))
    if n < 1:
        raise InputError("%s/dim: must be positive" % where)
    table = {}
    for (i, j, k), c in _accumulate(_entries(_field(d, "mult", where), 3, n, where + "/mult"), where).items():
        table.setdefault((i, j), {})[k] = c
    unit = dict((i, c) for (i,), c in _entries(_field(d, "unit", where), 1, n, where + "/unit"))
    labels = d.get("labels")
    if labels is not None and len(labels) != n:
        raise InputError("%s/labels: %d labels for dimension %d" % (where, len(labels), n))
    return FinDimAlgebra(n, table, unit, labels=labels, name=d.get("name", name))


def parse_algebra(d, where="algebra"):
    labels = _field(d, "labels", where, list)
    n = len(labels)
    name = d.get("name", "H")
    alg = _plain_algebra(dict(d, dim=n), where, name=name)
    comult = [dict() for _ in range(n)]
    for (i, j, k), c in _accumulate(_entries(_field(d, "comult", where), 3, n, where + "/comult"), where).items():
        comult[i][(j, k)] = c
    counit = _field(d, "counit", where, list)
    if len(counit) != n:
        raise InputError("%s/counit: %d entries for dimension %d" % (where, len(counit), n))
    counit = [_q(c, "%s/counit[%d]" % (where, i)) for i, c in enumerate(counit)]

    def matrix(key):
        cols = [dict() for _ in range(n)]
        for (i, j), c in _accumulate(_entries(_field(d, key, where), 2, n, where + "/" + key), where).items():
            cols[j][i] = c
        return Matrix.from_sparse_columns(cols, n)

    s = matrix("antipode")
    sinv = matrix("antipode_inverse") if "antipode_inverse" in d else None
    return WeakHopfAlgebra(alg, FinDimCoalgebra(n, comult, counit), s, antipode_inverse=sinv, name=name)


def parse_groupoid(d, where="groupoid"):
    objects = _field(d, "objects", where, list)
    arrows = _field(d, "arrows", where, list)
    labels, src, tgt = [], {}, {}
    for r, a in enumerate(arrows):
        w = "%s/arrows[%d]" % (where, r)
        lab = str(_field(a, "label", w))
        labels.append(lab)
        src[lab] = _field(a, "source", w)
        tgt[lab] = _field(a, "target", w)
    ident = _field(d, "identities", where, dict)
    comp = {}
    for r, row in enumerate(_field(d, "compose", where, list)):
        if not isinstance(row, list) or len(row) != 3:
            raise InputError("%s/compose[%d]: expected [g, h, gh]" % (where, r))
        g, h, gh = (str(x) for x in row)
        if (g, h) in comp:
            raise InputError("%s/compose[%d]: duplicate pair (%s, %s)" % (where, r, g, h))
        comp[(g, h)] = gh
    inv = d.get("inverse")
    if inv is None:
        inv = {}
        for g in labels:
            for h in labels:
                if comp.get((g, h)) == ident.get(tgt[g]) and comp.get((h, g)) == ident.get(src[g]):
                    inv[g] = h
                    break
    return FiniteGroupoid(objects, labels, src, tgt, ident, comp, inv, name=d.get("name", "G"))


def _check_format(d, expected, where):
    fmt = d.get("format") if isinstance(d, dict) else None
    if fmt not in expected:
        raise InputError("%s: format %r, expected one of %s" % (where, fmt, ", ".join(expected)))
    return fmt


def load_hopf(ref, relative_to=None):
    """``(WeakHopfAlgebra, groupoid or None, digest)`` from a reference or inline object."""
    if isinstance(ref, dict):
        return _hopf_from_dict(ref, "inline")
    p = resolve_path(ref, relative_to)
    d, text = _load_json(p)
    h, g, _ = _hopf_from_dict(d, str(p))
    return h, g, _digest(text)


def _hopf_from_dict(d, where):
    fmt = _check_format(d, (ALGEBRA, GROUPOID), where)
    if fmt == GROUPOID:
        g = parse_groupoid(d, where)
        return groupoid_algebra(g), g, None
    return parse_algebra(d, where), None, None


def _digest(text):
    import hashlib

    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def load(path):
    """Parse any supported file; raises :class:`InputError` with a location."""
    p = resolve_path(path)
    d, text = _load_json(p)
    where = p.name
    fmt = _check_format(d, (ALGEBRA, GROUPOID, ACTION, PARREP), where)
    digest = _digest(text)
    if fmt in (ALGEBRA, GROUPOID):
        h, g, _ = _hopf_from_dict(d, where)
        return Loaded("groupoid" if g else "algebra", h, p, digest, groupoid=g, hopf=h)
    h, g, _ = load_hopf(_field(d, "hopf", where), relative_to=p)
    if fmt == ACTION:
        A = _plain_algebra(_field(d, "module_algebra", where, dict), where + "/module_algebra")
        act = {}
        for (i, j, k), c in _accumulate(_entries(_field(d, "act", where), 3, (h.dim, A.dim, A.dim),
                                                  where + "/act"), where).items():
            act.setdefault((i, j), {})[k] = c
        pa = PartialAction(h, A, act, name=d.get("name", p.stem))
        return Loaded("action", pa, p, digest, groupoid=g, hopf=h)
    t = _field(d, "target", where, dict)
    B = matrix_algebra(_field(t, "matrix_algebra", where + "/target", int)) if "matrix_algebra" in t \
        else _plain_algebra(t, where + "/target", name="B")
    images = [dict() for _ in range(h.dim)]
    for (i, k), c in _accumulate(_entries(_field(d, "images", where), 2, (h.dim, B.dim),
                                          where + "/images"), where).items():
        images[i][k] = c
    pr = PartialRep(h, B, images, name=d.get("name", p.stem))
    return Loaded("parrep", pr, p, digest, groupoid=g, hopf=h)


# -- writers -----------------------------------------------------------------

def _sq(c):
    return fmt_q(c)


def _plain_algebra_dict(A):
    out = {"dim": A.dim}
    if getattr(A, "labels", None):
        out["labels"] = list(A.labels)
    out["mult"] = [[i, j, k, _sq(c)] for (i, j), v in sorted(A.table().items()) for k, c in sorted(v.items())]
    out["unit"] = [[k, _sq(c)] for k, c in sorted(A.one.items())]
    return out


def _matrix_rows(M):
    return [[i, j, _sq(M[i, j])] for j in range(M.cols) for i in range(M.rows) if M[i, j]]


def dump_algebra(h):
    out = {"format": ALGEBRA, "name": h.name, "labels": list(h.labels)}
    A = _plain_algebra_dict(h.alg)
    out["mult"], out["unit"] = A["mult"], A["unit"]
    out["comult"] = [[i, j, k, _sq(c)] for i, d in enumerate(h.coalg.comult) for (j, k), c in sorted(d.items())]
    out["counit"] = [_sq(c) for c in h.coalg.counit]
    out["antipode"] = _matrix_rows(h.antipode)
    if h.antipode_inverse_supplied:
        out["antipode_inverse"] = _matrix_rows(h.antipode_inverse)
    return out


def dump_groupoid(g):
    return {
        "format": GROUPOID, "name": g.name, "objects": list(g.objects),
        "arrows": [{"label": a, "source": g.source[a], "target": g.target[a]} for a in g.arrows],
        "identities": dict(g.identity),
        "compose": [[a, b, g.compose[(a, b)]] for a in g.arrows for b in g.arrows if (a, b) in g.compose],
        "inverse": dict(g.inverse),
    }


def dump_action(pa, hopf_ref, name=None):
    return {
        "format": ACTION, "name": name or pa.name, "hopf": hopf_ref,
        "module_algebra": _plain_algebra_dict(pa.a),
        "act": [[i, j, k, _sq(c)] for (i, j), v in sorted(pa.table().items()) for k, c in sorted(v.items())],
    }


def dump_parrep(pr, hopf_ref, name=None, target=None):
    return {
        "format": PARREP, "name": name or pr.name, "hopf": hopf_ref,
        "target": target if target is not None else _plain_algebra_dict(pr.target),
        "images": [[i, k, _sq(c)] for i, v in enumerate(pr.images) for k, c in sorted(v.items())],
    }


def dump_hpar(hp):
    """Carrier structure constants and bracket matrix of a computed ``H_par``."""
    C = hp.carrier
    out = {"format": "whapar-hpar/1", "base": hp.base.name, "dim": C.dim,
           "words": [list(w) for w in hp.words], "certification": hp.certification}
    A = _plain_algebra_dict(C)
    out["mult"], out["unit"] = A["mult"], A["unit"]
    out["bracket"] = _matrix_rows(hp.bracket)
    return out
