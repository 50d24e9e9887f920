"""Exact linear algebra over the rationals.

Vectors are tuples of :class:`fractions.Fraction`. Matrices act on column
vectors; entry ``(i, j)`` of a linear map is the coefficient of the i-th
target basis vector in the image of the j-th source basis vector.

Tensor index convention: the basis vector ``e_i (x) e_j`` of ``V (x) W`` has
index ``i * dim(W) + j`` (left factor major).
"""

from fractions import Fraction
from itertools import product

from .kernels import rref_dense

__all__ = [
    "Fraction", "ZERO", "ONE", "Matrix", "Subspace",
    "as_fraction", "vec", "zero_vec", "basis_vec", "vadd", "vsub", "vscale",
    "vcombine", "is_zero", "rref", "rank", "kernel_basis", "image", "span",
    "solve_membership", "kron", "tensor_vec", "fmt_q",
    "sp_clean", "sp_axpy", "sp_scale", "sp_add", "sp_sub", "sp_from_dense", "sp_to_dense",
]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted: %r" % x)
    return Fraction(x)


def fmt_q(x):
    """Rational as a 'p/q' (or 'p') string."""
    x = as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def vec(values):
    return tuple(as_fraction(v) for v in values)


def zero_vec(n):
    return (ZERO,) * n


def basis_vec(n, i):
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a):
    return tuple(c * x for x in a)


def vcombine(terms, n):
    """Sum of ``c * v`` over ``(c, v)`` pairs."""
    out = [ZERO] * n
    for c, v in terms:
        if not c:
            continue
        for i, x in enumerate(v):
            if x:
                out[i] += c * x
    return tuple(out)


def is_zero(v):
    return not any(v)


def tensor_vec(a, b):
    """``a (x) b`` under the left-major convention."""
    return tuple(x * y for x in a for y in b)


def sp_clean(v):
    return {k: c for k, c in v.items() if c}


def sp_axpy(out, c, v):
    """In place ``out += c * v`` for sparse dict vectors; returns ``out``."""
    if not c:
        return out
    for k, x in v.items():
        y = out.get(k, ZERO) + c * x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out


def sp_scale(c, v):
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def sp_add(a, b):
    return sp_axpy(dict(a), ONE, b)


def sp_sub(a, b):
    return sp_axpy(dict(a), -ONE, b)


def sp_from_dense(v):
    return {i: as_fraction(x) for i, x in enumerate(v) if x}


def sp_to_dense(v, n):
    out = [ZERO] * n
    for i, x in v.items():
        out[i] = x
    return tuple(out)


class Matrix:
    """Immutable dense rational matrix (row-major storage)."""

    __slots__ = ("rows", "cols", "entries", "_csp")

    def __init__(self, rows, cols, entries):
        entries = tuple(as_fraction(x) for x in entries)
        if len(entries) != rows * cols:
            raise ValueError("expected %d entries, got %d" % (rows * cols, len(entries)))
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._csp = None

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, columns, rows):
        columns = [tuple(c) for c in columns]
        for c in columns:
            if len(c) != rows:
                raise ValueError("column length mismatch")
        return cls(rows, len(columns), [columns[j][i] for i in range(rows) for j in range(len(columns))])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [ZERO] * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j):
        return self.entries[j::self.cols]

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def columns(self):
        return [self.col(j) for j in range(self.cols)]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def apply(self, v):
        if len(v) != self.cols:
            raise ValueError("vector length %d != %d columns" % (len(v), self.cols))
        nz = [(j, x) for j, x in enumerate(v) if x]
        out = []
        e, c = self.entries, self.cols
        for i in range(self.rows):
            base = i * c
            s = ZERO
            for j, x in nz:
                a = e[base + j]
                if a:
                    s += a * x
            out.append(s)
        return tuple(out)

    def col_sparse(self, j):
        """Column ``j`` as a sparse dict (cached; do not mutate)."""
        if self._csp is None:
            self._csp = [sp_from_dense(self.col(k)) for k in range(self.cols)]
        return self._csp[j]

    def apply_sparse(self, x):
        out = {}
        for j, c in x.items():
            sp_axpy(out, c, self.col_sparse(j))
        return out

    @classmethod
    def from_sparse_columns(cls, columns, rows):
        return cls.from_columns([sp_to_dense(c, rows) for c in columns], rows)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch %s @ %s" % (self.shape, other.shape))
            cols = [self.apply(other.col(j)) for j in range(other.cols)]
            return Matrix.from_columns(cols, self.rows)
        return self.apply(tuple(other))

    def __add__(self, other):
        self._same_shape(other)
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def __mul__(self, scalar):
        s = as_fraction(scalar)
        return Matrix(self.rows, self.cols, [s * a for a in self.entries])

    __rmul__ = __mul__

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch %s vs %s" % (self.shape, other.shape))

    def transpose(self):
        return Matrix.from_rows(self.columns(), self.rows)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(fmt_q(x) for x in self.row(i)) for i in range(self.rows))
        return "Matrix(%dx%d: %s)" % (self.rows, self.cols, body)

    def is_zero(self):
        return not any(self.entries)

    def rank(self):
        return rank(self)

    def inverse(self):
        """Exact inverse; raises ValueError when singular or non-square."""
        if self.rows != self.cols:
            raise ValueError("non-square matrix has no inverse")
        n = self.rows
        aug = [list(self.row(i)) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        red, piv = rref_dense(aug, 2 * n)
        if piv[:n] != list(range(n)) or len(red) < n:
            raise ValueError("matrix is singular")
        return Matrix.from_rows([r[n:] for r in red[:n]], n)


def rref(m):
    """Reduced row echelon form of ``m`` and its pivot columns.

    Zero rows are kept at the bottom so the result has the shape of ``m``.
    """
    red, piv = rref_dense(m.to_rows(), m.cols)
    rows = list(red) + [(ZERO,) * m.cols] * (m.rows - len(red))
    return Matrix.from_rows(rows, m.cols), piv


def rank(m):
    return len(rref_dense(m.to_rows(), m.cols)[1])


class Subspace:
    """A subspace of ``Q^n``.

    ``basis`` is the basis coordinates are expressed in (the caller's when
    given, otherwise the echelon rows); ``echelon`` is the reduced row
    echelon form used for membership.
    """

    __slots__ = ("ambient_dim", "basis", "echelon", "pivots", "_to_basis")

    def __init__(self, ambient_dim, vectors=(), keep_basis=False):
        vectors = [vec(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError("vector of length %d in ambient dimension %d" % (len(v), ambient_dim))
        self.ambient_dim = ambient_dim
        k = len(vectors)
        if keep_basis and k:
            aug = [list(v) + [ONE if i == j else ZERO for j in range(k)] for i, v in enumerate(vectors)]
            red, piv = rref_dense(aug, ambient_dim + k)
            if len(piv) < k or piv[-1] >= ambient_dim:
                raise ValueError("basis vectors are linearly dependent")
            self.echelon = tuple(r[:ambient_dim] for r in red)
            self.pivots = tuple(piv)
            self._to_basis = tuple(r[ambient_dim:] for r in red)
            self.basis = tuple(vectors)
        else:
            red, piv = rref_dense(vectors, ambient_dim) if vectors else ([], [])
            self.echelon = tuple(red)
            self.pivots = tuple(piv)
            self._to_basis = None
            self.basis = self.echelon

    @property
    def dim(self):
        return len(self.echelon)

    def __len__(self):
        return self.dim

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient_dim)

    def echelon_coords(self, v):
        if len(v) != self.ambient_dim:
            raise ValueError("vector of length %d in ambient dimension %d" % (len(v), self.ambient_dim))
        coords = [v[p] for p in self.pivots]
        rest = list(v)
        for c, row in zip(coords, self.echelon):
            if c:
                for j, x in enumerate(row):
                    if x:
                        rest[j] -= c * x
        if any(rest):
            return None
        return tuple(coords)

    def coordinates(self, v):
        """Coordinates of ``v`` in ``basis``, or None when ``v`` is not a member."""
        c = self.echelon_coords(v)
        if c is None or self._to_basis is None:
            return c
        k = len(self.basis)
        out = [ZERO] * k
        for ci, t in zip(c, self._to_basis):
            if ci:
                for j in range(k):
                    if t[j]:
                        out[j] += ci * t[j]
        return tuple(out)

    def __contains__(self, v):
        return self.echelon_coords(v) is not None

    def vector(self, coords):
        return vcombine(zip(coords, self.basis), self.ambient_dim)

    def contains_subspace(self, other):
        return all(v in self for v in other.echelon)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim
                and self.echelon == other.echelon)

    def __hash__(self):
        return hash((self.ambient_dim, self.echelon))

    def __add__(self, other):
        return Subspace(self.ambient_dim, list(self.echelon) + list(other.echelon))


def span(vectors, ambient_dim):
    return Subspace(ambient_dim, vectors)


def kernel_basis(m):
    """Basis of ``{v : m v = 0}``, one vector per free column."""
    red, piv = rref_dense(m.to_rows(), m.cols)
    pivset = set(piv)
    out = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = [ZERO] * m.cols
        v[f] = ONE
        for row, p in zip(red, piv):
            v[p] = -row[f]
        out.append(tuple(v))
    return Subspace(m.cols, out)


def image(m):
    """Column space of ``m``."""
    return Subspace(m.rows, [c for c in m.columns() if any(c)])


def solve_membership(s, v):
    """Coordinates of ``v`` in the basis of ``s``; None if ``v`` is not in ``s``."""
    return s.coordinates(vec(v))


def kron(a, b):
    """Kronecker product with ``(a (x) b)(v (x) w) = a(v) (x) b(w)``."""
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    ent = [ZERO] * (rows * cols)
    for i, j in product(range(a.rows), range(a.cols)):
        x = a[i, j]
        if not x:
            continue
        for k, l in product(range(b.rows), range(b.cols)):
            y = b[k, l]
            if y:
                ent[(i * b.rows + k) * cols + j * b.cols + l] = x * y
    return Matrix(rows, cols, ent)
