"""Pure-Python reference versions of the exact arithmetic kernels.

The compiled module ``_kernels`` (Cython) implements the same functions with
the same signatures; :mod:`whapar.kernels` picks one at import time.
"""

from fractions import Fraction
from heapq import heapify, heappop, heappush
from math import gcd

__all__ = ["rref_dense", "SparseEchelon", "WordRewriter"]


def _integer_row(row):
    den = 1
    for x in row:
        if x.__class__ is Fraction:
            d = x.denominator
            if d != 1:
                den = den * d // gcd(den, d)
    out = []
    for x in row:
        if x.__class__ is Fraction:
            out.append(x.numerator * (den // x.denominator))
        else:
            out.append(int(x) * den)
    return out


def _primitive(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def rref_dense(rows, ncols):
    """Reduced row echelon form of a dense rational matrix.

    Elimination runs fraction-free on integer rows (content removed after each
    step) and converts back to ``Fraction`` at the end. Returns the nonzero
    rows of the RREF and the list of pivot columns.
    """
    work = [_integer_row(r) for r in rows]
    for r in work:
        if len(r) != ncols:
            raise ValueError("row length %d != %d" % (len(r), ncols))
    nrows = len(work)
    pivots = []
    top = 0
    for c in range(ncols):
        if top == nrows:
            break
        best = -1
        best_abs = 0
        for i in range(top, nrows):
            v = work[i][c]
            if v:
                a = -v if v < 0 else v
                if best < 0 or a < best_abs:
                    best, best_abs = i, a
                    if a == 1:
                        break
        if best < 0:
            continue
        if best != top:
            work[top], work[best] = work[best], work[top]
        prow = work[top]
        p = prow[c]
        for i in range(nrows):
            if i == top:
                continue
            row = work[i]
            a = row[c]
            if not a:
                continue
            g = gcd(p, a)
            pm, am = p // g, a // g
            work[i] = _primitive([pm * x - am * y for x, y in zip(row, prow)])
        pivots.append(c)
        top += 1
    out = []
    for i, c in enumerate(pivots):
        row = work[i]
        p = row[c]
        out.append(tuple(Fraction(x, p) for x in row))
    return out, pivots


class SparseEchelon:
    """Incremental semi-echelon basis of sparse rational vectors.

    Vectors are dicts ``{int key: Fraction}``. Each stored row is normalised
    so that its largest key (the pivot) has coefficient 1; no two rows share a
    pivot. ``reduce`` eliminates every pivot key from a vector.
    """

    def __init__(self):
        self.rows = {}

    def __len__(self):
        return len(self.rows)

    def __contains__(self, key):
        return key in self.rows

    def reduce(self, vec):
        rows = self.rows
        v = {k: c for k, c in vec.items() if c}
        if not rows or not v:
            return v
        heap = [-k for k in v]
        heapify(heap)
        out = {}
        while heap:
            k = -heappop(heap)
            c = v.pop(k, 0)
            if not c:
                continue
            row = rows.get(k)
            if row is None:
                out[k] = c
                continue
            for kk, rc in row.items():
                if kk == k:
                    continue
                if kk in v:
                    v[kk] = v[kk] - c * rc
                else:
                    v[kk] = -c * rc
                    heappush(heap, -kk)
        return out

    def add(self, vec):
        """Insert ``vec``; return its new pivot, or None if it was dependent."""
        r = self.reduce(vec)
        if not r:
            return None
        p = max(r)
        c = r[p]
        if c != 1:
            inv = 1 / Fraction(c)
            r = {k: x * inv for k, x in r.items()}
        self.rows[p] = r
        return p


class WordRewriter:
    """Normal forms of words modulo a set of leading-word rewrite rules.

    ``rules`` maps a leading word (tuple of letters) to a tail, a dict
    ``{word: Fraction}`` of words strictly smaller in degree-lexicographic
    order. Normal forms are memoised until the rule set changes.
    """

    def __init__(self):
        self.rules = {}
        self.lengths = set()
        self._memo = {}

    def set_rule(self, lead, tail):
        self.rules[lead] = tail
        self.lengths.add(len(lead))
        self._memo.clear()

    def drop_rule(self, lead):
        del self.rules[lead]
        self.lengths = {len(w) for w in self.rules}
        self._memo.clear()

    def find(self, word):
        """Leftmost (start, length) occurrence of a leading word, or None."""
        rules = self.rules
        n = len(word)
        lengths = sorted(self.lengths)
        for i in range(n):
            for L in lengths:
                if i + L > n:
                    break
                if word[i:i + L] in rules:
                    return i, L
        return None

    def is_normal(self, word):
        return self.find(word) is None

    def normal_word(self, word):
        """Normal form of a single word as a dict ``{word: Fraction}``."""
        memo = self._memo
        hit = memo.get(word)
        if hit is not None:
            return hit
        loc = self.find(word)
        if loc is None:
            res = {word: Fraction(1)}
        else:
            i, L = loc
            pre, post = word[:i], word[i + L:]
            res = {}
            for w, c in self.rules[word[i:i + L]].items():
                for ww, cc in self.normal_word(pre + w + post).items():
                    x = res.get(ww, 0) + c * cc
                    if x:
                        res[ww] = x
                    else:
                        res.pop(ww, None)
        memo[word] = res
        return res

    def normal_form(self, elem):
        out = {}
        for w, c in elem.items():
            if not c:
                continue
            for ww, cc in self.normal_word(w).items():
                x = out.get(ww, 0) + c * cc
                if x:
                    out[ww] = x
                else:
                    out.pop(ww, None)
        return out
