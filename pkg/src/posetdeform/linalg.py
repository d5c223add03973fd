"""Sparse exact linear algebra over the rationals.

Plain Gaussian elimination with a deterministic pivot rule: columns are
processed left to right and the pivot is the live row of smallest index
with a nonzero entry in the current column.  Same matrix, same answer,
always.  Rank, a kernel basis, and image membership with an explicit
witness are all computed this way; nothing here ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction

F0 = Fraction(0)
F1 = Fraction(1)


class SparseMat:
    """Sparse matrix over Fraction: entries maps (row, col) -> value."""

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            for (r, c), v in entries.items():
                self.set(r, c, v)

    def set(self, r, c, v):
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError("entry (%d, %d) out of shape" % (r, c))
        v = v if isinstance(v, Fraction) else Fraction(v)
        if v == 0:
            self.entries.pop((r, c), None)
        else:
            self.entries[(r, c)] = v

    def get(self, r, c):
        return self.entries.get((r, c), F0)

    def add_to(self, r, c, v):
        self.set(r, c, self.get(r, c) + v)

    @classmethod
    def from_rows(cls, rows_data):
        rows = len(rows_data)
        cols = max((len(r) for r in rows_data), default=0)
        m = cls(rows, cols)
        for r, row in enumerate(rows_data):
            for c, v in enumerate(row):
                if v:
                    m.set(r, c, Fraction(v))
        return m

    @classmethod
    def identity(cls, n):
        m = cls(n, n)
        for i in range(n):
            m.set(i, i, F1)
        return m

    def transpose(self):
        t = SparseMat(self.cols, self.rows)
        for (r, c), v in self.entries.items():
            t.entries[(c, r)] = v
        return t

    def mul_vec(self, vec):
        if len(vec) != self.cols:
            raise ValueError("vector length %d != %d columns" % (len(vec), self.cols))
        out = [F0] * self.rows
        for (r, c), v in self.entries.items():
            x = vec[c]
            if x:
                out[r] += v * x
        return out

    def __repr__(self):
        return "SparseMat(%dx%d, %d nonzero)" % (self.rows, self.cols, len(self.entries))


def _eliminate(mat, rhs=None):
    """Forward elimination.  Returns (pivots, rowmap) where pivots is a
    list of (col, row) in column order and rowmap holds the surviving row
    dictionaries (col -> value, with the optional right-hand side stored
    under key BCOL).  Unpivoted rows end up empty except possibly BCOL.
    """
    BCOL = mat.cols  # sentinel column index for the rhs
    rowmap = {}
    colrows = {}
    for (r, c), v in mat.entries.items():
        row = rowmap.get(r)
        if row is None:
            row = rowmap[r] = {}
        row[c] = v
        s = colrows.get(c)
        if s is None:
            s = colrows[c] = set()
        s.add(r)
    if rhs is not None:
        for r, v in enumerate(rhs):
            if v:
                rowmap.setdefault(r, {})[BCOL] = v

    pivots = []
    pivoted = set()
    for c in range(mat.cols):
        live = colrows.get(c)
        if not live:
            continue
        cand = [r for r in live if r not in pivoted]
        if not cand:
            continue
        pr = min(cand)
        pivots.append((c, pr))
        pivoted.add(pr)
        prow = rowmap[pr]
        pval = prow[c]
        for r in sorted(live):
            if r == pr or r in pivoted:
                continue
            row = rowmap[r]
            factor = row[c] / pval
            for cc, vv in prow.items():
                nv = row.get(cc, F0) - factor * vv
                if nv == 0:
                    row.pop(cc, None)
                    if cc != BCOL:
                        cs = colrows.get(cc)
                        if cs is not None:
                            cs.discard(r)
                else:
                    if cc not in row and cc != BCOL:
                        colrows.setdefault(cc, set()).add(r)
                    row[cc] = nv
    return pivots, rowmap


def rank_kernel(mat):
    """Rank and an exact kernel basis.  Kernel vectors are built one per
    free column by back substitution; they are linearly independent by
    construction (each has a 1 in its own free coordinate)."""
    pivots, rowmap = _eliminate(mat)
    rank = len(pivots)
    pivot_cols = {c for c, _ in pivots}
    free_cols = [c for c in range(mat.cols) if c not in pivot_cols]
    kernel = []
    for fc in free_cols:
        x = [F0] * mat.cols
        x[fc] = F1
        for c, r in reversed(pivots):
            row = rowmap[r]
            s = F0
            for cc, vv in row.items():
                if cc != c and cc < mat.cols:
                    xv = x[cc]
                    if xv:
                        s += vv * xv
            x[c] = -s / row[c]
        kernel.append(x)
    return rank, kernel


def rank(mat):
    pivots, _ = _eliminate(mat)
    return len(pivots)


def solve_in_image(mat, b):
    """A witness x with mat*x == b, or None when b is not in the image.

    None is the normal negative answer here, not an error.  The witness is
    the deterministic particular solution with all free variables zero."""
    if len(b) != mat.rows:
        raise ValueError("rhs length %d != %d rows" % (len(b), mat.rows))
    BCOL = mat.cols
    b = [v if isinstance(v, Fraction) else Fraction(v) for v in b]
    pivots, rowmap = _eliminate(mat, rhs=b)
    pivoted = {r for _, r in pivots}
    for r, row in rowmap.items():
        if r not in pivoted and row.get(BCOL):
            return None
    x = [F0] * mat.cols
    for c, r in reversed(pivots):
        row = rowmap[r]
        s = row.get(BCOL, F0)
        for cc, vv in row.items():
            if cc != c and cc < mat.cols:
                xv = x[cc]
                if xv:
                    s -= vv * xv
        x[c] = s / row[c]
    return x
