"""Exact linear algebra over the coefficient field.

The public Matrix type is dense (entries addressed by [row][col]).  The
elimination engine behind rank/kernel_basis/in_column_span works on sparse
integer rows: rational entries are cleared to integers row by row, updates are
fraction-free cross-multiplications, and every updated row is divided by the
gcd of its entries.  Pivots are chosen by a Markowitz fill estimate with a
smallest-entry tie-break.  Extension-field matrices take a small dense
field-division path instead; results are exact either way.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .ring import ExtElem, QQ, RingError


class Matrix:
    __slots__ = ("rows", "cols", "entries", "field")

    def __init__(self, rows: int, cols: int, entries, field=QQ):
        if rows < 0 or cols < 0:
            raise RingError("negative matrix dimensions")
        self.rows = rows
        self.cols = cols
        self.field = field
        self.entries = [[field.coerce(v) for v in row] for row in entries]
        if len(self.entries) != rows or any(len(r) != cols for r in self.entries):
            raise RingError("entry grid does not match declared dimensions")

    @staticmethod
    def zero(rows: int, cols: int, field=QQ) -> "Matrix":
        z = field.zero
        return Matrix(rows, cols, [[z] * cols for _ in range(rows)], field)

    @staticmethod
    def identity(n: int, field=QQ) -> "Matrix":
        m = Matrix.zero(n, n, field)
        for i in range(n):
            m.entries[i][i] = field.one
        return m

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            [[self.entries[r][c] for r in range(self.rows)] for c in range(self.cols)],
            self.field,
        )

    def mul_vector(self, v):
        if len(v) != self.cols:
            raise RingError("vector length does not match column count")
        out = []
        for r in range(self.rows):
            acc = self.field.zero
            row = self.entries[r]
            for c, x in enumerate(v):
                if not self.field.is_zero(x):
                    acc = acc + row[c] * x
            out.append(acc)
        return out

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise RingError("inner dimensions do not match")
        out = Matrix.zero(self.rows, other.cols, self.field)
        for i in range(self.rows):
            for k in range(self.cols):
                a = self.entries[i][k]
                if self.field.is_zero(a):
                    continue
                for j in range(other.cols):
                    b = other.entries[k][j]
                    if not self.field.is_zero(b):
                        out.entries[i][j] = out.entries[i][j] + a * b
        return out

    def is_zero(self) -> bool:
        return all(self.field.is_zero(v) for row in self.entries for v in row)

    def __repr__(self):
        return "Matrix(%dx%d over %r)" % (self.rows, self.cols, self.field)


# ---------------------------------------------------------------------------
# sparse fraction-free elimination over the integers


def _int_rows(matrix: Matrix):
    """Clear each row to coprime integers (scaling rows never changes rank or
    kernel).  Returns a list of {col: int} dicts, zero rows dropped."""
    rows = []
    for raw in matrix.entries:
        num = {}
        denom_lcm = 1
        for c, v in enumerate(raw):
            if v == 0:
                continue
            f = Fraction(v)
            num[c] = f
            denom_lcm = denom_lcm * f.denominator // math.gcd(denom_lcm, f.denominator)
        if not num:
            continue
        ints = {c: int(f * denom_lcm) for c, f in num.items()}
        g = 0
        for u in ints.values():
            g = math.gcd(g, u)
        rows.append({c: u // g for c, u in ints.items()})
    return rows


def _reduce_row(row):
    g = 0
    for v in row.values():
        g = math.gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        for c in row:
            row[c] //= g
    return row


def _sparse_eliminate(rows, ncols):
    """Echelonize sparse integer rows in place.  Returns (pivots, rows) where
    pivots is a list of (row_index, col) in elimination order and each listed
    row has its pivot as the only... (not fully reduced; forward elimination
    only).  Rows not listed in pivots are zero afterwards."""
    col_count = {}
    for r in rows:
        for c in r:
            col_count[c] = col_count.get(c, 0) + 1
    active = list(range(len(rows)))
    pivots = []
    while True:
        best = None
        for ri in active:
            row = rows[ri]
            if not row:
                continue
            rlen = len(row)
            for c, v in row.items():
                score = (rlen - 1) * (col_count.get(c, 1) - 1)
                size = v if v >= 0 else -v
                cand = (score, size, c, ri)
                if best is None or cand < best:
                    best = cand
        if best is None:
            break
        _, _, pc, pr = best
        prow = rows[pr]
        pval = prow[pc]
        pivots.append((pr, pc))
        active.remove(pr)
        for c in prow:
            col_count[c] -= 1
        for ri in active:
            row = rows[ri]
            v = row.get(pc)
            if v is None:
                continue
            # fraction-free update: row <- pval*row - v*prow, then gcd-reduce
            for c in row:
                col_count[c] -= 1
            for c, pv in prow.items():
                nv = pval * row.get(c, 0) - v * pv
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
            for c in list(row):
                if c not in prow:
                    row[c] = pval * row[c]
            _reduce_row(row)
            for c in row:
                col_count[c] = col_count.get(c, 0) + 1
    return pivots


def _field_eliminate(matrix: Matrix):
    """Dense Gaussian elimination with field division, for extension fields.
    Returns (pivot_cols, echelon_rows) with echelon rows over the field."""
    field = matrix.field
    rows = [list(r) for r in matrix.entries]
    pivot_cols = []
    pr = 0
    for pc in range(matrix.cols):
        sel = None
        for r in range(pr, len(rows)):
            if not field.is_zero(rows[r][pc]):
                sel = r
                break
        if sel is None:
            continue
        rows[pr], rows[sel] = rows[sel], rows[pr]
        inv_p = field.one / rows[pr][pc]
        rows[pr] = [v * inv_p for v in rows[pr]]
        for r in range(len(rows)):
            if r != pr and not field.is_zero(rows[r][pc]):
                f = rows[r][pc]
                rows[r] = [u - f * v for u, v in zip(rows[r], rows[pr])]
        pivot_cols.append(pc)
        pr += 1
        if pr == len(rows):
            break
    return pivot_cols, rows[: len(pivot_cols)]


def _is_rational_matrix(matrix: Matrix) -> bool:
    return not any(isinstance(v, ExtElem) for row in matrix.entries for v in row)


def rank(matrix: Matrix) -> int:
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    if _is_rational_matrix(matrix):
        rows = _int_rows(matrix)
        return len(_sparse_eliminate(rows, matrix.cols))
    pivot_cols, _ = _field_eliminate(matrix)
    return len(pivot_cols)


def _rref_from_echelon(pivots, rows, ncols):
    """Back-substitute echelon integer rows into a reduced form over Q.
    Returns (pivot_cols sorted, {pivot_col: {col: Fraction}}) rows normalized
    to pivot 1."""
    frac_rows = {}
    order = []
    for pr, pc in pivots:
        row = rows[pr]
        pv = Fraction(row[pc])
        frac_rows[pc] = {c: Fraction(v) / pv for c, v in row.items()}
        order.append(pc)
    # eliminate pivot columns upward; process pivots in reverse order
    for idx in range(len(order) - 1, -1, -1):
        pc = order[idx]
        target = frac_rows[pc]
        for later in order[idx + 1 :]:
            f = target.get(later)
            if f is None or f == 0:
                continue
            for c, v in frac_rows[later].items():
                nv = target.get(c, Fraction(0)) - f * v
                if nv:
                    target[c] = nv
                else:
                    target.pop(c, None)
    return sorted(order), frac_rows


def kernel_basis(matrix: Matrix):
    """Exact basis of the right null space; each vector v satisfies Mv = 0.
    Vectors are lists over the field; rational path returns Fractions."""
    if matrix.cols == 0:
        return []
    field = matrix.field
    if matrix.rows == 0:
        basis = []
        for c in range(matrix.cols):
            v = [field.zero] * matrix.cols
            v[c] = field.one
            basis.append(v)
        return basis
    if _is_rational_matrix(matrix):
        rows = _int_rows(matrix)
        pivots = _sparse_eliminate(rows, matrix.cols)
        pivot_cols, frac_rows = _rref_from_echelon(pivots, rows, matrix.cols)
        pivot_set = set(pivot_cols)
        free_cols = [c for c in range(matrix.cols) if c not in pivot_set]
        basis = []
        for fc in free_cols:
            v = [Fraction(0)] * matrix.cols
            v[fc] = Fraction(1)
            for pc in pivot_cols:
                coef = frac_rows[pc].get(fc)
                if coef is not None:
                    v[pc] = -coef
            basis.append(v)
        return basis
    pivot_cols, ech = _field_eliminate(matrix)
    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(matrix.cols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        v = [field.zero] * matrix.cols
        v[fc] = field.one
        for r, pc in enumerate(pivot_cols):
            v[pc] = -ech[r][fc]
        basis.append(v)
    return basis


def in_column_span(matrix: Matrix, v):
    """Decide whether v lies in the column span; on success also return
    witness coefficients w with M w = v."""
    if len(v) != matrix.rows:
        raise RingError("vector length does not match row count")
    field = matrix.field
    vv = [field.coerce(u) for u in v]
    if all(field.is_zero(u) for u in vv):
        return True, [field.zero] * matrix.cols
    if matrix.cols == 0:
        return False, None
    aug = Matrix(
        matrix.rows,
        matrix.cols + 1,
        [row + [vv[r]] for r, row in enumerate(matrix.entries)],
        field,
    )
    for k in kernel_basis(aug):
        last = k[matrix.cols]
        if not field.is_zero(last):
            scale = field.one / last if not isinstance(last, Fraction) else None
            if scale is None:
                witness = [-u / last for u in k[: matrix.cols]]
            else:
                witness = [-(u * scale) for u in k[: matrix.cols]]
            return True, witness
    return False, None
