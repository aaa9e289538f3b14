"""
Exact dense linear algebra over a :class:`~monodef.fields.Field`.

Everything goes through one Gauss-Jordan routine that produces the reduced
row echelon form. The RREF of a matrix is unique, so kernel bases and
particular solutions built from it do not depend on pivoting order.
Elimination skips zero entries of the pivot row, which is what makes the
structure-constant matrices of the cochain complexes cheap to reduce.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import Field


class NotContained(ArithmeticError):
    """Raised when a subspace is not inside the ambient span."""


@dataclass(frozen=True)
class Matrix:
    field: Field
    rows: int
    cols: int
    entries: tuple  # row-major, length rows * cols

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}")

    @classmethod
    def from_rows(cls, field, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries = tuple(field(x) for r in rows for x in r)
        return cls(field, len(rows), cols, entries)

    @classmethod
    def from_columns(cls, field, columns, rows):
        columns = [list(c) for c in columns]
        data = [[columns[j][i] for j in range(len(columns))] for i in range(rows)]
        return cls.from_rows(field, data, cols=len(columns))

    @classmethod
    def identity(cls, field, n):
        return cls.from_rows(field, [[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zero(cls, field, rows, cols):
        return cls(field, rows, cols, (field.zero,) * (rows * cols))

    def row(self, i):
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            F = self.field
            ocols = [[other.entries[k * other.cols + j] for k in range(other.rows)]
                     for j in range(other.cols)]
            out = []
            for i in range(self.rows):
                r = self.row(i)
                for col in ocols:
                    out.append(F.reduce(sum((a * b for a, b in zip(r, col) if a), F.zero)))
            return Matrix(F, self.rows, other.cols, tuple(out))
        return mat_vec(self, other)


def mat_vec(m: Matrix, v):
    F = m.field
    if len(v) != m.cols:
        raise ValueError("shape mismatch")
    return [F.reduce(sum((a * b for a, b in zip(m.row(i), v) if a), F.zero))
            for i in range(m.rows)]


def rref(rows, ncols, field: Field):
    """Reduced row echelon form of a list of rows.

    Returns ``(nonzero_rows, pivot_columns)``.
    """
    F = field
    rows = [[F(x) for x in r] for r in rows]
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = F.inv(prow[c])
        nz = []
        for j in range(c, ncols):
            if prow[j] != 0:
                prow[j] = F.reduce(prow[j] * inv)
                nz.append(j)
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f != 0:
                for j in nz:
                    row[j] = F.reduce(row[j] - f * prow[j])
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rank(m: Matrix) -> int:
    return len(rref(m.to_rows(), m.cols, m.field)[1])


def kernel_basis(m: Matrix):
    """Null space basis, one vector per free column in ascending order.

    The vector for free column ``f`` has a 1 at ``f``, zeros at the other
    free columns, and minus the RREF entries at the pivot columns.
    """
    F = m.field
    R, pivots = rref(m.to_rows(), m.cols, F)
    pivset = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = [F.zero] * m.cols
        v[f] = F.one
        for row, p in zip(R, pivots):
            if row[f] != 0:
                v[p] = F.reduce(-row[f])
        basis.append(v)
    return basis


def solve_linear(m: Matrix, b):
    """One solution of ``m x = b`` or ``None`` if the system is inconsistent.

    Free variables are set to zero.
    """
    F = m.field
    if len(b) != m.rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {m.rows}")
    aug = [r + [F(x)] for r, x in zip(m.to_rows(), b)]
    R, pivots = rref(aug, m.cols + 1, F)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [F.zero] * m.cols
    for row, p in zip(R, pivots):
        x[p] = row[m.cols]
    return x


def echelon_basis(vectors, n, field: Field):
    """RREF rows spanning the same space as ``vectors`` (all of length n)."""
    return rref(vectors, n, field)


def _reduce_against(v, basis, pivots, F):
    v = list(v)
    for row, p in zip(basis, pivots):
        f = v[p]
        if f != 0:
            for j, x in enumerate(row):
                if x != 0:
                    v[j] = F.reduce(v[j] - f * x)
    return v


def quotient_representatives(sub, amb, n, field: Field):
    """Representatives of a basis of span(amb) / span(sub).

    Ambient echelon vectors are scanned in pivot order; each one that is
    independent of ``sub`` and the representatives chosen so far is
    reduced against them, scaled to a leading 1, and kept.
    """
    F = field
    sub_rows, sub_piv = rref(sub, n, F)
    amb_rows, amb_piv = rref(amb, n, F)
    joint = rref(amb_rows + sub_rows, n, F)[1]
    if len(joint) != len(amb_piv):
        raise NotContained("sub-span is not contained in the ambient span")
    basis = [list(r) for r in sub_rows]
    pivots = list(sub_piv)
    reps = []
    for a in amb_rows:
        v = _reduce_against(a, basis, pivots, F)
        lead = next((j for j, x in enumerate(v) if x != 0), None)
        if lead is None:
            continue
        inv = F.inv(v[lead])
        v = [F.reduce(x * inv) for x in v]
        reps.append(v)
        # keep the working basis fully reduced so later reductions stay exact
        for row in basis:
            f = row[lead]
            if f != 0:
                for j, x in enumerate(v):
                    if x != 0:
                        row[j] = F.reduce(row[j] - f * x)
        basis.append(v)
        pivots.append(lead)
    return reps
