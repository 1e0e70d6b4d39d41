"""Exact dense matrices over the cyclotomic scalars and echelon-form solvers.

The elimination core works on sparse rows (dict column -> scalar) because the
larger systems in this package (truncated ideals, automorphism lifting
systems) are very sparse; the dense matrix type is a thin wrapper around it.
Pivoting is always "first nonzero column, first nonzero row": with exact
arithmetic no numerical pivoting is needed and the reduced echelon form is
canonical, so identical inputs give bit-identical outputs.
"""

from .errors import SchemaError
from .scalars import ONE, ZERO, CycScalar, scalar_from_json, scalar_to_json


class ScalarMatrix:
    """Immutable dense rows x cols matrix with CycScalar entries, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError(
                f"entry count {len(entries)} does not match {rows}x{cols}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows_of_entries):
        nr = len(rows_of_entries)
        nc = len(rows_of_entries[0]) if nr else 0
        flat = []
        for row in rows_of_entries:
            if len(row) != nc:
                raise ValueError("ragged rows")
            flat.extend(CycScalar._coerce(x) for x in row)
        return cls(nr, nc, flat)

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    def entry(self, i, j):
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def is_zero(self):
        return all(e.is_zero() for e in self.entries)

    def is_square(self):
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other):
        self._check_same_shape(other)
        return ScalarMatrix(
            self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)]
        )

    def __sub__(self, other):
        self._check_same_shape(other)
        return ScalarMatrix(
            self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)]
        )

    def __neg__(self):
        return ScalarMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c):
        c = CycScalar._coerce(c)
        return ScalarMatrix(self.rows, self.cols, [c * a for a in self.entries])

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        n, m, k = self.rows, self.cols, other.cols
        out = []
        for i in range(n):
            base = i * m
            for j in range(k):
                acc = ZERO
                for p in range(m):
                    a = self.entries[base + p]
                    if a.is_zero():
                        continue
                    b = other.entries[p * k + j]
                    if b.is_zero():
                        continue
                    acc = acc + a * b
                out.append(acc)
        return ScalarMatrix(n, k, out)

    def kron(self, other):
        """Kronecker (tensor) product."""
        ra, ca, rb, cb = self.rows, self.cols, other.rows, other.cols
        out = []
        for i in range(ra * rb):
            ia, ib = divmod(i, rb)
            for j in range(ca * cb):
                ja, jb = divmod(j, cb)
                out.append(self.entry(ia, ja) * other.entry(ib, jb))
        return ScalarMatrix(ra * rb, ca * cb, out)

    def _check_same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __repr__(self):
        body = "; ".join(
            ", ".join(str(e) for e in self.row(i)) for i in range(self.rows)
        )
        return f"ScalarMatrix({self.rows}x{self.cols}: {body})"


def matrix_to_json(m):
    return [[scalar_to_json(m.entry(i, j)) for j in range(m.cols)] for i in range(m.rows)]


def matrix_from_json(doc, path, rows=None, cols=None):
    if not isinstance(doc, list) or not doc or not all(isinstance(r, list) for r in doc):
        raise SchemaError(path, "matrix must be a non-empty list of rows")
    nr = len(doc)
    nc = len(doc[0])
    if any(len(r) != nc for r in doc):
        raise SchemaError(path, "ragged matrix rows")
    if rows is not None and nr != rows or cols is not None and nc != cols:
        raise SchemaError(path, f"expected a {rows}x{cols} matrix, got {nr}x{nc}")
    flat = [
        scalar_from_json(doc[i][j], f"{path}[{i}][{j}]")
        for i in range(nr)
        for j in range(nc)
    ]
    return ScalarMatrix(nr, nc, flat)


def _row_submul(target, pivot_row, factor):
    """target -= factor * pivot_row, dropping entries that cancel to zero."""
    for col, v in pivot_row.items():
        cur = target.get(col)
        nv = -(factor * v) if cur is None else cur - factor * v
        if nv.is_zero():
            if cur is not None:
                del target[col]
        else:
            target[col] = nv


def sparse_rref(rows, ncols):
    """Reduce sparse rows (dict col -> nonzero scalar) to reduced echelon form.

    Mutates `rows` in place and returns the pivot list [(row_index, col), ...].
    Eliminates above and below each pivot as it is found, so on return the
    first len(pivots) rows are the canonical RREF and the rest are empty.
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pivot_at = None
        for i in range(r, nrows):
            if c in rows[i]:
                pivot_at = i
                break
        if pivot_at is None:
            continue
        rows[r], rows[pivot_at] = rows[pivot_at], rows[r]
        piv = rows[r]
        lead = piv[c]
        if lead != ONE:
            inv = lead.inverse()
            for col in piv:
                piv[col] = piv[col] * inv
        for i in range(nrows):
            if i != r and c in rows[i]:
                _row_submul(rows[i], piv, rows[i][c])
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break
    return pivots

def sparse_kernel_basis(rows, pivots, ncols):
    """Kernel basis from an RREF produced by sparse_rref.

    One vector per free column, with a 1 in the free coordinate: the
    canonical reduced basis, ordered by free column.
    """
    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = {free: ONE}
        for ri, c in pivots:
            coeff = rows[ri].get(free)
            if coeff is not None:
                vec[c] = -coeff
        basis.append(vec)
    return basis


def _dense_rows(m):
    rows = []
    for i in range(m.rows):
        row = {}
        base = i * m.cols
        for j in range(m.cols):
            e = m.entries[base + j]
            if not e.is_zero():
                row[j] = e
        rows.append(row)
    return rows


def rank_and_kernel(m):
    """Exact rank and reduced kernel basis of a dense matrix.

    Returns (rank, [kernel vectors]) with each vector a tuple of length
    m.cols; rank + len(kernel) == m.cols.
    """
    rows = _dense_rows(m)
    pivots = sparse_rref(rows, m.cols)
    kernel = sparse_kernel_basis(rows, pivots, m.cols)
    dense = [
        tuple(vec.get(j, ZERO) for j in range(m.cols)) for vec in kernel
    ]
    return len(pivots), dense


def solve_linear(a, b):
    """One exact solution of A x = b, or None when inconsistent.

    Free variables are set to zero, so the answer is canonical.
    """
    if len(b) != a.rows:
        raise ValueError(f"rhs length {len(b)} does not match {a.rows} rows")
    rows = _dense_rows(a)
    bcol = a.cols
    for i, v in enumerate(b):
        v = CycScalar._coerce(v)
        if not v.is_zero():
            rows[i][bcol] = v
    pivots = sparse_rref(rows, bcol + 1)
    if any(c == bcol for _, c in pivots):
        return None
    x = [ZERO] * a.cols
    for ri, c in pivots:
        x[c] = rows[ri].get(bcol, ZERO)
    return tuple(x)


def invert(m):
    """Exact inverse of a square matrix, or None if singular."""
    if not m.is_square():
        raise ValueError("only square matrices can be inverted")
    n = m.rows
    rows = _dense_rows(m)
    for i in range(n):
        rows[i][n + i] = ONE
    pivots = sparse_rref(rows, 2 * n)
    if len(pivots) < n or any(c >= n for _, c in pivots[:n]):
        return None
    flat = []
    for i in range(n):
        for j in range(n):
            flat.append(rows[i].get(n + j, ZERO))
    return ScalarMatrix(n, n, flat)
