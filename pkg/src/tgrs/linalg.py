"""Exact dense linear algebra over GF(q).

Plain Gaussian elimination with first-nonzero pivoting; in a field the
pivot magnitude is irrelevant so the scan order alone fixes the result.
All matrices are immutable; operations return new values.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import SingularMatrixError, ValidationError
from .gf import Field, FieldElement


class MatGF:
    """Immutable dense matrix over a finite field."""

    __slots__ = ("field", "rows", "cols", "_data")

    def __init__(self, field: Field, rows: Iterable[Iterable]):
        data = tuple(tuple(field.element(x) for x in row) for row in rows)
        if data:
            ncols = len(data[0])
            if any(len(r) != ncols for r in data):
                raise ValidationError("ragged rows in matrix")
        else:
            ncols = 0
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "_data", data)

    def __setattr__(self, *_):
        raise AttributeError("MatGF is immutable")

    def __reduce__(self):
        return (MatGF, (self.field, self._data))

    @classmethod
    def identity(cls, field: Field, n: int) -> "MatGF":
        return cls(field, ((1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "MatGF":
        return cls(field, ((0 for _ in range(cols)) for _ in range(rows)))

    @classmethod
    def vandermonde(cls, points: Sequence[FieldElement], nrows: int) -> "MatGF":
        """Row j holds the j-th powers of the points, j = 0..nrows-1."""
        field = points[0].field
        rows = []
        cur = [field.one()] * len(points)
        for _ in range(nrows):
            rows.append(tuple(cur))
            cur = [c * p for c, p in zip(cur, points)]
        return cls(field, rows)

    def __getitem__(self, ij) -> FieldElement:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[FieldElement, ...]:
        return self._data[i]

    def col(self, j: int) -> tuple[FieldElement, ...]:
        return tuple(r[j] for r in self._data)

    def row_list(self) -> list[list[FieldElement]]:
        return [list(r) for r in self._data]

    def transpose(self) -> "MatGF":
        return MatGF(self.field, zip(*self._data)) if self.rows else MatGF(self.field, [])

    def __matmul__(self, other: "MatGF") -> "MatGF":
        if self.field != other.field:
            raise ValidationError("matrices over different fields")
        if self.cols != other.rows:
            raise ValidationError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        bt = list(zip(*other._data)) if other.rows else []
        zero = self.field.zero()
        out = []
        for arow in self._data:
            orow = []
            for bcol in bt:
                acc = zero
                for a, b in zip(arow, bcol):
                    acc = acc + a * b
                orow.append(acc)
            out.append(orow)
        return MatGF(self.field, out)

    def stack(self, other: "MatGF") -> "MatGF":
        if self.field != other.field or self.cols != other.cols:
            raise ValidationError("stack requires equal field and column count")
        return MatGF(self.field, self._data + other._data)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "MatGF":
        return MatGF(self.field, ((self._data[i][j] for j in col_idx) for i in row_idx))

    def column_submatrix(self, col_idx: Sequence[int]) -> "MatGF":
        return self.submatrix(range(self.rows), col_idx)

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self._data for x in r)

    def __eq__(self, other) -> bool:
        return (isinstance(other, MatGF) and self.field == other.field
                and self._data == other._data)

    def __hash__(self) -> int:
        return hash((self.field, self._data))

    def __repr__(self) -> str:
        return f"MatGF({self.rows}x{self.cols} over GF({self.field.q}))"

    def to_lists(self) -> list[list]:
        if self.field.m == 1:
            return [[x.rep for x in r] for r in self._data]
        return [[list(x.rep) for x in r] for r in self._data]

    def pretty(self) -> str:
        """Space-aligned unsigned residues, one row per line."""
        cells = [[str(x.rep) if self.field.m == 1 else str(list(x.rep)) for x in r]
                 for r in self._data]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def matrix_from_lists(field: Field, rows) -> MatGF:
    return MatGF(field, rows)


# -- elimination kernels -------------------------------------------------------
#
# For prime fields the kernels run on raw int rows (mod p), which keeps the
# exhaustive searches (minors, column subsets) fast; extension fields take
# the generic FieldElement path.

def _int_rows(M: MatGF) -> list[list[int]]:
    return [[x.rep for x in r] for r in M._data]


def _rank_int(rows: list[list[int]], p: int) -> int:
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        prow = rows[r]
        for i in range(r + 1, nr):
            f = rows[i][c]
            if f:
                f = f * inv % p
                ri = rows[i]
                for j in range(c, nc):
                    ri[j] = (ri[j] - f * prow[j]) % p
        r += 1
        if r == nr:
            break
    return r


def _rank_generic(M: MatGF) -> int:
    rows = M.row_list()
    nr, nc = M.rows, M.cols
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if not rows[i][c].is_zero()), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        prow = rows[r]
        for i in range(r + 1, nr):
            f = rows[i][c]
            if not f.is_zero():
                f = f * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        r += 1
        if r == nr:
            break
    return r


def rank(M: MatGF) -> int:
    """Rank by Gaussian elimination with first-nonzero pivoting."""
    if M.rows == 0 or M.cols == 0:
        return 0
    if M.field.m == 1:
        return _rank_int(_int_rows(M), M.field.p)
    return _rank_generic(M)


def det(M: MatGF) -> FieldElement:
    """Exact determinant of a square matrix."""
    if M.rows != M.cols:
        raise ValidationError(f"determinant of non-square {M.rows}x{M.cols} matrix")
    field = M.field
    if M.rows == 0:
        return field.one()
    if field.m == 1:
        p = field.p
        rows = _int_rows(M)
        n = M.rows
        sign = 1
        acc = 1
        for c in range(n):
            piv = next((i for i in range(c, n) if rows[i][c]), None)
            if piv is None:
                return field.zero()
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                sign = -sign
            acc = acc * rows[c][c] % p
            inv = pow(rows[c][c], p - 2, p)
            prow = rows[c]
            for i in range(c + 1, n):
                f = rows[i][c]
                if f:
                    f = f * inv % p
                    ri = rows[i]
                    for j in range(c, n):
                        ri[j] = (ri[j] - f * prow[j]) % p
        return field.element(sign * acc)
    rows = M.row_list()
    n = M.rows
    acc = field.one()
    for c in range(n):
        piv = next((i for i in range(c, n) if not rows[i][c].is_zero()), None)
        if piv is None:
            return field.zero()
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            acc = -acc
        acc = acc * rows[c][c]
        inv = rows[c][c].inverse()
        for i in range(c + 1, n):
            f = rows[i][c]
            if not f.is_zero():
                f = f * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return acc


def rref(M: MatGF) -> tuple[MatGF, list[int]]:
    """Reduced row echelon form and the pivot column list."""
    field = M.field
    rows = M.row_list()
    nr, nc = M.rows, M.cols
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if not rows[i][c].is_zero()), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nr):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return MatGF(field, rows), pivots


def null_space(M: MatGF) -> MatGF:
    """Rows form a basis of {x : M x^T = 0}; row count = cols - rank."""
    field = M.field
    R, pivots = rref(M)
    free = [c for c in range(M.cols) if c not in pivots]
    basis = []
    for f in free:
        vec = [field.zero()] * M.cols
        vec[f] = field.one()
        for i, pc in enumerate(pivots):
            vec[pc] = -R[i, f]
        basis.append(vec)
    return MatGF(field, basis)


def solve(M: MatGF, b: Sequence[FieldElement]) -> list[FieldElement]:
    """Unique solution of M x = b for square invertible M."""
    if M.rows != M.cols or M.rows != len(b):
        raise ValidationError("solve requires a square system matching b")
    field = M.field
    rows = [list(r) + [field.element(x)] for r, x in zip(M._data, b)]
    n = M.rows
    for c in range(n):
        piv = next((i for i in range(c, n) if not rows[i][c].is_zero()), None)
        if piv is None:
            raise SingularMatrixError("singular system")
        rows[c], rows[piv] = rows[piv], rows[c]
        inv = rows[c][c].inverse()
        rows[c] = [x * inv for x in rows[c]]
        for i in range(n):
            if i != c and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [a - f * b2 for a, b2 in zip(rows[i], rows[c])]
    return [rows[i][n] for i in range(n)]


def row_space_equal(A: MatGF, B: MatGF) -> bool:
    """Row-space equality decided by rank(A) = rank(B) = rank(A stacked on B)."""
    ra, rb = rank(A), rank(B)
    return ra == rb == rank(A.stack(B))


def solve_vandermonde(points: Sequence[FieldElement], target_unit_index: int) -> list[FieldElement]:
    """The unique w with sum_i w_i points_i^j = [j == target] for j < n.

    Solved by direct elimination; the closed form lives in the symmetric
    function context and the two are cross-checked in the tests.
    """
    n = len(points)
    if n == 0:
        raise ValidationError("need at least one point")
    if len(set(points)) != n:
        raise SingularMatrixError("duplicate interpolation points")
    if not 0 <= target_unit_index <= n - 1:
        raise ValidationError(f"unit index {target_unit_index} out of range 0..{n - 1}")
    field = points[0].field
    V = MatGF.vandermonde(list(points), n)
    e = [field.zero()] * n
    e[target_unit_index] = field.one()
    return solve(V, e)


def det_rank_one_update(A: MatGF, u: Sequence[FieldElement], v: Sequence[FieldElement]) -> FieldElement:
    """det(A + u v^T) computed as det(A) (1 + v^T A^{-1} u); A must be invertible."""
    if A.rows != A.cols:
        raise ValidationError("rank-one update needs a square matrix")
    if len(u) != A.rows or len(v) != A.rows:
        raise ValidationError("update vectors must match the matrix size")
    dA = det(A)
    if dA.is_zero():
        raise SingularMatrixError("matrix must be invertible for the rank-one update")
    x = solve(A, list(u))
    field = A.field
    acc = field.one()
    for vi, xi in zip(v, x):
        acc = acc + field.element(vi) * xi
    return dA * acc
