"""Dense quaternion matrices and their basic algebra.

`QMatrix` is an immutable m x n array of `Quaternion` entries sharing one
scalar mode.  Container indexing (``A[i, j]``, `row`, `col`, submatrix
helpers) is 0-based like any Python sequence; the determinant anchors in
`qdet.ncdet` are 1-based to match the usual notation.

Rank is row rank computed by forward elimination with quaternionic
left-division, which is valid over a division ring.  The complex adjoint
embedding maps each entry a + bi + cj + dk to the 2x2 complex block

    [[a + bi,  c + di],
     [-c + di, a - bi]]

giving a multiplicative, star-preserving map into 2m x 2n complex
matrices; it is used only as an independent numeric oracle, and this
block convention is fixed project-wide because the oracle depends on it.
"""

import numpy as np

from .errors import ModeError, ShapeError, SingularError
from .scalar import EXACT, FLOAT, Quaternion, parse_quaternion


class QMatrix:
    """Immutable dense quaternion matrix with uniform scalar mode."""

    __slots__ = ("rows", "cols", "mode", "_entries")

    def __init__(self, entries):
        data = tuple(tuple(row) for row in entries)
        if not data or not data[0]:
            raise ShapeError("matrix must have at least one row and one column")
        ncols = len(data[0])
        for row in data:
            if len(row) != ncols:
                raise ShapeError("rows have inconsistent lengths")
        mode = data[0][0].mode
        for row in data:
            for q in row:
                if not isinstance(q, Quaternion):
                    raise TypeError(f"matrix entries must be Quaternion, got {type(q).__name__}")
                if q.mode != mode:
                    raise ModeError("matrix entries mix exact and float modes")
        self.rows = len(data)
        self.cols = ncols
        self.mode = mode
        self._entries = data

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, rows, cols, mode=EXACT):
        z = Quaternion.zero(mode)
        return cls([[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n, mode=EXACT):
        z = Quaternion.zero(mode)
        one = Quaternion.one(mode)
        return cls([[one if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, qs):
        qs = list(qs)
        z = Quaternion.zero(qs[0].mode)
        return cls([[qs[i] if i == j else z for j in range(len(qs))] for i in range(len(qs))])

    @classmethod
    def from_literals(cls, rows, mode=None):
        """Build a matrix from rows of quaternion literal strings."""
        return cls([[parse_quaternion(s, mode) for s in row] for row in rows])

    # -- access ---------------------------------------------------------

    def __getitem__(self, key):
        i, j = key
        return self._entries[i][j]

    def row(self, i):
        return self._entries[i]

    def col(self, j):
        return tuple(row[j] for row in self._entries)

    def entries(self):
        return self._entries

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self):
        return self.rows == self.cols

    # -- algebra --------------------------------------------------------

    def _check_mode(self, other):
        if self.mode != other.mode:
            raise ModeError(f"cannot combine {self.mode} and {other.mode} matrices")

    def __add__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        self._check_mode(other)
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape} matrices")
        return QMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._entries, other._entries)
            ]
        )

    def __sub__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return QMatrix([[-q for q in row] for row in self._entries])

    def __matmul__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        self._check_mode(other)
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        bcols = [other.col(j) for j in range(other.cols)]
        out = []
        for row in self._entries:
            out_row = []
            for bc in bcols:
                acc = Quaternion.zero(self.mode)
                for a, b in zip(row, bc):
                    acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return QMatrix(out)

    def __mul__(self, scalar):
        # Real scalar only; reals are central so the side does not matter.
        return QMatrix([[q * scalar for q in row] for row in self._entries])

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return QMatrix([[q / scalar for q in row] for row in self._entries])

    def __pow__(self, p):
        return mat_pow(self, p)

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return (
            self.mode == other.mode
            and self.shape == other.shape
            and self._entries == other._entries
        )

    def __hash__(self):
        return hash((self.mode, self._entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(q) for q in row) for row in self._entries)
        return f"QMatrix({self.rows}x{self.cols} {self.mode}: {body})"

    def conj_transpose(self):
        """Hermitian adjoint: (A*)_ij = conj(A_ji); satisfies (AB)* = B*A*."""
        return QMatrix(
            [[self._entries[i][j].conj() for i in range(self.rows)] for j in range(self.cols)]
        )

    @property
    def H(self):
        return self.conj_transpose()

    def is_hermitian(self, tol=None):
        """Whether A equals its conjugate transpose.

        Exact mode compares structurally.  Float mode allows a small
        absolute tolerance (default 1e-12 scaled by the largest entry)
        to absorb non-associative rounding in products like A @ A.H.
        """
        if not self.is_square():
            return False
        if self.mode == EXACT:
            if tol not in (None, 0):
                raise ValueError("tolerance is meaningless in exact mode")
            for i in range(self.rows):
                for j in range(i, self.cols):
                    if self._entries[i][j] != self._entries[j][i].conj():
                        return False
            return True
        if tol is None:
            scale = max(
                (abs(c) for row in self._entries for q in row for c in q.components()),
                default=0.0,
            )
            tol = 1e-12 * (1.0 + scale)
        for i in range(self.rows):
            for j in range(i, self.cols):
                d = self._entries[i][j] - self._entries[j][i].conj()
                if any(abs(c) > tol for c in d.components()):
                    return False
        return True

    def is_zero(self):
        return all(q.is_zero() for row in self._entries for q in row)

    def rank(self):
        return rank(self)

    def index_of(self):
        return index_of(self)

    def to_float(self):
        if self.mode == FLOAT:
            return self
        return QMatrix([[q.to_float() for q in row] for row in self._entries])


# ---------------------------------------------------------------------------
# Operation-style entry points
# ---------------------------------------------------------------------------


def matmul(a: QMatrix, b: QMatrix) -> QMatrix:
    """Row-by-column product keeping the noncommutative factor order a_is * b_sj."""
    return a @ b


def conj_transpose(a: QMatrix) -> QMatrix:
    return a.conj_transpose()


def mat_pow(a: QMatrix, p: int) -> QMatrix:
    """p-th power by iterated multiplication; p = 0 gives the identity."""
    if not a.is_square():
        raise ShapeError("matrix power requires a square matrix")
    if not isinstance(p, int) or p < 0:
        raise ValueError("exponent must be a nonnegative integer")
    acc = QMatrix.identity(a.rows, a.mode)
    for _ in range(p):
        acc = acc @ a
    return acc


def _float_pivot_tol(work):
    scale = max(
        (q.norm_sq() for row in work for q in row),
        default=0.0,
    )
    return 1e-20 * (1.0 + scale)


def rank(a: QMatrix) -> int:
    """Row rank by forward elimination with quaternionic left-division.

    In float mode a pivot is accepted when its squared norm exceeds a
    tolerance relative to the largest entry of the working matrix.
    """
    work = [list(row) for row in a.entries()]
    m, n = a.rows, a.cols
    tol = 0 if a.mode == EXACT else _float_pivot_tol(work)
    rk = 0
    for col in range(n):
        pivot_row = None
        if a.mode == EXACT:
            for r in range(rk, m):
                if not work[r][col].is_zero():
                    pivot_row = r
                    break
        else:
            best = tol
            for r in range(rk, m):
                nn = work[r][col].norm_sq()
                if nn > best:
                    best = nn
                    pivot_row = r
        if pivot_row is None:
            continue
        work[rk], work[pivot_row] = work[pivot_row], work[rk]
        pinv = work[rk][col].inv()
        for r in range(rk + 1, m):
            lead = work[r][col]
            if lead.is_zero():
                continue
            factor = lead * pinv
            work[r] = [x - factor * y for x, y in zip(work[r], work[rk])]
        rk += 1
        if rk == m:
            break
    return rk


def index_of(a: QMatrix) -> int:
    """Smallest k with rank(A^(k+1)) == rank(A^k); 0 iff A is nonsingular."""
    if not a.is_square():
        raise ShapeError("index is defined for square matrices only")
    n = a.rows
    prev = rank(a)
    if prev == n:
        return 0
    power = a
    k = 1
    while True:
        power = power @ a
        cur = rank(power)
        if cur == prev:
            return k
        prev = cur
        k += 1
        if k > n:  # rank strictly drops at most n times
            raise RuntimeError("index computation failed to stabilize")


def inverse_square(a: QMatrix) -> QMatrix:
    """Two-sided inverse of a square matrix by Gauss-Jordan elimination.

    Uses left row operations, so it solves A X = I; over a division ring a
    one-sided inverse of a square matrix is automatically two-sided.
    Raises `SingularError` when no acceptable pivot exists.
    """
    if not a.is_square():
        raise ShapeError("inverse requires a square matrix")
    n = a.rows
    work = [list(row) for row in a.entries()]
    aug = [list(row) for row in QMatrix.identity(n, a.mode).entries()]
    tol = 0 if a.mode == EXACT else _float_pivot_tol(work)
    for col in range(n):
        pivot_row = None
        if a.mode == EXACT:
            for r in range(col, n):
                if not work[r][col].is_zero():
                    pivot_row = r
                    break
        else:
            best = tol
            for r in range(col, n):
                nn = work[r][col].norm_sq()
                if nn > best:
                    best = nn
                    pivot_row = r
        if pivot_row is None:
            raise SingularError("matrix is singular")
        work[col], work[pivot_row] = work[pivot_row], work[col]
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pinv = work[col][col].inv()
        work[col] = [pinv * x for x in work[col]]
        aug[col] = [pinv * x for x in aug[col]]
        for r in range(n):
            if r == col:
                continue
            lead = work[r][col]
            if lead.is_zero():
                continue
            work[r] = [x - lead * y for x, y in zip(work[r], work[col])]
            aug[r] = [x - lead * y for x, y in zip(aug[r], aug[col])]
    return QMatrix(aug)


# ---------------------------------------------------------------------------
# Row/column surgery (0-based; all functions copy)
# ---------------------------------------------------------------------------


def replace_col(a: QMatrix, j: int, column) -> QMatrix:
    column = tuple(column)
    if len(column) != a.rows:
        raise ShapeError("replacement column has wrong length")
    return QMatrix(
        [
            [column[i] if jj == j else q for jj, q in enumerate(row)]
            for i, row in enumerate(a.entries())
        ]
    )


def replace_row(a: QMatrix, i: int, row) -> QMatrix:
    row = tuple(row)
    if len(row) != a.cols:
        raise ShapeError("replacement row has wrong length")
    return QMatrix([row if ii == i else r for ii, r in enumerate(a.entries())])


def submatrix(a: QMatrix, row_idx, col_idx) -> QMatrix:
    row_idx = tuple(row_idx)
    col_idx = tuple(col_idx)
    return QMatrix([[a[i, j] for j in col_idx] for i in row_idx])


def principal_submatrix(a: QMatrix, idx) -> QMatrix:
    return submatrix(a, idx, idx)


def delete_row_col(a: QMatrix, i: int, j: int) -> QMatrix:
    rows = [r for r in range(a.rows) if r != i]
    cols = [c for c in range(a.cols) if c != j]
    return submatrix(a, rows, cols)


def max_abs_diff(a: QMatrix, b: QMatrix) -> float:
    """Largest absolute componentwise difference, as a float."""
    if a.shape != b.shape:
        raise ShapeError(f"cannot compare {a.shape} with {b.shape}")
    worst = 0.0
    for ra, rb in zip(a.entries(), b.entries()):
        for qa, qb in zip(ra, rb):
            for ca, cb in zip(qa.components(), qb.components()):
                d = abs(float(ca) - float(cb))
                if d > worst:
                    worst = d
    return worst


# ---------------------------------------------------------------------------
# Complex adjoint embedding (numeric oracle)
# ---------------------------------------------------------------------------


def embed_complex(a: QMatrix) -> np.ndarray:
    """Complex adjoint embedding as a 2m x 2n numpy array.

    Multiplicative and star-preserving; rank doubles, so
    rank(A) == matrix_rank(embed_complex(A)) / 2.
    """
    out = np.zeros((2 * a.rows, 2 * a.cols), dtype=complex)
    for i in range(a.rows):
        for j in range(a.cols):
            w, x, y, z = (float(c) for c in a[i, j].components())
            out[2 * i, 2 * j] = complex(w, x)
            out[2 * i, 2 * j + 1] = complex(y, z)
            out[2 * i + 1, 2 * j] = complex(-y, z)
            out[2 * i + 1, 2 * j + 1] = complex(w, -x)
    return out


def unembed_complex(m: np.ndarray) -> QMatrix:
    """Inverse of `embed_complex` (float mode), averaging the redundant block
    entries so numeric noise off the embedded subspace is symmetrized away."""
    rows2, cols2 = m.shape
    if rows2 % 2 or cols2 % 2:
        raise ShapeError("embedded matrix must have even dimensions")
    out = []
    for i in range(rows2 // 2):
        row = []
        for j in range(cols2 // 2):
            tl = m[2 * i, 2 * j]
            tr = m[2 * i, 2 * j + 1]
            bl = m[2 * i + 1, 2 * j]
            br = m[2 * i + 1, 2 * j + 1]
            a = (tl.real + br.real) / 2.0
            b = (tl.imag - br.imag) / 2.0
            c = (tr.real - bl.real) / 2.0
            d = (tr.imag + bl.imag) / 2.0
            row.append(Quaternion(a, b, c, d, FLOAT))
        out.append(row)
    return QMatrix(out)
