"""Dense matrices over a finite field.

Matrices are immutable values: every operation returns a new matrix.  Row,
column and coordinate indices taken by the named operations (``scale_row``,
``scale_col``, ``delete_rc``, pivot lists) are 1-based; Python item access
``A[i, j]`` stays 0-based.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionError, FieldMismatchError, HypothesisError
from .gf import Felt, Field, as_codes, render_code


class MatGF:
    """A ``rows x cols`` matrix of element codes over ``field``."""

    __slots__ = ("field", "data")

    def __init__(self, field: Field, data):
        arr = np.array(data, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise DimensionError("matrix data must be two-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise DimensionError(f"entries must be element codes in [0, {field.q})")
        arr.setflags(write=False)
        self.field = field
        self.data = arr

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Sequence], cols: int | None = None) -> MatGF:
        """Build from rows of Felts, element strings or integer codes."""
        coded = [as_codes(field, r) for r in rows]
        if not coded:
            return cls(field, np.zeros((0, cols or 0), dtype=np.int64))
        width = len(coded[0])
        if any(len(r) != width for r in coded):
            raise DimensionError("ragged rows")
        return cls(field, coded)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def __getitem__(self, idx) -> Felt:
        i, j = idx
        return Felt(self.field, int(self.data[i, j]))

    def row(self, i: int) -> list[Felt]:
        return [Felt(self.field, int(v)) for v in self.data[i]]

    def to_lists(self) -> list[list[Felt]]:
        return [self.row(i) for i in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, MatGF):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and bool(np.array_equal(self.data, other.data)))

    def __hash__(self):
        return hash((self.field, self.shape, self.data.tobytes()))

    def __repr__(self):
        return f"MatGF({self.rows}x{self.cols})\n{self.render()}"

    def render(self) -> str:
        return "\n".join(" ".join(render_code(self.field, int(v)) for v in r) for r in self.data)

    def is_zero(self) -> bool:
        return not self.data.any()

    @property
    def T(self) -> MatGF:
        return transpose(self)

    def __matmul__(self, other: MatGF) -> MatGF:
        return matmul(self, other)

    def __add__(self, other: MatGF) -> MatGF:
        _same_field(self, other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return MatGF(self.field, self.field.add(self.data, other.data))

    def __sub__(self, other: MatGF) -> MatGF:
        _same_field(self, other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot subtract {other.shape} from {self.shape}")
        return MatGF(self.field, self.field.sub(self.data, other.data))

    def submatrix(self, rows=None, cols=None) -> MatGF:
        """0-based slicing helper: ``rows``/``cols`` are slices or index lists."""
        d = self.data
        if rows is not None:
            d = d[rows, :] if isinstance(rows, slice) else d[list(rows), :]
        if cols is not None:
            d = d[:, cols] if isinstance(cols, slice) else d[:, list(cols)]
        return MatGF(self.field, d.reshape(len(d), -1) if d.size == 0 else d)


def _same_field(*mats: MatGF) -> None:
    f = mats[0].field
    for m in mats[1:]:
        if m.field != f:
            raise FieldMismatchError("matrices over different fields")


def zeros(field: Field, rows: int, cols: int) -> MatGF:
    return MatGF(field, np.zeros((rows, cols), dtype=np.int64))


def identity(field: Field, n: int) -> MatGF:
    return MatGF(field, np.eye(n, dtype=np.int64))


def diag(field: Field, values: Sequence) -> MatGF:
    codes = as_codes(field, values)
    d = np.zeros((len(codes), len(codes)), dtype=np.int64)
    d[np.arange(len(codes)), np.arange(len(codes))] = codes
    return MatGF(field, d)


def transpose(A: MatGF) -> MatGF:
    return MatGF(A.field, A.data.T)


def matmul(A: MatGF, B: MatGF) -> MatGF:
    _same_field(A, B)
    if A.cols != B.rows:
        raise DimensionError(f"cannot multiply {A.shape} by {B.shape}")
    f = A.field
    if A.cols == 0:
        return zeros(f, A.rows, B.cols)
    prod = f.mul(A.data[:, :, None], B.data[None, :, :])
    return MatGF(f, f.sum(prod, axis=1))


def gram(A: MatGF) -> MatGF:
    """``A A^T``."""
    return matmul(A, transpose(A))


def vstack(*mats: MatGF) -> MatGF:
    _same_field(*mats)
    cols = {m.cols for m in mats if m.rows}
    if len(cols) > 1:
        raise DimensionError("vstack needs equal column counts")
    width = cols.pop() if cols else mats[0].cols
    parts = [m.data if m.rows else np.zeros((0, width), dtype=np.int64) for m in mats]
    return MatGF(mats[0].field, np.vstack(parts))


def hstack(*mats: MatGF) -> MatGF:
    _same_field(*mats)
    if len({m.rows for m in mats}) > 1:
        raise DimensionError("hstack needs equal row counts")
    return MatGF(mats[0].field, np.hstack([m.data for m in mats]))


def _unit(field: Field, lam) -> int:
    (code,) = as_codes(field, [lam])
    return code


def scale_row(A: MatGF, index: int, lam) -> MatGF:
    """Multiply row ``index`` (1-based) by ``lam``."""
    if not 1 <= index <= A.rows:
        raise DimensionError(f"row index {index} out of range 1..{A.rows}")
    d = A.data.copy()
    d[index - 1] = A.field.mul(d[index - 1], _unit(A.field, lam))
    return MatGF(A.field, d)


def scale_col(A: MatGF, index: int, lam) -> MatGF:
    """Multiply column ``index`` (1-based) by ``lam``."""
    if not 1 <= index <= A.cols:
        raise DimensionError(f"column index {index} out of range 1..{A.cols}")
    d = A.data.copy()
    d[:, index - 1] = A.field.mul(d[:, index - 1], _unit(A.field, lam))
    return MatGF(A.field, d)


def _rref(field: Field, data: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form with first-nonzero pivoting; 0-based pivots."""
    R = np.array(data, dtype=np.int64)
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = field.mul(R[r], field._inv[R[r, c]])
        others = np.nonzero(R[:, c])[0]
        for i in others:
            if i != r:
                R[i] = field.sub(R[i], field.mul(R[r], R[i, c]))
        pivots.append(c)
        r += 1
    return R, pivots


def rref(A: MatGF) -> tuple[MatGF, int, list[int]]:
    """Return ``(R, rank, pivot_cols)`` with 1-based pivot columns."""
    R, piv = _rref(A.field, A.data)
    return MatGF(A.field, R), len(piv), [c + 1 for c in piv]


def rank(A: MatGF) -> int:
    if A.rows == 0 or A.cols == 0:
        return 0
    return len(_rref(A.field, A.data)[1])


def det(A: MatGF) -> Felt:
    if A.rows != A.cols:
        raise DimensionError(f"determinant of non-square {A.shape} matrix")
    f = A.field
    R = np.array(A.data, dtype=np.int64)
    n = R.shape[0]
    acc = 1
    negate = False
    for c in range(n):
        nz = np.nonzero(R[c:, c])[0]
        if nz.size == 0:
            return f.zero
        piv = c + int(nz[0])
        if piv != c:
            R[[c, piv]] = R[[piv, c]]
            negate = not negate
        pv = int(R[c, c])
        acc = int(f.mul(acc, pv))
        inv = f._inv[pv]
        for i in range(c + 1, n):
            if R[i, c]:
                R[i] = f.sub(R[i], f.mul(R[c], f.mul(R[i, c], inv)))
    if negate:
        acc = int(f.neg(acc))
    return Felt(f, acc)


def is_invertible(A: MatGF) -> bool:
    if A.rows != A.cols:
        raise DimensionError("invertibility of a non-square matrix")
    return rank(A) == A.rows


def null_space(A: MatGF) -> MatGF:
    """Rows spanning {x : A x^T = 0}, read off the RREF free columns."""
    f = A.field
    n = A.cols
    if A.rows == 0:
        return identity(f, n)
    R, piv = _rref(f, A.data)
    free = [c for c in range(n) if c not in set(piv)]
    N = np.zeros((len(free), n), dtype=np.int64)
    for i, fc in enumerate(free):
        N[i, fc] = 1
        for r, pc in enumerate(piv):
            N[i, pc] = f.neg(R[r, fc])
    return MatGF(f, N.reshape(len(free), n))


def row_basis(A: MatGF) -> MatGF:
    """Nonzero rows of the RREF."""
    R, piv = _rref(A.field, A.data)
    return MatGF(A.field, R[: len(piv)].reshape(len(piv), A.cols))


def delete_rc(M: MatGF, I: Iterable[int]) -> MatGF:
    """Delete the rows and columns listed in ``I`` (1-based).

    Deleting every index yields the 1x1 matrix (1); deleting none returns M.
    """
    if M.rows != M.cols:
        raise DimensionError("delete_rc needs a square matrix")
    n = M.rows
    idx = sorted(set(I))
    if any(not 1 <= i <= n for i in idx):
        raise DimensionError(f"indices must lie in 1..{n}")
    if len(idx) == n:
        return identity(M.field, 1)
    keep = [i for i in range(n) if i + 1 not in idx]
    return MatGF(M.field, M.data[np.ix_(keep, keep)])


def det_diag_perturb_identity_check(M: MatGF, u: Sequence, t: int) -> bool:
    """Check det(M + diag(u)) == prod(u_j, j in J) * det(M_J), J = supp(u).

    The identity is only claimed when det(M_I) = 0 for every index set with
    |I| <= t and 1 <= wt(u) <= t+1; violations of those hypotheses raise
    :class:`HypothesisError` instead of returning a verdict.
    """
    f = M.field
    n = M.rows
    if M.rows != M.cols:
        raise DimensionError("square matrix required")
    codes = as_codes(f, u)
    if len(codes) != n:
        raise DimensionError("u must have length n")
    if not 0 <= t <= n - 1:
        raise HypothesisError(f"t={t} outside 0..n-1")
    support = [i + 1 for i, c in enumerate(codes) if c]
    if not 1 <= len(support) <= t + 1:
        raise HypothesisError(f"wt(u)={len(support)} outside 1..{t + 1}")
    for size in range(0, t + 1):
        for I in combinations(range(1, n + 1), size):
            if det(delete_rc(M, I)).value != 0:
                raise HypothesisError(f"det(M_I) != 0 for I={set(I) or '{}'}")
    lhs = det(M + diag(f, codes))
    prod = f.one
    for j in support:
        prod = prod * Felt(f, codes[j - 1])
    rhs = prod * det(delete_rc(M, support))
    return lhs == rhs


def row_space_contains(A: MatGF, v: Sequence) -> bool:
    row = MatGF.from_rows(A.field, [v])
    if row.cols != A.cols:
        raise DimensionError("vector length differs from column count")
    return rank(vstack(A, row)) == rank(A)


def subspace_leq(A: MatGF, B: MatGF) -> bool:
    """True when rowspace(A) is contained in rowspace(B)."""
    _same_field(A, B)
    if A.cols != B.cols:
        raise DimensionError("column counts differ")
    if A.rows == 0:
        return True
    return rank(vstack(B, A)) == rank(B)


def row_space_equal(A: MatGF, B: MatGF) -> bool:
    return subspace_leq(A, B) and subspace_leq(B, A)
