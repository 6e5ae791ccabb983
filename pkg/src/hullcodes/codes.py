"""Linear codes over GF(q): duals, hulls, distances and monomial maps."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import BudgetExceededError, DimensionError, FieldError, HypothesisError, ZeroCodeError
from .gf import Felt, Field, as_codes
from .matgf import (
    MatGF,
    _rref,
    gram,
    is_invertible,
    matmul,
    null_space,
    rank,
    row_basis,
    row_space_equal,
    subspace_leq,
    vstack,
)

DEFAULT_BUDGET = 1 << 24
# Rows enumerated per vectorised block during exhaustive searches.
_BLOCK = 1 << 14


class LinearCode:
    """A k-dimensional subspace of GF(q)^n given by a full-row-rank generator.

    Use :func:`make_code` to build one from arbitrary rows.  Equality compares
    the spanned subspaces, not the particular generator.
    """

    __slots__ = ("G", "original_rows")

    def __init__(self, G: MatGF, original_rows: int | None = None):
        if G.rows == 0 or G.cols == 0:
            raise ZeroCodeError("generator matrix is empty")
        if rank(G) != G.rows:
            raise DimensionError("generator matrix must have full row rank")
        self.G = G
        self.original_rows = G.rows if original_rows is None else original_rows

    @property
    def field(self) -> Field:
        return self.G.field

    @property
    def n(self) -> int:
        return self.G.cols

    @property
    def k(self) -> int:
        return self.G.rows

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (self.field == other.field and self.n == other.n and self.k == other.k
                and row_space_equal(self.G, other.G))

    def __hash__(self):
        return hash((self.field, row_basis(self.G).data.tobytes()))

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}] over GF({self.field.q}))"


@dataclass(frozen=True)
class ZeroDual:
    """Stand-in for the dual of the full space, which is the zero code."""

    field: Field
    n: int


@dataclass(frozen=True)
class HullReport:
    dim: int
    basis: MatGF


class ScalingVector:
    """A vector of nonzero field elements used as coordinate multipliers."""

    __slots__ = ("field", "codes")

    def __init__(self, field: Field, values: Sequence):
        codes = tuple(as_codes(field, values))
        if any(c == 0 for c in codes):
            raise FieldError("scaling vector entries must be nonzero")
        self.field = field
        self.codes = codes

    @classmethod
    def unit(cls, field: Field, n: int, index: int, value) -> ScalingVector:
        """All ones except ``value`` at 1-based ``index``."""
        vals = [1] * n
        vals[index - 1] = as_codes(field, [value])[0]
        return cls(field, vals)

    def __len__(self):
        return len(self.codes)

    def __iter__(self) -> Iterator[Felt]:
        return (Felt(self.field, c) for c in self.codes)

    def __eq__(self, other):
        if not isinstance(other, ScalingVector):
            return NotImplemented
        return self.field == other.field and self.codes == other.codes

    def __repr__(self):
        return "(" + " ".join(str(x) for x in self) + ")"

    def inverse(self) -> ScalingVector:
        return ScalingVector(self.field, [int(v) for v in self.field.inv(list(self.codes))])


def _as_matrix(field: Field, G) -> MatGF:
    if isinstance(G, MatGF):
        if G.field != field:
            raise FieldError("generator matrix is over a different field")
        return G
    return MatGF.from_rows(field, G)


def make_code(field: Field, G_raw) -> LinearCode:
    """Build a code from possibly dependent rows.

    Rows are kept in their given order and a row is dropped only when it lies
    in the span of the rows already kept, so a full-rank input is stored
    verbatim.
    """
    G = _as_matrix(field, G_raw)
    if G.rows == 0 or G.cols == 0:
        raise ZeroCodeError("generator matrix is empty")
    if G.is_zero():
        raise ZeroCodeError("generator matrix spans only the zero vector")
    if rank(G) == G.rows:
        return LinearCode(G, G.rows)
    keep: list[int] = []
    r = 0
    for i in range(G.rows):
        trial = keep + [i]
        rr = rank(G.submatrix(rows=trial))
        if rr > r:
            keep, r = trial, rr
    return LinearCode(G.submatrix(rows=keep), G.rows)


def parity_check(C: LinearCode) -> MatGF:
    """An (n-k) x n matrix H with G H^T = 0 (possibly with zero rows when k = n)."""
    return null_space(C.G)


def dual(C: LinearCode) -> LinearCode | ZeroDual:
    H = parity_check(C)
    if H.rows == 0:
        return ZeroDual(C.field, C.n)
    return LinearCode(H)


def hull_dims(C: LinearCode) -> tuple[int, int, int]:
    """Hull dimension computed three ways.

    ``k - rank(GG^T)``, ``(n-k) - rank(HH^T)`` and ``n - rank([G; H])``.
    """
    H = parity_check(C)
    via_g = C.k - rank(gram(C.G))
    via_h = (C.n - C.k) - (rank(gram(H)) if H.rows else 0)
    via_stack = C.n - rank(vstack(C.G, H))
    return via_g, via_h, via_stack


def hull(C: LinearCode) -> HullReport:
    via_g, _, via_stack = hull_dims(C)
    if via_g != via_stack:
        raise AssertionError(f"hull dimension disagreement: {via_g} vs {via_stack}")
    M = gram(C.G)
    # m G lies in the dual iff G (mG)^T = 0 iff m M = 0; M is symmetric.
    left = null_space(M)
    if left.rows == 0:
        basis = MatGF(C.field, np.zeros((0, C.n), dtype=np.int64))
    else:
        basis = row_basis(matmul(left, C.G))
    if basis.rows != via_g:
        raise AssertionError("hull basis size disagrees with hull dimension")
    return HullReport(via_g, basis)


def is_lcd(C: LinearCode) -> bool:
    lcd_g = is_invertible(gram(C.G))
    H = parity_check(C)
    lcd_h = True if H.rows == 0 else is_invertible(gram(H))
    lcd_stack = rank(vstack(C.G, H)) == C.n
    if not lcd_g == lcd_h == lcd_stack:
        raise AssertionError("LCD characterisations disagree")
    return lcd_g


def is_self_orthogonal(C: LinearCode) -> bool:
    return gram(C.G).is_zero()


def is_self_dual(C: LinearCode) -> bool:
    return 2 * C.k == C.n and is_self_orthogonal(C)


def has_weight_one_word(C: LinearCode) -> bool:
    """True iff some unit vector e_i lies in C, i.e. d = 1."""
    base = rank(C.G)
    for i in range(C.n):
        e = np.zeros((1, C.n), dtype=np.int64)
        e[0, i] = 1
        if rank(vstack(C.G, MatGF(C.field, e))) == base:
            return True
    return False


# --- exhaustive enumeration --------------------------------------------------

def _span_table(field: Field, rows: np.ndarray) -> np.ndarray:
    """All q^r linear combinations of ``rows`` as a (q^r, n) array."""
    n = rows.shape[1]
    table = np.zeros((1, n), dtype=np.int64)
    scalars = np.arange(field.q, dtype=np.int64)
    for row in rows:
        contrib = field.mul(scalars[:, None], row[None, :])
        table = field.add(table[:, None, :], contrib[None, :, :]).reshape(-1, n)
    return table


def _iter_combinations(field: Field, offset: np.ndarray, rows: np.ndarray) -> Iterator[np.ndarray]:
    """Yield blocks covering ``offset + span(rows)``."""
    q = field.q
    low = 0
    while low < len(rows) and q ** (low + 1) <= _BLOCK:
        low += 1
    table = _span_table(field, rows[:low]) if low else np.zeros((1, len(offset)), dtype=np.int64)
    high = rows[low:]
    for coeffs in itertools.product(range(q), repeat=len(high)):
        shift = offset
        for c, row in zip(coeffs, high):
            if c:
                shift = field.add(shift, field.mul(c, row))
        yield field.add(table, shift[None, :])


def _check_budget(C: LinearCode, budget: int) -> None:
    if C.field.q ** C.k > budget:
        raise BudgetExceededError(
            f"too large for exhaustive distance: q^k = {C.field.q}^{C.k} exceeds budget {budget}")


def codewords(C: LinearCode, budget: int = DEFAULT_BUDGET) -> Iterator[np.ndarray]:
    """Every codeword, in blocks of element-code rows."""
    _check_budget(C, budget)
    yield from _iter_combinations(C.field, np.zeros(C.n, dtype=np.int64), C.G.data)


def minimum_distance(C: LinearCode, budget: int = DEFAULT_BUDGET) -> int:
    """Exact minimum Hamming weight by enumerating messages.

    Only messages whose leading nonzero entry is 1 are visited, which covers
    every nonzero codeword up to a scalar multiple.
    """
    _check_budget(C, budget)
    G = C.G.data
    best = C.n
    for j in range(C.k):
        for block in _iter_combinations(C.field, G[j], G[j + 1:]):
            w = int(np.count_nonzero(block, axis=1).min())
            best = min(best, w)
            if best == 1:
                return 1
    return best


def is_mds(C: LinearCode, budget: int = DEFAULT_BUDGET) -> bool:
    return minimum_distance(C, budget) == C.n - C.k + 1


def orthogonal_count(C: LinearCode, budget: int = DEFAULT_BUDGET) -> int:
    """Number of codewords orthogonal to every row of the generator."""
    f = C.field
    count = 0
    for block in codewords(C, budget):
        ok = np.ones(len(block), dtype=bool)
        for g in C.G.data:
            ok &= f.sum(f.mul(block, g[None, :]), axis=1) == 0
        count += int(ok.sum())
    return count


def hull_oracle(C: LinearCode, budget: int = DEFAULT_BUDGET) -> int:
    """Hull dimension by counting codewords orthogonal to every generator row."""
    f = C.field
    count = orthogonal_count(C, budget)
    dim, size = 0, 1
    while size < count:
        size *= f.q
        dim += 1
    if size != count:
        raise AssertionError(f"{count} orthogonal codewords is not a power of {f.q}")
    return dim


# --- monomial maps and combinations -----------------------------------------

def _scaling(C: LinearCode, a) -> ScalingVector:
    if not isinstance(a, ScalingVector):
        a = ScalingVector(C.field, a)
    if a.field != C.field:
        raise FieldError("scaling vector is over a different field")
    if len(a) != C.n:
        raise DimensionError(f"scaling vector has length {len(a)}, code length is {C.n}")
    return a


def scale(C: LinearCode, a) -> LinearCode:
    """C_a: column i of the generator multiplied by a_i."""
    a = _scaling(C, a)
    f = C.field
    data = f.mul(C.G.data, np.array(a.codes, dtype=np.int64)[None, :])
    return LinearCode(MatGF(f, data), C.original_rows)


def dual_scaling_law_check(C: LinearCode, a) -> bool:
    """Check that the dual of C_a equals a^{-1} applied to the dual of C."""
    a = _scaling(C, a)
    left = dual(scale(C, a))
    right_base = dual(C)
    if isinstance(left, ZeroDual) or isinstance(right_base, ZeroDual):
        return isinstance(left, ZeroDual) and isinstance(right_base, ZeroDual)
    return left == scale(right_base, a.inverse())


def permute(C: LinearCode, sigma: Sequence[int]) -> LinearCode:
    """sigma(C): new coordinate i holds old coordinate sigma(i) (1-based)."""
    sigma = [int(s) for s in sigma]
    if sorted(sigma) != list(range(1, C.n + 1)):
        raise DimensionError(f"not a permutation of 1..{C.n}: {sigma}")
    return LinearCode(C.G.submatrix(cols=[s - 1 for s in sigma]), C.original_rows)


def invert_permutation(sigma: Sequence[int]) -> list[int]:
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma, start=1):
        inv[s - 1] = i
    return inv


def standard_form(C: LinearCode) -> tuple[LinearCode, list[int]]:
    """Equivalent code with generator [I_k | P] and the 1-based column permutation used.

    Pivot columns are chosen greedily left to right; the returned code equals
    ``permute(C, perm)``.
    """
    R, piv = _rref(C.field, C.G.data)
    perm0 = piv + [c for c in range(C.n) if c not in set(piv)]
    G = MatGF(C.field, R[:, perm0])
    return LinearCode(G, C.original_rows), [c + 1 for c in perm0]


def _check_compatible(C1: LinearCode, C2: LinearCode) -> None:
    if C1.field != C2.field:
        raise FieldError("codes are over different fields")
    if C1.n != C2.n:
        raise DimensionError(f"code lengths differ: {C1.n} vs {C2.n}")


def code_sum(C1: LinearCode, C2: LinearCode) -> LinearCode:
    """C1 + C2, generated by the independent rows of [G1; G2]."""
    _check_compatible(C1, C2)
    return make_code(C1.field, vstack(C1.G, C2.G))


def intersection_dim(A: MatGF, B: MatGF) -> int:
    """dim(rowspace(A) ∩ rowspace(B)) by rank arithmetic."""
    return rank(A) + rank(B) - rank(vstack(A, B))


def contains(C: LinearCode, other: LinearCode) -> bool:
    _check_compatible(C, other)
    return subspace_leq(other.G, C.G)


def extend_with_dual_word(C: LinearCode, d: Sequence) -> LinearCode:
    """[n+1, k+1] code generated by (1 | d) on top of (0 | G).

    ``d`` must lie in the dual and satisfy 1 + <d, d> = 0, which in
    characteristic 2 is <d, d> = 1.  The hull grows by exactly one.
    """
    f = C.field
    dc = np.array(as_codes(f, d), dtype=np.int64)
    if dc.shape != (C.n,):
        raise DimensionError(f"dual word must have length {C.n}")
    if not dc.any():
        raise HypothesisError("dual word is zero")
    if np.any(f.sum(f.mul(C.G.data, dc[None, :]), axis=1) != 0):
        raise HypothesisError("d is not a codeword of the dual code")
    dd = f.dot(dc, dc)
    if int(f.add(1, dd)) != 0:
        raise HypothesisError(f"<d,d> = {Felt(f, dd)}; need 1 + <d,d> = 0")
    top = np.concatenate([[1], dc])[None, :]
    body = np.hstack([np.zeros((C.k, 1), dtype=np.int64), C.G.data])
    G_ex = MatGF(f, np.vstack([top, body]))
    expected = np.zeros((C.k + 1, C.k + 1), dtype=np.int64)
    expected[1:, 1:] = gram(C.G).data
    if not np.array_equal(gram(G_ex).data, expected):
        raise AssertionError("G_ex G_ex^T is not diag(0, G G^T)")
    return LinearCode(G_ex)
