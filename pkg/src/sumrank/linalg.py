"""Dense linear algebra over a finite field level.

Matrices hold int64 arrays of packed field elements.  Row operations are
vectorised through the field's numpy helpers; the exhaustive checks
(MDS minors, invertible-matrix enumeration) batch many small matrices
into one elimination.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from ._caps import check_cap
from .finite_field import FieldContext, make_field, prime_power, rank_mod_p

GL_CAP_LOG2 = 24
REJECTION_LOG2 = 16
MINOR_CHUNK = 4096


@dataclass(frozen=True, eq=False)
class MatrixF:
    """An immutable matrix whose entries lie in the degree-``level`` subfield."""

    ctx: FieldContext
    data: np.ndarray
    level: int | None = None

    def __post_init__(self):
        data = np.array(self.data, dtype=np.int64)
        if data.ndim == 1 and data.size == 0:
            data = data.reshape(0, 0)
        if data.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")
        data.setflags(write=False)
        object.__setattr__(self, "data", data)
        if self.level is None:
            object.__setattr__(self, "level", self.ctx.L)
        elif self.ctx.L % self.level:
            raise ValueError(f"level {self.level} does not divide {self.ctx.L}")

    @classmethod
    def from_rows(cls, ctx: FieldContext, rows: Sequence[Sequence[int]], level: int | None = None,
                  cols: int | None = None) -> MatrixF:
        rows = [list(r) for r in rows]
        if not rows:
            return cls(ctx, np.zeros((0, cols or 0), dtype=np.int64), level)
        return cls(ctx, np.array(rows, dtype=np.int64), level)

    @classmethod
    def identity(cls, ctx: FieldContext, n: int, level: int | None = None) -> MatrixF:
        return cls(ctx, np.eye(n, dtype=np.int64), level)

    @classmethod
    def zeros(cls, ctx: FieldContext, rows: int, cols: int, level: int | None = None) -> MatrixF:
        return cls(ctx, np.zeros((rows, cols), dtype=np.int64), level)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def T(self) -> MatrixF:
        return MatrixF(self.ctx, self.data.T, self.level)

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    def columns(self, idx: Sequence[int]) -> MatrixF:
        return MatrixF(self.ctx, self.data[:, list(idx)], self.level)

    def column_vectors(self) -> list[tuple[int, ...]]:
        return [tuple(int(x) for x in col) for col in self.data.T]

    def entries_in_level(self) -> bool:
        return all(self.ctx.in_subfield(int(x), self.level) for x in np.unique(self.data))

    def __matmul__(self, other: MatrixF) -> MatrixF:
        if self.ctx != other.ctx:
            raise ValueError("matrices live in different fields")
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        level = math.lcm(self.level, other.level)
        return MatrixF(self.ctx, field_matmul(self.ctx, self.data, other.data), level)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixF):
            return NotImplemented
        return self.ctx == other.ctx and self.shape == other.shape and bool(np.array_equal(self.data, other.data))

    def __repr__(self) -> str:
        return f"MatrixF({self.rows}x{self.cols} over GF({self.ctx.p}^{self.level}), {self.tolist()})"


def field_matmul(ctx: FieldContext, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Matrix product over the field; leading batch dimensions broadcast."""
    A, B = np.asarray(A, dtype=np.int64), np.asarray(B, dtype=np.int64)
    inner = A.shape[-1]
    if inner == 0:
        shape = np.broadcast_shapes(A.shape[:-2], B.shape[:-2]) + (A.shape[-2], B.shape[-1])
        return np.zeros(shape, dtype=np.int64)
    if ctx.p == 2:
        return ctx.vsum(ctx.vmul(A[..., :, :, None], B[..., None, :, :]), axis=-2)
    out = ctx.vmul(A[..., :, 0, None], B[..., 0, None, :])
    for l in range(1, inner):
        out = ctx.vadd(out, ctx.vmul(A[..., :, l, None], B[..., l, None, :]))
    return out


def rref_array(ctx: FieldContext, data: np.ndarray) -> tuple[np.ndarray, list[int]]:
    R = np.array(data, dtype=np.int64)
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if not len(nz):
            continue
        pr = r + int(nz[0])
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        R[r] = ctx.vmul(R[r], ctx.inv(int(R[r, c])))
        mask = R[:, c] != 0
        mask[r] = False
        if mask.any():
            R[mask] = ctx.vsub(R[mask], ctx.vmul(R[mask, c][:, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def rref(M: MatrixF) -> tuple[MatrixF, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns."""
    R, pivots = rref_array(M.ctx, M.data)
    return MatrixF(M.ctx, R, M.level), len(pivots), pivots


def rank(M: MatrixF) -> int:
    return len(rref_array(M.ctx, M.data)[1])


def null_space(M: MatrixF) -> MatrixF:
    """Rows spanning the right kernel {y : M y^T = 0}."""
    ctx = M.ctx
    R, pivots = rref_array(ctx, M.data)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    basis = np.zeros((len(free), M.cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = ctx.neg(int(R[i, f]))
    return MatrixF(ctx, basis, M.level)


def row_basis(M: MatrixF) -> MatrixF:
    """The nonzero rows of the reduced echelon form."""
    R, pivots = rref_array(M.ctx, M.data)
    return MatrixF(M.ctx, R[:len(pivots)], M.level)


def inverse(M: MatrixF) -> MatrixF:
    if M.rows != M.cols:
        raise ValueError("only square matrices are invertible")
    n = M.rows
    aug = np.hstack([M.data, np.eye(n, dtype=np.int64)])
    R, pivots = rref_array(M.ctx, aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return MatrixF(M.ctx, R[:, n:], M.level)


def block_diagonal(blocks: Sequence[MatrixF]) -> MatrixF:
    ctx = blocks[0].ctx
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = np.zeros((rows, cols), dtype=np.int64)
    r = c = 0
    for b in blocks:
        out[r:r + b.rows, c:c + b.cols] = b.data
        r += b.rows
        c += b.cols
    return MatrixF(ctx, out, math.lcm(*(b.level for b in blocks)))


def batch_nonsingular(ctx: FieldContext, mats: np.ndarray) -> np.ndarray:
    """For a stack of square matrices (B, n, n), which ones are invertible."""
    A = np.array(mats, dtype=np.int64)
    count, n = A.shape[0], A.shape[1]
    ok = np.ones(count, dtype=bool)
    idx = np.arange(count)
    for c in range(n):
        nz = A[:, c:, c] != 0
        has = nz.any(axis=1)
        ok &= has
        piv = c + nz.argmax(axis=1)
        top = A[idx, c].copy()
        A[idx, c] = A[idx, piv]
        A[idx, piv] = top
        if c + 1 == n:
            break
        pivot_inv = ctx.vinv(np.where(has, A[:, c, c], 1))
        factors = ctx.vmul(A[:, c + 1:, c], pivot_inv[:, None])
        A[:, c + 1:, :] = ctx.vsub(A[:, c + 1:, :], ctx.vmul(factors[:, :, None], A[:, c, None, :]))
    return ok


def _subset_chunks(n: int, k: int, size: int) -> Iterator[np.ndarray]:
    it = itertools.combinations(range(n), k)
    while True:
        chunk = list(itertools.islice(it, size))
        if not chunk:
            return
        yield np.array(chunk, dtype=np.int64)


def is_mds_array(ctx: FieldContext, data: np.ndarray) -> bool:
    h, n = data.shape
    if h > n:
        raise ValueError(f"an MDS matrix needs rows <= cols, got {h}x{n}")
    if h == 0:
        return True
    for subsets in _subset_chunks(n, h, MINOR_CHUNK):
        minors = np.transpose(data[:, subsets], (1, 0, 2))
        if not batch_nonsingular(ctx, minors).all():
            return False
    return True


def is_mds_matrix(M: MatrixF) -> bool:
    """Whether every set of ``rows`` columns is invertible.

    All C(cols, rows) minors are checked, each by an O(rows^3) elimination.
    """
    return is_mds_array(M.ctx, M.data)


def is_t_wise_independent(vectors: Sequence, t: int, ctx: FieldContext, over: int | None = None) -> bool:
    """Whether every set of at most t of the vectors is linearly independent.

    Vectors may be scalars.  Independence is over the subfield of degree
    ``over`` (default: the whole field).
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    over = ctx.L if over is None else over
    vecs = [tuple(v) if isinstance(v, (list, tuple, np.ndarray)) else (v,) for v in vectors]
    vecs = [tuple(int(x) for x in v) for v in vecs]
    if any(not any(v) for v in vecs):
        return False
    size = min(t, len(vecs))
    expanded = [ctx.span_rows(v, over) for v in vecs]
    target = size * over
    for subset in itertools.combinations(range(len(vecs)), size):
        rows = [row for i in subset for row in expanded[i]]
        if rank_mod_p(rows, ctx.p) != target:
            return False
    return True


def gl_array(r: int, q: int, ctx: FieldContext | None = None) -> np.ndarray:
    """All invertible r x r matrices over GF(q) as an array (count, r, r).

    The identity comes first.  Entries are elements of the GF(q) subfield of
    ``ctx`` (by default the field GF(q) itself).
    """
    p, _ = prime_power(q)
    if ctx is None:
        ctx = make_field(p, prime_power(q)[1])
    check_cap(q**(r * r), GL_CAP_LOG2, f"q^(r^2) for GL_{r}(F_{q})")
    elems = np.array(ctx.subfield_elements(ctx.subfield_degree(q)), dtype=np.int64)
    if q**(r * r) <= 1 << REJECTION_LOG2:
        digits = np.array(list(itertools.product(range(q), repeat=r * r)), dtype=np.int64)
        cands = elems[digits].reshape(-1, r, r)
        mats = cands[batch_nonsingular(ctx, cands)]
    else:
        mats = _gl_by_extension(ctx, r, elems)
    eye = np.eye(r, dtype=np.int64)
    is_eye = (mats == eye).all(axis=(1, 2))
    return np.concatenate([eye[None], mats[~is_eye]])


def _gl_by_extension(ctx: FieldContext, r: int, elems: np.ndarray) -> np.ndarray:
    vectors = np.array(list(itertools.product(elems.tolist(), repeat=r)), dtype=np.int64)
    out = []

    def extend(prefix: list[np.ndarray]) -> None:
        if len(prefix) == r:
            out.append(np.array(prefix))
            return
        if prefix:
            span = {tuple(v) for v in _span(ctx, np.array(prefix), elems)}
        else:
            span = {(0,) * r}
        for v in vectors:
            if tuple(v.tolist()) not in span:
                extend(prefix + [v])

    extend([])
    return np.array(out, dtype=np.int64)


def _span(ctx: FieldContext, rows: np.ndarray, elems: np.ndarray) -> np.ndarray:
    coeffs = np.array(list(itertools.product(elems.tolist(), repeat=len(rows))), dtype=np.int64)
    return field_matmul(ctx, coeffs, rows).tolist()


def enumerate_gl(r: int, q: int, ctx: FieldContext | None = None) -> Iterator[MatrixF]:
    """Each invertible r x r matrix over GF(q) exactly once, identity first."""
    p, a = prime_power(q)
    ctx = make_field(p, a) if ctx is None else ctx
    for m in gl_array(r, q, ctx):
        yield MatrixF(ctx, m, ctx.subfield_degree(q))


def gl_order(r: int, q: int) -> int:
    return math.prod(q**r - q**i for i in range(r))
