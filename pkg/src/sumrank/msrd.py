"""Sum-rank codes from extended Moore matrices.

A code of length N = g*r over GF(q^m) is split into g blocks of r symbols.
Its parity-check matrix has, in row k (k = 0..h-1) and class i, the entries
beta_j^(q^k) * N_k(a_i), where a_i are pairwise non-conjugate and N_k is
the truncated norm.  With a shared beta built as alpha (x) gamma, the code
is MSRD exactly when gamma is min(h, mu)-wise independent over GF(q^r).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from ._caps import check_cap
from .finite_field import (Basis, FieldContext, conjugacy_representatives, is_conjugate,
                           make_field, matrix_representation, prime_power, rank_mod_p,
                           subfield_embedding, truncated_norm)
from .linalg import (MatrixF, batch_nonsingular, field_matmul, gl_array, null_space, rank,
                     row_basis)
from .seeds import SeedCode, default_delta, seed_to_gamma

BRUTEFORCE_CAP_LOG2 = 24
ENUMERATION_CAP_LOG2 = 24


@dataclass(frozen=True)
class MsrdParams:
    q: int
    r: int
    m: int
    ell: int
    mu: int
    h: int

    def __post_init__(self):
        if not 1 <= self.ell <= self.q - 1:
            raise ValueError(f"need 1 <= ell <= q-1 = {self.q - 1}, got {self.ell}")
        if self.m < self.r:
            raise ValueError(f"m = {self.m} < r = {self.r}: no linear MSRD code exists")
        if not 1 <= self.h <= self.N - 1:
            raise ValueError(f"need 1 <= h <= N-1 = {self.N - 1}, got {self.h}")

    @property
    def g(self) -> int:
        return self.ell * self.mu

    @property
    def N(self) -> int:
        return self.g * self.r

    @property
    def k(self) -> int:
        return self.N - self.h

    @property
    def t(self) -> int:
        return min(self.h, self.mu)

    @property
    def field_size(self) -> int:
        return self.q**self.m


@dataclass(frozen=True)
class SumRankCode:
    """A linear code with a block partition, described by both matrices."""

    ctx: FieldContext
    q: int
    block_sizes: tuple[int, ...]
    generator: MatrixF
    parity_check: MatrixF

    @property
    def N(self) -> int:
        return sum(self.block_sizes)

    @property
    def g(self) -> int:
        return len(self.block_sizes)

    @property
    def dimension(self) -> int:
        return self.generator.rows


@dataclass(frozen=True, eq=False)
class MsrdCode:
    params: MsrdParams
    ctx: FieldContext
    a: tuple[int, ...]
    beta: tuple[int, ...]
    parity_check: MatrixF
    alpha: Basis
    provenance: SeedCode | None = None

    @cached_property
    def generator(self) -> MatrixF:
        return null_space(self.parity_check)

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return (self.params.r,) * self.params.g

    def as_code(self) -> SumRankCode:
        return SumRankCode(self.ctx, self.params.q, self.block_sizes, self.generator, self.parity_check)


@dataclass(frozen=True)
class SumRankVector:
    ctx: FieldContext
    entries: tuple[int, ...]
    g: int
    r: int
    q: int
    basis: Basis | None = None

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if len(self.entries) != self.g * self.r:
            raise ValueError(f"expected {self.g * self.r} entries, got {len(self.entries)}")

    def blocks(self) -> list[tuple[int, ...]]:
        return [self.entries[i * self.r:(i + 1) * self.r] for i in range(self.g)]


def tensor_beta(alpha: Basis, gamma: Sequence[int]) -> list[int]:
    """Blocks (alpha_1 gamma_i, ..., alpha_r gamma_i) for each gamma_i."""
    ctx = alpha.ctx
    return [ctx.mul(x, c) for c in gamma for x in alpha.vec]


def extended_moore_matrix(ctx: FieldContext, a: Sequence[int], beta_blocks: Sequence[Sequence[int]],
                          h: int, q: int, check_conjugacy: bool = True) -> MatrixF:
    """Rows k = 0..h-1 with entries beta_ij^(q^k) * N_k(a_i), classes side by side."""
    if len(a) != len(beta_blocks):
        raise ValueError("need one evaluation vector per representative")
    total = sum(len(b) for b in beta_blocks)
    if not 1 <= h <= total:
        raise ValueError(f"need 1 <= h <= {total}, got {h}")
    if check_conjugacy:
        for x, y in itertools.combinations(a, 2):
            if is_conjugate(ctx, x, y, q):
                raise ValueError(f"representatives {x} and {y} are conjugate")
    blocks = []
    for ai, beta in zip(a, beta_blocks):
        beta = np.array(beta, dtype=np.int64)
        rows = [ctx.vmul(ctx.vpow(beta, q**k), truncated_norm(ctx, ai, q, k)) for k in range(h)]
        blocks.append(np.array(rows, dtype=np.int64).reshape(h, len(beta)))
    return MatrixF(ctx, np.hstack(blocks))


def check_msrd_conditions(ctx: FieldContext, beta: Sequence[int], r: int, mu: int, h: int, q: int) -> bool:
    """Rank test: every min(h, mu) blocks of beta span r*|blocks| dimensions over GF(q)."""
    if len(beta) != mu * r:
        raise ValueError(f"beta has length {len(beta)}, expected {mu * r}")
    a = ctx.subfield_degree(q)
    rows = [[row for x in beta[i * r:(i + 1) * r] for row in ctx.span_rows((x,), a)] for i in range(mu)]
    if any(rank_mod_p(block, ctx.p) != a * r for block in rows):
        return False
    size = min(h, mu)
    for subset in itertools.combinations(range(mu), size):
        if rank_mod_p([row for i in subset for row in rows[i]], ctx.p) != a * r * size:
            return False
    return True


def _tuple_chunks(sizes: Sequence[int], chunk: int):
    it = itertools.product(*(range(s) for s in sizes))
    while True:
        block = list(itertools.islice(it, chunk))
        if not block:
            return
        yield np.array(block, dtype=np.int64)


def is_msrd_matrix_bruteforce(M: MatrixF, g: int, r: int, q: int,
                              block_sizes: Sequence[int] | None = None) -> bool:
    """Whether M * diag(A_1, ..., A_g) is MDS for every tuple of invertible A_i.

    Tuples are visited lazily in chunks, identity tuple first, and the scan
    stops at the first failing minor.
    """
    ctx = M.ctx
    sizes = list(block_sizes) if block_sizes is not None else [r] * g
    if len(sizes) != g or sum(sizes) != M.cols:
        raise ValueError(f"block sizes {sizes} do not partition {M.cols} columns into {g} blocks")
    groups = {s: gl_array(s, q, ctx) for s in set(sizes)}
    check_cap(math.prod(len(groups[s]) for s in sizes), BRUTEFORCE_CAP_LOG2, "number of GL tuples")
    h = M.rows
    if h == 0:
        return True
    if h > M.cols:
        raise ValueError("more rows than columns")
    offsets = np.cumsum([0] + sizes)
    products = [field_matmul(ctx, M.data[None, :, offsets[i]:offsets[i + 1]], groups[s])
                for i, s in enumerate(sizes)]
    subsets = np.array(list(itertools.combinations(range(M.cols), h)), dtype=np.int64)
    chunk = max(1, (1 << 18) // (len(subsets) * h * h))
    for idx in _tuple_chunks([len(groups[s]) for s in sizes], chunk):
        full = np.concatenate([products[i][idx[:, i]] for i in range(g)], axis=2)
        minors = np.transpose(full[:, :, subsets], (0, 2, 1, 3)).reshape(-1, h, h)
        if not batch_nonsingular(ctx, minors).all():
            return False
    return True


def build_msrd_code(seed: SeedCode, ell: int, h: int, ctx: FieldContext | None = None,
                    use_base_field: bool = False, verify_bruteforce: bool = False,
                    alpha: Basis | None = None, delta: Basis | None = None) -> MsrdCode:
    """Assemble the code with parity-check M_h(a, alpha (x) gamma) from a seed."""
    q, r = seed.q, seed.r
    p, a = prime_power(q)
    t = min(h, seed.mu)
    if seed.guaranteed_distance < t + 1:
        raise ValueError(f"seed distance {seed.guaranteed_distance} < min(h, mu) + 1 = {t + 1}")
    m = r * seed.rho
    params = MsrdParams(q, r, m, ell, seed.mu, h)
    if ctx is None:
        ctx = make_field(p, a * m)
    elif ctx.p != p or ctx.L != a * m:
        raise ValueError(f"context must be GF({p}^{a * m})")
    alpha = alpha or Basis.power(ctx, a * r, a)
    delta = delta or default_delta(ctx, seed)
    beta = tensor_beta(alpha, seed_to_gamma(seed, delta))
    reps = conjugacy_representatives(ctx, q, m, ell, use_base_field)
    H = extended_moore_matrix(ctx, reps, [beta] * ell, h, q)
    if not check_msrd_conditions(ctx, beta, r, seed.mu, h, q):
        raise ArithmeticError("evaluation points fail the MSRD rank conditions")
    if verify_bruteforce and not is_msrd_matrix_bruteforce(H, params.g, r, q):
        raise ArithmeticError("parity-check matrix is not MSRD")
    return MsrdCode(params, ctx, tuple(reps), tuple(beta), H, alpha, seed)


# --- sum-rank weights and distances --------------------------------------

def sum_rank_weight(v: SumRankVector) -> int:
    """Sum over blocks of the GF(q)-rank of the block's matrix representation."""
    ctx = v.ctx
    a = ctx.subfield_degree(v.q)
    basis = v.basis or Basis.power(ctx, ctx.L, a)
    return sum(rank(matrix_representation(ctx, block, basis)) for block in v.blocks())


class _BlockRanker:
    """GF(q)-ranks of blocks via prime-field rows, memoised per element."""

    def __init__(self, ctx: FieldContext, q: int):
        self.ctx = ctx
        self.degree = ctx.subfield_degree(q)
        self.cache: dict[int, list] = {}

    def rows(self, x: int) -> list:
        rows = self.cache.get(x)
        if rows is None:
            rows = self.cache[x] = self.ctx.span_rows((x,), self.degree)
        return rows

    def weight(self, word: Sequence[int], sizes: Sequence[int]) -> int:
        total, pos = 0, 0
        for s in sizes:
            block = [row for x in word[pos:pos + s] if x for row in self.rows(int(x))]
            total += rank_mod_p(block, self.ctx.p) // self.degree if block else 0
            pos += s
        return total


def _messages(ctx: FieldContext, k: int, projective: bool):
    elems = range(ctx.order)
    if not projective:
        for msg in itertools.product(elems, repeat=k):
            if any(msg):
                yield msg
        return
    for lead in range(k):
        for tail in itertools.product(elems, repeat=k - lead - 1):
            yield (0,) * lead + (1,) + tail


def min_sum_rank_distance_exhaustive(generator: MatrixF, g: int, r: int, q: int,
                                     block_sizes: Sequence[int] | None = None,
                                     projective: bool = True) -> int:
    """Minimum sum-rank weight over all nonzero codewords.

    Scaling a codeword by a nonzero field element keeps its weight, so by
    default only messages whose first nonzero entry is 1 are enumerated.
    """
    ctx = generator.ctx
    sizes = list(block_sizes) if block_sizes is not None else [r] * g
    if sum(sizes) != generator.cols:
        raise ValueError("partition does not match the generator length")
    k = generator.rows
    if k == 0:
        raise ValueError("the zero code has no minimum distance")
    check_cap(ctx.order**k, ENUMERATION_CAP_LOG2, "number of codewords q^(m*k)")
    ranker = _BlockRanker(ctx, q)
    best = None
    messages = _messages(ctx, k, projective)
    while True:
        chunk = list(itertools.islice(messages, 4096))
        if not chunk:
            break
        words = field_matmul(ctx, np.array(chunk, dtype=np.int64), generator.data)
        for word in words.tolist():
            w = ranker.weight(word, sizes)
            if best is None or w < best:
                best = w
    return best


def sum_rank_weight_fast(ctx: FieldContext, word: Sequence[int], sizes: Sequence[int], q: int) -> int:
    return _BlockRanker(ctx, q).weight(list(word), sizes)


# --- derived codes --------------------------------------------------------

def _as_code(code: MsrdCode | SumRankCode) -> SumRankCode:
    return code.as_code() if isinstance(code, MsrdCode) else code


def dual_code(code: MsrdCode | SumRankCode) -> SumRankCode:
    """Swap the roles of generator and parity-check matrix."""
    base = _as_code(code)
    return SumRankCode(base.ctx, base.q, base.block_sizes, base.parity_check, base.generator)


def _keep(code: SumRankCode, positions: Sequence[int]) -> tuple[list[int], tuple[int, ...]]:
    drop = set(positions)
    if any(not 0 <= i < code.N for i in drop):
        raise ValueError("position out of range")
    if len(drop) == code.N:
        raise ValueError("cannot delete every coordinate")
    keep, sizes, pos = [], [], 0
    for s in code.block_sizes:
        kept = [i for i in range(pos, pos + s) if i not in drop]
        keep.extend(kept)
        if kept:
            sizes.append(len(kept))
        pos += s
    return keep, tuple(sizes)


def puncture(code: MsrdCode | SumRankCode, positions: Sequence[int]) -> SumRankCode:
    """Delete coordinates from every codeword."""
    base = _as_code(code)
    keep, sizes = _keep(base, positions)
    G = row_basis(base.generator.columns(keep))
    return SumRankCode(base.ctx, base.q, sizes, G, null_space(G))


def shorten(code: MsrdCode | SumRankCode, positions: Sequence[int]) -> SumRankCode:
    """Keep the codewords vanishing on ``positions``, then delete those coordinates."""
    base = _as_code(code)
    keep, sizes = _keep(base, positions)
    H = row_basis(base.parity_check.columns(keep))
    return SumRankCode(base.ctx, base.q, sizes, null_space(H), H)


def extend_scalars(code: MsrdCode, M: int) -> MsrdCode:
    """The same parity-check matrix read over GF(p^(L*M))."""
    if M < 1:
        raise ValueError("extension degree must be positive")
    if M == 1:
        return code
    old = code.ctx
    new = make_field(old.p, old.L * M)
    embed = subfield_embedding(old, new, old.L)
    H = MatrixF(new, np.vectorize(embed.__getitem__, otypes=[np.int64])(code.parity_check.data), old.L)
    alpha = Basis(new, code.alpha.top, code.alpha.bottom, tuple(embed[x] for x in code.alpha.vec))
    p = code.params
    params = MsrdParams(p.q, p.r, p.m * M, p.ell, p.mu, p.h)
    return MsrdCode(params, new, tuple(embed[x] for x in code.a), tuple(embed[x] for x in code.beta),
                    H, alpha, code.provenance)
