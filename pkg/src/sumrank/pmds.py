"""Maximally recoverable locally repairable codes from an MSRD outer code.

Every block of r outer symbols is re-encoded by a local MDS code over the
base field GF(q), giving g local groups of nu = r + delta - 1 symbols.
The global generator is G_out * diag(A_1, ..., A_g).
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from ._caps import check_cap
from .finite_field import FieldContext, make_field, prime_power
from .linalg import MatrixF, rref_array, block_diagonal, field_matmul, inverse, is_mds_matrix, rank, rref
from .msrd import MsrdCode

PATTERN_CAP_LOG2 = 20
EXHAUSTIVE_PATTERN_LIMIT = 10**5
RANDOM_PATTERN_SAMPLES = 1000


@dataclass(frozen=True, eq=False)
class PmdsCode:
    outer: MsrdCode
    local_gens: tuple[MatrixF, ...]
    global_gen: MatrixF

    @property
    def ctx(self) -> FieldContext:
        return self.outer.ctx

    @property
    def r(self) -> int:
        return self.outer.params.r

    @property
    def g(self) -> int:
        return self.outer.params.g

    @property
    def nu(self) -> int:
        return self.local_gens[0].cols

    @property
    def delta_loc(self) -> int:
        return self.nu - self.r + 1

    @property
    def k(self) -> int:
        return self.global_gen.rows

    @property
    def h(self) -> int:
        return self.g * self.r - self.k

    @property
    def length(self) -> int:
        return self.g * self.nu

    def local_set(self, i: int) -> range:
        return range(i * self.nu, (i + 1) * self.nu)


def rs_local_generator(q: int, r: int, nu: int, ctx: FieldContext | None = None) -> MatrixF:
    """Systematic generator [I | P] of an MDS code of length nu and dimension r over GF(q)."""
    p, a = prime_power(q)
    ctx = make_field(p, a) if ctx is None else ctx
    deg = ctx.subfield_degree(q)
    if nu < r:
        raise ValueError(f"local length nu = {nu} is smaller than r = {r}")
    if nu == r:
        return MatrixF.identity(ctx, r, deg)
    if nu == r + 1:
        return MatrixF(ctx, np.hstack([np.eye(r, dtype=np.int64), np.ones((r, 1), dtype=np.int64)]), deg)
    if nu > q + 1:
        raise ValueError(f"no MDS code of length {nu} and distance {nu - r + 1} over GF({q}) is available")
    points = np.array(ctx.subfield_elements(deg)[:min(nu, q)], dtype=np.int64)
    vander = np.array([ctx.vpow(points, i) for i in range(r)], dtype=np.int64).reshape(r, len(points))
    if nu == q + 1:
        extra = np.zeros((r, 1), dtype=np.int64)
        extra[-1, 0] = 1
        vander = np.hstack([vander, extra])
    R, _, _ = rref(MatrixF(ctx, vander, deg))
    return R


def construct_pmds(outer: MsrdCode, local_gens: Sequence[MatrixF] | None = None,
                   nu: int | None = None) -> PmdsCode:
    """Lift ``outer`` with the given local generators (or systematic RS ones of length nu)."""
    params = outer.params
    q, r, g = params.q, params.r, params.g
    ctx = outer.ctx
    if local_gens is None:
        if nu is None:
            raise ValueError("give either local generators or the local length nu")
        local_gens = [rs_local_generator(q, r, nu, ctx)] * g
    local_gens = tuple(local_gens)
    if len(local_gens) != g:
        raise ValueError(f"need {g} local generators, got {len(local_gens)}")
    deg = ctx.subfield_degree(q)
    width = local_gens[0].cols
    for i, A in enumerate(local_gens):
        if A.ctx != ctx:
            raise ValueError("local generators must live in the outer code's field")
        if A.rows != r or A.cols != width:
            raise ValueError(f"local generator {i} has shape {A.shape}, expected ({r}, {width})")
        if any(not ctx.in_subfield(int(x), deg) for x in np.unique(A.data)):
            raise ValueError(f"local generator {i} has entries outside GF({q})")
        if not is_mds_matrix(A):
            raise ValueError(f"local generator {i} does not generate an MDS code")
    glob = outer.generator @ block_diagonal(local_gens)
    return PmdsCode(outer, local_gens, MatrixF(ctx, glob.data))


def restriction_patterns(code: PmdsCode) -> Iterator[tuple[int, ...]]:
    """Column sets that keep exactly r positions of every local set."""
    per_set = [[tuple(code.local_set(i)[j] for j in choice)
                for choice in itertools.combinations(range(code.nu), code.r)] for i in range(code.g)]
    for pick in itertools.product(*per_set):
        yield tuple(c for part in pick for c in part)


def verify_pmds_bruteforce(code: PmdsCode) -> bool:
    """Whether every restriction to r positions per local set is an MDS code."""
    check_cap(math.comb(code.nu, code.r)**code.g, PATTERN_CAP_LOG2, "number of restriction patterns")
    G = code.global_gen
    return all(is_mds_matrix(G.columns(cols)) for cols in restriction_patterns(code))


def local_distance(code: PmdsCode, i: int) -> int:
    """Minimum Hamming distance of the code punctured to local set i."""
    block = code.global_gen.columns(list(code.local_set(i)))
    full = rank(block)
    if full == 0:
        raise ValueError("the projection is the zero code")
    for size in range(code.nu - 1, -1, -1):
        for subset in itertools.combinations(range(code.nu), size):
            if rank(block.columns(subset)) < full:
                return code.nu - size
    return code.nu


def encode(code: PmdsCode, messages: np.ndarray) -> np.ndarray:
    return field_matmul(code.ctx, np.atleast_2d(np.asarray(messages, dtype=np.int64)), code.global_gen.data)


def correct_erasures_batch(code: PmdsCode, words: np.ndarray, erased: Sequence[int]) -> np.ndarray | None:
    """Fill in erased positions of many received words at once.

    Returns None when the surviving columns of the generator have rank below
    k, i.e. when the pattern cannot be corrected.  Raises ValueError if some
    word disagrees with every codeword on the surviving positions.
    """
    ctx = code.ctx
    words = np.atleast_2d(np.asarray(words, dtype=np.int64))
    drop = set(erased)
    survivors = [j for j in range(code.length) if j not in drop]
    G = code.global_gen.data
    _, pivots = rref_array(ctx, G[:, survivors])
    if len(pivots) < code.k:
        return None
    cols = [survivors[i] for i in pivots]
    solve = inverse(MatrixF(ctx, G[:, cols])).data
    messages = field_matmul(ctx, words[:, cols], solve)
    decoded = field_matmul(ctx, messages, G)
    if not np.array_equal(decoded[:, survivors], words[:, survivors]):
        raise ValueError("surviving symbols are not consistent with any codeword")
    return decoded


def correct_erasures(code: PmdsCode, word: Sequence[int], erased: Sequence[int]) -> list[int] | None:
    """The unique codeword agreeing with ``word`` off ``erased``, or None if ambiguous."""
    out = correct_erasures_batch(code, np.array([list(word)], dtype=np.int64), erased)
    return None if out is None else [int(x) for x in out[0]]


def legal_erasure_patterns(code: PmdsCode, extra: int | None = None, limit: int = EXHAUSTIVE_PATTERN_LIMIT,
                           samples: int = RANDOM_PATTERN_SAMPLES, seed: int = 0) -> list[tuple[int, ...]]:
    """Patterns with delta-1 erasures in every local set plus ``extra`` (default h) more.

    All patterns are listed when there are at most ``limit`` of them before
    deduplication; otherwise ``samples`` distinct random ones are drawn.
    """
    extra = code.h if extra is None else extra
    local = code.delta_loc - 1
    per_set = [list(itertools.combinations(code.local_set(i), local)) for i in range(code.g)]
    remaining = code.length - local * code.g
    if not 0 <= extra <= remaining:
        raise ValueError(f"cannot erase {extra} further positions out of {remaining}")
    total = math.comb(code.nu, local)**code.g * math.comb(remaining, extra)
    if total <= limit:
        found = set()
        for pick in itertools.product(*per_set):
            base = {c for part in pick for c in part}
            rest = [j for j in range(code.length) if j not in base]
            for more in itertools.combinations(rest, extra):
                found.add(tuple(sorted(base.union(more))))
        return sorted(found)
    rng = random.Random(seed)
    found = set()
    while len(found) < samples:
        base = {c for options in per_set for c in rng.choice(options)}
        rest = [j for j in range(code.length) if j not in base]
        found.add(tuple(sorted(base.union(rng.sample(rest, extra)))))
    return sorted(found)


def strip_local_parities(code: PmdsCode) -> MatrixF:
    """Delete the nu - r parity positions of every systematic local set."""
    keep = [i * code.nu + j for i in range(code.g) for j in range(code.r)]
    return code.global_gen.columns(keep)
