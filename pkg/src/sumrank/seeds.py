"""Hamming-metric seed codes over GF(q^r) and their lift to evaluation points.

Each seed is described by a parity-check matrix H whose columns, read as
elements of GF(q^(r*rho)) through a basis, give the vector gamma.  Any
``guaranteed_distance - 1`` columns of H are independent.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from ._caps import check_cap
from .finite_field import (Basis, FieldContext, coords_over_subfield, make_field,
                           prime_power, rank_mod_p, subfield_embedding)
from .linalg import MatrixF, null_space, rank

SEED_KINDS = ("trivial", "mds", "hamming", "bch", "hermitian")
LENGTH_CAP_LOG2 = 16


@dataclass(frozen=True)
class SeedCode:
    kind: str
    q: int
    r: int
    mu: int
    rho: int
    H: MatrixF
    guaranteed_distance: int
    info: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.H.shape != (self.rho, self.mu):
            raise ValueError(f"H has shape {self.H.shape}, expected {(self.rho, self.mu)}")

    @property
    def ctx(self) -> FieldContext:
        return self.H.ctx

    @property
    def level(self) -> int:
        return self.H.level


@dataclass(frozen=True)
class CyclotomicData:
    mu: int
    base: int
    cosets: tuple[tuple[int, ...], ...]
    s: int
    defining_set: tuple[int, ...] = ()

    def coset_of(self, i: int) -> tuple[int, ...]:
        i %= self.mu
        return next(c for c in self.cosets if i in c)


def _seed_field(q: int, r: int) -> tuple[FieldContext, int]:
    p, a = prime_power(q)
    if r < 1:
        raise ValueError("r must be positive")
    return make_field(p, a * r), a * r


def trivial_seed(q: int, r: int) -> SeedCode:
    """The zero code of length 1: H = (1)."""
    ctx, deg = _seed_field(q, r)
    return SeedCode("trivial", q, r, 1, 1, MatrixF(ctx, [[1]], deg), 2)


def mds_seed(q: int, r: int, mu: int, t: int) -> SeedCode:
    """Parity checks of a (doubly extended) Reed-Solomon code over GF(q^r)."""
    ctx, deg = _seed_field(q, r)
    Q = q**r
    if not 1 <= t <= mu:
        raise ValueError(f"need 1 <= t <= mu, got t={t}, mu={mu}")
    if mu > Q + 1:
        raise ValueError(f"mu={mu} exceeds q^r + 1 = {Q + 1}")
    points = np.arange(min(mu, Q), dtype=np.int64)
    rows = [ctx.vpow(points, k) for k in range(t)]
    data = np.array(rows, dtype=np.int64).reshape(t, len(points))
    if mu == Q + 1:
        infinity = np.zeros((t, 1), dtype=np.int64)
        infinity[-1, 0] = 1
        data = np.hstack([data, infinity])
    return SeedCode("mds", q, r, mu, t, MatrixF(ctx, data, deg), t + 1, {"t": t})


def hamming_seed(q: int, r: int, rho: int) -> SeedCode:
    """All projective points of GF(q^r)^rho as columns, first nonzero entry 1."""
    ctx, deg = _seed_field(q, r)
    if rho < 1:
        raise ValueError("rho must be positive")
    Q = q**r
    mu = (Q**rho - 1) // (Q - 1)
    check_cap(mu, LENGTH_CAP_LOG2, "Hamming seed length")
    columns = []
    for lead in range(rho):
        for tail in itertools.product(range(Q), repeat=rho - lead - 1):
            columns.append((0,) * lead + (1,) + tail)
    columns.sort()
    data = np.array(columns, dtype=np.int64).T.reshape(rho, mu)
    return SeedCode("hamming", q, r, mu, rho, MatrixF(ctx, data, deg), 3)


def cyclotomic_cosets(qr: int, mu: int, b: int = 0, t: int = 0) -> CyclotomicData:
    """Orbits of multiplication by ``qr`` on Z/mu.

    With t > 0 the defining set is the union of the cosets of b, ..., b+t-1.
    """
    if mu < 1 or math.gcd(qr, mu) != 1:
        raise ValueError(f"base {qr} and modulus {mu} must be coprime")
    seen: set[int] = set()
    cosets = []
    for i in range(mu):
        if i in seen:
            continue
        orbit, x = [], i
        while x not in orbit:
            orbit.append(x)
            x = x * qr % mu
        seen.update(orbit)
        cosets.append(tuple(sorted(orbit)))
    s = 1
    while (qr**s - 1) % mu:
        s += 1
    data = CyclotomicData(mu, qr, tuple(cosets), s)
    if t > 0:
        defining = sorted({x for i in range(b, b + t) for x in data.coset_of(i)})
        data = CyclotomicData(mu, qr, tuple(cosets), s, tuple(defining))
    return data


def bch_redundancy_bound(q: int, r: int, s: int, t: int) -> int:
    """1 + s * ceil((q^r - 1)/q^r * (t - 1)), exact."""
    Q = q**r
    return 1 + s * -(-(Q - 1) * (t - 1) // Q)


def bch_seed(q: int, r: int, s: int, t: int, b: int = 0) -> SeedCode:
    """Primitive narrow-sense style BCH code of length q^(rs) - 1 over GF(q^r)."""
    p, a = prime_power(q)
    Q = q**r
    mu = Q**s - 1
    if s < 1 or t < 1 or b < 0:
        raise ValueError("need s >= 1, t >= 1 and b >= 0")
    if t + 1 > mu:
        raise ValueError(f"designed distance t+1 = {t + 1} exceeds the length {mu}")
    check_cap(mu, LENGTH_CAP_LOG2, "BCH seed length")
    cyc = cyclotomic_cosets(Q, mu, b, t)
    big = make_field(p, a * r * s)
    small, deg = _seed_field(q, r)
    root = big.subfield_primitive(a * r * s)
    over = Basis.power(big, a * r * s, deg)
    expanded = []
    for i in cyc.defining_set:
        step = big.pow(root, i)
        row, x = [], 1
        for _ in range(mu):
            row.append(x)
            x = big.mul(x, step)
        coords = [coords_over_subfield(big, x, over) for x in row]
        expanded.extend([c[k] for c in coords] for k in range(s))
    chosen: list[list[int]] = []
    for row in expanded:
        if _rank_over(big, [*chosen, row], deg) > len(chosen):
            chosen.append(row)
    embed = subfield_embedding(big, small, deg)
    data = np.array([[embed[x] for x in row] for row in chosen], dtype=np.int64).reshape(len(chosen), mu)
    rho = len(chosen)
    info = {"s": s, "t": t, "b": b, "defining_set": list(cyc.defining_set)}
    return SeedCode("bch", q, r, mu, rho, MatrixF(small, data, deg), t + 1, info)


def _rank_over(ctx: FieldContext, rows: list[list[int]], degree: int) -> int:
    expanded = [row for vec in rows for row in ctx.span_rows(vec, degree)]
    return rank_mod_p(expanded, ctx.p) // degree


def hermitian_points(ctx: FieldContext, q0: int) -> list[tuple[int, int]]:
    """Affine points of y^q0 + y = x^(q0+1) in lexicographic (x, y) order."""
    ys = np.arange(ctx.order, dtype=np.int64)
    trace = ctx.vadd(ctx.vpow(ys, q0), ys)
    points = []
    for x in range(ctx.order):
        rhs = ctx.pow(x, q0 + 1)
        points.extend((x, int(y)) for y in np.nonzero(trace == rhs)[0])
    return points


def hermitian_seed(q: int, r: int, h: int) -> SeedCode:
    """Dual description of a one-point code on the Hermitian curve over GF(q^r)."""
    p, a = prime_power(q)
    if (a * r) % 2:
        raise ValueError(f"q^r = {q**r} is not a square")
    ctx, deg = _seed_field(q, r)
    q0 = p**(a * r // 2)
    mu = q0**3
    genus = q0 * (q0 - 1) // 2
    deg_g = mu - h - 1
    if not 2 * genus - 2 < deg_g < mu:
        raise ValueError(f"need 2g-2 < mu-h-1 < mu, got g={genus}, mu={mu}, h={h}")
    points = hermitian_points(ctx, q0)
    if len(points) != mu:
        raise ArithmeticError(f"found {len(points)} affine points, expected {mu}")
    monomials = sorted(((i, j) for j in range(q0) for i in range(deg_g // q0 + 1)
                        if i * q0 + j * (q0 + 1) <= deg_g),
                       key=lambda m: (m[0] * q0 + m[1] * (q0 + 1), m[1]))
    xs = np.array([pt[0] for pt in points], dtype=np.int64)
    ys = np.array([pt[1] for pt in points], dtype=np.int64)
    gen = np.array([ctx.vmul(ctx.vpow(xs, i), ctx.vpow(ys, j)) for i, j in monomials], dtype=np.int64)
    G = MatrixF(ctx, gen.reshape(len(monomials), mu), deg)
    dim = rank(G)
    H = null_space(G)
    info = {"h": h, "genus": genus, "deg_G": deg_g, "dim": dim, "q0": q0, "monomials": monomials}
    if H.rows != h + genus:
        raise ArithmeticError(f"redundancy {H.rows} differs from h + genus = {h + genus}")
    return SeedCode("hermitian", q, r, mu, H.rows, H, h + 1, info)


def default_delta(ctx: FieldContext, seed: SeedCode) -> Basis:
    """Power basis of GF(q^(r*rho)) over GF(q^r) inside ctx."""
    return Basis.power(ctx, seed.level * seed.rho, seed.level)


def seed_to_gamma(seed: SeedCode, delta: Basis) -> list[int]:
    """gamma_j = sum_i delta_i * H[i][j], computed in delta's field."""
    if delta.bottom != seed.level or len(delta.vec) != seed.rho:
        raise ValueError(f"delta must be a basis of length {seed.rho} over the degree-{seed.level} level")
    ctx = delta.ctx
    embed = subfield_embedding(seed.ctx, ctx, seed.level)
    gamma = []
    for col in seed.H.data.T:
        gamma.append(ctx.sum(ctx.mul(d, embed[int(x)]) for d, x in zip(delta.vec, col)))
    return gamma
