"""Arithmetic in one ambient field GF(p^L) and all of its subfields.

Elements are plain ints: the coefficient vector (c_0, ..., c_{L-1}) of the
polynomial representative, packed as sum(c_i * p**i).  A subfield GF(p^a),
a | L, is the fixed set of x -> x^(p^a); nothing is embedded explicitly.
Fields with at most 2^20 elements get exp/log tables, which also back the
numpy-vectorised operations used by the exhaustive oracles.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np
from sympy import factorint, isprime

from ._caps import check_cap

TABLE_LIMIT = 1 << 20
FIELD_CAP_LOG2 = 40


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, a) with q = p**a, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    factors = factorint(q)
    if len(factors) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, a), = factors.items()
    return int(p), int(a)


# --- polynomials over F_p, ascending coefficient lists -------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = [c % p for c in a]
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            off = i - db
            for j in range(db + 1):
                a[off + j] = (a[off + j] - c * b[j]) % p
    return _trim(a[:db])


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _poly_powmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_rem(a, f, p)
    while e:
        if e & 1:
            result = _poly_rem(_poly_mul(result, base, p), f, p)
        base = _poly_rem(_poly_mul(base, base, p), f, p)
        e >>= 1
    return result


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_rem(a, b, p)
    return a


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Ben-Or test: no factor of degree i <= deg/2 divides f."""
    f = list(f)
    degree = len(f) - 1
    if degree < 1:
        return False
    if degree == 1:
        return True
    if f[0] % p == 0:
        return False
    x = [0, 1]
    x_power = x
    for _ in range(degree // 2):
        x_power = _poly_powmod(x_power, p, f, p)
        if len(_poly_gcd(f, _poly_sub(x_power, x, p), p)) > 1:
            return False
    return True


def _encode(coeffs: Sequence[int], p: int) -> int:
    return sum(c * p**i for i, c in enumerate(coeffs))


def _decode(x: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        x, c = divmod(x, p)
        out.append(c)
    return out


def _sparse_moduli(p: int, L: int) -> Iterable[list[int]]:
    # monic degree-L polynomials by number of nonzero terms, then by packed value
    for weight in range(1, L + 2):
        batch = []
        for positions in itertools.combinations(range(L), weight - 1):
            for values in itertools.product(range(1, p), repeat=weight - 1):
                coeffs = [0] * L + [1]
                for pos, val in zip(positions, values):
                    coeffs[pos] = val
                batch.append(coeffs)
        batch.sort(key=lambda c: _encode(c, p))
        yield from batch


def _is_primitive_poly(x: int, p: int, L: int, modulus: Sequence[int], primes: Iterable[int]) -> bool:
    if x == 0:
        return False
    order = p**L - 1
    poly = _trim(_decode(x, p, L))
    if _poly_powmod(poly, order, modulus, p) != [1]:
        return False
    return all(_poly_powmod(poly, order // d, modulus, p) != [1] for d in primes)


# --- rank over the prime field -------------------------------------------

def _rref_mod_p(M: np.ndarray, p: int, pivot_cols: int | None = None) -> tuple[np.ndarray, list[int]]:
    M = np.array(M, dtype=np.int64) % p
    rows, cols = M.shape
    limit = cols if pivot_cols is None else pivot_cols
    pivots = []
    r = 0
    for c in range(limit):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if not len(nz):
            continue
        pr = r + int(nz[0])
        if pr != r:
            M[[r, pr]] = M[[pr, r]]
        M[r] = M[r] * pow(int(M[r, c]), p - 2, p) % p
        mask = M[:, c] != 0
        mask[r] = False
        if mask.any():
            M[mask] = (M[mask] - np.outer(M[mask, c], M[r])) % p
        pivots.append(c)
        r += 1
    return M, pivots


def rank_mod_p(rows: Sequence, p: int) -> int:
    """Rank over F_p of row vectors.

    For p = 2 the rows are ints read as bit vectors; otherwise they are
    equal-length sequences of residues.
    """
    if p == 2:
        basis: list[int] = []
        for v in rows:
            for b in basis:
                v = min(v, v ^ b)
            if v:
                basis.append(v)
                basis.sort(reverse=True)
        return len(basis)
    rows = list(rows)
    if not rows:
        return 0
    return len(_rref_mod_p(np.array(rows), p)[1])


# --- the field -------------------------------------------------------------

class FieldContext:
    """GF(p^L) = F_p[X]/(modulus) with a fixed primitive element.

    Instances are immutable after construction and compare equal when they
    share p, L, modulus and primitive element.
    """

    def __init__(self, p: int, L: int, modulus: Sequence[int], primitive: int):
        if not isprime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if L < 1:
            raise ValueError("extension degree must be at least 1")
        check_cap(p**L, FIELD_CAP_LOG2, "field size p^L")
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != L + 1 or modulus[-1] != 1 or any(not 0 <= c < p for c in modulus):
            raise ValueError("modulus must be a monic degree-L coefficient list over F_p")
        if not is_irreducible(modulus, p):
            raise ValueError(f"modulus {list(modulus)} is reducible over F_{p}")
        self.p = p
        self.L = L
        self.modulus = modulus
        self.order = p**L
        self.primitive = int(primitive)
        primes = [int(d) for d in factorint(self.order - 1)]
        if not _is_primitive_poly(self.primitive, p, L, modulus, primes):
            raise ValueError(f"{self.primitive} is not a primitive element")
        self._mod_int = _encode(modulus, 2) if p == 2 else None
        self._exp = self._log = None
        if self.order <= TABLE_LIMIT:
            self._build_tables()

    def _build_tables(self) -> None:
        n = self.order - 1
        powers = [1] * n
        x = 1
        for i in range(1, n):
            x = self._poly_mul(x, self.primitive)
            powers[i] = x
        if n and self._poly_mul(x, self.primitive) != 1:
            raise ValueError("primitive element has the wrong order")
        exp = np.array(powers + powers, dtype=np.int64)
        log = np.zeros(self.order, dtype=np.int64)
        log[exp[:n]] = np.arange(n, dtype=np.int64)
        exp.setflags(write=False)
        log.setflags(write=False)
        self._exp, self._log = exp, log
        # python lists make scalar lookups several times faster than numpy indexing
        self._exp_s = exp.tolist() if self.order <= 1 << 16 else exp
        self._log_s = log.tolist() if self.order <= 1 << 16 else log

    @property
    def has_tables(self) -> bool:
        return self._exp is not None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldContext):
            return NotImplemented
        return (self.p, self.L, self.modulus, self.primitive) == (
            other.p, other.L, other.modulus, other.primitive)

    def __hash__(self) -> int:
        return hash((self.p, self.L, self.modulus, self.primitive))

    def __repr__(self) -> str:
        return f"FieldContext(GF({self.p}^{self.L}), modulus={list(self.modulus)}, primitive={self.primitive})"

    # encoding

    def digits(self, x: int) -> list[int]:
        return _decode(x, self.p, self.L)

    def from_digits(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.L or any(not 0 <= c < self.p for c in coeffs):
            raise ValueError(f"{list(coeffs)} is not an element of GF({self.p}^{self.L})")
        return _encode(coeffs, self.p)

    def check(self, x: int) -> int:
        if not 0 <= x < self.order:
            raise ValueError(f"{x} is not an element of GF({self.p}^{self.L})")
        return x

    def elements(self) -> range:
        return range(self.order)

    # scalar arithmetic

    def _poly_mul(self, a: int, b: int) -> int:
        if self.p == 2:
            L, mod = self.L, self._mod_int
            r = 0
            if a < b:
                a, b = b, a
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a >> L:
                    a ^= mod
            return r
        prod = _poly_mul(self.digits(a), self.digits(b), self.p)
        return _encode(_poly_rem(prod, self.modulus, self.p), self.p)

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        return _encode([(x + y) % p for x, y in zip(self.digits(a), self.digits(b))], p)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return _encode([-x % self.p for x in self.digits(a)], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self._exp is not None:
            return int(self._exp_s[self._log_s[a] + self._log_s[b]])
        return self._poly_mul(a, b)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if e == 0:
            return 1
        if not a:
            return 0
        if self._exp is not None:
            return int(self._exp_s[self._log_s[a] * e % (self.order - 1)])
        result, base = 1, a
        while e:
            if e & 1:
                result = self._poly_mul(result, base)
            base = self._poly_mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is not None:
            n = self.order - 1
            return int(self._exp_s[(n - self._log_s[a]) % n])
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def log(self, a: int) -> int:
        """Discrete logarithm to the base of the primitive element."""
        if not a:
            raise ValueError("logarithm of zero")
        if self._exp is None:
            raise ValueError("discrete logarithms need a tabulated field")
        return int(self._log_s[a])

    def sum(self, values: Iterable[int]) -> int:
        total = 0
        for v in values:
            total = self.add(total, v)
        return total

    # vectorised arithmetic on int64 arrays

    def _vectorise(self, fn, *arrays) -> np.ndarray:
        return np.frompyfunc(fn, len(arrays), 1)(*arrays).astype(np.int64)

    def vadd(self, a, b) -> np.ndarray:
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        p, out, scale = self.p, np.zeros(np.broadcast(a, b).shape, dtype=np.int64), 1
        for _ in range(self.L):
            out += ((a // scale + b // scale) % p) * scale
            scale *= p
        return out

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        p, out, scale = self.p, np.zeros_like(a), 1
        for _ in range(self.L):
            out += (-(a // scale) % p) * scale
            scale *= p
        return out

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self._exp is None:
            return self._vectorise(self.mul, a, b)
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def vinv(self, a) -> np.ndarray:
        """Elementwise inverse; zero entries map to zero."""
        a = np.asarray(a, dtype=np.int64)
        if self._exp is None:
            return self._vectorise(lambda x: self.inv(x) if x else 0, a)
        n = self.order - 1
        return np.where(a == 0, 0, self._exp[(n - self._log[a]) % n])

    def vpow(self, a, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self._exp is None:
            return self._vectorise(lambda x: self.pow(x, e), a)
        if e == 0:
            return np.ones_like(a)
        n = self.order - 1
        return np.where(a == 0, 0, self._exp[(self._log[a] * (e % n)) % n])

    def vsum(self, a, axis: int = -1) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        a = np.moveaxis(a, axis, 0)
        out = np.zeros(a.shape[1:], dtype=np.int64)
        for part in a:
            out = self.vadd(out, part)
        return out

    def vdigits(self, a) -> np.ndarray:
        """Coefficient vectors, shape a.shape + (L,)."""
        a = np.asarray(a, dtype=np.int64)
        scale = self.p ** np.arange(self.L, dtype=np.int64)
        return (a[..., None] // scale) % self.p

    # subfields

    def subfield_degree(self, q: int) -> int:
        """Degree a over F_p of the subfield with q = p^a elements."""
        p, a = prime_power(q)
        if p != self.p or self.L % a:
            raise ValueError(f"GF({q}) is not a subfield of GF({self.p}^{self.L})")
        return a

    def subfield_primitive(self, degree: int) -> int:
        if self.L % degree:
            raise ValueError(f"no subfield of degree {degree} in GF({self.p}^{self.L})")
        return self.pow(self.primitive, (self.order - 1) // (self.p**degree - 1))

    def in_subfield(self, x: int, degree: int) -> bool:
        return self.pow(x, self.p**degree) == x

    def subfield_elements(self, degree: int) -> list[int]:
        theta = self.subfield_primitive(degree)
        out, x = [0], 1
        for _ in range(self.p**degree - 1):
            out.append(x)
            x = self.mul(x, theta)
        return sorted(out)

    @lru_cache(maxsize=None)
    def prime_basis(self, degree: int) -> tuple[int, ...]:
        """Power basis of GF(p^degree) over F_p."""
        theta = self.subfield_primitive(degree)
        return tuple(self.pow(theta, i) for i in range(degree))

    # F_p-linear packing of vectors, used for ranks over subfields

    def pack(self, vector: Sequence[int]):
        if self.p == 2:
            packed, shift = 0, 0
            for x in vector:
                packed |= x << shift
                shift += self.L
            return packed
        out: list[int] = []
        for x in vector:
            out.extend(self.digits(x))
        return out

    def span_rows(self, vector: Sequence[int], degree: int) -> list:
        """F_p-rows spanning the GF(p^degree)-line through ``vector``."""
        return [self.pack([self.mul(w, x) for x in vector]) for w in self.prime_basis(degree)]


def subfield_rank(ctx: FieldContext, vectors: Sequence, degree: int) -> int:
    """Rank over GF(p^degree) of a list of vectors (or scalars) of ctx."""
    rows = []
    for v in vectors:
        rows.extend(ctx.span_rows(v if isinstance(v, (list, tuple)) else (v,), degree))
    return rank_mod_p(rows, ctx.p) // degree


@lru_cache(maxsize=None)
def make_field(p: int, L: int) -> FieldContext:
    """Build GF(p^L) deterministically.

    The modulus is the sparsest irreducible polynomial, ties broken by the
    smallest packed value; the primitive element is the smallest packed
    element of full order.
    """
    if not isprime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if L < 1:
        raise ValueError("extension degree must be at least 1")
    check_cap(p**L, FIELD_CAP_LOG2, "field size p^L")
    modulus = next(f for f in _sparse_moduli(p, L) if is_irreducible(f, p))
    primes = [int(d) for d in factorint(p**L - 1)]
    primitive = next(x for x in range(1, p**L)
                     if _is_primitive_poly(x, p, L, modulus, primes))
    return FieldContext(p, L, modulus, primitive)


@dataclass(frozen=True)
class FieldLevel:
    ctx: FieldContext
    degree: int

    def __post_init__(self):
        if self.degree < 1 or self.ctx.L % self.degree:
            raise ValueError(f"degree {self.degree} does not divide {self.ctx.L}")

    @property
    def cardinality(self) -> int:
        return self.ctx.p**self.degree


@dataclass(frozen=True)
class Basis:
    """Ordered basis of GF(p^top) over GF(p^bottom), both inside ctx."""

    ctx: FieldContext
    top: int
    bottom: int
    vec: tuple[int, ...]

    def __post_init__(self):
        ctx = self.ctx
        if ctx.L % self.top or self.top % self.bottom:
            raise ValueError("basis levels must satisfy bottom | top | L")
        object.__setattr__(self, "vec", tuple(int(x) for x in self.vec))
        if len(self.vec) != self.top // self.bottom:
            raise ValueError(f"need {self.top // self.bottom} basis elements, got {len(self.vec)}")
        if any(not ctx.in_subfield(x, self.top) for x in self.vec):
            raise ValueError("basis element outside the top level")
        if subfield_rank(ctx, list(self.vec), self.bottom) != len(self.vec):
            raise ValueError("basis elements are linearly dependent")

    @classmethod
    def power(cls, ctx: FieldContext, top: int, bottom: int) -> Basis:
        """(1, t, ..., t^(n-1)) for the primitive element t of the top level."""
        theta = ctx.subfield_primitive(top)
        return cls(ctx, top, bottom, tuple(ctx.pow(theta, i) for i in range(top // bottom)))

    def __len__(self) -> int:
        return len(self.vec)

    @cached_property
    def _solver(self) -> tuple[np.ndarray, np.ndarray]:
        ctx = self.ctx
        omegas = ctx.prime_basis(self.bottom)
        cols = [ctx.digits(ctx.mul(w, b)) for b in self.vec for w in omegas]
        A = np.array(cols, dtype=np.int64).T
        n = A.shape[1]
        aug = np.hstack([A, np.eye(ctx.L, dtype=np.int64)])
        reduced, pivots = _rref_mod_p(aug, ctx.p, pivot_cols=n)
        if len(pivots) != n:
            raise ValueError("basis elements are linearly dependent")
        return A, reduced[:n, n:]

    def combine(self, coeffs: Sequence[int]) -> int:
        ctx = self.ctx
        if len(coeffs) != len(self.vec):
            raise ValueError("coefficient vector has the wrong length")
        return ctx.sum(ctx.mul(c, b) for c, b in zip(coeffs, self.vec))


def frobenius(ctx: FieldContext, x: int, q: int) -> int:
    ctx.subfield_degree(q)
    return ctx.pow(x, q)


def truncated_norm(ctx: FieldContext, a: int, q: int, i: int) -> int:
    """a^((q^i - 1)/(q - 1)), the product of the first i Frobenius conjugates."""
    ctx.subfield_degree(q)
    if i < 0:
        raise ValueError("norm index must be non-negative")
    if i == 0:
        return 1
    return ctx.pow(a, (q**i - 1) // (q - 1))


def coords_over_subfield(ctx: FieldContext, x: int, basis: Basis) -> list[int]:
    """Coefficients c over the bottom level with x = sum(c_i * basis.vec[i])."""
    if not ctx.in_subfield(x, basis.top):
        raise ValueError(f"{x} does not lie in the degree-{basis.top} subfield")
    A, left_inv = basis._solver
    d = left_inv @ np.array(ctx.digits(x), dtype=np.int64) % ctx.p
    omegas = ctx.prime_basis(basis.bottom)
    k = basis.bottom
    return [ctx.sum(ctx.mul(int(d[i * k + j]), omegas[j]) for j in range(k))
            for i in range(len(basis.vec))]


def matrix_representation(ctx: FieldContext, v: Sequence[int], alpha: Basis):
    """The m x r matrix whose column j holds the coordinates of v[j]."""
    from .linalg import MatrixF

    cols = [coords_over_subfield(ctx, x, alpha) for x in v]
    data = np.array(cols, dtype=np.int64).reshape(len(v), len(alpha.vec)).T
    return MatrixF(ctx, data, alpha.bottom)


def conjugacy_representatives(ctx: FieldContext, q: int, m: int | None = None, count: int = 1,
                              use_base_field: bool = False) -> list[int]:
    """``count`` pairwise non-conjugate nonzero elements of GF(q^m).

    By default the powers 1, g, ..., g^(count-1) of the primitive element g of
    GF(q^m).  With ``use_base_field`` the first powers of the primitive
    element of GF(q) are used, which is only valid when q - 1 and
    (q^m - 1)/(q - 1) are coprime.
    """
    a = ctx.subfield_degree(q)
    m = ctx.L // a if m is None else m
    if ctx.L % (a * m):
        raise ValueError(f"GF({q}^{m}) is not a subfield of the context")
    if not 1 <= count <= q - 1:
        raise ValueError(f"need 1 <= count <= q-1 = {q - 1}, got {count}")
    if use_base_field:
        if math.gcd(q - 1, (q**m - 1) // (q - 1)) != 1:
            raise ValueError("base-field representatives need gcd(q-1, (q^m-1)/(q-1)) = 1")
        zeta = ctx.subfield_primitive(a)
        return [ctx.pow(zeta, i) for i in range(count)]
    gamma = ctx.subfield_primitive(a * m)
    return [ctx.pow(gamma, i) for i in range(count)]


def is_conjugate(ctx: FieldContext, a: int, b: int, q: int, m: int | None = None) -> bool:
    """Whether b = c^(q-1) * a for some nonzero c in GF(q^m)."""
    deg = ctx.subfield_degree(q)
    m = ctx.L // deg if m is None else m
    if not a or not b:
        raise ValueError("conjugacy is only defined for nonzero elements")
    return ctx.pow(ctx.div(b, a), (q**m - 1) // (q - 1)) == 1


@lru_cache(maxsize=None)
def subfield_embedding(src: FieldContext, dst: FieldContext, degree: int) -> dict[int, int]:
    """A field isomorphism from the degree-``degree`` subfield of src into dst."""
    if src.p != dst.p:
        raise ValueError("fields of different characteristic")
    p = src.p
    theta = src.subfield_primitive(degree)
    n = p**degree - 1
    if src == dst:
        return {x: x for x in src.subfield_elements(degree)}
    minpoly = [1]
    for i in range(degree):
        root = src.pow(theta, p**i)
        shifted = [0] + minpoly
        scaled = [src.mul(root, c) for c in minpoly] + [0]
        minpoly = [src.sub(x, y) for x, y in zip(shifted, scaled)]
    if any(c >= p for c in minpoly):
        raise ArithmeticError("minimal polynomial is not defined over the prime field")
    zeta = dst.subfield_primitive(degree)
    image = None
    for j in range(1, n + 1):
        if math.gcd(j, n) != 1:
            continue
        cand = dst.pow(zeta, j)
        value = 0
        for c in reversed(minpoly):
            value = dst.add(dst.mul(value, cand), c)
        if value == 0:
            image = cand
            break
    if image is None:
        raise ArithmeticError("no root of the minimal polynomial in the target field")
    mapping = {0: 0}
    x = y = 1
    for _ in range(n):
        mapping[x] = y
        x, y = src.mul(x, theta), dst.mul(y, image)
    return mapping
