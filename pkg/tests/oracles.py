"""Slow reference implementations used to cross-check the library.

Nothing here touches the library's tables or elimination routines: field
products are schoolbook polynomial products reduced by long division,
determinants use the Leibniz expansion, ranks over F_p go through sympy.
"""
from __future__ import annotations

import itertools

from sympy import GF
from sympy.combinatorics import Permutation
from sympy.polys.matrices import DomainMatrix


def digits(x: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        x, c = divmod(x, p)
        out.append(c)
    return out


def undigits(coeffs, p: int) -> int:
    return sum(int(c) * p**i for i, c in enumerate(coeffs))


def poly_mulmod(a: int, b: int, modulus, p: int) -> int:
    n = len(modulus) - 1
    da, db = digits(a, p, n), digits(b, p, n)
    prod = [0] * (2 * n)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % p
    for deg in range(2 * n - 1, n - 1, -1):
        c = prod[deg]
        if c:
            for k in range(n + 1):
                prod[deg - n + k] = (prod[deg - n + k] - c * modulus[k]) % p
    return undigits(prod[:n], p)


def poly_add(a: int, b: int, p: int, n: int) -> int:
    return undigits([(x + y) % p for x, y in zip(digits(a, p, n), digits(b, p, n))], p)


def poly_pow(a: int, e: int, modulus, p: int) -> int:
    out = 1
    for _ in range(e):
        out = poly_mulmod(out, a, modulus, p)
    return out


def _divides(f, g, p) -> bool:
    """Whether the polynomial g (coefficient list) divides f over F_p."""
    f = list(f)
    inv = pow(g[-1], p - 2, p)
    while len(f) >= len(g):
        c = f[-1] * inv % p
        shift = len(f) - len(g)
        for k, gk in enumerate(g):
            f[shift + k] = (f[shift + k] - c * gk) % p
        f.pop()
        while f and f[-1] == 0:
            f.pop()
    return not f


def irreducible_by_trial_division(f, p: int) -> bool:
    n = len(f) - 1
    for d in range(1, n // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if _divides(f, list(tail) + [1], p):
                return False
    return True


def first_sparse_irreducible(p: int, L: int) -> list[int]:
    """Fewest nonzero coefficients first, then smallest packed value."""
    cands = []
    for tail in itertools.product(range(p), repeat=L):
        f = list(tail) + [1]
        if f[0] == 0:
            continue
        cands.append((sum(1 for c in f if c), undigits(f, p), f))
    for _, _, f in sorted(cands):
        if irreducible_by_trial_division(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")


def multiplicative_order(x: int, modulus, p: int) -> int:
    y, k = x, 1
    while y != 1:
        y = poly_mulmod(y, x, modulus, p)
        k += 1
    return k


def smallest_primitive(modulus, p: int) -> int:
    n = p**(len(modulus) - 1) - 1
    return next(x for x in range(1, n + 1) if multiplicative_order(x, modulus, p) == n)


def leibniz_det(ctx, M) -> int:
    n = len(M)
    total = 0
    for perm in itertools.permutations(range(n)):
        term = 1
        for i, j in enumerate(perm):
            term = ctx.mul(term, int(M[i][j]))
        if Permutation(list(perm)).is_odd:
            term = ctx.neg(term)
        total = ctx.add(total, term)
    return total


def rank_by_minors(ctx, M) -> int:
    rows, cols = len(M), len(M[0]) if M else 0
    for k in range(min(rows, cols), 0, -1):
        for rs in itertools.combinations(range(rows), k):
            for cs in itertools.combinations(range(cols), k):
                if leibniz_det(ctx, [[M[i][j] for j in cs] for i in rs]):
                    return k
    return 0


def rank_mod_p_sympy(rows, p: int) -> int:
    if not rows:
        return 0
    dom = GF(p)
    return DomainMatrix([[dom(int(x)) for x in row] for row in rows], (len(rows), len(rows[0])), dom).rank()


def subfield_span_rank(ctx, elements, q: int) -> int:
    """Rank over GF(q) of field elements by counting their GF(q)-span."""
    sub = [x for x in range(ctx.order) if ctx.pow(x, q) == x]
    span = {0}
    for e in elements:
        span = {ctx.add(s, ctx.mul(c, e)) for s in span for c in sub}
    size, k = len(span), 0
    while q**k < size:
        k += 1
    return k


def conjugate_exhaustive(ctx, a: int, b: int, q: int) -> bool:
    return any(ctx.mul(ctx.pow(c, q - 1), a) == b for c in range(1, ctx.order))
