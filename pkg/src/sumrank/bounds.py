"""Exact evaluation of the known existence bounds for MSRD and PMDS codes."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import comb

TIGHT, SATISFIED, VIOLATED, NOT_APPLICABLE = "TIGHT", "SATISFIED", "VIOLATED", "N/A"


@dataclass(frozen=True)
class BoundResult:
    name: str
    statement: str
    status: str
    lhs: int | Fraction | None = None
    rhs: int | Fraction | None = None
    note: str = ""

    def to_dict(self) -> dict:
        out = asdict(self)
        for key in ("lhs", "rhs"):
            if isinstance(out[key], Fraction):
                out[key] = str(out[key])
        return out


def _upper(name: str, statement: str, value, limit) -> BoundResult:
    if value > limit:
        status = VIOLATED
    else:
        status = TIGHT if value == limit else SATISFIED
    return BoundResult(name, statement, status, value, limit)


def _lower(name: str, statement: str, value, limit) -> BoundResult:
    if value < limit:
        status = VIOLATED
    else:
        status = TIGHT if value == limit else SATISFIED
    return BoundResult(name, statement, status, value, limit)


def _skip(name: str, statement: str, why: str) -> BoundResult:
    return BoundResult(name, statement, NOT_APPLICABLE, note=why)


def evaluate_bounds(q: int, m: int, r: int, g: int, h: int, mu: int | None = None,
                    delta_loc: int | None = None, k: int | None = None,
                    d: int | None = None) -> list[BoundResult]:
    """Check sum-rank parameters against every applicable bound.

    ``h`` is the redundancy N - k, so the minimum distance of an MSRD code
    is h + 1.  ``mu`` enables the shared-beta field-size condition and
    ``delta_loc`` the PMDS field-size bounds.  ``k`` and ``d`` default to
    the MSRD values N - h and h + 1.  Only the bounds on g and on
    the field size carry the TIGHT flag; the structural conditions report
    SATISFIED or VIOLATED.
    """
    if min(q, m, r, g, h) < 1:
        raise ValueError("all parameters must be positive")
    N = g * r
    out = []

    k = N - h if k is None else k
    d = h + 1 if d is None else d
    log_size, limit = m * k, m * (N - d + 1)
    out.append(BoundResult("singleton", "log_q |C| = m*k <= m*(N - d + 1)",
                           SATISFIED if log_size <= limit else VIOLATED, log_size, limit,
                           "met with equality" if log_size == limit else ""))

    out.append(BoundResult("m>=r", "m >= r", SATISFIED if m >= r else VIOLATED, m, r))
    if mu is not None:
        need = r * min(h, mu)
        out.append(BoundResult("shared-beta", "m >= r*min(h, mu)",
                               SATISFIED if m >= need else VIOLATED, m, need))

    qm, qr = q**m, q**r
    s6 = "g <= floor((h-2)/r) + floor((q-1) q^m / (q^r-1)) + 1"
    if h >= 2:
        out.append(_upper("g-general", s6, g, (h - 2) // r + (q - 1) * qm // (qr - 1) + 1))
    else:
        out.append(_skip("g-general", s6, "needs h >= 2"))

    s7 = "g <= floor((q-1)(q^m+1) / (q^r-1))"
    if h == 2:
        out.append(_upper("g-distance3", s7, g, (q - 1) * (qm + 1) // (qr - 1)))
    else:
        out.append(_skip("g-distance3", s7, "needs h = 2"))

    s8 = "g <= (q-1)(q^m-1) / (q^r-1)"
    if h == 2 and r >= 2 and m % r == 0:
        out.append(_upper("g-distance3-divisible", s8, g, Fraction((q - 1) * (qm - 1), qr - 1)))
    else:
        out.append(_skip("g-distance3-divisible", s8, "needs h = 2, r >= 2 and r | m"))

    s9 = "g <= floor((h-2)/r) + q + 1"
    if m == r and h >= 2:
        out.append(_upper("g-square", s9, g, (h - 2) // r + q + 1))
    else:
        out.append(_skip("g-square", s9, "needs m = r and h >= 2"))

    if delta_loc is not None:
        s10 = "q^m >= floor(g/h^2) * C(r+delta-1, delta) - 1"
        s11 = "q^m >= floor(g/h^2) * C(r+h-2, h-1) - 1"
        if delta_loc + 1 <= h <= g:
            out.append(_lower("pmds-large-h", s10, qm, (g // h**2) * comb(r + delta_loc - 1, delta_loc) - 1))
        else:
            out.append(_skip("pmds-large-h", s10, "needs delta+1 <= h <= g"))
        if h < delta_loc + 1 and h <= g:
            out.append(_lower("pmds-small-h", s11, qm, (g // h**2) * comb(r + h - 2, h - 1) - 1))
        else:
            out.append(_skip("pmds-small-h", s11, "needs h < delta+1 and h <= g"))
    return out


def overall_ok(results: list[BoundResult]) -> bool:
    return all(b.status != VIOLATED for b in results)
