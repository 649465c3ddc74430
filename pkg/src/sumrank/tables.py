"""Closed-form parameter tables for the seed families over even q.

Everything here is integer arithmetic on exponents; no code is built.
Field sizes in the comparison tables are powers of two, so cells store the
base-2 exponent and render as ``2^e``.  Bold cells (minimum field size for a
given r and h) are rendered as ``**2^e**``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

R_VALUES = (2, 3, 4, 5, 6)
H_VALUES = (2, 3, 4)
FIXED_G = {4: 7, 5: 15, 6: 31}
FIXED_N = {7: 30, 8: 62}
TABLE_IDS = ("1", "2", "3", "4", "5", "6", "7", "8", "A")


@dataclass(frozen=True)
class Table:
    table_id: str
    title: str
    header: tuple[str, ...]
    labels: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]
    notes: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        return {"id": self.table_id, "title": self.title, "header": list(self.header),
                "rows": [{"label": lab, "cells": list(cells)} for lab, cells in zip(self.labels, self.rows)],
                "notes": list(self.notes)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1) + "\n"

    def render(self) -> str:
        grid = [("",) + self.header] + [(lab,) + cells for lab, cells in zip(self.labels, self.rows)]
        widths = [max(len(row[i]) for row in grid) for i in range(len(grid[0]))]
        lines = [f"Table {self.table_id}: {self.title}"]
        for n, row in enumerate(grid):
            lines.append(" | ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
            if n == 0:
                lines.append("-+-".join("-" * w for w in widths))
        lines.extend(self.notes)
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# exponent arithmetic (q = 2^bits)

def bch_ceiling(qr: int, h: int) -> int:
    """ceil(((q^r - 1) / q^r) * (h - 1))."""
    return ceil(Fraction((qr - 1) * (h - 1), qr))


def bch_field_log(q: int, r: int, s: int, h: int) -> int:
    """log_q of the field size of a primitive-BCH-seeded code (upper estimate)."""
    return r * (1 + s * bch_ceiling(q**r, h))


def mds_field_log(q: int, r: int, h: int) -> int:
    return r * min(h, q**r + 1)


def hermitian_field_log(q: int, r: int, h: int) -> Fraction:
    half = q**r
    root = round(half**0.5)
    if root * root != half:
        raise ValueError("the Hermitian family needs q^r to be a square")
    return r * (h + Fraction(half - root, 2))


def trivial_choice(r: int, g: int) -> tuple[int, int]:
    """(q bits, field bits) for the smallest even q with q - 1 >= g."""
    bits = 1
    while 2**bits - 1 < g:
        bits += 1
    return bits, bits * r


def mds_choice(r: int, g: int, h: int) -> tuple[int, int]:
    bits = 1
    while (2**bits - 1) * (2**(bits * r) - 1) < g:
        bits += 1
    return bits, bits * mds_field_log(2**bits, r, h)


def hamming_choice(r: int, g: int, min_rho: int = 3) -> tuple[int, int]:
    """(rho, field bits) over q = 2 with the smallest rho >= min_rho reaching g classes."""
    rho = min_rho
    while (2**(r * rho) - 1) // (2**r - 1) < g:
        rho += 1
    return rho, r * rho


def bch_choice(r: int, g: int, h: int) -> tuple[int, int]:
    """(s, field bits) over q = 2 with the smallest s such that 2^(rs) - 1 >= g."""
    s = 1
    while 2**(r * s) - 1 < g:
        s += 1
    return s, bch_field_log(2, r, s, h)


# ---------------------------------------------------------------------------
# rendering helpers

def power_of_two(bits: int) -> str:
    return "2" if bits == 1 else f"2^{bits}"


def _count(value: int) -> str:
    """Large Mersenne-type counts are written as 2^e-1."""
    e = (value + 1).bit_length() - 1
    if value + 1 == 2**e and e >= 15:
        return f"2^{e}-1"
    return str(value)


def _bold(text: str, flag: bool) -> str:
    return f"**{text}**" if flag else text


def _join(values) -> str:
    return ",".join(str(v) for v in sorted(set(values)))


# ---------------------------------------------------------------------------
# appendix tables

def table_fixed_q2() -> Table:
    labels, rows = [], []
    header = tuple(x for r in R_VALUES for x in (f"r={r}: 2^m", f"r={r}: g"))

    labels.append("Trivial")
    rows.append(tuple(x for r in R_VALUES for x in (power_of_two(r), "1")))
    for n, h in enumerate(H_VALUES):
        labels.append(f"MDS, h = {h}")
        rows.append(tuple(x for r in R_VALUES
                          for x in (power_of_two(mds_field_log(2, r, h)), str(2**r + 1) if n == 0 else "")))
    labels.append("Hamming, rho = 3, h = 2")
    rows.append(tuple(x for r in R_VALUES
                      for x in (power_of_two(3 * r), str((2**(3 * r) - 1) // (2**r - 1)))))
    for s in (2, 3):
        for n, h in enumerate(H_VALUES):
            labels.append(f"BCH, s = {s}, h = {h}")
            rows.append(tuple(x for r in R_VALUES
                              for x in (power_of_two(bch_field_log(2, r, s, h)),
                                        _count(2**(r * s) - 1) if n == 0 else "")))
    return Table("3", "fixed q = 2", header, tuple(labels), tuple(rows))


def table_fixed(table_id: int) -> Table:
    """Tables with fixed g (ids 4-6) or fixed length N = gr (ids 7-8)."""
    if table_id in FIXED_G:
        target_g, target_n = FIXED_G[table_id], None
        title = f"fixed g = {target_g}, q even"
    elif table_id in FIXED_N:
        target_g, target_n = None, FIXED_N[table_id]
        title = f"fixed N = gr = {target_n}, q even"
    else:
        raise ValueError(f"unknown table id {table_id}")

    # family -> per-r list of (field bits, q bits, parameter) indexed by h
    columns = []
    for r in R_VALUES:
        g = target_g if target_g is not None else -(-target_n // r)
        triv = trivial_choice(r, g)
        mds = {h: mds_choice(r, g, h) for h in H_VALUES}
        ham = hamming_choice(r, g)
        bch = {h: bch_choice(r, g, h) for h in H_VALUES}
        mrd = r * g if target_n is None else target_n
        best = {}
        for h in H_VALUES:
            cands = [triv[1], mds[h][1], bch[h][1]] + ([ham[1]] if h == 2 else [])
            best[h] = min(cands)
        columns.append(dict(triv=triv, mds=mds, ham=ham, bch=bch, mrd=mrd, best=best))

    labels, rows = [], []
    labels.append("Trivial, any h >= 1")
    # for h = 1 only the trivial family applies, so it is always a column minimum
    rows.append(tuple(x for c in columns
                      for x in (_bold(power_of_two(c["triv"][1]), True), power_of_two(c["triv"][0]))))
    for n, h in enumerate(H_VALUES):
        labels.append(f"MDS, h = {h}")
        rows.append(tuple(x for c in columns
                          for x in (_bold(power_of_two(c["mds"][h][1]), c["mds"][h][1] == c["best"][h]),
                                    power_of_two(c["mds"][h][0]) if n == 0 else "")))
    rhos = _join(c["ham"][0] for c in columns)
    labels.append(f"Hamming, rho = {rhos}, h = 2")
    rows.append(tuple(x for c in columns
                      for x in (_bold(power_of_two(c["ham"][1]), c["ham"][1] == c["best"][2]), "2")))
    s_values = _join(c["bch"][h][0] for c in columns for h in H_VALUES)
    for n, h in enumerate(H_VALUES):
        labels.append(f"BCH, s = {s_values}, h = {h}")
        rows.append(tuple(x for c in columns
                          for x in (_bold(power_of_two(c["bch"][h][1]), c["bch"][h][1] == c["best"][h]),
                                    "2" if n == 0 else "")))
    labels.append("Best MRD, any h >= 1")
    rows.append(tuple(x for c in columns for x in (power_of_two(c["mrd"]), "2")))
    header = tuple(x for r in R_VALUES for x in (f"r={r}: q^m", f"r={r}: q"))
    return Table(str(table_id), title, header, tuple(labels), tuple(rows))


# ---------------------------------------------------------------------------
# summary tables (formula strings)

MSRD_SUMMARY = (
    ("Trivial", "any", "q-1", "q^r = (g+1)^r, m = r"),
    ("MDS", "any", "(q-1)(q^r+1)", "(g/(q-1) - 1)^min{h, g/(q-1)}"),
    ("Hamming, rho >= 1", "h = 2", "(q-1)(q^(r rho)-1)/(q^r-1)", "q^(r rho) = ((q^r-1)/(q-1)) g + 1"),
    ("Primitive BCH, s >= 1", "any", "(q-1)(q^(rs)-1)",
     "<= q^r (g/(q-1) + 1)^ceil(((q^r-1)/q^r)(h-1))"),
    ("Hermitian AG", "q^r = p^(2s)", "(q-1) q^(3r/2)",
     "mu^((2h + mu^(2/3) - mu^(1/3))/3), mu = g/(q-1)"),
    ("Suzuki AG", "q^r = 2^(2s+1)", "(q-1) q^(2r)", "<= mu^((h + mu^(3/4) - mu^(1/4))/2), mu = g/(q-1)"),
    ("Tower AG, i >= 1", "q^r = p^(2s)", "(q-1)(q^(r/2)-1) q^(ir/2)",
     "<= (mu_i/(q^(r/2)-1))^((2/i)(h_i + mu_i/(q^(r/2)-1))), mu_i = g_i/(q-1)"),
)

PMDS_SUMMARY = (
    ("Trivial", "max{nu, g} < q <= 2 max{nu, g}", "q^m <= (2 max{nu, g})^r, m = r"),
    ("MDS", "g = (q-1)(q^r+1) or (2 nu)^r > g/nu",
     "q^m <= max{(2 nu)^r, floor(g/nu) - 1}^min{h, floor(g/nu)}"),
    ("Primitive BCH", "g = (q-1)(q^(rs)-1) and q > nu", "q^m <= (2 nu)^r (floor(g/nu) + 1)^(h-1)"),
)

GENERAL_SUMMARY = (
    ("Trivial", "any", "q-1", "q^r"),
    ("MDS", "any", "(q-1)(q^r+1)", "q^(r min{h, q^r+1})"),
    ("Hamming, rho >= 1", "h = 2", "(q-1)(q^(r rho)-1)/(q^r-1)", "q^(r rho)"),
    ("Primitive BCH, s >= 1", "any", "(q-1)(q^(rs)-1)", "<= q^(r(1 + s ceil(((q^r-1)/q^r)(h-1))))"),
    ("Hermitian AG", "q^r = p^(2s)", "(q-1) q^(3r/2)", "q^(r(h + (q^r - q^(r/2))/2))"),
    ("Suzuki AG", "q^r = 2^(2s+1)", "(q-1) q^(2r)", "q^(r(h + 2^s (q^r-1)))"),
    ("Tower AG, i >= 1", "q^r = p^(2s)", "(q-1)(q^(r/2)-1) q^(ir/2)", "<= q^(r(h_i + q^(ir/2)))"),
)


def _summary(table_id: str, title: str, header: tuple[str, ...], data) -> Table:
    return Table(table_id, title, header, tuple(row[0] for row in data), tuple(tuple(row[1:]) for row in data))


def msrd_summary_field(family: str, q: int, r: int, h: int, param: int = 1) -> Fraction:
    """Field size predicted by the MSRD summary formulas at the family's largest g.

    ``param`` is rho for Hamming and s for BCH.  Returned as an exact
    rational (the Hermitian exponent can be fractional).
    """
    if family == "trivial":
        g = q - 1
        return Fraction(g + 1)**r
    if family == "mds":
        mu = q**r + 1
        return Fraction(mu - 1)**min(h, mu)
    if family == "hamming":
        g = (q - 1) * (q**(r * param) - 1) // (q**r - 1)
        return Fraction((q**r - 1) * g, q - 1) + 1
    if family == "bch":
        mu = q**(r * param) - 1
        return Fraction(q**r) * Fraction(mu + 1)**bch_ceiling(q**r, h)
    raise ValueError(f"no closed-form summary check for family {family!r}")


def general_field_log(family: str, q: int, r: int, h: int, param: int = 1) -> Fraction:
    """log_q of the field size in the (q, r, h) summary."""
    if family == "trivial":
        return Fraction(r)
    if family == "mds":
        return Fraction(mds_field_log(q, r, h))
    if family == "hamming":
        return Fraction(r * param)
    if family == "bch":
        return Fraction(bch_field_log(q, r, param, h))
    if family == "hermitian":
        return hermitian_field_log(q, r, h)
    raise ValueError(f"unknown family {family!r}")


def build_table(table_id: str | int) -> Table:
    key = str(table_id).upper()
    if key == "1":
        return _summary("1", "MSRD families", ("q, r, h", "classes g", "field q^m"), MSRD_SUMMARY)
    if key == "2":
        return _summary("2", "PMDS families (q even)", ("restrictions on r, delta, g, h, q", "field size q^m"),
                        PMDS_SUMMARY)
    if key == "A":
        return _summary("A", "MSRD field sizes in terms of q, r, h",
                        ("q, r, h", "classes g", "field q^m"), GENERAL_SUMMARY)
    if key == "3":
        return table_fixed_q2()
    if key in {"4", "5", "6", "7", "8"}:
        return table_fixed(int(key))
    raise ValueError(f"unknown table id {table_id!r}; choose from {', '.join(TABLE_IDS)}")
