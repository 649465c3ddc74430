"""JSON round-tripping for fields, matrices, seeds and codes.

Elements are written as coefficient arrays over F_p (ascending powers) and
every document is dumped with sorted keys, so output is byte-stable.
"""
from __future__ import annotations

import json
from typing import Any

import numpy as np

from .finite_field import Basis, FieldContext, make_field
from .linalg import MatrixF
from .msrd import MsrdCode, MsrdParams
from .pmds import PmdsCode
from .seeds import SeedCode


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def field_to_json(ctx: FieldContext) -> dict:
    return {"p": ctx.p, "L": ctx.L, "modulus": list(ctx.modulus), "primitive": ctx.digits(ctx.primitive)}


def field_from_json(doc: dict) -> FieldContext:
    p, L = int(doc["p"]), int(doc["L"])
    modulus = [int(c) for c in doc["modulus"]]
    primitive = sum(int(c) * p**i for i, c in enumerate(doc["primitive"]))
    default = make_field(p, L)
    if list(default.modulus) == modulus and default.primitive == primitive:
        return default
    return FieldContext(p, L, modulus, primitive)


def elements_to_json(ctx: FieldContext, values) -> list[list[int]]:
    return [ctx.digits(int(x)) for x in values]


def elements_from_json(ctx: FieldContext, doc: list) -> list[int]:
    return [ctx.from_digits(c) for c in doc]


def matrix_to_json(M: MatrixF) -> dict:
    return {"level": M.level, "rows": M.rows, "cols": M.cols,
            "entries": elements_to_json(M.ctx, M.data.ravel())}


def matrix_from_json(ctx: FieldContext, doc: dict) -> MatrixF:
    rows, cols = int(doc["rows"]), int(doc["cols"])
    values = elements_from_json(ctx, doc["entries"])
    if len(values) != rows * cols:
        raise ValueError("matrix entry count does not match its shape")
    M = MatrixF(ctx, np.array(values, dtype=np.int64).reshape(rows, cols), int(doc["level"]))
    if not M.entries_in_level():
        raise ValueError(f"matrix entries leave the degree-{M.level} level")
    return M


def _plain(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return value


def seed_to_json(seed: SeedCode) -> dict:
    return {"kind": seed.kind, "q": seed.q, "r": seed.r, "mu": seed.mu, "rho": seed.rho,
            "guaranteed_distance": seed.guaranteed_distance, "H": matrix_to_json(seed.H),
            "field": field_to_json(seed.ctx), "info": _plain(seed.info)}


def seed_from_json(doc: dict) -> SeedCode:
    ctx = field_from_json(doc["field"])
    return SeedCode(doc["kind"], int(doc["q"]), int(doc["r"]), int(doc["mu"]), int(doc["rho"]),
                    matrix_from_json(ctx, doc["H"]), int(doc["guaranteed_distance"]), doc.get("info", {}))


def code_to_json(code: MsrdCode) -> dict:
    p = code.params
    ctx = code.ctx
    return {
        "params": {"q": p.q, "r": p.r, "m": p.m, "ell": p.ell, "mu": p.mu, "h": p.h,
                   "g": p.g, "N": p.N, "k": p.k},
        "field": field_to_json(ctx),
        "a": elements_to_json(ctx, code.a),
        "beta": elements_to_json(ctx, code.beta),
        "alpha": {"top": code.alpha.top, "bottom": code.alpha.bottom,
                  "vec": elements_to_json(ctx, code.alpha.vec)},
        "parity_check": matrix_to_json(code.parity_check),
        "provenance": None if code.provenance is None else seed_to_json(code.provenance),
    }


def code_from_json(doc: dict) -> MsrdCode:
    ctx = field_from_json(doc["field"])
    raw = doc["params"]
    params = MsrdParams(*(int(raw[key]) for key in ("q", "r", "m", "ell", "mu", "h")))
    alpha_doc = doc["alpha"]
    alpha = Basis(ctx, int(alpha_doc["top"]), int(alpha_doc["bottom"]),
                  tuple(elements_from_json(ctx, alpha_doc["vec"])))
    seed = None if doc.get("provenance") is None else seed_from_json(doc["provenance"])
    return MsrdCode(params, ctx, tuple(elements_from_json(ctx, doc["a"])),
                    tuple(elements_from_json(ctx, doc["beta"])),
                    matrix_from_json(ctx, doc["parity_check"]), alpha, seed)


def pmds_to_json(code: PmdsCode) -> dict:
    doc = code_to_json(code.outer)
    doc.update({"nu": code.nu, "delta_loc": code.delta_loc,
                "local_gens": [matrix_to_json(A) for A in code.local_gens],
                "global_gen": matrix_to_json(code.global_gen)})
    return doc


def pmds_from_json(doc: dict) -> PmdsCode:
    outer = code_from_json(doc)
    ctx = outer.ctx
    local = tuple(matrix_from_json(ctx, A) for A in doc["local_gens"])
    return PmdsCode(outer, local, matrix_from_json(ctx, doc["global_gen"]))


def load(path: str) -> MsrdCode | PmdsCode:
    with open(path) as fh:
        doc = json.load(fh)
    return pmds_from_json(doc) if "local_gens" in doc else code_from_json(doc)
