"""Command-line entry point: ``sumrank construct | verify | table | bounds``.

Exit codes: 0 when every check passes, 1 when a property fails, 2 for bad
input or when a desk-scale cap refuses the computation.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import serialize
from ._caps import CapExceeded
from .bounds import VIOLATED, evaluate_bounds
from .finite_field import is_conjugate
from .msrd import (MsrdCode, build_msrd_code, check_msrd_conditions, extended_moore_matrix,
                   is_msrd_matrix_bruteforce, min_sum_rank_distance_exhaustive)
from .pmds import (PmdsCode, construct_pmds, correct_erasures_batch, encode, legal_erasure_patterns,
                   local_distance, verify_pmds_bruteforce)
from .seeds import SEED_KINDS, SeedCode, bch_seed, hamming_seed, hermitian_seed, mds_seed, trivial_seed
from .tables import TABLE_IDS, build_table


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class Recipe:
    seed: str
    q: int
    r: int
    h: int
    ell: int = 1
    rho: int | None = None
    s: int | None = None
    mu: int | None = None
    t: int | None = None
    b: int = 0
    nu: int | None = None

    def _need(self, name: str) -> int:
        value = getattr(self, name)
        if value is None:
            raise UsageError(f"--{name} is required for the {self.seed} seed")
        return value

    def build_seed(self) -> SeedCode:
        q, r = self.q, self.r
        if self.seed == "trivial":
            return trivial_seed(q, r)
        if self.seed == "mds":
            mu = self.mu if self.mu is not None else q**r + 1
            return mds_seed(q, r, mu, self.t if self.t is not None else min(self.h, mu))
        if self.seed == "hamming":
            return hamming_seed(q, r, self._need("rho"))
        if self.seed == "bch":
            s = self._need("s")
            t = self.t if self.t is not None else min(self.h, q**(r * s) - 1)
            return bch_seed(q, r, s, t, self.b)
        if self.seed == "hermitian":
            return hermitian_seed(q, r, self.h)
        raise UsageError(f"unknown seed kind {self.seed!r}")

    def build(self, verify: bool = False) -> MsrdCode | PmdsCode:
        code = build_msrd_code(self.build_seed(), self.ell, self.h, verify_bruteforce=verify)
        if self.nu is not None:
            return construct_pmds(code, nu=self.nu)
        return code


def summary(code: MsrdCode | PmdsCode) -> dict:
    outer = code.outer if isinstance(code, PmdsCode) else code
    p = outer.params
    out = {"seed": outer.provenance.kind if outer.provenance else None,
           "q": p.q, "m": p.m, "r": p.r, "g": p.g, "N": p.N, "k": p.k, "d": p.h + 1,
           "field_size": f"{p.q}^{p.m}"}
    if isinstance(code, PmdsCode):
        out.update({"nu": code.nu, "delta_loc": code.delta_loc, "length": code.length})
    return out


def _summary_line(info: dict) -> str:
    return " ".join(f"{key}={value}" for key, value in info.items())


def _report(checks: list[tuple[str, bool, str]], as_json: bool) -> int:
    ok = all(passed for _, passed, _ in checks)
    if as_json:
        print(json.dumps({"ok": ok, "checks": [{"name": n, "pass": p, "detail": d} for n, p, d in checks]},
                         sort_keys=True))
    else:
        for name, passed, detail in checks:
            print(f"{'PASS' if passed else 'FAIL'} {name}" + (f": {detail}" if detail else ""))
    return 0 if ok else 1


# --- subcommands ----------------------------------------------------------

def cmd_construct(args) -> int:
    nu = args.nu
    if args.delta_loc is not None:
        if nu is not None and nu != args.r + args.delta_loc - 1:
            raise UsageError("--nu and --delta-loc disagree: need nu = r + delta - 1")
        nu = args.r + args.delta_loc - 1
    recipe = Recipe(args.seed, args.q, args.r, args.h, args.l, args.rho, args.s, args.mu, args.t, args.b, nu)
    code = recipe.build(verify=args.verify)
    doc = serialize.pmds_to_json(code) if isinstance(code, PmdsCode) else serialize.code_to_json(code)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(serialize.dumps(doc))
    info = summary(code)
    print(json.dumps(info, sort_keys=True) if args.json else _summary_line(info))
    return 0


def _theorem_checks(code: MsrdCode) -> list[tuple[str, bool, str]]:
    p, ctx = code.params, code.ctx
    distinct = all(not is_conjugate(ctx, x, y, p.q, p.m)
                   for i, x in enumerate(code.a) for y in code.a[i + 1:])
    rebuilt = extended_moore_matrix(ctx, code.a, [code.beta] * p.ell, p.h, p.q)
    return [
        ("class representatives pairwise non-conjugate", distinct, f"{len(code.a)} classes"),
        ("parity-check matches the extended Moore matrix", rebuilt == code.parity_check, ""),
        ("rank conditions on beta", check_msrd_conditions(ctx, code.beta, p.r, p.mu, p.h, p.q),
         f"every {p.t} blocks independent over GF({p.q})"),
    ]


def cmd_verify(args) -> int:
    code = serialize.load(args.path)
    outer = code.outer if isinstance(code, PmdsCode) else code
    p = outer.params
    mode = args.mode
    if mode == "theorem":
        checks = _theorem_checks(outer)
    elif mode == "bruteforce":
        ok = is_msrd_matrix_bruteforce(outer.parity_check, p.g, p.r, p.q)
        checks = [("MDS under every block-diagonal GL tuple", ok, f"g={p.g}, r={p.r}, q={p.q}")]
    elif mode == "distance":
        dual = min_sum_rank_distance_exhaustive(outer.parity_check, p.g, p.r, p.q)
        checks = [("dual minimum sum-rank distance", dual == p.N - p.h + 1,
                   f"measured {dual}, expected N - h + 1 = {p.N - p.h + 1}")]
    elif mode == "pmds":
        if not isinstance(code, PmdsCode):
            raise UsageError("pmds mode needs a file written with --nu or --delta-loc")
        checks = [("every restriction pattern is MDS", verify_pmds_bruteforce(code), "")]
        dists = [local_distance(code, i) for i in range(code.g)]
        checks.append(("local distances", all(d >= code.delta_loc for d in dists),
                       f"measured {sorted(set(dists))}, need >= {code.delta_loc}"))
        patterns = legal_erasure_patterns(code, limit=args.patterns)
        rng = np.random.default_rng(0)
        msgs = rng.integers(0, code.ctx.order, size=(args.words, code.k))
        words = encode(code, msgs)
        failures = 0
        for erased in patterns:
            damaged = words.copy()
            damaged[:, list(erased)] = 0
            fixed = correct_erasures_batch(code, damaged, erased)
            failures += fixed is None or not np.array_equal(fixed, words)
        checks.append(("erasure round trip", failures == 0,
                       f"{len(patterns)} patterns x {args.words} codewords, {failures} failures"))
    else:
        raise UsageError(f"unknown mode {mode!r}")
    return _report(checks, args.json)


def cmd_table(args) -> int:
    table = build_table(args.id)
    sys.stdout.write(table.to_json() if args.json else table.render())
    return 0


def cmd_bounds(args) -> int:
    results = evaluate_bounds(args.q, args.m, args.r, args.g, args.h, mu=args.mu,
                              delta_loc=args.delta_loc, k=args.k, d=args.d)
    if args.json:
        print(json.dumps([b.to_dict() for b in results], sort_keys=True, indent=1))
    else:
        for b in results:
            values = "" if b.lhs is None else f" ({b.lhs} vs {b.rhs})"
            note = f" [{b.note}]" if b.note else ""
            print(f"{b.status:<9} {b.name}: {b.statement}{values}{note}")
    return 1 if any(b.status == VIOLATED for b in results) else 0


# --- argument parsing -----------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sumrank", description="Sum-rank MSRD and PMDS code toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a code from a seed recipe")
    c.add_argument("--seed", required=True, choices=SEED_KINDS)
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--h", type=int, required=True)
    c.add_argument("--l", type=int, default=1, help="number of conjugacy classes used")
    c.add_argument("--rho", type=int)
    c.add_argument("--s", type=int)
    c.add_argument("--mu", type=int)
    c.add_argument("--t", type=int)
    c.add_argument("--b", type=int, default=0)
    c.add_argument("--nu", type=int, help="local set size of a PMDS lift")
    c.add_argument("--delta-loc", type=int, help="local distance of a PMDS lift")
    c.add_argument("--verify", action="store_true", help="also run the brute-force MSRD oracle")
    c.add_argument("--out")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a serialized code")
    v.add_argument("path")
    v.add_argument("--mode", choices=("theorem", "bruteforce", "distance", "pmds"), default="theorem")
    v.add_argument("--patterns", type=int, default=10**5,
                   help="enumerate all erasure patterns up to this many (pmds mode)")
    v.add_argument("--words", type=int, default=100, help="random codewords per pattern (pmds mode)")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="regenerate a parameter table")
    t.add_argument("id", choices=TABLE_IDS + tuple(x.lower() for x in TABLE_IDS if x.isalpha()))
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_table)

    b = sub.add_parser("bounds", help="evaluate existence bounds")
    for name in ("q", "m", "r", "g", "h"):
        b.add_argument(f"--{name}", type=int, required=True)
    b.add_argument("--mu", type=int)
    b.add_argument("--delta-loc", type=int)
    b.add_argument("--k", type=int)
    b.add_argument("--d", type=int)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bounds)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"FAIL construction: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
