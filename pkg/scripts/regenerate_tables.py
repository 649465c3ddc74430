"""Write every parameter table as text and JSON into a directory.

    python3 scripts/regenerate_tables.py --out tables/

With --check the appendix tables are compared cell by cell against the
fixture in tests/fixtures and every difference is listed.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from sumrank.tables import TABLE_IDS, build_table

FIXTURE = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "appendix_tables.json"


@dataclass
class Config:
    out: Path = Path("tables")
    check: bool = False


def write_all(out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    for table_id in TABLE_IDS:
        table = build_table(table_id)
        (out / f"table_{table_id}.txt").write_text(table.render())
        (out / f"table_{table_id}.json").write_text(table.to_json())
        print(f"wrote table {table_id}")


def compare_to_fixture() -> int:
    expected = json.loads(FIXTURE.read_text())
    diffs = 0
    for table_id in ("3", "4", "5", "6", "7", "8"):
        table = build_table(table_id)
        for label, row, want in zip(table.labels, table.rows, expected[table_id]):
            for head, got, cell in zip(table.header, row, want):
                if got != cell:
                    diffs += 1
                    print(f"table {table_id} | {label} | {head}: computed {got}, fixture {cell}")
    print(f"{diffs} differing cells")
    return diffs


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Config.out)
    parser.add_argument("--check", action="store_true")
    cfg = Config(**vars(parser.parse_args()))
    write_all(cfg.out)
    if cfg.check:
        return 1 if compare_to_fixture() else 0
    return 0


if __name__ == "__main__":
    sys.exit(main())
