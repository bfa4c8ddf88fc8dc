#!/usr/bin/env python3
"""Recompute selfdual basic weights and compare with the published tables.

    python3 scripts/sd_tables.py --n 5 6 7 [--json out.json]

For n = 6 only weights with at least two sectors are listed, for n = 7 only
three-sector ones, matching the layout of the published tables.
"""

from __future__ import annotations

import argparse
import json
from collections import Counter

from glnn.experiments import TableConfig, selfdual_basic_table

PUBLISHED = {
    5: {(4, 3, 2, 1, 0): 120, (3, 3, 2, 0, 0): 30, (4, 1, 1, 1, 0): 20, (1, 0, 0, 0, 0): 2,
        (2, 1, 0, 0, 0): 6, (3, 2, 1, 0, 0): 24, (2, 2, 0, 0, 0): 6, (3, 1, 1, 0, 0): 12},
    6: {(5, 4, 3, 2, 1, 0): 720, (3, 3, 3, 0, 0, 0): 20, (4, 3, 3, 1, 0, 0): 80,
        (5, 1, 1, 1, 1, 0): 30, (4, 4, 2, 2, 0, 0): 120, (3, 3, 2, 2, 0, 0): 180,
        (5, 3, 3, 1, 1, 0): 180, (4, 3, 2, 2, 1, 0): 360},  # last entry printed in increasing order
    7: {(4, 4, 4, 3, 0, 0, 0): 140, (4, 4, 2, 2, 2, 0, 0): 210, (6, 1, 1, 1, 1, 1, 0): 30,
        (6, 3, 3, 1, 1, 1, 0): 252, (6, 4, 3, 2, 1, 1, 0): 1008},
}


def compare(n: int, rows: list[dict]) -> dict:
    ours = {r["weight"]: r["sdim"] for r in rows}
    pub = PUBLISHED.get(n, {})
    return {
        "missing_from_published": sorted(w for w in ours if w not in pub),
        "published_not_selfdual": sorted(w for w in pub if w not in ours),
        "value_mismatch": sorted((w, pub[w], ours[w]) for w in pub if w in ours and pub[w] != ours[w]),
        "multiset_equal": Counter(ours.values()) == Counter(pub.values()),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[5, 6, 7])
    ap.add_argument("--json", help="write the full report here")
    args = ap.parse_args()
    report = {}
    for n in args.n:
        rows = selfdual_basic_table(TableConfig.published_layout(n))
        cmp = compare(n, rows) if n in PUBLISHED else None
        report[n] = {"rows": rows, "comparison": cmp}
        print(f"n={n}: {len(rows)} selfdual basics")
        for r in rows:
            print(f"  {str(list(r['weight'])):<24} sectors {r['sectors']}  sdim {r['sdim']:<6} {r['group']}")
        if cmp:
            for key in ("missing_from_published", "published_not_selfdual", "value_mismatch"):
                for item in cmp[key]:
                    print(f"  {key}: {item}")
            print(f"  sdim multiset agrees: {cmp['multiset_equal']}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report, fh, indent=1)


if __name__ == "__main__":
    main()
