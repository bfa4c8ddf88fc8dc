#!/usr/bin/env python3
"""Scan small ranks for weights with several weakly selfdual DS summands.

The expected exceptions are selfdual weights whose sectors all have rank one
and are equally spaced; everything else printed here is a counterexample.
"""

import argparse

from glnn.diagrams import is_weakly_selfdual
from glnn.ds import sdim_value
from glnn.experiments import ScanConfig, selfdual_derivative_scan


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--max-entry", type=int, default=7)
    ap.add_argument("--show", type=int, default=15)
    args = ap.parse_args()
    found = selfdual_derivative_scan(ScanConfig(args.max_n, args.max_entry))
    for n, bad in found.items():
        print(f"n={n}: {len(bad)} counterexamples")
        for w, sd in bad[: args.show]:
            print(f"  {w} (SD: {is_weakly_selfdual(w)}, sdim {sdim_value(w)}) -> " + ", ".join(map(str, sd)))
    print(f"total {sum(map(len, found.values()))}")


if __name__ == "__main__":
    main()
