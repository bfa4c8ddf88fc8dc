#!/usr/bin/env python3
"""Tensor squares modulo negligibles for all basic weights of rank n."""

import argparse

from glnn.diagrams import enumerate_basic
from glnn.ds import sdim_value
from glnn.fusion.negligible import tensor_mod_negligible
from glnn.tannaka import dual_weight


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("n", type=int, nargs="?", default=3)
    ap.add_argument("--dual", action="store_true", help="pair each weight with its dual instead")
    args = ap.parse_args()
    for b in enumerate_basic(args.n):
        if abs(sdim_value(b)) < 2:
            continue
        other = dual_weight(b) if args.dual else b
        rep = tensor_mod_negligible(b, other)
        star = "*" if rep.conditional else ""
        terms = " + ".join(
            f"{t.multiplicity if t.multiplicity > 1 else ''}L{t.label}_{t.superdim}" for t in rep.terms
        )
        print(f"{b} x {other}: {rep.group}{star} [{rep.root_system}] {terms}  (total {rep.total_superdim})")


if __name__ == "__main__":
    main()
