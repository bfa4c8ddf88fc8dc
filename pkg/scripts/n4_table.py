#!/usr/bin/env python3
"""Basic weights of rank n with superdimension, duality type, group and DS."""

import argparse

from glnn.diagrams import enumerate_basic
from glnn.ds import ds, sdim_value
from glnn.tannaka import classify, duality_type


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("n", type=int, nargs="?", default=4)
    n = ap.parse_args().n
    for b in enumerate_basic(n):
        g = classify(b)
        mark = "*" if g.conditional else ""
        parts = " + ".join(
            ("Pi" if p.shift else "") + f"{p.weight}_{abs(sdim_value(p.weight))}" for p in ds(b)
        ) if n else "-"
        print(f"{str(b):<16} sdim {sdim_value(b):>5}  {str(duality_type(b)):<16} {str(g) + mark:<10} DS = {parts}")
    print("* conditional on an open conjecture")


if __name__ == "__main__":
    main()
