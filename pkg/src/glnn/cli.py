"""Command line front end.

Exit codes: 0 success, 2 invalid input, 3 I/O failure.  With ``--json``
each invocation prints exactly one JSON object carrying ``"schema": 1``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .diagrams import associated_basic, depth, enumerate_basic, is_weakly_selfdual, sector_profile, sectors
from .ds import determinant_berezin_power, ds, ds_iterate, ell, left_moves_D, sdim_value
from .fusion.negligible import tensor_mod_negligible
from .render import render_ascii, render_svg
from .tannaka import classify, duality_type, enumerate_classes
from .weights import Weight, WeightError, parse_weight, support, weight_stats

SCHEMA = 1
EXIT_OK, EXIT_INPUT, EXIT_IO = 0, 2, 3
LEGEND = "* conditional on an open conjecture"


class InputError(Exception):
    pass


def _group_json(g) -> dict[str, Any]:
    return {"family": g.family, "dim": g.dim, "conditional": g.conditional, "derived": g.derived}


def _group_str(g) -> str:
    return f"{g}{'*' if g.conditional else ''}"


def analysis_report(w: Weight) -> dict[str, Any]:
    secs = sectors(w)
    prof = sector_profile(w)
    p, deg = weight_stats(w)
    t = duality_type(w)
    g = classify(w)
    return {
        "weight": list(w.entries),
        "n": w.n,
        "support": list(support(w)),
        "sectors": [{"interval": [s.start, s.end], "rank": s.rank} for s in secs],
        "gaps": list(prof.gaps),
        "d0_shift": prof.d0_shift,
        "d0_invariant": prof.d0_invariant,
        "parity": p,
        "degree": deg,
        "sdim": sdim_value(w),
        "duality": {"kind": t.kind, "pairing": t.pairing, "proper": t.proper},
        "D": left_moves_D(w),
        "ell": ell(w),
        "det_berezin_power": determinant_berezin_power(w),
        "det_conditional": True,
        "basic": list(associated_basic(w).entries),
        "depth": depth(w),
        "group": _group_json(g),
    }


def _weight(text: str) -> Weight:
    try:
        return parse_weight(text)
    except WeightError as exc:
        raise InputError(str(exc)) from None


def _emit(obj: dict[str, Any]) -> None:
    print(json.dumps({"schema": SCHEMA, **obj}, sort_keys=False))


def cmd_info(args) -> int:
    w = _weight(args.weight)
    if w.n == 0:
        raise InputError("info needs a weight of positive rank")
    rep = analysis_report(w)
    if args.json:
        _emit({"command": "info", **rep})
        return EXIT_OK
    g = classify(w)
    print(f"weight        {w}  (n={w.n})")
    print(f"support       {{{', '.join(map(str, rep['support']))}}}")
    print("sectors       " + ", ".join(f"[{s['interval'][0]},{s['interval'][1]}] r={s['rank']}" for s in rep["sectors"]))
    print(f"gaps          {rep['gaps']}  d0_shift={rep['d0_shift']}  d0_invariant={rep['d0_invariant']}")
    print(f"parity/degree {rep['parity']} / {rep['degree']}")
    print(f"sdim          {rep['sdim']}")
    print(f"duality       {duality_type(w)}")
    print(f"D / ell       {rep['D']} / {rep['ell']}   det = Ber^{rep['det_berezin_power']}*")
    print(f"basic / depth {Weight(tuple(rep['basic']))} / {rep['depth']}")
    print(f"group         {_group_str(g)}  (derived {g.derived})")
    print(LEGEND)
    return EXIT_OK


def cmd_ds(args) -> int:
    w = _weight(args.weight)
    m = args.steps
    if w.n == 0 or not 0 <= m <= w.n:
        raise InputError(f"--steps must lie in [0, {w.n}] and the rank must be positive")
    items = ds(w) if m == 1 else ds_iterate(w, m)
    rows = [
        {"weight": list(s.weight.entries), "shift": s.shift, "sdim": sdim_value(s.weight)}
        for s in items
    ]
    signed = sum((-1) ** r["shift"] * r["sdim"] for r in rows)
    if args.json:
        _emit({"command": "ds", "weight": list(w.entries), "steps": m,
               "sdim": sdim_value(w), "summands": rows, "signed_total": signed})
        return EXIT_OK
    print(f"DS^{m} of {w}  (sdim {sdim_value(w)})")
    for r in rows:
        pi = "Pi" if r["shift"] else "  "
        print(f"  {pi}{Weight(tuple(r['weight']))}_{abs(r['sdim'])}")
    print(f"signed total {signed}; {len(rows)} summands")
    return EXIT_OK


def cmd_tensor(args) -> int:
    w1, w2 = _weight(args.w1), _weight(args.w2)
    if w1.n != w2.n:
        raise InputError(f"rank mismatch: {w1.n} vs {w2.n}")
    if w1.n == 0:
        raise InputError("rank must be positive")
    rep = tensor_mod_negligible(w1, w2)
    terms = [
        {"label": None if t.label is None else list(t.label), "multiplicity": t.multiplicity,
         "superdim": t.superdim, "berezin_offset": t.berezin_offset}
        for t in rep.terms
    ]
    if args.json:
        _emit({
            "command": "tensor",
            "weights": [list(w1.entries), list(w2.entries)],
            "equivalent": rep.equivalent,
            "relation": rep.relation,
            "group": None if rep.group is None else _group_json(rep.group),
            "root_system": None if rep.root_system is None else str(rep.root_system),
            "terms": terms,
            "total_superdim": rep.total_superdim,
            "conditional": rep.conditional,
        })
        return EXIT_OK
    star = "*" if rep.conditional else ""
    print(f"{w1} (x) {w2}  mod negligible{star}")
    if not rep.equivalent:
        print(f"  inequivalent: one indecomposable of superdimension {rep.total_superdim}")
    else:
        rs = rep.root_system or "-"
        print(f"  group {_group_str(rep.group)}, root system {rs}, relation {rep.relation}")
        for t in terms:
            lab = "L(" + ",".join(map(str, t["label"])) + ")"
            print(f"  {t['multiplicity']} x {lab:<24} sdim {t['superdim']:<6} Ber offset {t['berezin_offset']}")
    print(f"total superdimension {rep.total_superdim}")
    print(LEGEND)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    n = args.n
    if n < 0:
        raise InputError("n must be non-negative")
    if args.classes:
        bound = args.degree_bound
        classes = enumerate_classes(n, bound, basic_only=bound is None, sd_only=args.sd_only)
        rows = [{"class_key": list(k.entries), "sdim": sdim_value(k), "group": _group_json(g)}
                for k, g in classes]
        if args.json:
            _emit({"command": "enumerate", "n": n, "mode": "classes",
                   "degree_bound": bound, "rows": rows, "count": len(rows)})
            return EXIT_OK
        for (k, g), r in zip(classes, rows):
            print(f"{str(k):<24} sdim {r['sdim']:<8} {_group_str(g)}")
    else:
        ws = [b for b in enumerate_basic(n) if not args.sd_only or is_weakly_selfdual(b)]
        rows = []
        for b in ws:
            g = classify(b) if n else None
            rows.append({"weight": list(b.entries), "sdim": sdim_value(b),
                         "sectors": len(sectors(b)),
                         "group": _group_json(g) if g else None})
        if args.json:
            _emit({"command": "enumerate", "n": n, "mode": "basic", "sd_only": args.sd_only,
                   "rows": rows, "count": len(rows)})
            return EXIT_OK
        for b, r in zip(ws, rows):
            gs = _group_str(classify(b)) if n else "1"
            print(f"{str(b):<24} sdim {r['sdim']:<8} sectors {r['sectors']:<3} {gs}")
    print(f"count {len(rows)}")
    print(LEGEND)
    return EXIT_OK


def cmd_render(args) -> int:
    w = _weight(args.weight)
    text = render_svg(w) if args.format == "svg" else render_ascii(w)
    if args.output:
        try:
            Path(args.output).write_text(text, encoding="utf-8")
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(text)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors count as input errors
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="glnn", description="Maximal atypical GL(n|n) irreducibles: invariants, DS, Tannaka groups, fusion.")
    p.add_argument("--version", action="version", version=f"glnn {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("info", help="all invariants of one weight")
    s.add_argument("weight")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_info)

    s = sub.add_parser("ds", help="DS derivative, optionally iterated")
    s.add_argument("weight")
    s.add_argument("--steps", type=int, default=1)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_ds)

    s = sub.add_parser("tensor", help="tensor product modulo negligible summands")
    s.add_argument("w1")
    s.add_argument("w2")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_tensor)

    s = sub.add_parser("enumerate", help="basic weights or equivalence classes of rank n")
    s.add_argument("n", type=int)
    s.add_argument("--classes", action="store_true")
    s.add_argument("--degree-bound", type=int, default=None,
                   help="with --classes: all weights of normalized degree <= bound (default: basics)")
    s.add_argument("--sd-only", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("render", help="draw the cup diagram")
    s.add_argument("weight")
    s.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_render)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
