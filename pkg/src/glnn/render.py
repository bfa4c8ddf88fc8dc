"""Text and SVG pictures of cup diagrams."""

from __future__ import annotations

from .diagrams import cup_diagram
from .weights import WeightLike, as_weight

__all__ = ["render_ascii", "render_svg", "FORMAT_VERSION"]

FORMAT_VERSION = 1
DOWN, UP = "v", "^"


def _span(w) -> tuple[int, int]:
    cd = cup_diagram(w)
    if not cd.cups:
        return 0, 0
    return cd.lo, cd.hi


def render_ascii(w: WeightLike) -> str:
    """Coordinates, markers, then one line per nesting level of cups."""
    w = as_weight(w)
    cd = cup_diagram(w)
    if not cd.cups:
        return "(empty weight)\n"
    lo, hi = cd.lo, cd.hi
    xs = range(lo, hi + 1)
    cell = max(2, max(len(str(x)) for x in xs) + 1)
    col = {x: (x - lo) * cell + cell - 1 for x in xs}  # right-aligned label column
    width = len(xs) * cell

    lines = ["".join(str(x).rjust(cell) for x in xs)]
    down = set(cd.support)
    lines.append("".join((DOWN if x in down else UP).rjust(cell) for x in xs))

    height = cd.nesting()
    rows = [[" "] * width for _ in range(max(height.values()))]
    for c, h in height.items():
        a, b = col[c.left], col[c.right]
        for r in range(h - 1):
            rows[r][a] = "|"
            rows[r][b] = "|"
        rows[h - 1][a] = "\\"
        rows[h - 1][b] = "/"
        for i in range(a + 1, b):
            rows[h - 1][i] = "_"
    lines.extend("".join(r).rstrip() for r in rows)
    return "\n".join(line.rstrip() for line in lines) + "\n"


def render_svg(w: WeightLike, unit: int = 40) -> str:
    """Self-contained SVG: number line, markers, semicircular cups below."""
    w = as_weight(w)
    cd = cup_diagram(w)
    lo, hi = _span(w)
    npts = hi - lo + 1
    margin = unit
    heights = cd.nesting()
    depth = max(heights.values(), default=0)
    width = npts * unit + 2 * margin
    base = margin + 10
    total_h = base + (max((c.width for c in cd.cups), default=1) * unit) // 2 + margin
    xpos = {x: margin + (x - lo) * unit + unit // 2 for x in range(lo, hi + 1)}
    down = set(cd.support)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{total_h}" '
        f'viewBox="0 0 {width} {total_h}">',
        f"<!-- cup diagram of {w}; format {FORMAT_VERSION}; levels {depth} -->",
        '<g font-family="monospace" font-size="12" text-anchor="middle">',
    ]
    if cd.cups:
        out.append(
            f'<line x1="{xpos[lo] - unit // 2}" y1="{base}" x2="{xpos[hi] + unit // 2}" '
            f'y2="{base}" stroke="black" stroke-width="1"/>'
        )
    for x in range(lo, hi + 1):
        out.append(f'<text x="{xpos[x]}" y="{base - 18}">{x}</text>')
        mark = "∨" if x in down else "∧"
        out.append(f'<text x="{xpos[x]}" y="{base - 4}">{mark}</text>')
    for c in sorted(cd.cups, key=lambda c: c.left):
        r = (xpos[c.right] - xpos[c.left]) / 2
        out.append(
            f'<path d="M {xpos[c.left]} {base} A {r:g} {r:g} 0 0 0 {xpos[c.right]} {base}" '
            'fill="none" stroke="black" stroke-width="1.5"/>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
