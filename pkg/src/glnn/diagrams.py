"""Cup diagrams, sectors and the combinatorics built on them.

Vertices of the integer line carrying a point of the support are drawn as
``v`` (down), all others as ``^`` (up).  Reading left to right, a ``v`` opens
and a ``^`` closes, so each ``v`` is joined to the nearest free ``^`` on its
right.  Outermost cups are the *sectors*; a sector of rank r spans 2r
consecutive vertices.  The ordered list of sectors with the gaps between
them is the *sector profile* of a weight, and most structural questions
(duality, basic representatives, equivalence) are answered on the profile.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .weights import (
    Weight,
    WeightLike,
    as_weight,
    degree,
    normalize,
    support,
    weight_from_support,
)

__all__ = [
    "Cup",
    "CupDiagram",
    "Sector",
    "SectorProfile",
    "cup_diagram",
    "sectors",
    "sector_profile",
    "sector_basic",
    "transpose_basic",
    "is_basic",
    "associated_basic",
    "is_weakly_selfdual",
    "dual_class_rep",
    "class_key",
    "are_equivalent",
    "enumerate_basic",
    "enumerate_normalized",
    "lambda_complement",
    "lambda_zero",
    "depth",
    "projective_possible",
    "from_profile",
]


@dataclass(frozen=True)
class Cup:
    left: int
    right: int

    @property
    def width(self) -> int:
        return self.right - self.left


@dataclass(frozen=True)
class CupDiagram:
    support: tuple[int, ...]
    cups: tuple[Cup, ...]  # sorted by left end

    @property
    def lo(self) -> int:
        return min(c.left for c in self.cups) if self.cups else 0

    @property
    def hi(self) -> int:
        return max(c.right for c in self.cups) if self.cups else -1

    def nesting(self) -> dict[Cup, int]:
        """Height of each cup: 1 for innermost, 1 + max inner height otherwise."""
        h: dict[Cup, int] = {}
        for c in sorted(self.cups, key=lambda c: c.width):
            inner = [h[d] for d in h if c.left < d.left and d.right < c.right]
            h[c] = 1 + max(inner, default=0)
        return h


@dataclass(frozen=True)
class Sector:
    start: int
    end: int
    points: tuple[int, ...]  # the down vertices inside, increasing

    @property
    def rank(self) -> int:
        return len(self.points)

    @property
    def interval(self) -> range:
        return range(self.start, self.end + 1)


@dataclass(frozen=True)
class SectorProfile:
    """Sector basics, ranks and gaps; ``gaps[i]`` sits between sector i and i+1."""

    basics: tuple[Weight, ...]
    gaps: tuple[int, ...]
    d0_shift: int = 0  # last entry; enters D and ell
    d0_invariant: int = 0  # last entry + n - 1

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(b.n for b in self.basics)


def _cups(pts: tuple[int, ...]) -> tuple[Cup, ...]:
    if not pts:
        return ()
    down = set(pts)
    stack: list[int] = []
    out: list[Cup] = []
    x = min(pts)
    remaining = len(pts)
    while remaining:
        if x in down:
            stack.append(x)
        elif stack:
            out.append(Cup(stack.pop(), x))
            remaining -= 1
        x += 1
    return tuple(sorted(out, key=lambda c: c.left))


def cup_diagram(w: WeightLike) -> CupDiagram:
    s = support(w)
    return CupDiagram(s, _cups(tuple(sorted(s))))


@lru_cache(maxsize=65536)
def _sectors(entries: tuple[int, ...]) -> tuple[Sector, ...]:
    pts = tuple(sorted(support(Weight(entries))))
    out = []
    end = None
    for c in _cups(pts):
        if end is not None and c.left < end:
            continue
        inside = tuple(p for p in pts if c.left <= p <= c.right)
        out.append(Sector(c.left, c.right, inside))
        end = c.right
    return tuple(out)


def sectors(w: WeightLike) -> tuple[Sector, ...]:
    """Sectors of ``w`` from left to right."""
    return _sectors(as_weight(w).entries)


def _gaps(secs: tuple[Sector, ...]) -> tuple[int, ...]:
    return tuple(b.start - a.end - 1 for a, b in zip(secs, secs[1:]))


def _basic_of_points(pts: tuple[int, ...]) -> Weight:
    r = len(pts)
    off = (1 - r) - min(pts)
    return weight_from_support(p + off for p in pts)


def sector_basic(sec: Sector) -> Weight:
    """Basic weight of rank ``sec.rank`` whose single sector looks like ``sec``."""
    return _basic_of_points(sec.points)


def sector_profile(w: WeightLike) -> SectorProfile:
    w = as_weight(w)
    secs = sectors(w)
    last = w.entries[-1] if w.n else 0
    return SectorProfile(
        tuple(sector_basic(s) for s in secs), _gaps(secs), last, last + w.n - 1
    )


def from_profile(profile: SectorProfile, anchor: int = 0) -> Weight:
    """Weight with the given profile whose first sector starts at ``anchor``."""
    pts: list[int] = []
    pos = anchor
    for i, b in enumerate(profile.basics):
        r = b.n
        s = support(b)  # sits in [1-r, r-1], sector is [1-r, r]
        pts.extend(p - (1 - r) + pos for p in s)
        pos += 2 * r
        if i < len(profile.gaps):
            pos += profile.gaps[i]
    return weight_from_support(pts)


def transpose_basic(b: WeightLike) -> Weight:
    """Conjugate partition, padded with zeros to the same length."""
    b = as_weight(b)
    n = b.n
    if not is_basic(b):
        raise ValueError(f"{b} is not a basic weight")
    return Weight(tuple(sum(1 for x in b.entries if x > j) for j in range(n)))


def is_basic(w: WeightLike) -> bool:
    w = as_weight(w)
    n = w.n
    return all(0 <= x <= n - 1 - i for i, x in enumerate(w.entries)) and (
        n == 0 or w.entries[-1] == 0
    )


def associated_basic(w: WeightLike) -> Weight:
    """Close every gap and renormalise: the basic weight with the same sectors."""
    w = as_weight(w)
    if w.n == 0:
        return w
    prof = sector_profile(w)
    closed = SectorProfile(prof.basics, tuple(0 for _ in prof.gaps))
    return from_profile(closed, anchor=1 - w.n)


def is_weakly_selfdual(w: WeightLike) -> bool:
    prof = sector_profile(w)
    k = len(prof.basics)
    for i in range(k):
        if prof.basics[i] != transpose_basic(prof.basics[k - 1 - i]):
            return False
    return prof.gaps == prof.gaps[::-1]


def _dual_profile(prof: SectorProfile) -> SectorProfile:
    return SectorProfile(
        tuple(transpose_basic(b) for b in reversed(prof.basics)),
        tuple(reversed(prof.gaps)),
    )


def dual_class_rep(w: WeightLike) -> Weight:
    """Normalised weight of ``L(w)^vee``, determined up to a Berezin twist."""
    w = as_weight(w)
    if w.n == 0:
        return w
    return normalize(from_profile(_dual_profile(sector_profile(w)))).w0


def class_key(w: WeightLike) -> Weight:
    """Canonical representative of ``w`` up to duals and Berezin twists.

    Lexicographic minimum of the normalised weight and its normalised dual.
    """
    w = as_weight(w)
    return min(normalize(w).w0, dual_class_rep(w))


def are_equivalent(w1: WeightLike, w2: WeightLike) -> bool:
    w1, w2 = as_weight(w1), as_weight(w2)
    return w1.n == w2.n and class_key(w1) == class_key(w2)


def _bounded_partitions(n: int, caps) -> Iterator[tuple[int, ...]]:
    # non-increasing tuples with entry i in [0, caps(i, prev)]
    def rec(i: int, prev: int, acc: tuple[int, ...]):
        if i == n:
            yield acc
            return
        top = caps(i, prev)
        for x in range(top, -1, -1):
            yield from rec(i + 1, x, acc + (x,))

    yield from rec(0, 10**9, ())


def enumerate_basic(n: int) -> list[Weight]:
    """All basic weights of rank n (there are Catalan(n) of them), sorted."""
    if n < 0:
        raise ValueError("rank must be non-negative")
    out = [Weight(p) for p in _bounded_partitions(n, lambda i, prev: min(prev, n - 1 - i))]
    return sorted(out)


def enumerate_normalized(n: int, degree_bound: int) -> list[Weight]:
    """Weights with last entry 0 and degree at most ``degree_bound``, sorted."""
    if n == 0:
        return [Weight(())]
    out = []

    def rec(i: int, prev: int, left: int, acc: tuple[int, ...]):
        if i == n - 1:
            out.append(Weight(acc + (0,)))
            return
        for x in range(min(prev, left), -1, -1):
            rec(i + 1, x, left - x, acc + (x,))

    rec(0, degree_bound, degree_bound, ())
    return sorted(out)


def lambda_complement(w: WeightLike) -> Weight:
    """In each sector swap down and up vertices."""
    secs = sectors(w)
    pts: list[int] = []
    for s in secs:
        inside = set(s.points)
        pts.extend(x for x in s.interval if x not in inside)
    return weight_from_support(pts)


def lambda_zero(w: WeightLike) -> Weight:
    """The weight whose complement is ``w``.

    Each down vertex of ``w`` is joined to the nearest free up vertex on its
    left; the left ends of these cups form the support of the result.
    """
    pts = sorted(support(w), reverse=True)
    if not pts:
        return as_weight(w)
    down = set(pts)
    stack: list[int] = []
    left_ends: list[int] = []
    x = pts[0]
    while len(left_ends) < len(pts):
        if x in down:
            stack.append(x)
        elif stack:
            stack.pop()
            left_ends.append(x)
        x -= 1
    return weight_from_support(left_ends)


def depth(w: WeightLike) -> int:
    return 2 * degree(associated_basic(w))


def projective_possible(w1: WeightLike, w2: WeightLike) -> bool:
    """Necessary condition for ``L(w1) (x) L(w2)`` to have a projective summand."""
    w1, w2 = as_weight(w1), as_weight(w2)
    if w1.n != w2.n:
        raise ValueError("weights must have the same rank")
    n = w1.n
    b1, b2 = associated_basic(w1), associated_basic(w2)
    if degree(b1) + degree(b2) < n * (n + 1) // 2:
        return False
    if n == 3:
        return b1.entries == (2, 1, 0) and b2.entries == (2, 1, 0)
    return True
