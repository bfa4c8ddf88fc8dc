"""Highest weights of maximal atypical irreducible GL(n|n)-modules.

A maximal atypical weight is stored as the non-increasing integer vector
``(l_1, ..., l_n)``; the odd half of the full GL(n|n) weight is determined
by it and is never materialised.  The support ``{l_i + 1 - i}`` places the
weight on the integer line as a set of n marked vertices, and nearly every
other computation in the package goes through that set.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

__all__ = [
    "Weight",
    "WeightError",
    "WeightLike",
    "as_weight",
    "parse_weight",
    "support",
    "weight_from_support",
    "berezin_twist",
    "normalize",
    "Normalized",
    "degree",
    "parity",
    "weight_stats",
    "DominantWeight",
    "atypicality",
]


class WeightError(ValueError):
    """Raised for malformed or non-dominant weight input."""


@dataclass(frozen=True, order=True)
class Weight:
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        ents = tuple(self.entries)
        for x in ents:
            if isinstance(x, bool) or not isinstance(x, int):
                raise WeightError(f"weight entries must be integers, got {x!r}")
        for a, b in zip(ents, ents[1:]):
            if a < b:
                raise WeightError(f"weight must be non-increasing, got {list(ents)}")
        object.__setattr__(self, "entries", ents)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self.entries) + "]"

    def __repr__(self) -> str:
        return f"Weight({list(self.entries)})"


WeightLike = Union[Weight, Sequence[int]]


def as_weight(w: WeightLike) -> Weight:
    if isinstance(w, Weight):
        return w
    if isinstance(w, str):
        return parse_weight(w)
    return Weight(tuple(w))


_INT = re.compile(r"^[+-]?\d+$")


def parse_weight(text: str) -> Weight:
    """Parse ``"[3,2,1,0]"``, ``"3,2,1,0"`` or ``"3 2 1 0"``."""
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    elif s.startswith("[") or s.endswith("]"):
        raise WeightError(f"unbalanced brackets in {text!r}")
    s = s.strip()
    if not s:
        return Weight(())
    parts = [p for p in re.split(r"[,\s]+", s) if p]
    if not all(_INT.match(p) for p in parts):
        raise WeightError(f"cannot parse weight {text!r}")
    return Weight(tuple(int(p) for p in parts))


def support(w: WeightLike) -> tuple[int, ...]:
    """Support ``{l_i + 1 - i}``, returned strictly decreasing."""
    w = as_weight(w)
    return tuple(x - i for i, x in enumerate(w.entries))


def weight_from_support(s: Iterable[int]) -> Weight:
    raw = list(s)
    pts = sorted(set(raw), reverse=True)
    if len(pts) != len(raw):
        raise WeightError("support must not contain repeated vertices")
    return Weight(tuple(x + i for i, x in enumerate(pts)))


def berezin_twist(w: WeightLike, m: int) -> Weight:
    """``Ber^m`` tensor ``L(w)``: shift every entry by ``m``."""
    w = as_weight(w)
    return Weight(tuple(x + m for x in w.entries))


@dataclass(frozen=True)
class Normalized:
    w0: Weight
    shift: int


def normalize(w: WeightLike) -> Normalized:
    """Twist so that the last entry is 0; ``w == berezin_twist(w0, shift)``."""
    w = as_weight(w)
    if w.n == 0:
        return Normalized(w, 0)
    m = w.entries[-1]
    return Normalized(berezin_twist(w, -m), m)


def degree(w: WeightLike) -> int:
    return sum(as_weight(w).entries)


def parity(w: WeightLike) -> int:
    return degree(w) % 2


def weight_stats(w: WeightLike) -> tuple[int, int]:
    """``(parity bit, degree)``."""
    d = degree(w)
    return d % 2, d


@dataclass(frozen=True)
class DominantWeight:
    """A general GL(n|n) highest weight ``(l_1..l_n | l_{n+1}..l_{2n})``."""

    even: tuple[int, ...]
    odd: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.even) != len(self.odd):
            raise WeightError("both halves must have length n")
        for half in (self.even, self.odd):
            if any(a < b for a, b in zip(half, half[1:])):
                raise WeightError(f"half {list(half)} is not non-increasing")

    @property
    def n(self) -> int:
        return len(self.even)

    @classmethod
    def from_maximal(cls, w: WeightLike) -> "DominantWeight":
        e = as_weight(w).entries
        return cls(e, tuple(-x for x in reversed(e)))


def atypicality(d: DominantWeight) -> int:
    n = d.n
    cross = {x - i for i, x in enumerate(d.even)}
    circ = {(i + 1) - n - y for i, y in enumerate(d.odd)}
    return len(cross & circ)
