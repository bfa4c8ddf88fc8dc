"""Duflo-Serganova derivative on maximal atypical irreducibles.

``ds(w)`` has one summand per sector: delete the leftmost down vertex of that
sector from the support.  Parity shifts are tracked mod 2 only.

The superdimension recursion descends through the first sector and uses
``|sdim(w)| * r_1 = |sdim(w_1)| * n``; the sign is ``(-1)^deg(w)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .diagrams import sectors
from .weights import Weight, WeightLike, as_weight, parity, weight_from_support

__all__ = [
    "DerivativeSummand",
    "SignedDimension",
    "ds",
    "ds_iterate",
    "sdim",
    "sdim_value",
    "signed_count",
    "left_moves_D",
    "ell",
    "determinant_berezin_power",
]


@dataclass(frozen=True, order=True)
class DerivativeSummand:
    weight: Weight
    shift: int  # 0 or 1; exponent of the parity shift


@dataclass(frozen=True)
class SignedDimension:
    sdim: int

    @property
    def dim(self) -> int:
        return abs(self.sdim)


def ds(w: WeightLike) -> list[DerivativeSummand]:
    """Summands of DS(L(w)), one per sector, left to right."""
    w = as_weight(w)
    if w.n == 0:
        raise ValueError("DS is undefined on rank 0")
    pts = set(w.entries[i] - i for i in range(w.n))
    p = parity(w)
    out = []
    for sec in sectors(w):
        wi = weight_from_support(pts - {sec.start})
        out.append(DerivativeSummand(wi, (p - parity(wi)) % 2))
    return out


def ds_iterate(w: WeightLike, m: int) -> list[DerivativeSummand]:
    """m-fold DS as a flat multiset, sorted; shifts add mod 2."""
    w = as_weight(w)
    if not 0 <= m <= w.n:
        raise ValueError(f"m must lie in [0, {w.n}], got {m}")
    layer: Counter[DerivativeSummand] = Counter({DerivativeSummand(w, 0): 1})
    for _ in range(m):
        nxt: Counter[DerivativeSummand] = Counter()
        for s, mult in layer.items():
            for t in ds(s.weight):
                nxt[DerivativeSummand(t.weight, (s.shift + t.shift) % 2)] += mult
        layer = nxt
    return sorted(layer.elements())


def signed_count(summands) -> int:
    return sum(-1 if s.shift else 1 for s in summands)


@lru_cache(maxsize=65536)
def _abs_sdim(entries: tuple[int, ...]) -> int:
    n = len(entries)
    if n == 0:
        return 1
    w = Weight(entries)
    first = sectors(w)[0]
    sub = _abs_sdim(ds(w)[0].weight.entries)
    q, r = divmod(n * sub, first.rank)
    if r:
        raise ArithmeticError(f"non-integral superdimension at {w}")
    return q


def sdim_value(w: WeightLike) -> int:
    w = as_weight(w)
    return (-1) ** parity(w) * _abs_sdim(w.entries)


def sdim(w: WeightLike) -> SignedDimension:
    return SignedDimension(sdim_value(w))


def left_moves_D(w: WeightLike) -> int:
    """Total number of left moves, with the first offset equal to the last entry."""
    w = as_weight(w)
    if w.n == 0:
        return 0
    secs = sectors(w)
    acc = w.entries[-1]
    total = 0
    for i, s in enumerate(secs):
        if i:
            acc += s.start - secs[i - 1].end - 1
        total += s.rank * acc
    return total


def ell(w: WeightLike) -> int:
    w = as_weight(w)
    if w.n == 0:
        return 0
    q, r = divmod(_abs_sdim(w.entries) * left_moves_D(w), w.n)
    if r:
        raise ArithmeticError(f"ell is not integral for {w}")
    return q


def determinant_berezin_power(w: WeightLike) -> int:
    """Exponent m with det(X_w) = Ber^m mod negligibles (conditional result)."""
    return ell(w)
