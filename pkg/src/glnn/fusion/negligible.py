"""Tensor products of maximal atypical irreducibles modulo negligible summands.

Inequivalent factors live in different simple factors of the Tannaka group,
so their product is a single indecomposable.  Equivalent factors both map to
the standard representation (or its dual) of one classical group, and the
product is decomposed classically.  Labels are on the group side.

Berezin offsets (conditional, bookkeeping only):

* GL/SL, two twists of one weight: labels are polynomial GL(d) weights,
  read as ``det^{mu_d} (x) (rest)`` with ``det = Ber^ell``.
* GL/SL, a weight times a twisted dual: labels have degree 0 and carry no
  determinant.
* GSO/GSp: every summand of ``st (x) st`` carries the similitude character
  ``Ber^{2 ell / d}`` once.
* In all cases the relative twist between the two inputs is added.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..diagrams import are_equivalent, dual_class_rep
from ..ds import ell, sdim_value
from ..tannaka import TannakaGroup, classify, dual_weight
from ..weights import WeightLike, as_weight, normalize
from .classical import RootSystem, klimyk_tensor

__all__ = ["FusionTerm", "FusionReport", "derived_root_system", "tensor_mod_negligible"]


@dataclass(frozen=True)
class FusionTerm:
    label: Optional[tuple[int, ...]]  # classical highest weight; None if opaque
    multiplicity: int
    superdim: int
    berezin_offset: Optional[int]


@dataclass(frozen=True)
class FusionReport:
    equivalent: bool
    relation: Optional[str]  # "twist" or "dual" when equivalent
    group: Optional[TannakaGroup]
    root_system: Optional[RootSystem]
    terms: tuple[FusionTerm, ...]
    conditional: bool

    @property
    def total_superdim(self) -> int:
        return sum(t.multiplicity * t.superdim for t in self.terms)


def derived_root_system(g: TannakaGroup) -> Optional[RootSystem]:
    d = g.dim
    if g.family == "Torus":
        return None
    if g.family in ("SL", "GL") or d == 2:
        return RootSystem("A", d - 1)
    if g.family in ("Sp", "GSp"):
        return RootSystem("C", d // 2)
    if d % 2:
        return RootSystem("B", (d - 1) // 2)
    return RootSystem("D", d // 2)


def _standard(rs: RootSystem, dual: bool = False) -> tuple[int, ...]:
    v = [0] * rs.dim
    if dual and rs.type == "A":
        v[-1] = -1
    else:
        v[0] = 1
    return tuple(v)


def tensor_mod_negligible(w1: WeightLike, w2: WeightLike) -> FusionReport:
    w1, w2 = as_weight(w1), as_weight(w2)
    if w1.n != w2.n:
        raise ValueError(f"rank mismatch: {w1.n} vs {w2.n}")
    d1, d2 = abs(sdim_value(w1)), abs(sdim_value(w2))
    g1 = classify(w1)
    if not are_equivalent(w1, w2):
        cond = g1.conditional or classify(w2).conditional
        return FusionReport(False, None, None, None, (FusionTerm(None, 1, d1 * d2, None),), cond)

    n0 = normalize(w1)
    l1 = ell(w1)
    if normalize(w2).w0 == n0.w0:
        relation = "twist"
        shift = normalize(w2).shift - n0.shift
    else:
        relation = "dual"
        dv = dual_weight(w1)
        shift = normalize(w2).shift - normalize(dv).shift

    if g1.family == "Torus":
        # both are Berezin powers mod negligibles
        term = FusionTerm((), 1, 1, l1 + ell(w2))
        return FusionReport(True, relation, g1, None, (term,), g1.conditional)

    rs = derived_root_system(g1)
    dual = relation == "dual" and rs.type == "A" and g1.family in ("SL", "GL")
    dec = klimyk_tensor(rs, _standard(rs), _standard(rs, dual))
    terms = []
    for t in dec.terms:
        if g1.family in ("GSO", "GSp"):
            sim, r = divmod(2 * l1, g1.dim)
            assert r == 0, w1
            off = shift + sim
        elif rs.type == "A" and not dual:
            off = shift + l1 * t.weight[-1]
        else:
            off = shift
        terms.append(FusionTerm(t.weight, t.multiplicity, t.dimension, off))
    return FusionReport(True, relation, g1, rs, tuple(terms), g1.conditional)
