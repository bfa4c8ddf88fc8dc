"""Tannaka groups of maximal atypical irreducibles.

The classifier follows the strong form of the structure theorem: the
connected group attached to ``L(w)`` is SL/GL, SO/GSO or Sp/GSp of dimension
``|sdim(w)|``, picked by selfduality, pairing parity and whether the
determinant is a nontrivial Berezin power.  Answers that depend on open
conjectures carry ``conditional=True``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .diagrams import (
    class_key,
    dual_class_rep,
    enumerate_basic,
    enumerate_normalized,
    is_basic,
    is_weakly_selfdual,
)
from .ds import DerivativeSummand, SignedDimension, ds, ell, sdim, sdim_value
from .weights import Weight, WeightLike, as_weight, berezin_twist, normalize

__all__ = [
    "DualityType",
    "TannakaGroup",
    "duality_type",
    "classify",
    "enumerate_classes",
    "branching",
    "dual_weight",
    "FAMILIES",
]

FAMILIES = ("SL", "GL", "SO", "GSO", "Sp", "GSp", "Torus")


@dataclass(frozen=True)
class DualityType:
    kind: str  # "SD" or "NSD"
    pairing: Optional[str]  # "even" / "odd" for SD, else None
    proper: Optional[bool]  # ell == 0, SD only

    def __str__(self) -> str:
        if self.kind == "NSD":
            return "NSD"
        return f"SD/{self.pairing}/{'proper' if self.proper else 'weak'}"


@dataclass(frozen=True)
class TannakaGroup:
    family: str
    dim: int
    conditional: bool = False

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if self.family in ("Sp", "GSp") and self.dim % 2:
            raise ValueError("symplectic groups need even dimension")

    @property
    def derived(self) -> str:
        """Derived group of the identity component, e.g. ``SO(6)`` for GSO(6)."""
        if self.family == "Torus":
            return "1"
        base = {"SL": "SL", "GL": "SL", "SO": "SO", "GSO": "SO", "Sp": "Sp", "GSp": "Sp"}
        return f"{base[self.family]}({self.dim})"

    def __str__(self) -> str:
        return f"{self.family}({self.dim})"


def duality_type(w: WeightLike) -> DualityType:
    w = as_weight(w)
    if not is_weakly_selfdual(w):
        return DualityType("NSD", None, None)
    even = sdim_value(normalize(w).w0) > 0
    return DualityType("SD", "even" if even else "odd", ell(w) == 0)


def classify(w: WeightLike) -> TannakaGroup:
    w = as_weight(w)
    d = abs(sdim_value(w))
    if d == 1:
        return TannakaGroup("Torus", 1)
    t = duality_type(w)
    l = ell(w)
    if d == 2:
        # n=2 style small cases
        if t.kind == "SD" and t.proper and t.pairing == "odd":
            return TannakaGroup("SL", 2)
        return TannakaGroup("GL" if l else "SL", 2)
    if t.kind == "NSD":
        if l:
            return TannakaGroup("GL", d)
        return TannakaGroup("SL", d, conditional=is_basic(normalize(w).w0))
    fam = "SO" if t.pairing == "even" else "Sp"
    if not t.proper:
        fam = "G" + fam
    return TannakaGroup(fam, d, conditional=t.pairing == "even")


def enumerate_classes(
    n: int, degree_bound: int | None = None, *, basic_only: bool = False, sd_only: bool = False
) -> list[tuple[Weight, TannakaGroup]]:
    """One entry per equivalence class, sorted by class key.

    With ``basic_only`` the candidates are the basic weights of rank n;
    otherwise all weights with last entry 0 and degree at most
    ``degree_bound``.
    """
    if n < 0:
        raise ValueError("rank must be non-negative")
    if basic_only:
        cands = enumerate_basic(n)
    else:
        if degree_bound is None or degree_bound < 0:
            raise ValueError("a non-negative degree bound is required")
        cands = enumerate_normalized(n, degree_bound)
    seen: dict[Weight, TannakaGroup] = {}
    for w in cands:
        if sd_only and not is_weakly_selfdual(w):
            continue
        k = class_key(w)
        if k not in seen:
            seen[k] = classify(k) if n else TannakaGroup("Torus", 1)
    return sorted(seen.items())


def branching(w: WeightLike) -> list[tuple[DerivativeSummand, SignedDimension]]:
    return [(s, sdim(s.weight)) for s in ds(w)]


def dual_weight(w: WeightLike) -> Weight:
    """Exact highest weight of ``L(w)^vee``.

    The class comes from the dual plot; the Berezin twist is fixed by
    requiring ``ell(dual) = -ell(w)``, which relies on the determinant
    formula and is therefore conditional.
    """
    w = as_weight(w)
    if w.n == 0:
        return w
    rep = dual_class_rep(w)
    d = abs(sdim_value(w))
    t, r = divmod(-ell(w) - ell(rep), d)
    if r:
        raise ArithmeticError(f"no integral twist pins the dual of {w}")
    return berezin_twist(rep, t)
