"""Maximal atypical representations of GL(n|n): cup diagrams, DS derivatives,
superdimensions, determinants, Tannaka groups and fusion mod negligibles."""

__version__ = "0.1.0"

from .weights import Weight, WeightError, parse_weight, support, weight_from_support, berezin_twist, normalize
from .diagrams import sectors, sector_profile, associated_basic, is_weakly_selfdual, class_key, are_equivalent, enumerate_basic
from .ds import ds, ds_iterate, sdim, sdim_value, left_moves_D, ell
from .tannaka import classify, duality_type, enumerate_classes, branching
from .fusion.negligible import tensor_mod_negligible

__all__ = [
    "Weight", "WeightError", "parse_weight", "support", "weight_from_support", "berezin_twist",
    "normalize", "sectors", "sector_profile", "associated_basic", "is_weakly_selfdual",
    "class_key", "are_equivalent", "enumerate_basic", "ds", "ds_iterate", "sdim", "sdim_value",
    "left_moves_D", "ell", "classify", "duality_type", "enumerate_classes", "branching",
    "tensor_mod_negligible",
]
