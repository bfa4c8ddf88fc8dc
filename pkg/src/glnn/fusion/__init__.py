"""Classical fusion and tensor products of maximal atypical irreducibles."""

from .classical import (
    RootSystem,
    TensorDecomposition,
    TensorTerm,
    brute_force_tensor,
    klimyk_tensor,
    weight_system,
    weyl_dimension,
)

__all__ = [
    "RootSystem",
    "TensorDecomposition",
    "TensorTerm",
    "brute_force_tensor",
    "klimyk_tensor",
    "weight_system",
    "weyl_dimension",
]
