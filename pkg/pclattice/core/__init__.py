# Lattice core
from .errors import LatticeError
from .isomorphism import canonical_key, is_isomorphic
from .lattice import (
    CoverList,
    FiniteLattice,
    Sublattice,
    build_from_covers,
    direct_product,
    generated_sublattice,
    glued_sum,
    restrict_to_sublattice,
)

__all__ = [
    "CoverList",
    "FiniteLattice",
    "LatticeError",
    "Sublattice",
    "build_from_covers",
    "canonical_key",
    "direct_product",
    "generated_sublattice",
    "glued_sum",
    "is_isomorphic",
    "restrict_to_sublattice",
]
