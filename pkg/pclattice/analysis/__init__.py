# Lattice analysis
from .properties import (
    DistributivityVerdict,
    ModularityVerdict,
    Proposition1Verdict,
    PseudocomplementVerdict,
    check_proposition1,
    complements,
    has_modular_rank,
    is_complemented,
    is_distributive,
    is_modular,
    is_pseudocomplemented,
    maximal_disjoint,
    modular_law_violation,
    pseudocomplement,
)

__all__ = [
    "DistributivityVerdict",
    "ModularityVerdict",
    "Proposition1Verdict",
    "PseudocomplementVerdict",
    "check_proposition1",
    "complements",
    "has_modular_rank",
    "is_complemented",
    "is_distributive",
    "is_modular",
    "is_pseudocomplemented",
    "maximal_disjoint",
    "modular_law_violation",
    "pseudocomplement",
]
