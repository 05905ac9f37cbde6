"""
Three-way check on a single lattice: pseudocomplemented, free of anchored
M3/M23 copies, free of ternary witnesses. The three agree on every modular
lattice; on other lattices they are still evaluated and reported.
"""
from __future__ import annotations

import time
from typing import List, Optional, Sequence

from ..analysis.properties import is_complemented, is_distributive, is_modular, is_pseudocomplemented
from ..core.lattice import FiniteLattice
from ..reporters.models import AnalysisReport, ConditionResult
from .embedding import find_forbidden_zero_sublattice
from .witness import TernaryWitness, classify_witness, find_ternary_witness


def _condition(
    lattice: FiniteLattice,
    key: str,
    label: str,
    holds: bool,
    witness: Optional[Sequence[int]] = None,
    detail: Optional[str] = None,
) -> ConditionResult:
    elements: Optional[List[int]] = [int(x) for x in witness] if witness is not None else None
    return ConditionResult(
        key=key,
        label=label,
        holds=holds,
        witness=elements,
        witness_labels=[lattice.label(x) for x in elements] if elements is not None else None,
        detail=detail,
    )


def lattice_conditions(lattice: FiniteLattice) -> List[ConditionResult]:
    """Modularity, distributivity, complementation and the three equivalent conditions."""
    modular = is_modular(lattice)
    distributive = is_distributive(lattice)
    complemented, missing = is_complemented(lattice)
    pseudo = is_pseudocomplemented(lattice)
    embedding = find_forbidden_zero_sublattice(lattice)
    witness = find_ternary_witness(lattice)

    return [
        _condition(lattice, "modular", "modular", modular.modular, modular.violation),
        _condition(lattice, "distributive", "distributive", distributive.distributive, distributive.violation),
        _condition(lattice, "complemented", "complemented", complemented,
                   [missing] if missing is not None else None),
        _condition(lattice, "pseudocomplemented", "(a) pseudocomplemented", pseudo.pseudocomplemented,
                   pseudo.pc_map if pseudo.pseudocomplemented else pseudo.failure,
                   None if pseudo.pseudocomplemented else "element without pseudocomplement, two maximal disjoint elements"),
        _condition(lattice, "no_zero_sublattice", "(b) no 0-sublattice M3 or M23", embedding is None,
                   embedding.mapping if embedding else None,
                   embedding.pattern_name if embedding else None),
        _condition(lattice, "no_ternary_witness", "(c) no ternary witness", witness is None,
                   witness.as_tuple() if witness else None),
    ]


def theorem1_report(lattice: FiniteLattice, subject: str = "lattice") -> AnalysisReport:
    """
    Evaluate (a), (b) and (c) independently and flag whether they coincide.

    For modular lattices a found ternary witness is also classified as M3 or
    M23 through its generated sublattice.
    """
    started = time.perf_counter()
    conditions = lattice_conditions(lattice)
    by_key = {result.key: result for result in conditions}
    modular = by_key["modular"].holds
    trio = {by_key[key].holds for key in ("pseudocomplemented", "no_zero_sublattice", "no_ternary_witness")}

    classification = None
    witness = by_key["no_ternary_witness"].witness
    if modular and witness is not None:
        classification = classify_witness(lattice, TernaryWitness(*witness)).pattern_name

    return AnalysisReport(
        subject=subject,
        kind="lattice",
        size=lattice.size,
        conditions=conditions,
        in_hypothesis=modular,
        agreement=len(trio) == 1,
        classification=classification,
        elapsed_ms=round((time.perf_counter() - started) * 1000.0, 3),
    )
