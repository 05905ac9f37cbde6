"""
Five-way check on a finite abelian group G:

  (i)   L(G) distributive
  (ii)  G cyclic (the finite case of locally cyclic)
  (iii) L(G) pseudocomplemented
  (iv)  L(G) has no 0-sublattice isomorphic to M3 or M23
  (v)   G has no nontrivial subgroups U, V, W with U n W = V n W = {e}
        and U + V = U + W = V + W
"""
from __future__ import annotations

import time

from ..analysis.properties import is_distributive, is_modular, is_pseudocomplemented
from ..patterns.embedding import find_forbidden_zero_sublattice
from ..reporters.models import AnalysisReport, ConditionResult
from .abelian import AbelianGroupSpec, find_subgroup_triple_witness, is_cyclic, subgroup_lattice


def theorem3_report(group: AbelianGroupSpec) -> AnalysisReport:
    started = time.perf_counter()
    lattice = subgroup_lattice(group)

    def labelled(elements):
        return [lattice.label(x) for x in elements] if elements is not None else None

    distributive = is_distributive(lattice)
    cyclic = is_cyclic(group)
    pseudo = is_pseudocomplemented(lattice)
    embedding = find_forbidden_zero_sublattice(lattice)
    triple = find_subgroup_triple_witness(group)
    modular = is_modular(lattice)

    conditions = [
        ConditionResult(key="distributive", label="(i) L(G) distributive",
                        holds=distributive.distributive,
                        witness=list(distributive.violation) if distributive.violation else None,
                        witness_labels=labelled(distributive.violation)),
        ConditionResult(key="cyclic", label="(ii) cyclic (= locally cyclic, finite case)",
                        holds=cyclic),
        ConditionResult(key="pseudocomplemented", label="(iii) L(G) pseudocomplemented",
                        holds=pseudo.pseudocomplemented,
                        witness=list(pseudo.failure) if pseudo.failure else None,
                        witness_labels=labelled(pseudo.failure)),
        ConditionResult(key="no_zero_sublattice", label="(iv) no 0-sublattice M3 or M23",
                        holds=embedding is None,
                        witness=list(embedding.mapping) if embedding else None,
                        witness_labels=labelled(embedding.mapping if embedding else None),
                        detail=embedding.pattern_name if embedding else None),
        ConditionResult(key="no_subgroup_triple", label="(v) no subgroup triple U, V, W",
                        holds=triple is None,
                        witness=list(triple.indices) if triple else None,
                        witness_labels=[s.label() for s in (triple.u, triple.v, triple.w)] if triple else None),
        ConditionResult(key="modular", label="L(G) modular", holds=modular.modular,
                        witness=list(modular.violation) if modular.violation else None),
    ]
    five = {result.holds for result in conditions[:5]}
    return AnalysisReport(
        subject=group.name,
        kind="group",
        size=lattice.size,
        order=group.order,
        conditions=conditions,
        in_hypothesis=modular.modular,
        agreement=len(five) == 1,
        elapsed_ms=round((time.perf_counter() - started) * 1000.0, 3),
    )
