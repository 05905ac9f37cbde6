"""
Sublattice embedding search for the fixture patterns M3, M23 and N5.

A 0-sublattice must contain the least element of the target, and since the
copy's least element is then the target's bottom, anchoring maps the pattern
bottom to the target bottom.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Literal, Optional, Tuple

import numpy as np

from ..core.lattice import FiniteLattice
from ..generators.fixtures import pattern_lattice

logger = logging.getLogger(__name__)

PatternName = Literal["M3", "M23", "N5"]


@dataclass(frozen=True)
class PatternEmbedding:
    pattern_name: str
    mapping: Tuple[int, ...]  # pattern element -> target element

    def image(self) -> List[int]:
        return list(self.mapping)


class _EmbeddingSearch:
    """Backtracking over pattern elements; images tried in ascending target order."""

    def __init__(self, target: FiniteLattice, pattern: FiniteLattice, anchor_bottom: bool):
        self.target = target
        self.pattern = pattern
        self.image = [-1] * pattern.size
        self.used = np.zeros(target.size, dtype=bool)
        self.nodes = 0
        if anchor_bottom:
            self._assign(pattern.bottom, target.bottom)

    def _assign(self, k: int, value: int) -> None:
        self.image[k] = value
        self.used[value] = True

    def _release(self, k: int) -> None:
        self.used[self.image[k]] = False
        self.image[k] = -1

    def _assigned(self) -> List[int]:
        return [k for k, v in enumerate(self.image) if v >= 0]

    def _forced(self, k: int) -> Optional[List[int]]:
        """Images imposed on k by assigned pairs whose meet or join is k."""
        pm, pj = self.pattern.meet_table, self.pattern.join_table
        tm, tj = self.target.meet_table, self.target.join_table
        assigned = self._assigned()
        values = set()
        for pos, i in enumerate(assigned):
            for j in assigned[pos + 1:]:
                if pm[i, j] == k:
                    values.add(int(tm[self.image[i], self.image[j]]))
                if pj[i, j] == k:
                    values.add(int(tj[self.image[i], self.image[j]]))
        return sorted(values) if values else None

    def _candidates(self, k: int) -> np.ndarray:
        p, t = self.pattern, self.target
        mask = ~self.used
        for i in self._assigned():
            u = self.image[i]
            mask &= t.leq_matrix[u, :] == p.leq_matrix[i, k]
            mask &= t.leq_matrix[:, u] == p.leq_matrix[k, i]
            m = self.image[p.meet_table[i, k]]
            if m >= 0:
                mask &= t.meet_table[u, :] == m
            j = self.image[p.join_table[i, k]]
            if j >= 0:
                mask &= t.join_table[u, :] == j
        return np.flatnonzero(mask)

    def _next(self) -> Tuple[int, Optional[List[int]]]:
        free = [k for k, v in enumerate(self.image) if v < 0]
        for k in free:
            forced = self._forced(k)
            if forced is not None:
                return k, forced
        return free[0], None

    def run(self) -> Optional[Tuple[int, ...]]:
        if -1 not in self.image:
            return tuple(self.image)
        self.nodes += 1
        k, forced = self._next()
        candidates = self._candidates(k)
        if forced is not None:
            # two pairs forcing different images is a dead end
            candidates = [forced[0]] if len(forced) == 1 and forced[0] in candidates else []
        for value in candidates:
            self._assign(k, int(value))
            found = self.run()
            if found is not None:
                return found
            self._release(k)
        return None


def find_zero_sublattice_embedding(
    lattice: FiniteLattice, pattern: PatternName, anchor_bottom: bool = True
) -> Optional[PatternEmbedding]:
    """
    First embedding of ``pattern`` into ``lattice`` in deterministic index order.

    With ``anchor_bottom`` the pattern's bottom is pinned to the lattice's
    bottom (a 0-sublattice); otherwise any sublattice copy qualifies.
    """
    shape = pattern_lattice(pattern)
    if shape.size > lattice.size:
        return None
    search = _EmbeddingSearch(lattice, shape, anchor_bottom)
    mapping = search.run()
    logger.debug("embedding search %s (anchored=%s) on %d elements: %d nodes, found=%s",
                 pattern, anchor_bottom, lattice.size, search.nodes, mapping is not None)
    return PatternEmbedding(pattern, mapping) if mapping is not None else None


def verify_embedding(lattice: FiniteLattice, embedding: PatternEmbedding, anchor_bottom: bool = True) -> bool:
    """Independent re-check: injective, meet and join preserving, optionally anchored."""
    shape = pattern_lattice(embedding.pattern_name)
    phi = embedding.mapping
    if len(phi) != shape.size or len(set(phi)) != len(phi):
        return False
    if any(not 0 <= v < lattice.size for v in phi):
        return False
    if anchor_bottom and phi[shape.bottom] != lattice.bottom:
        return False
    for x in shape.elements():
        for y in shape.elements():
            if lattice.meet(phi[x], phi[y]) != phi[shape.meet(x, y)]:
                return False
            if lattice.join(phi[x], phi[y]) != phi[shape.join(x, y)]:
                return False
    return True


def find_forbidden_zero_sublattice(lattice: FiniteLattice) -> Optional[PatternEmbedding]:
    """Anchored M3 first, then anchored M23."""
    return (
        find_zero_sublattice_embedding(lattice, "M3", anchor_bottom=True)
        or find_zero_sublattice_embedding(lattice, "M23", anchor_bottom=True)
    )
