"""
Isomorphism testing and canonical forms for small lattices.

Both work on the order relation only: an order isomorphism between lattices
preserves meets and joins.
"""
from __future__ import annotations

import itertools
from typing import Dict, List, Optional, Tuple

import numpy as np

from .lattice import FiniteLattice


def element_invariants(lattice: FiniteLattice) -> List[Tuple[int, int, int, int]]:
    """Per element: (down-set size, up-set size, lower cover count, upper cover count)."""
    leq = lattice.leq_matrix
    down = leq.sum(axis=0)
    up = leq.sum(axis=1)
    lower = [0] * lattice.size
    upper = [0] * lattice.size
    for a, b in lattice.covers:
        upper[a] += 1
        lower[b] += 1
    return [(int(down[x]), int(up[x]), lower[x], upper[x]) for x in lattice.elements()]


def is_isomorphic(first: FiniteLattice, second: FiniteLattice) -> Optional[Tuple[int, ...]]:
    """
    Return a bijection ``mapping[x] = image`` preserving the order, or None.

    Backtracks over elements of ``first`` in index order, trying images of
    ``second`` lowest index first, pruned by the element invariants.
    """
    n = first.size
    if n != second.size or len(first.covers) != len(second.covers):
        return None
    inv1 = element_invariants(first)
    inv2 = element_invariants(second)
    if sorted(inv1) != sorted(inv2):
        return None

    leq1 = first.leq_matrix
    leq2 = second.leq_matrix
    by_invariant: Dict[Tuple[int, int, int, int], List[int]] = {}
    for x, key in enumerate(inv2):
        by_invariant.setdefault(key, []).append(x)
    mapping = [-1] * n
    used = np.zeros(n, dtype=bool)

    def extend(x: int) -> bool:
        if x == n:
            return True
        for candidate in by_invariant[inv1[x]]:
            if used[candidate]:
                continue
            if any(
                leq1[x, y] != leq2[candidate, mapping[y]] or leq1[y, x] != leq2[mapping[y], candidate]
                for y in range(x)
            ):
                continue
            mapping[x] = candidate
            used[candidate] = True
            if extend(x + 1):
                return True
            used[candidate] = False
        mapping[x] = -1
        return False

    return tuple(mapping) if extend(0) else None


def canonical_key(lattice: FiniteLattice) -> Tuple[int, ...]:
    """
    Lexicographically least order matrix over invariant-respecting relabelings.

    Elements are grouped by sorted invariant; only permutations inside a group
    are tried, so the key is cheap for the lattices of size at most 8 the
    enumerator produces. Two lattices have equal keys iff they are isomorphic.
    """
    invariants = element_invariants(lattice)
    groups: Dict[Tuple[int, int, int, int], List[int]] = {}
    for x, key in enumerate(invariants):
        groups.setdefault(key, []).append(x)
    ordered = [groups[key] for key in sorted(groups)]
    leq = lattice.leq_matrix
    best: Optional[Tuple[int, ...]] = None
    for choice in itertools.product(*(itertools.permutations(group) for group in ordered)):
        order = [x for block in choice for x in block]
        key = tuple(int(v) for v in leq[np.ix_(order, order)].ravel())
        if best is None or key < best:
            best = key
    return (lattice.size,) + best
