"""
Decision procedures for modularity, distributivity and pseudocomplements.

Modularity is decided from the rank function in quadratic time. The law
scans run one vectorized n x n slab per first argument, so every verdict is
exhaustive over all triples while staying table-lookup bound.
Finite lattices are inductive, so no separate inductivity check exists:
maximal disjoint elements always exist and are found by filtering.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

import numpy as np

from ..core.errors import NotModular
from ..core.lattice import FiniteLattice

Triple = Tuple[int, int, int]


@dataclass(frozen=True)
class ModularityVerdict:
    """``violation`` is (a, b, c) with a <= c and a v (b ^ c) != (a v b) ^ c."""
    modular: bool
    violation: Optional[Triple] = None


@dataclass(frozen=True)
class DistributivityVerdict:
    """``violation`` is (a, b, c) with a ^ (b v c) != (a ^ b) v (a ^ c)."""
    distributive: bool
    violation: Optional[Triple] = None


@dataclass(frozen=True)
class PseudocomplementVerdict:
    pseudocomplemented: bool
    pc_map: Optional[Tuple[int, ...]] = None
    # (a, m1, m2): two distinct maximal elements disjoint from a
    failure: Optional[Triple] = None


@dataclass(frozen=True)
class Proposition1Verdict:
    """``counterexample`` is (a, b, x) with b maximal disjoint from a and (a v b) ^ x = 0."""
    holds: bool
    counterexample: Optional[Triple] = None


def modular_law_violation(lattice: FiniteLattice) -> Optional[Triple]:
    """First (a, b, c) with a <= c and a v (b ^ c) != (a v b) ^ c, scanning every triple."""
    meet, join, leq = lattice.meet_table, lattice.join_table, lattice.leq_matrix
    columns = np.arange(lattice.size)[None, :]
    for a in lattice.elements():
        ja = join[a]
        lhs = ja[meet]                       # a v (b ^ c)
        rhs = meet[ja[:, None], columns]     # (a v b) ^ c
        bad = np.argwhere((lhs != rhs) & leq[a][None, :])
        if bad.size:
            b, c = bad[0]
            return (a, int(b), int(c))
    return None


def has_modular_rank(lattice: FiniteLattice) -> bool:
    """Graded, and r(a) + r(b) = r(a ^ b) + r(a v b) for every pair."""
    ranks = lattice.ranks()
    covers = np.array(lattice.covers, dtype=np.int64).reshape(-1, 2)
    if (ranks[covers[:, 1]] != ranks[covers[:, 0]] + 1).any():
        return False
    for a in lattice.elements():
        if (ranks[a] + ranks != ranks[lattice.meet_table[a]] + ranks[lattice.join_table[a]]).any():
            return False
    return True


def is_modular(lattice: FiniteLattice) -> ModularityVerdict:
    """
    A finite lattice is modular exactly when its rank function is modular,
    a quadratic test; the triple scan only runs to name a violation.
    """
    if has_modular_rank(lattice):
        return ModularityVerdict(True)
    violation = modular_law_violation(lattice)
    return ModularityVerdict(violation is None, violation)


def is_distributive(lattice: FiniteLattice) -> DistributivityVerdict:
    meet, join = lattice.meet_table, lattice.join_table
    for a in lattice.elements():
        ma = meet[a]
        lhs = ma[join]                         # a ^ (b v c)
        rhs = join[ma[:, None], ma[None, :]]   # (a ^ b) v (a ^ c)
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            b, c = bad[0]
            return DistributivityVerdict(False, (a, int(b), int(c)))
    return DistributivityVerdict(True)


def disjoint_matrix(lattice: FiniteLattice) -> np.ndarray:
    """``D[a, x]`` is True when a ^ x = 0."""
    return lattice.meet_table == lattice.bottom


def maximal_disjoint_matrix(lattice: FiniteLattice) -> np.ndarray:
    """Row a marks the maximal elements of {x : a ^ x = 0}."""
    disjoint = disjoint_matrix(lattice)
    dominated = np.zeros_like(disjoint)
    # disjointness passes downwards, so x is dominated iff one of its upper covers is disjoint
    for x in lattice.elements():
        above = lattice.upper_covers(x)
        if above:
            dominated[:, x] = disjoint[:, above].any(axis=1)
    return disjoint & ~dominated


def maximal_disjoint(lattice: FiniteLattice, a: int) -> FrozenSet[int]:
    disjoint = lattice.meet_table[a] == lattice.bottom
    strict_above = lattice.leq_matrix & ~np.eye(lattice.size, dtype=bool)
    dominated = (strict_above & disjoint[None, :]).any(axis=1)
    return frozenset(np.flatnonzero(disjoint & ~dominated).tolist())


def pseudocomplement(lattice: FiniteLattice, a: int) -> Optional[int]:
    """Greatest element disjoint from ``a``, or None when there are several maximal ones."""
    candidates = maximal_disjoint(lattice, a)
    if len(candidates) == 1:
        return next(iter(candidates))
    return None


def is_pseudocomplemented(lattice: FiniteLattice) -> PseudocomplementVerdict:
    maximal = maximal_disjoint_matrix(lattice)
    counts = maximal.sum(axis=1)
    failing = np.flatnonzero(counts != 1)
    if failing.size:
        a = int(failing[0])
        first, second = (int(x) for x in np.flatnonzero(maximal[a])[:2])
        return PseudocomplementVerdict(False, failure=(a, first, second))
    pc_map = tuple(int(x) for x in np.argmax(maximal, axis=1))
    return PseudocomplementVerdict(True, pc_map=pc_map)


def check_proposition1(lattice: FiniteLattice) -> Proposition1Verdict:
    """
    For every a and every maximal b with a ^ b = 0, check (a v b) ^ x != 0 for all x != 0.

    Raises NotModular when the lattice violates the modular law.
    """
    modularity = is_modular(lattice)
    if not modularity.modular:
        raise NotModular(modularity.violation)
    maximal = maximal_disjoint_matrix(lattice)
    meet, join, bottom = lattice.meet_table, lattice.join_table, lattice.bottom
    nonzero = np.arange(lattice.size) != bottom
    for a in lattice.elements():
        for b in np.flatnonzero(maximal[a]).tolist():
            hits = np.flatnonzero((meet[join[a, b]] == bottom) & nonzero)
            if hits.size:
                return Proposition1Verdict(False, (a, b, int(hits[0])))
    return Proposition1Verdict(True)


def complements(lattice: FiniteLattice, a: int) -> FrozenSet[int]:
    """Elements b with a v b = 1 and a ^ b = 0."""
    hits = (lattice.join_table[a] == lattice.top) & (lattice.meet_table[a] == lattice.bottom)
    return frozenset(np.flatnonzero(hits).tolist())


def is_complemented(lattice: FiniteLattice) -> Tuple[bool, Optional[int]]:
    """(True, None) or (False, least element without a complement)."""
    hits = (lattice.join_table == lattice.top) & (lattice.meet_table == lattice.bottom)
    missing = np.flatnonzero(~hits.any(axis=1))
    if missing.size:
        return False, int(missing[0])
    return True, None
