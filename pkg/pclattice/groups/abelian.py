"""
Finite abelian groups Z_{m1} x ... x Z_{mk} and their subgroup lattices.

Group elements are residue tuples, encoded internally as their index in
lexicographic order so that subgroups are boolean masks over the elements.
Every subgroup is a join of cyclic subgroups, and in an abelian group the
join of S and <g> is the sum set S + <g>, so the enumeration closes the
trivial subgroup under S -> S + <g>. The same closure table gives every join
by folding over a generating set; meets are intersections.
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator
from sympy import factorint, primerange

from ..core.errors import InvalidLatticeInput, OrderTooLarge
from ..core.lattice import FiniteLattice

logger = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 512


class AbelianGroupSpec(BaseModel):
    """Direct product of cyclic groups of the given orders (empty: trivial group)."""

    model_config = ConfigDict(frozen=True)

    factors: Tuple[int, ...] = ()
    max_order: int = DEFAULT_MAX_ORDER

    @field_validator("factors")
    @classmethod
    def _factors_at_least_two(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        for factor in value:
            if factor < 2:
                raise ValueError(f"cyclic factor orders must be >= 2, got {factor}")
        return value

    @classmethod
    def parse(cls, text: str, max_order: int = DEFAULT_MAX_ORDER) -> "AbelianGroupSpec":
        """Parse a comma-separated factor list such as ``2,4``."""
        parts = [part.strip() for part in text.split(",") if part.strip()]
        try:
            factors = tuple(int(part) for part in parts)
        except ValueError:
            raise InvalidLatticeInput(f"group factors must be integers, got {text!r}") from None
        if any(factor < 2 for factor in factors):
            raise InvalidLatticeInput(f"group factors must be >= 2, got {text!r}")
        return cls(factors=factors, max_order=max_order)

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def name(self) -> str:
        return " x ".join(f"Z{m}" for m in self.factors) if self.factors else "trivial"

    def ensure_within_bound(self) -> None:
        if self.order > self.max_order:
            raise OrderTooLarge(self.order, self.max_order)


@dataclass(frozen=True)
class Subgroup:
    elements: Tuple[Tuple[int, ...], ...]  # residue tuples, lexicographically sorted

    @property
    def order(self) -> int:
        return len(self.elements)

    def label(self) -> str:
        shown = [str(e[0]) if len(e) == 1 else "(" + ",".join(map(str, e)) + ")" for e in self.elements]
        return "{" + ", ".join(shown) + "}"


class _GroupTables:
    """Element encoding, addition table and doubling shifts of one group."""

    def __init__(self, factors: Tuple[int, ...]):
        self.factors = factors
        self.elements: List[Tuple[int, ...]] = list(itertools.product(*(range(m) for m in factors)))
        self.order = len(self.elements)
        residues = np.array(self.elements, dtype=np.int64).reshape(self.order, len(factors))
        moduli = np.array(factors, dtype=np.int64)
        strides = np.array([math.prod(factors[i + 1:]) for i in range(len(factors))], dtype=np.int64)
        sums = (residues[:, None, :] + residues[None, :, :]) % moduli
        self.add = (sums * strides).sum(axis=2) if factors else np.zeros((1, 1), dtype=np.int64)
        negative = np.argmax(self.add == 0, axis=1)

        # shifts[j][g, y] is y - 2^j g; applied in turn they sweep y + <g>
        ids = np.arange(self.order)
        multiple = ids
        self.shifts: List[np.ndarray] = []
        for _ in range((math.lcm(*factors) - 1).bit_length()):
            self.shifts.append(self.add[ids[None, :], negative[multiple][:, None]])
            multiple = self.add[multiple, multiple]

    def sum_set(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return np.unique(self.add[np.ix_(u, v)])


@lru_cache(maxsize=16)
def _tables(factors: Tuple[int, ...]) -> _GroupTables:
    return _GroupTables(factors)


@dataclass(frozen=True)
class _SubgroupStructure:
    members: np.ndarray                        # subgroups x elements, rows in (size, elements) order
    step: np.ndarray                           # step[s, g] is the index of s + <g>
    generators: Tuple[Tuple[int, ...], ...]    # elements generating each subgroup


@lru_cache(maxsize=16)
def _structure(factors: Tuple[int, ...]) -> _SubgroupStructure:
    tables = _tables(factors)
    start = np.zeros(tables.order, dtype=bool)
    start[0] = True
    masks = [start]
    generators: List[Tuple[int, ...]] = [()]
    known: Dict[bytes, int] = {np.packbits(start).tobytes(): 0}
    steps: List[np.ndarray] = []
    position = 0
    while position < len(masks):
        # row g becomes masks[position] + <g>
        grown = np.repeat(masks[position][None, :], tables.order, axis=0)
        for shift in tables.shifts:
            grown |= np.take_along_axis(grown, shift, axis=1)
        packed = np.packbits(grown, axis=1)
        _, first, inverse = np.unique(packed, axis=0, return_index=True, return_inverse=True)
        targets = np.empty(len(first), dtype=np.int64)
        for k, row in enumerate(first.tolist()):
            key = packed[row].tobytes()
            found = known.get(key)
            if found is None:
                found = known[key] = len(masks)
                masks.append(grown[row].copy())
                generators.append(generators[position] + (row,))
            targets[k] = found
        steps.append(targets[inverse.reshape(-1)])
        position += 1

    n = len(masks)
    ranking = sorted(range(n), key=lambda i: (int(masks[i].sum()), tuple(np.flatnonzero(masks[i]).tolist())))
    renumber = np.empty(n, dtype=np.int64)
    renumber[ranking] = np.arange(n)
    logger.debug("group %s: %d subgroups", factors, n)
    return _SubgroupStructure(
        members=np.array([masks[i] for i in ranking]),
        step=renumber[np.array(steps)[ranking]],
        generators=tuple(generators[i] for i in ranking),
    )


@lru_cache(maxsize=16)
def _subgroups(factors: Tuple[int, ...]) -> Tuple[Subgroup, ...]:
    elements = _tables(factors).elements
    return tuple(
        Subgroup(tuple(elements[i] for i in np.flatnonzero(row).tolist()))
        for row in _structure(factors).members
    )


def enumerate_subgroups(group: AbelianGroupSpec) -> List[Subgroup]:
    """All subgroups, ordered by (size, element list)."""
    group.ensure_within_bound()
    return list(_subgroups(group.factors))


def _signature_weights(order: int, attempt: int) -> np.ndarray:
    # every subset sum of these integers is exact in float64
    high = max(2, 2**52 // order)
    return np.random.default_rng(attempt).integers(1, high, size=order).astype(np.float64)


@lru_cache(maxsize=16)
def _lattice(factors: Tuple[int, ...]) -> FiniteLattice:
    structure = _structure(factors)
    members = structure.members
    n, order = members.shape
    ids = np.arange(n)

    join = np.empty((n, n), dtype=np.int64)
    for b, generators in enumerate(structure.generators):
        column = ids
        for g in generators:
            column = structure.step[column, g]
        join[:, b] = column

    # an intersection is itself a subgroup, so distinct signatures identify it
    weighted = members.astype(np.float64)
    for attempt in itertools.count():
        weights = _signature_weights(order, attempt)
        signature = weighted @ weights
        if len(np.unique(signature)) == n:
            break
    sorter = np.argsort(signature)
    meet = sorter[np.searchsorted(signature[sorter], (weighted * weights) @ weighted.T)]

    leq = meet == ids[:, None]
    sizes = members.sum(axis=1)
    prime_index = np.isin(sizes[None, :] // sizes[:, None], list(primerange(2, order + 1)))
    covers = [(int(a), int(b)) for a, b in np.argwhere(leq & prime_index)]
    labels = [subgroup.label() for subgroup in _subgroups(factors)]
    return FiniteLattice.from_tables(leq, meet, join, covers, labels)


def subgroup_lattice(group: AbelianGroupSpec) -> FiniteLattice:
    """Subgroups ordered by inclusion, labelled by their element lists."""
    group.ensure_within_bound()
    return _lattice(group.factors)


def is_cyclic(group: AbelianGroupSpec) -> bool:
    """Cyclic iff lcm of the factors equals the order; for finite groups this is local cyclicity."""
    return math.lcm(*group.factors) == group.order


@dataclass(frozen=True)
class SubgroupTriple:
    u: Subgroup
    v: Subgroup
    w: Subgroup  # meets both u and v trivially
    indices: Tuple[int, int, int]  # positions in enumerate_subgroups order


def find_subgroup_triple_witness(group: AbelianGroupSpec) -> Optional[SubgroupTriple]:
    """
    Least (U, V, W) of nontrivial subgroups with U n W = V n W = {e} and U+V = U+W = V+W.

    Intersections and sums are computed on element sets. Loop order matches
    the lattice-level search, so both report the same triple.
    """
    group.ensure_within_bound()
    tables = _tables(group.factors)
    members = _structure(group.factors).members
    arrays = [np.flatnonzero(row) for row in members]
    counts = members.astype(np.float32)
    trivial_meet = (counts @ counts.T) == 1
    sums: Dict[Tuple[int, int], bytes] = {}

    def sum_of(i: int, j: int) -> bytes:
        key = (min(i, j), max(i, j))
        if key not in sums:
            sums[key] = tables.sum_set(arrays[i], arrays[j]).tobytes()
        return sums[key]

    nontrivial = range(1, len(arrays))
    for u in nontrivial:
        partners = [w for w in nontrivial if trivial_meet[u, w]]
        if not partners:
            continue
        for v in nontrivial:
            if v == u:
                continue
            for w in partners:
                if not trivial_meet[v, w]:
                    continue
                if sum_of(u, v) == sum_of(u, w) == sum_of(v, w):
                    subgroups = _subgroups(group.factors)
                    return SubgroupTriple(subgroups[u], subgroups[v], subgroups[w], (u, v, w))
    return None
def invariant_factors(group: AbelianGroupSpec) -> Tuple[int, ...]:
    """Invariant factors d1 | d2 | ... of the group, all >= 2."""
    exponents: Dict[int, List[int]] = {}
    for factor in group.factors:
        for prime, exponent in factorint(factor).items():
            exponents.setdefault(int(prime), []).append(int(exponent))
    length = max((len(values) for values in exponents.values()), default=0)
    result = [1] * length
    for prime, values in exponents.items():
        for position, exponent in enumerate(sorted(values, reverse=True)):
            result[length - 1 - position] *= prime ** exponent
    return tuple(result)


def factor_multisets(n: int, smallest: int = 2) -> List[Tuple[int, ...]]:
    """Non-decreasing tuples of integers >= 2 whose product is n (``()`` for n = 1)."""
    if n == 1:
        return [()]
    found: List[Tuple[int, ...]] = []
    for first in range(smallest, n + 1):
        if n % first == 0:
            found.extend((first,) + rest for rest in factor_multisets(n // first, first))
    return found
