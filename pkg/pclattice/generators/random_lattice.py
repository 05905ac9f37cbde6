"""
Seeded random lattices for fuzzing.

Growth step: pick a comparable pair a < b and insert a new element x with
down-set down(a) + {x} and up-set up(b) + {x}. Meets and joins of old pairs
are unchanged and x ^ y = a ^ y, x v y = b v y for y not above or below x,
so every step stays a lattice. The finished lattice is still validated; a
failure discards it and retries with the next sub-seed.

Growth almost never yields a modular lattice, so modular ones come from a
separate source: modular blocks (direct products, subgroup lattices and their
intervals and generated sublattices) stacked by glued sums until the size is
exact. The bottom block decides whether the result is pseudocomplemented.

Randomness comes from ``numpy.random.SeedSequence([seed, attempt])``, so the
same (size, seed) gives the same cover list on every platform.
"""
from __future__ import annotations

import logging
from typing import List

import numpy as np

from ..core.errors import LatticeError, OutOfRange
from ..core.lattice import (
    FiniteLattice,
    direct_product,
    generated_sublattice,
    glued_sum,
    restrict_to_sublattice,
)
from ..groups.abelian import AbelianGroupSpec, subgroup_lattice
from .divisors import divisor_lattice
from .fixtures import chain, pattern_lattice

logger = logging.getLogger(__name__)

MIN_RANDOM_SIZE = 2
MAX_RANDOM_SIZE = 2000
MAX_ATTEMPTS = 16
BLOCK_DRAWS = 8

# small modular factors; M3 and M23 make products non-pseudocomplemented
_FACTOR_NAMES = ("M3", "M23", "M3", "chain2", "chain3", "L6", "L12", "L30")
# non-cyclic groups of order <= 25
_GROUP_FACTORS = ((2, 2), (3, 3), (2, 4), (5, 5), (2, 2, 2), (2, 6), (2, 2, 3), (2, 8), (4, 4), (3, 6), (2, 2, 2, 2))


def _rng(seed: int, attempt: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed & (2**64 - 1), attempt]))


def _check_size(size: int) -> None:
    if not MIN_RANDOM_SIZE <= size <= MAX_RANDOM_SIZE:
        raise OutOfRange(f"random lattice size must be in {MIN_RANDOM_SIZE}..{MAX_RANDOM_SIZE}, got {size}")


def _grow(size: int, rng: np.random.Generator) -> np.ndarray:
    # below[x] is a bitmask of the elements <= x
    below: List[int] = [0b01, 0b11]
    while len(below) < size:
        n = len(below)
        a = int(rng.integers(n))
        above_a = [y for y in range(n) if y != a and below[y] >> a & 1]
        if not above_a:
            continue
        b = above_a[int(rng.integers(len(above_a)))]
        x = n
        below.append(below[a] | (1 << x))
        for y in range(n):
            if below[y] >> b & 1:
                below[y] |= 1 << x

    # relabel along a linear extension so bottom is 0 and top is size - 1
    order = sorted(range(size), key=lambda y: (bin(below[y]).count("1"), y))
    position = {old: new for new, old in enumerate(order)}
    leq = np.zeros((size, size), dtype=bool)
    for y in range(size):
        for z in range(size):
            if below[y] >> z & 1:
                leq[position[z], position[y]] = True
    return leq


def random_lattice(size: int, seed: int) -> FiniteLattice:
    """A validated lattice with exactly ``size`` elements, reproducible from ``seed``."""
    _check_size(size)
    for attempt in range(MAX_ATTEMPTS):
        try:
            return FiniteLattice.from_order(_grow(size, _rng(seed, attempt)))
        except LatticeError as e:
            logger.warning("random lattice (size=%d, seed=%d, attempt=%d) rejected: %s", size, seed, attempt, e)
    raise OutOfRange(f"no valid lattice after {MAX_ATTEMPTS} attempts (size={size}, seed={seed})")


def _factor(rng: np.random.Generator) -> FiniteLattice:
    name = _FACTOR_NAMES[int(rng.integers(len(_FACTOR_NAMES)))]
    if name.startswith("chain"):
        return chain(int(name[5:]))
    if name.startswith("L"):
        return divisor_lattice(int(name[1:]))
    return pattern_lattice(name)


def _modular_block(rng: np.random.Generator) -> FiniteLattice:
    kind = int(rng.integers(5))
    if kind == 0:
        return _factor(rng)
    if kind == 1:
        return direct_product(_factor(rng), _factor(rng))
    factors = _GROUP_FACTORS[int(rng.integers(len(_GROUP_FACTORS)))]
    ambient = subgroup_lattice(AbelianGroupSpec(factors=factors))
    if kind == 2:
        return ambient
    if kind == 3:
        seeds = rng.choice(ambient.size, size=int(rng.integers(2, 4)), replace=False)
        return restrict_to_sublattice(ambient, generated_sublattice(ambient, seeds.tolist())).lattice
    a = int(rng.integers(ambient.size))
    above = np.flatnonzero(ambient.leq_matrix[a]).tolist()
    b = above[int(rng.integers(len(above)))]
    return restrict_to_sublattice(ambient, ambient.interval(a, b)).lattice


def random_modular_lattice(size: int, seed: int) -> FiniteLattice:
    """A modular lattice with exactly ``size`` elements, reproducible from ``seed``."""
    _check_size(size)
    rng = _rng(seed, 0)
    blocks: List[FiniteLattice] = []
    reached = 1
    while reached < size:
        budget = size - reached + 1  # a glued block shares one element
        for _ in range(BLOCK_DRAWS):
            block = _modular_block(rng)
            if 2 <= block.size <= budget:
                break
        else:
            block = chain(budget)
        blocks.append(block)
        reached += block.size - 1
    return glued_sum(*blocks)
