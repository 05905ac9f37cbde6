"""
Exhaustive enumeration of small lattices up to isomorphism.

A lattice of size n >= 2 is a bounded poset, so it is a poset on n - 2
interior elements with a bottom and a top attached. Interior posets are
generated with natural labels (i below j implies i < j): element k picks a
down-closed set of earlier elements as its strict down-set. Every poset has
a natural labelling, so every isomorphism class is reached; duplicates are
removed by canonical key.
"""
from __future__ import annotations

import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

import numpy as np

from ..core.errors import LatticeError, OutOfRange
from ..core.isomorphism import canonical_key
from ..core.lattice import FiniteLattice

logger = logging.getLogger(__name__)

MAX_ENUMERATION_SIZE = 8


def natural_posets(m: int) -> Iterator[Tuple[int, ...]]:
    """Strict down-sets (bitmasks) of every naturally labelled poset on m elements."""

    def extend(below: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        k = len(below)
        if k == m:
            yield below
            return
        for mask in range(1 << k):
            closure = mask
            for i in range(k):
                if mask >> i & 1:
                    closure |= below[i]
            if closure == mask:
                yield from extend(below + (mask,))

    yield from extend(())


def _bounded_order(below: Tuple[int, ...]) -> np.ndarray:
    m = len(below)
    n = m + 2
    leq = np.eye(n, dtype=bool)
    leq[0, :] = True
    leq[:, n - 1] = True
    for k, mask in enumerate(below):
        for i in range(m):
            if mask >> i & 1:
                leq[i + 1, k + 1] = True
    return leq


@lru_cache(maxsize=None)
def _size_class(n: int) -> Tuple[FiniteLattice, ...]:
    if n == 1:
        return (FiniteLattice(np.ones((1, 1), dtype=bool)),)
    found: Dict[Tuple[int, ...], FiniteLattice] = {}
    posets = 0
    for below in natural_posets(n - 2):
        posets += 1
        try:
            lattice = FiniteLattice(_bounded_order(below))
        except LatticeError:
            continue
        found.setdefault(canonical_key(lattice), lattice)
    logger.debug("size %d: %d interior posets, %d lattice classes", n, posets, len(found))
    representatives: List[FiniteLattice] = []
    for key in sorted(found):
        matrix = np.array(key[1:], dtype=bool).reshape(n, n)
        representatives.append(FiniteLattice(matrix))
    return tuple(representatives)


def lattices_of_size(n: int) -> List[FiniteLattice]:
    if not 1 <= n <= MAX_ENUMERATION_SIZE:
        raise OutOfRange(f"enumeration size must be in 1..{MAX_ENUMERATION_SIZE}, got {n}")
    return list(_size_class(n))


def enumerate_lattices(max_size: int) -> Iterator[FiniteLattice]:
    """One lattice per isomorphism class, sizes 1..max_size, in a fixed order."""
    if not 1 <= max_size <= MAX_ENUMERATION_SIZE:
        raise OutOfRange(f"max_size must be in 1..{MAX_ENUMERATION_SIZE}, got {max_size}")
    for n in range(1, max_size + 1):
        yield from _size_class(n)
