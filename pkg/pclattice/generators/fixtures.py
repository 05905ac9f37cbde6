"""
Named lattices: chains, Boolean lattices, the diamond M3, the seven-element
M23 and the pentagon N5.

Elements are numbered bottom first, then by rank, left to right as the
diagrams are usually drawn.
"""
from __future__ import annotations

import re
from functools import lru_cache

from ..core.errors import OutOfRange, UnknownFixture
from ..core.lattice import CoverList, FiniteLattice, build_from_covers

MAX_CHAIN = 2000
MAX_BOOLEAN_RANK = 12

# bottom; atoms p, q, r; top
M3_COVERS = CoverList(
    size=5,
    covers=[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
    labels=["0", "p", "q", "r", "1"],
)

# bottom; atoms p (below l, m, r) and q (below r only); coatoms l, m, r; top
M23_COVERS = CoverList(
    size=7,
    covers=[(0, 1), (0, 2), (1, 3), (1, 4), (1, 5), (2, 5), (3, 6), (4, 6), (5, 6)],
    labels=["0", "p", "q", "l", "m", "r", "1"],
)

# bottom < a < c < top on the left, b alone on the right
N5_COVERS = CoverList(
    size=5,
    covers=[(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)],
    labels=["0", "a", "b", "c", "1"],
)

PATTERN_COVERS = {"M3": M3_COVERS, "M23": M23_COVERS, "N5": N5_COVERS}


@lru_cache(maxsize=None)
def pattern_lattice(name: str) -> FiniteLattice:
    try:
        return build_from_covers(PATTERN_COVERS[name])
    except KeyError:
        raise UnknownFixture(f"unknown pattern {name!r}; expected one of {sorted(PATTERN_COVERS)}") from None


def chain(k: int) -> FiniteLattice:
    if not 1 <= k <= MAX_CHAIN:
        raise OutOfRange(f"chain length must be in 1..{MAX_CHAIN}, got {k}")
    return build_from_covers(CoverList(size=k, covers=[(i, i + 1) for i in range(k - 1)]))


def boolean(k: int) -> FiniteLattice:
    """Subsets of {1..k}, ordered by (cardinality, bitmask)."""
    if not 0 <= k <= MAX_BOOLEAN_RANK:
        raise OutOfRange(f"boolean rank must be in 0..{MAX_BOOLEAN_RANK}, got {k}")
    masks = sorted(range(1 << k), key=lambda m: (bin(m).count("1"), m))
    index = {mask: i for i, mask in enumerate(masks)}
    covers = [
        (index[mask], index[mask | (1 << bit)])
        for mask in masks
        for bit in range(k)
        if not mask & (1 << bit)
    ]
    labels = [
        "{" + ",".join(str(bit + 1) for bit in range(k) if mask & (1 << bit)) + "}"
        for mask in masks
    ]
    return build_from_covers(CoverList(size=len(masks), covers=sorted(covers), labels=labels))


_PARAMETRIC = re.compile(r"^(chain|boolean)\(\s*(\d+)\s*\)$", re.IGNORECASE)


def fixture(name: str) -> FiniteLattice:
    """
    Look up a named lattice: ``M3``, ``M23``, ``N5``, ``chain(k)`` or ``boolean(k)``.
    """
    key = name.strip()
    if key.upper() in PATTERN_COVERS:
        return pattern_lattice(key.upper())
    match = _PARAMETRIC.match(key)
    if not match:
        raise UnknownFixture(
            f"unknown fixture {name!r}; expected M3, M23, N5, chain(k) or boolean(k)"
        )
    family, k = match.group(1).lower(), int(match.group(2))
    return chain(k) if family == "chain" else boolean(k)
