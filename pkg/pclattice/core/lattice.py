"""
Finite lattice representation.

Elements are the dense indices ``0..n-1``. The order relation and the meet and
join tables are materialized once, validated, and frozen; every query after
construction is a table lookup.
"""
from __future__ import annotations

import logging
from typing import FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from pydantic import BaseModel, Field, model_validator

from .errors import (
    InvalidLatticeInput,
    NoBoundedStructure,
    NotALattice,
    NotAPoset,
    NotClosed,
)

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


class CoverList(BaseModel):
    """Hasse-diagram description of a lattice; also the JSON file format."""

    size: int = Field(..., ge=1)
    covers: List[Tuple[int, int]] = Field(default_factory=list)
    labels: Optional[List[str]] = None

    @model_validator(mode="after")
    def _check_indices(self) -> "CoverList":
        for lower, upper in self.covers:
            if not (0 <= lower < self.size and 0 <= upper < self.size):
                raise ValueError(
                    f"cover ({lower}, {upper}) has an index outside 0..{self.size - 1}"
                )
        if self.labels is not None and len(self.labels) != self.size:
            raise ValueError(
                f"labels has {len(self.labels)} entries, expected {self.size}"
            )
        return self


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def _bound_table(below: np.ndarray, bound: str) -> np.ndarray:
    """
    Greatest common element of the down-sets ``below[a] & below[b]`` for every pair.

    ``below[x]`` is the boolean row of elements beneath ``x`` (inclusive). The
    candidate is the common element with the largest down-set; it is the bound
    exactly when its down-set is the whole common set.
    """
    n = below.shape[0]
    rank = below.sum(axis=1)
    table = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        common = below[a:] & below[a]
        sizes = common.sum(axis=1)
        candidates = np.argmax(np.where(common, rank[None, :], -1), axis=1)
        bad = np.flatnonzero(rank[candidates] != sizes)
        if bad.size:
            raise NotALattice((a, a + int(bad[0])), bound)
        table[a, a:] = candidates
        table[a:, a] = candidates
    return table


class FiniteLattice:
    """
    Immutable finite lattice on elements ``0..size-1``.

    Build one with :func:`build_from_covers` or :meth:`from_order`; both
    validate the lattice axioms before returning. :meth:`from_tables` adopts
    bound tables computed elsewhere, such as subgroup intersections and sums.
    """

    __slots__ = ("_size", "_leq", "_meet", "_join", "_bottom", "_top", "_labels",
                 "_covers", "_upper", "_lower", "_ranks")

    def __init__(self, leq: np.ndarray, labels: Optional[Sequence[str]] = None):
        leq = np.array(leq, dtype=bool)
        n = leq.shape[0]
        if leq.ndim != 2 or leq.shape != (n, n) or n == 0:
            raise InvalidLatticeInput(f"order relation must be a non-empty square matrix, got {leq.shape}")
        _check_labels(labels, n)
        _check_partial_order(leq)

        minimal = np.flatnonzero(leq.sum(axis=0) == 1).tolist()
        maximal = np.flatnonzero(leq.sum(axis=1) == 1).tolist()
        if len(minimal) != 1 or len(maximal) != 1:
            raise NoBoundedStructure(minimal, maximal)

        # row x of leq.T is the down-set of x, row x of leq its up-set
        meet = _bound_table(np.ascontiguousarray(leq.T), "greatest lower bound")
        join = _bound_table(leq, "least upper bound")
        self._populate(leq, meet, join, _cover_pairs(leq), labels)

    def _populate(self, leq: np.ndarray, meet: np.ndarray, join: np.ndarray,
                  covers: Iterable[Pair], labels: Optional[Sequence[str]]) -> None:
        n = leq.shape[0]
        self._size = n
        self._leq = _frozen(leq)
        self._meet = _frozen(meet)
        self._join = _frozen(join)
        self._bottom = int(np.flatnonzero(leq.all(axis=1))[0])
        self._top = int(np.flatnonzero(leq.all(axis=0))[0])
        self._labels = tuple(labels) if labels is not None else None
        self._covers = tuple(sorted((int(a), int(b)) for a, b in covers))
        upper: List[List[int]] = [[] for _ in range(n)]
        lower: List[List[int]] = [[] for _ in range(n)]
        for a, b in self._covers:
            upper[a].append(b)
            lower[b].append(a)
        self._upper = tuple(tuple(row) for row in upper)
        self._lower = tuple(tuple(row) for row in lower)
        self._ranks = None

    @classmethod
    def from_order(cls, leq: np.ndarray, labels: Optional[Sequence[str]] = None) -> "FiniteLattice":
        """Validate an explicit order matrix (``leq[a, b]`` means ``a <= b``)."""
        return cls(leq, labels)

    @classmethod
    def from_tables(
        cls,
        leq: np.ndarray,
        meet: np.ndarray,
        join: np.ndarray,
        covers: Iterable[Pair],
        labels: Optional[Sequence[str]] = None,
    ) -> "FiniteLattice":
        """
        Adopt exact meet and join tables without recomputing them.

        Only consistency with the order is checked (``a ^ b = a`` and
        ``a v b = b`` exactly when ``a <= b``), which is quadratic; the caller
        guarantees that the tables hold greatest lower and least upper bounds.
        """
        leq = np.array(leq, dtype=bool)
        n = leq.shape[0]
        meet = np.array(meet, dtype=np.int64)
        join = np.array(join, dtype=np.int64)
        if n == 0 or any(table.shape != (n, n) for table in (leq, meet, join)):
            raise InvalidLatticeInput("order, meet and join tables must be square and of equal size")
        _check_labels(labels, n)
        ids = np.arange(n)
        if not (((meet == ids[:, None]) == leq).all() and ((join == ids[None, :]) == leq).all()):
            raise InvalidLatticeInput("meet and join tables disagree with the order relation")
        if not (leq.all(axis=1).any() and leq.all(axis=0).any()):
            raise NoBoundedStructure(np.flatnonzero(leq.sum(axis=0) == 1).tolist(),
                                     np.flatnonzero(leq.sum(axis=1) == 1).tolist())
        lattice = cls.__new__(cls)
        lattice._populate(leq, meet, join, covers, labels)
        return lattice

    # --- structure -------------------------------------------------------

    @property
    def size(self) -> int:
        return self._size

    @property
    def bottom(self) -> int:
        return self._bottom

    @property
    def top(self) -> int:
        return self._top

    @property
    def labels(self) -> Optional[Tuple[str, ...]]:
        return self._labels

    @property
    def leq_matrix(self) -> np.ndarray:
        return self._leq

    @property
    def meet_table(self) -> np.ndarray:
        return self._meet

    @property
    def join_table(self) -> np.ndarray:
        return self._join

    @property
    def covers(self) -> List[Pair]:
        """Cover pairs ``(lower, upper)`` sorted lexicographically."""
        return list(self._covers)

    def elements(self) -> range:
        return range(self._size)

    def label(self, x: int) -> str:
        return self._labels[x] if self._labels is not None else str(x)

    # --- queries ---------------------------------------------------------

    def meet(self, a: int, b: int) -> int:
        return int(self._meet[a, b])

    def join(self, a: int, b: int) -> int:
        return int(self._join[a, b])

    def leq(self, a: int, b: int) -> bool:
        return bool(self._leq[a, b])

    def is_incomparable(self, a: int, b: int) -> bool:
        return not (self._leq[a, b] or self._leq[b, a])

    def lower_covers(self, x: int) -> List[int]:
        return list(self._lower[x])

    def upper_covers(self, x: int) -> List[int]:
        return list(self._upper[x])

    def atoms(self) -> List[int]:
        return self.upper_covers(self._bottom)

    def coatoms(self) -> List[int]:
        return self.lower_covers(self._top)

    def interval(self, a: int, b: int) -> FrozenSet[int]:
        """Elements x with a <= x <= b."""
        return frozenset(np.flatnonzero(self._leq[a, :] & self._leq[:, b]).tolist())

    def ranks(self) -> np.ndarray:
        """Length of the longest chain from the bottom up to each element."""
        if self._ranks is None:
            ranks = np.zeros(self._size, dtype=np.int64)
            # down-sets grow strictly along <, so this is a linear extension
            for x in np.argsort(self._leq.sum(axis=0), kind="stable").tolist():
                if self._lower[x]:
                    ranks[x] = ranks[list(self._lower[x])].max() + 1
            self._ranks = _frozen(ranks)
        return self._ranks

    def height(self) -> int:
        """Length of the longest chain from bottom to top."""
        return int(self.ranks()[self._top])

    def to_cover_list(self) -> CoverList:
        return CoverList(
            size=self._size,
            covers=self.covers,
            labels=list(self._labels) if self._labels is not None else None,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return (
            self._size == other._size
            and self._covers == other._covers
            and self._labels == other._labels
        )

    def __hash__(self) -> int:
        return hash((self._size, self._covers, self._labels))

    def __repr__(self) -> str:
        return f"FiniteLattice(size={self._size}, covers={list(self._covers)})"


def _check_labels(labels: Optional[Sequence[str]], n: int) -> None:
    if labels is not None and len(labels) != n:
        raise InvalidLatticeInput(f"labels has {len(labels)} entries, expected {n}")


def _check_partial_order(leq: np.ndarray) -> None:
    n = leq.shape[0]
    if not leq.diagonal().all():
        x = int(np.flatnonzero(~leq.diagonal())[0])
        raise InvalidLatticeInput(f"order relation is not reflexive at element {x}")
    both = leq & leq.T & ~np.eye(n, dtype=bool)
    if both.any():
        a, b = (int(v) for v in np.argwhere(both)[0])
        raise NotAPoset([(a, b), (b, a)])
    weights = leq.astype(np.float32)
    closure = (weights @ weights) > 0
    if (closure & ~leq).any():
        a, b = (int(v) for v in np.argwhere(closure & ~leq)[0])
        raise InvalidLatticeInput(f"order relation is not transitive: {a} <= {b} is implied but missing")


def _cover_pairs(leq: np.ndarray) -> Tuple[Pair, ...]:
    n = leq.shape[0]
    strict = leq & ~np.eye(n, dtype=bool)
    weights = strict.astype(np.float32)
    through = (weights @ weights) > 0
    return tuple((int(a), int(b)) for a, b in np.argwhere(strict & ~through))


def build_from_covers(cover_list: CoverList) -> FiniteLattice:
    """
    Build and validate a lattice whose order is the reflexive-transitive closure of the covers.

    Raises NotAPoset on a cycle, NoBoundedStructure without a unique minimum and
    maximum, and NotALattice naming the first pair lacking a meet or join.
    """
    n = cover_list.size
    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(cover_list.covers)
    try:
        cycle = nx.find_cycle(graph)
    except nx.NetworkXNoCycle:
        cycle = None
    if cycle is not None:
        raise NotAPoset([(int(u), int(v)) for u, v in cycle])

    below = np.eye(n, dtype=bool)
    for node in nx.topological_sort(graph):
        for lower in graph.predecessors(node):
            below[node] |= below[lower]
    lattice = FiniteLattice(below.T, cover_list.labels)

    redundant = set(cover_list.covers) - set(lattice.covers)
    if redundant:
        logger.warning("dropped %d redundant cover pair(s): %s", len(redundant), sorted(redundant))
    return lattice


def generated_sublattice(lattice: FiniteLattice, seeds: Iterable[int]) -> FrozenSet[int]:
    """Smallest meet- and join-closed subset containing ``seeds`` (fixpoint iteration)."""
    current = set(int(s) for s in seeds)
    if not current:
        raise InvalidLatticeInput("generated_sublattice needs at least one seed")
    while True:
        idx = np.fromiter(sorted(current), dtype=np.int64)
        grid = np.ix_(idx, idx)
        closed = current | set(lattice.meet_table[grid].ravel().tolist()) | set(lattice.join_table[grid].ravel().tolist())
        if closed == current:
            return frozenset(current)
        current = closed


class Sublattice(NamedTuple):
    lattice: FiniteLattice
    mapping: Tuple[int, ...]  # sublattice index -> ambient index


def restrict_to_sublattice(lattice: FiniteLattice, subset: Iterable[int]) -> Sublattice:
    """
    Inherit the order on a meet/join-closed subset.

    The subset is indexed in ascending ambient order; ``mapping`` sends the new
    indices back into ``lattice``. Raises NotClosed with the first offending pair.
    """
    members = sorted(set(int(x) for x in subset))
    if not members:
        raise InvalidLatticeInput("cannot restrict to an empty subset")
    inside = set(members)
    for i, a in enumerate(members):
        for b in members[i:]:
            for operation, table in (("meet", lattice.meet_table), ("join", lattice.join_table)):
                result = int(table[a, b])
                if result not in inside:
                    raise NotClosed((a, b), operation, result)
    idx = np.array(members, dtype=np.int64)
    labels = [lattice.label(x) for x in members] if lattice.labels is not None else None
    return Sublattice(FiniteLattice(lattice.leq_matrix[np.ix_(idx, idx)], labels), tuple(members))


def direct_product(first: FiniteLattice, second: FiniteLattice) -> FiniteLattice:
    """Componentwise order on pairs; pair (i, j) gets index ``i * second.size + j``."""
    leq = np.kron(first.leq_matrix.astype(np.uint8), second.leq_matrix.astype(np.uint8)).astype(bool)
    labels = [f"({first.label(i)},{second.label(j)})" for i in first.elements() for j in second.elements()]
    return FiniteLattice.from_order(leq, labels)


def glued_sum(*parts: FiniteLattice) -> FiniteLattice:
    """
    Stack ``parts`` bottom to top, identifying each top with the next bottom.

    Elements of the first part keep their indices; the other elements of each
    later part follow in its own index order. Modularity and distributivity of
    the parts carry over.
    """
    if not parts:
        raise InvalidLatticeInput("glued_sum needs at least one lattice")
    leq = parts[0].leq_matrix.copy()
    top = parts[0].top
    for part in parts[1:]:
        n1 = leq.shape[0]
        n = n1 + part.size - 1
        place = np.empty(part.size, dtype=np.int64)
        place[part.bottom] = top
        place[[x for x in part.elements() if x != part.bottom]] = np.arange(n1, n)
        stacked = np.zeros((n, n), dtype=bool)
        stacked[:n1, :n1] = leq
        stacked[:n1, n1:] = True
        stacked[np.ix_(place, place)] = part.leq_matrix
        leq, top = stacked, int(place[part.top])
    return FiniteLattice.from_order(leq)
