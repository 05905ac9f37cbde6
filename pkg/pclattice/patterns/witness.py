"""
Ternary witnesses: triples (a, b, c) of nonzero elements with
c ^ a = c ^ b = 0 and c v a = c v b = a v b.

In a modular lattice such a triple exists exactly when some element lacks a
pseudocomplement, and it always generates a copy of M3 or M23.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

import numpy as np

from ..analysis.properties import disjoint_matrix, is_modular
from ..core.errors import ClassificationFailed, NotModular
from ..core.isomorphism import is_isomorphic
from ..core.lattice import FiniteLattice, Sublattice, generated_sublattice, restrict_to_sublattice
from ..generators.fixtures import pattern_lattice
from .embedding import PatternEmbedding, verify_embedding

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TernaryWitness:
    a: int
    b: int
    c: int  # disjoint from both a and b

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class WitnessClassification:
    pattern_name: str
    generated: FrozenSet[int]
    sublattice: Sublattice


def is_ternary_witness(lattice: FiniteLattice, witness: TernaryWitness) -> bool:
    a, b, c = witness.as_tuple()
    zero = lattice.bottom
    if zero in (a, b, c):
        return False
    if lattice.meet(c, a) != zero or lattice.meet(c, b) != zero:
        return False
    top = lattice.join(a, b)
    return lattice.join(c, a) == top and lattice.join(c, b) == top


def find_ternary_witness(lattice: FiniteLattice) -> Optional[TernaryWitness]:
    """
    Lexicographically least witness (a, b, c), or None.

    For each a the whole (b, c) slab is tested at once; rows of the disjoint
    matrix prune every a that is disjoint from nothing but the bottom.
    """
    zero = lattice.bottom
    join = lattice.join_table
    disjoint = disjoint_matrix(lattice)
    nonzero = np.arange(lattice.size) != zero
    disjoint_nonzero = disjoint & nonzero[None, :] & nonzero[:, None]
    for a in lattice.elements():
        if a == zero or not disjoint_nonzero[a].any():
            continue
        ja = join[a]
        target = ja[:, None]                      # a v b, per row b
        slab = (
            disjoint_nonzero                      # c ^ b = 0, b and c nonzero
            & disjoint_nonzero[a][None, :]        # c ^ a = 0
            & (ja[None, :] == target)             # c v a = a v b
            & (join == target)                    # c v b = a v b
        )
        hits = np.argwhere(slab)
        if hits.size:
            b, c = (int(v) for v in hits[0])
            return TernaryWitness(a, b, c)
    return None


def classify_witness(lattice: FiniteLattice, witness: TernaryWitness) -> WitnessClassification:
    """
    Identify the sublattice generated by a witness as M3 or M23.

    Raises ClassificationFailed when the triple is not a witness or generates
    something else, which can only happen on a non-modular lattice.
    """
    if not is_ternary_witness(lattice, witness):
        raise ClassificationFailed(witness.as_tuple(), [], "triple is not a ternary witness")
    generated = generated_sublattice(lattice, witness.as_tuple())
    sub = restrict_to_sublattice(lattice, generated)
    for name in ("M3", "M23"):
        if is_isomorphic(sub.lattice, pattern_lattice(name)) is not None:
            return WitnessClassification(name, generated, sub)
    raise ClassificationFailed(witness.as_tuple(), generated, "generated sublattice is neither M3 nor M23")


def embedding_from_witness(lattice: FiniteLattice, witness: TernaryWitness) -> PatternEmbedding:
    """
    Build the anchored M3 or M23 copy a witness determines.

    When a ^ b = 0 the elements 0, a, b, c, a v c form M3; otherwise
    0, a ^ b, c, a, b, c v (a ^ b), a v c form M23.
    """
    a, b, c = witness.as_tuple()
    zero = lattice.bottom
    ab = lattice.meet(a, b)
    top = lattice.join(a, c)
    if ab == zero:
        embedding = PatternEmbedding("M3", (zero, a, b, c, top))
    else:
        # pattern order: 0, p, q, l, m, r, 1
        embedding = PatternEmbedding("M23", (zero, ab, c, a, b, lattice.join(c, ab), top))
    if not verify_embedding(lattice, embedding):
        raise ClassificationFailed(witness.as_tuple(), embedding.mapping,
                                   f"constructed {embedding.pattern_name} copy is not a 0-sublattice")
    return embedding


def witness_from_failure(lattice: FiniteLattice, failure: Tuple[int, int, int]) -> Tuple[str, TernaryWitness]:
    """
    Construct a witness from an element c with two distinct maximal disjoint elements a, b.

    Returns the case tag (A1, A2, B1, B2, C1, C2) with the witness. Requires a
    modular lattice.
    """
    verdict = is_modular(lattice)
    if not verdict.modular:
        raise NotModular(verdict.violation)
    c, a, b = failure
    meet, join, leq = lattice.meet, lattice.join, lattice.leq
    ac, bc = join(a, c), join(b, c)
    if ac != bc and leq(bc, ac):
        a, b = b, a
        ac, bc = bc, ac
    ab = join(a, b)

    if ac == bc:
        if ac == ab:
            case, triple = "A1", (a, b, c)
        else:
            case, triple = "A2", (a, b, meet(c, ab))
    elif leq(ac, bc):
        b_part = meet(ac, b)
        if ab == bc:
            case, triple = "B1", (a, b_part, c)
        else:
            case, triple = "B2", (a, b_part, meet(ab, c))
    else:
        a_part, b_part = meet(a, bc), meet(b, ac)
        if leq(meet(ac, bc), ab):
            case, triple = "C1", (a_part, b_part, c)
        else:
            case, triple = "C2", (a_part, b_part, meet(ab, c))

    witness = TernaryWitness(*triple)
    if not is_ternary_witness(lattice, witness):
        raise ClassificationFailed(triple, [], f"case {case} construction did not yield a witness")
    logger.debug("failure %s resolved by case %s into witness %s", failure, case, triple)
    return case, witness
