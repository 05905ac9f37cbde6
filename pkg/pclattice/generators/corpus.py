"""
Test corpus: exhaustive small lattices, seeded random lattices, seeded random
modular lattices, divisor lattices and subgroup lattices, streamed in that order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from pydantic import BaseModel, Field, ValidationError

from ..core.errors import OutOfRange
from ..core.lattice import FiniteLattice
from ..groups.abelian import AbelianGroupSpec, factor_multisets, subgroup_lattice
from .divisors import MAX_DIVISOR_N, divisor_lattice
from .enumeration import MAX_ENUMERATION_SIZE, lattices_of_size
from .random_lattice import MAX_RANDOM_SIZE, MIN_RANDOM_SIZE, random_lattice, random_modular_lattice


class CorpusSpec(BaseModel):
    """Which lattices a corpus run covers. Zero counts switch a source off."""

    max_exhaustive_size: int = Field(7, ge=0, le=MAX_ENUMERATION_SIZE)
    random_count: int = Field(0, ge=0)
    modular_count: int = Field(0, ge=0)
    random_size: int = Field(30, ge=MIN_RANDOM_SIZE, le=MAX_RANDOM_SIZE)
    seed: int = Field(0, ge=0, lt=2**64)
    divisor_limit: int = Field(0, ge=0, le=MAX_DIVISOR_N)
    group_order_limit: int = Field(0, ge=0, le=512)

    @classmethod
    def checked(cls, **values) -> "CorpusSpec":
        try:
            return cls(**values)
        except ValidationError as e:
            first = e.errors()[0]
            raise OutOfRange(f"corpus option {first['loc'][0]}: {first['msg']}") from None

    def random_parameters(self, index: int) -> tuple[int, int]:
        """(size, seed) of the index-th random or random modular lattice; sizes cycle through 2..random_size."""
        size = MIN_RANDOM_SIZE + index % (self.random_size - MIN_RANDOM_SIZE + 1)
        return size, self.seed + index


@dataclass(frozen=True)
class CorpusItem:
    source: str
    name: str
    lattice: FiniteLattice


def corpus(spec: CorpusSpec) -> Iterator[CorpusItem]:
    for n in range(1, spec.max_exhaustive_size + 1):
        for k, lattice in enumerate(lattices_of_size(n)):
            yield CorpusItem("exhaustive", f"size{n}#{k}", lattice)
    for index in range(spec.random_count):
        size, seed = spec.random_parameters(index)
        yield CorpusItem("random", f"random(size={size},seed={seed})", random_lattice(size, seed))
    for index in range(spec.modular_count):
        size, seed = spec.random_parameters(index)
        yield CorpusItem("modular", f"modular(size={size},seed={seed})", random_modular_lattice(size, seed))
    for n in range(1, spec.divisor_limit + 1):
        yield CorpusItem("divisor", f"L{n}", divisor_lattice(n))
    for order in range(1, spec.group_order_limit + 1):
        for factors in factor_multisets(order):
            group = AbelianGroupSpec(factors=factors)
            yield CorpusItem("group", f"L({group.name})", subgroup_lattice(group))
