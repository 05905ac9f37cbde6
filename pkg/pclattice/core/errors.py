"""
Exception hierarchy shared by every pclattice module.
"""
from __future__ import annotations

from typing import Optional, Sequence, Tuple


class LatticeError(ValueError):
    """Base class for all lattice and group analysis errors."""


class InvalidLatticeInput(LatticeError):
    """Malformed lattice description (bad JSON, index out of range, ...)."""


class NotAPoset(LatticeError):
    """The cover relation contains a cycle."""

    def __init__(self, cycle: Sequence[Tuple[int, int]]):
        self.cycle = list(cycle)
        path = " -> ".join(str(edge[0]) for edge in self.cycle)
        if self.cycle:
            path += f" -> {self.cycle[-1][1]}"
        super().__init__(f"NotAPoset: cover relation has a cycle {path}")


class NotALattice(LatticeError):
    """Some pair has no unique greatest lower or least upper bound."""

    def __init__(self, pair: Tuple[int, int], bound: str):
        self.pair = pair
        self.bound = bound
        super().__init__(
            f"NotALattice: elements {pair[0]} and {pair[1]} have no unique {bound}"
        )


class NoBoundedStructure(LatticeError):
    """No unique least or greatest element."""

    def __init__(self, minimal: Sequence[int], maximal: Sequence[int]):
        self.minimal = list(minimal)
        self.maximal = list(maximal)
        super().__init__(
            f"NoBoundedStructure: minimal elements {self.minimal}, "
            f"maximal elements {self.maximal}"
        )


class NotClosed(LatticeError):
    """A subset is not closed under meet or join."""

    def __init__(self, pair: Tuple[int, int], operation: str, result: int):
        self.pair = pair
        self.operation = operation
        self.result = result
        super().__init__(
            f"NotClosed: {operation}({pair[0]}, {pair[1]}) = {result} is outside the subset"
        )


class NotModular(LatticeError):
    """An operation that presupposes modularity got a non-modular lattice."""

    def __init__(self, violation: Optional[Tuple[int, int, int]] = None):
        self.violation = violation
        detail = f" (violating triple {violation})" if violation else ""
        super().__init__(f"NotModular: lattice is not modular{detail}")


class ClassificationFailed(LatticeError):
    """A witness generated neither M3 nor M23, or a constructed object failed re-verification."""

    def __init__(self, witness: Tuple[int, int, int], generated: Sequence[int], reason: str = ""):
        self.witness = witness
        self.generated = sorted(generated)
        super().__init__(
            f"ClassificationFailed: witness {witness} generates {self.generated}"
            + (f": {reason}" if reason else "")
        )


class OutOfRange(LatticeError):
    """A size, seed or parameter is outside its guard bounds."""


class UnknownFixture(LatticeError):
    """No fixture with the requested name."""


class OrderTooLarge(LatticeError):
    """Group order exceeds the configured bound."""

    def __init__(self, order: int, max_order: int):
        self.order = order
        self.max_order = max_order
        super().__init__(f"OrderTooLarge: group order {order} exceeds bound {max_order}")
