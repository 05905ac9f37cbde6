"""
Divisor lattices: divisors of n under divisibility, meet = gcd, join = lcm.
"""
from __future__ import annotations

from sympy import divisors, primefactors

from ..core.errors import OutOfRange
from ..core.lattice import CoverList, FiniteLattice, build_from_covers

MAX_DIVISOR_N = 10**6


def divisor_cover_list(n: int) -> CoverList:
    if not 1 <= n <= MAX_DIVISOR_N:
        raise OutOfRange(f"divisor lattice needs 1 <= n <= {MAX_DIVISOR_N}, got {n}")
    values = divisors(n)
    index = {d: i for i, d in enumerate(values)}
    primes = primefactors(n)
    covers = [(index[d], index[d * p]) for d in values for p in primes if n % (d * p) == 0]
    return CoverList(size=len(values), covers=sorted(covers), labels=[str(d) for d in values])


def divisor_lattice(n: int) -> FiniteLattice:
    """Elements are the divisors of n in increasing order, labelled by value."""
    return build_from_covers(divisor_cover_list(n))
