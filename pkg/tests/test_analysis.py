from __future__ import annotations

import math

import numpy as np
import pytest

from pclattice.analysis.properties import (
    check_proposition1,
    complements,
    has_modular_rank,
    is_complemented,
    is_distributive,
    is_modular,
    is_pseudocomplemented,
    maximal_disjoint,
    maximal_disjoint_matrix,
    modular_law_violation,
    pseudocomplement,
)
from pclattice.core.errors import NotModular
from pclattice.generators.divisors import divisor_lattice
from pclattice.generators.enumeration import enumerate_lattices
from pclattice.generators.fixtures import boolean, chain


def test_m3_modular_not_distributive(m3):
    assert is_modular(m3).modular
    verdict = is_distributive(m3)
    assert not verdict.distributive
    a, b, c = verdict.violation
    assert m3.meet(a, m3.join(b, c)) != m3.join(m3.meet(a, b), m3.meet(a, c))


def test_n5_not_modular(n5):
    verdict = is_modular(n5)
    assert not verdict.modular
    a, b, c = verdict.violation
    assert n5.leq(a, c)
    assert n5.join(a, n5.meet(b, c)) != n5.meet(n5.join(a, b), c)


def test_m3_pseudocomplement_fails(m3):
    verdict = is_pseudocomplemented(m3)
    assert not verdict.pseudocomplemented
    assert verdict.failure == (1, 2, 3)
    assert maximal_disjoint(m3, 1) == frozenset({2, 3})
    assert pseudocomplement(m3, 1) is None
    assert pseudocomplement(m3, 0) == 4


def test_m23_pseudocomplement_fails_at_q(m23):
    verdict = is_pseudocomplemented(m23)
    assert not verdict.pseudocomplemented
    # q is disjoint from p, l and m; the maximal ones are l and m
    assert maximal_disjoint(m23, 2) == frozenset({3, 4})


def test_n5_is_pseudocomplemented(n5):
    verdict = is_pseudocomplemented(n5)
    assert verdict.pseudocomplemented
    assert verdict.pc_map == (4, 2, 3, 2, 0)


@pytest.mark.parametrize("k", [1, 2, 5])
def test_chain_pseudocomplements(k):
    lattice = chain(k)
    verdict = is_pseudocomplemented(lattice)
    assert verdict.pseudocomplemented
    assert verdict.pc_map[lattice.bottom] == lattice.top
    assert all(verdict.pc_map[x] == lattice.bottom for x in lattice.elements() if x != lattice.bottom)


def test_boolean_pseudocomplement_is_complement():
    lattice = boolean(3)
    verdict = is_pseudocomplemented(lattice)
    assert verdict.pseudocomplemented
    for x in lattice.elements():
        assert complements(lattice, x) == frozenset({verdict.pc_map[x]})
    assert is_complemented(lattice) == (True, None)


@pytest.mark.parametrize("n", [12, 30, 360, 1024])
def test_divisor_pseudocomplement_is_largest_coprime_divisor(n):
    lattice = divisor_lattice(n)
    verdict = is_pseudocomplemented(lattice)
    assert verdict.pseudocomplemented
    for x in lattice.elements():
        d = int(lattice.label(x))
        expected = max(e for e in range(1, n + 1) if n % e == 0 and math.gcd(e, d) == 1)
        assert int(lattice.label(verdict.pc_map[x])) == expected


def test_complement_is_not_pseudocomplement(m3):
    # p has complements q and r but no pseudocomplement
    assert complements(m3, 1) == frozenset({2, 3})
    assert is_complemented(m3) == (True, None)
    assert is_complemented(chain(3)) == (False, 1)


def test_pseudocomplement_is_antitone():
    lattice = divisor_lattice(360)
    pc = is_pseudocomplemented(lattice).pc_map
    for a in lattice.elements():
        for b in lattice.elements():
            if lattice.leq(a, b):
                assert lattice.leq(pc[b], pc[a])


def test_proposition1_requires_modular(n5):
    with pytest.raises(NotModular):
        check_proposition1(n5)


def test_proposition1_on_fixtures(m3, m23, product_m3_2):
    for lattice in (m3, m23, product_m3_2, divisor_lattice(72), boolean(3)):
        assert check_proposition1(lattice).holds


def test_proposition1_on_small_modular_lattices():
    for lattice in enumerate_lattices(6):
        if is_modular(lattice).modular:
            assert check_proposition1(lattice).holds


def test_divisor_lattices_distributive():
    for n in (1, 2, 64, 210, 720):
        assert is_distributive(divisor_lattice(n)).distributive


def _greatest_disjoint(lattice, a):
    """Brute force: the x with a ^ x = 0 that lies above every other such element."""
    disjoint = [x for x in lattice.elements() if lattice.meet(a, x) == lattice.bottom]
    greatest = [x for x in disjoint if all(lattice.leq(y, x) for y in disjoint)]
    return greatest[0] if greatest else None


def _check_pseudocomplements(lattice):
    expected = [_greatest_disjoint(lattice, a) for a in lattice.elements()]
    verdict = is_pseudocomplemented(lattice)
    assert verdict.pseudocomplemented == all(x is not None for x in expected)
    if verdict.pseudocomplemented:
        assert list(verdict.pc_map) == expected
    maximal = maximal_disjoint_matrix(lattice)
    for a in lattice.elements():
        assert pseudocomplement(lattice, a) == expected[a]
        assert maximal_disjoint(lattice, a) == frozenset(np.flatnonzero(maximal[a]).tolist())
    return verdict


def _check_pc_laws(lattice, verdict):
    if is_distributive(lattice).distributive:
        assert verdict.pseudocomplemented
    if verdict.pseudocomplemented:
        pc = verdict.pc_map
        for a in lattice.elements():
            assert lattice.leq(a, pc[pc[a]])
            assert pc[pc[pc[a]]] == pc[a]


def test_modularity_tests_agree_on_fixtures(m3, m23, n5, product_m3_2):
    for lattice in (m3, m23, product_m3_2, boolean(3), chain(4), divisor_lattice(360)):
        assert has_modular_rank(lattice)
        assert modular_law_violation(lattice) is None
    assert not has_modular_rank(n5)
    assert modular_law_violation(n5) is not None
    assert is_modular(n5).violation == modular_law_violation(n5)


def test_modularity_tests_agree_up_to_six():
    for lattice in enumerate_lattices(6):
        assert has_modular_rank(lattice) == (modular_law_violation(lattice) is None)


def test_pseudocomplements_match_brute_force_up_to_six(m3, m23, product_m3_2):
    for lattice in [m3, m23, product_m3_2, *enumerate_lattices(6)]:
        _check_pc_laws(lattice, _check_pseudocomplements(lattice))


@pytest.mark.slow
def test_modularity_tests_agree_up_to_seven():
    for lattice in enumerate_lattices(7):
        assert has_modular_rank(lattice) == (modular_law_violation(lattice) is None)


@pytest.mark.slow
def test_proposition1_up_to_seven():
    checked = 0
    for lattice in enumerate_lattices(7):
        if is_modular(lattice).modular:
            assert check_proposition1(lattice).holds
            checked += 1
    assert checked > 0


@pytest.mark.slow
def test_pseudocomplements_match_brute_force_up_to_seven():
    for lattice in enumerate_lattices(7):
        _check_pc_laws(lattice, _check_pseudocomplements(lattice))
