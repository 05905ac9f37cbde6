from __future__ import annotations

import pytest

from pclattice.analysis.properties import is_modular, is_pseudocomplemented, maximal_disjoint_matrix
from pclattice.core.errors import ClassificationFailed, NotModular
from pclattice.core.lattice import CoverList, build_from_covers
from pclattice.generators.divisors import divisor_lattice
from pclattice.generators.enumeration import enumerate_lattices
from pclattice.generators.fixtures import boolean, chain
from pclattice.generators.random_lattice import random_modular_lattice
from pclattice.groups.abelian import AbelianGroupSpec, subgroup_lattice
from pclattice.patterns.embedding import (
    PatternEmbedding,
    find_forbidden_zero_sublattice,
    find_zero_sublattice_embedding,
    verify_embedding,
)
from pclattice.patterns.theorem1 import theorem1_report
from pclattice.patterns.witness import (
    TernaryWitness,
    classify_witness,
    embedding_from_witness,
    find_ternary_witness,
    is_ternary_witness,
    witness_from_failure,
)


def test_m3_self_embedding(m3):
    embedding = find_zero_sublattice_embedding(m3, "M3")
    assert embedding == PatternEmbedding("M3", (0, 1, 2, 3, 4))
    assert verify_embedding(m3, embedding)


def test_m23_self_embedding_and_no_m3(m23):
    embedding = find_zero_sublattice_embedding(m23, "M23")
    assert embedding is not None
    assert verify_embedding(m23, embedding)
    assert find_zero_sublattice_embedding(m23, "M3") is None
    assert find_forbidden_zero_sublattice(m23).pattern_name == "M23"


def test_unanchored_m3_above_bottom(m3):
    # M3 sitting on top of a two-element chain: a copy exists but not a 0-sublattice
    shifted = build_from_covers(CoverList(size=6, covers=[(0, 1)] + [(a + 1, b + 1) for a, b in m3.covers]))
    assert find_zero_sublattice_embedding(shifted, "M3", anchor_bottom=True) is None
    loose = find_zero_sublattice_embedding(shifted, "M3", anchor_bottom=False)
    assert loose.mapping == (1, 2, 3, 4, 5)
    assert verify_embedding(shifted, loose, anchor_bottom=False)
    assert not verify_embedding(shifted, loose, anchor_bottom=True)


def test_verify_rejects_bad_maps(m3):
    assert not verify_embedding(m3, PatternEmbedding("M3", (0, 1, 1, 3, 4)))
    assert not verify_embedding(m3, PatternEmbedding("M3", (0, 1, 2, 4, 3)))


def test_n5_search_matches_modular_law(n5, m3, m23, product_m3_2):
    for lattice in (n5, m3, m23, product_m3_2, chain(4), boolean(3), divisor_lattice(60)):
        has_n5 = find_zero_sublattice_embedding(lattice, "N5", anchor_bottom=False) is not None
        assert has_n5 == (not is_modular(lattice).modular)


def test_n5_search_matches_modular_law_exhaustive():
    for lattice in enumerate_lattices(7):
        has_n5 = find_zero_sublattice_embedding(lattice, "N5", anchor_bottom=False) is not None
        assert has_n5 == (not is_modular(lattice).modular)


def test_m3_atoms_are_witness(m3):
    witness = find_ternary_witness(m3)
    assert witness == TernaryWitness(1, 2, 3)
    assert is_ternary_witness(m3, witness)
    classification = classify_witness(m3, witness)
    assert classification.pattern_name == "M3"
    assert classification.generated == frozenset(range(5))


def test_m23_witness_is_l_m_q(m23):
    witness = find_ternary_witness(m23)
    assert witness == TernaryWitness(3, 4, 2)
    assert [m23.label(x) for x in witness.as_tuple()] == ["l", "m", "q"]
    classification = classify_witness(m23, witness)
    assert classification.pattern_name == "M23"
    assert classification.sublattice.lattice.size == 7


def test_no_witness_in_chains_and_divisor_lattices():
    assert find_ternary_witness(chain(5)) is None
    for n in (1, 12, 360, 5040):
        assert find_ternary_witness(divisor_lattice(n)) is None


def test_witness_search_is_deterministic(product_m3_2):
    first = find_ternary_witness(product_m3_2)
    assert first is not None
    assert all(find_ternary_witness(product_m3_2) == first for _ in range(3))
    assert find_forbidden_zero_sublattice(product_m3_2) == find_forbidden_zero_sublattice(product_m3_2)


def test_classify_rejects_non_witness(m3):
    with pytest.raises(ClassificationFailed):
        classify_witness(m3, TernaryWitness(1, 1, 2))


def test_z2_x_z4_witness_generates_m23():
    lattice = subgroup_lattice(AbelianGroupSpec(factors=(2, 4)))
    witness = find_ternary_witness(lattice)
    assert witness is not None
    assert classify_witness(lattice, witness).pattern_name in ("M3", "M23")
    # a witness through the order-2 subgroup of the Z4 factor has a nontrivial a ^ b
    cases = set()
    for a in lattice.elements():
        for b in lattice.elements():
            for c in lattice.elements():
                candidate = TernaryWitness(a, b, c)
                if is_ternary_witness(lattice, candidate) and lattice.meet(a, b) != lattice.bottom:
                    cases.add(classify_witness(lattice, candidate).pattern_name)
    assert cases == {"M23"}


@pytest.mark.parametrize("fixture_name", ["m3", "m23", "product_m3_2"])
def test_embedding_from_witness(fixture_name, request):
    lattice = request.getfixturevalue(fixture_name)
    witness = find_ternary_witness(lattice)
    embedding = embedding_from_witness(lattice, witness)
    assert verify_embedding(lattice, embedding)
    expected = "M3" if lattice.meet(witness.a, witness.b) == lattice.bottom else "M23"
    assert embedding.pattern_name == expected


def test_witness_from_failure_m3(m3):
    failure = is_pseudocomplemented(m3).failure
    case, witness = witness_from_failure(m3, failure)
    assert case == "A1"
    assert is_ternary_witness(m3, witness)


def test_witness_from_failure_m23(m23):
    failure = is_pseudocomplemented(m23).failure
    case, witness = witness_from_failure(m23, failure)
    assert is_ternary_witness(m23, witness)
    assert case in {"A1", "A2", "B1", "B2", "C1", "C2"}


def test_witness_from_failure_needs_modular(n5):
    with pytest.raises(NotModular):
        witness_from_failure(n5, (1, 2, 3))


def test_witness_from_every_failure_in_small_modular_lattices():
    for lattice in enumerate_lattices(7):
        if not is_modular(lattice).modular:
            continue
        maximal = maximal_disjoint_matrix(lattice)
        for c in lattice.elements():
            row = [int(x) for x in maximal[c].nonzero()[0]]
            for i, a in enumerate(row):
                for b in row[i + 1:]:
                    _, witness = witness_from_failure(lattice, (c, a, b))
                    assert is_ternary_witness(lattice, witness)


def test_theorem1_m3(m3):
    report = theorem1_report(m3, subject="M3")
    assert report.in_hypothesis
    assert not report.holds("distributive")
    assert not report.holds("pseudocomplemented")
    assert not report.holds("no_zero_sublattice")
    assert not report.holds("no_ternary_witness")
    assert report.agreement
    assert report.classification == "M3"
    assert report.condition("no_zero_sublattice").detail == "M3"
    assert report.condition("no_ternary_witness").witness_labels == ["p", "q", "r"]


def test_theorem1_divisor_360():
    report = theorem1_report(divisor_lattice(360))
    assert report.holds("pseudocomplemented")
    assert report.holds("no_zero_sublattice")
    assert report.holds("no_ternary_witness")
    assert report.agreement and not report.violation


def test_theorem1_n5_outside_hypothesis(n5):
    report = theorem1_report(n5)
    assert not report.in_hypothesis
    assert report.holds("pseudocomplemented")
    assert report.classification is None
    assert not report.violation


def test_theorem1_chain_all_positive():
    report = theorem1_report(chain(2))
    assert all(result.holds for result in report.conditions)
    assert all(result.witness is None for result in report.conditions if result.key != "pseudocomplemented")


@pytest.mark.slow
def test_theorem1_exhaustive_up_to_seven():
    for lattice in enumerate_lattices(7):
        report = theorem1_report(lattice)
        if report.in_hypothesis:
            assert report.agreement
            embedding = find_forbidden_zero_sublattice(lattice)
            if embedding is not None:
                assert verify_embedding(lattice, embedding)


@pytest.mark.slow
def test_random_modular_witnesses_classify():
    found = 0
    for seed in range(1000):
        lattice = random_modular_lattice(2 + seed % 29, seed)
        assert is_modular(lattice).modular
        witness = find_ternary_witness(lattice)
        if witness is not None:
            found += 1
            assert classify_witness(lattice, witness).pattern_name in ("M3", "M23")
        assert theorem1_report(lattice).agreement
    assert found >= 100
