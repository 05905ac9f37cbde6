from __future__ import annotations

import json
from pathlib import Path

import pytest

from pclattice.core.lattice import CoverList, FiniteLattice, build_from_covers
from pclattice.generators.fixtures import chain, pattern_lattice


@pytest.fixture
def m3() -> FiniteLattice:
    return pattern_lattice("M3")


@pytest.fixture
def m23() -> FiniteLattice:
    return pattern_lattice("M23")


@pytest.fixture
def n5() -> FiniteLattice:
    return pattern_lattice("N5")


@pytest.fixture
def chain4() -> FiniteLattice:
    return chain(4)


@pytest.fixture
def product_m3_2() -> FiniteLattice:
    """M3 x 2: modular, 10 elements, not pseudocomplemented."""
    index = {(x, y): 2 * x + y for x in range(5) for y in range(2)}
    m3 = pattern_lattice("M3")
    covers = [(index[(a, y)], index[(b, y)]) for a, b in m3.covers for y in range(2)]
    covers += [(index[(x, 0)], index[(x, 1)]) for x in range(5)]
    return build_from_covers(CoverList(size=10, covers=covers))


@pytest.fixture
def lattice_file(tmp_path):
    """Write a cover-list document and return its path."""

    def write(document, name: str = "lattice.json") -> Path:
        path = tmp_path / name
        text = document if isinstance(document, str) else json.dumps(document)
        path.write_text(text, encoding="utf-8")
        return path

    return write
