"""
Hasse diagrams as Graphviz DOT text.
"""
from __future__ import annotations

import json

from ..core.lattice import FiniteLattice


def _quoted(text: str) -> str:
    return json.dumps(text, ensure_ascii=False)


def hasse_dot(lattice: FiniteLattice, name: str = "lattice") -> str:
    """One node per element, one edge per cover pair, drawn bottom to top."""
    lines = [f"digraph {_quoted(name)} {{", "    rankdir = BT;", "    node [shape=plaintext];"]
    for x in lattice.elements():
        lines.append(f"    n{x} [label={_quoted(lattice.label(x))}];")
    for lower, upper in lattice.covers:
        lines.append(f"    n{lower} -> n{upper};")
    lines.append("}")
    return "\n".join(lines) + "\n"
