"""
Reading and writing the JSON lattice format.

    {"size": 5, "covers": [[0, 1], [0, 2], ...], "labels": ["0", "p", ...]}
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from pydantic import ValidationError

from .errors import InvalidLatticeInput
from .lattice import CoverList, FiniteLattice, build_from_covers


def parse_cover_list(text: str) -> CoverList:
    try:
        return CoverList.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first["loc"]) or "document"
        raise InvalidLatticeInput(f"invalid lattice file at {where}: {first['msg']}") from e


def load_lattice(path: Union[str, Path]) -> FiniteLattice:
    """Parse and validate a lattice file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidLatticeInput(f"cannot read {path}: {e}") from e
    except UnicodeDecodeError as e:
        raise InvalidLatticeInput(f"not UTF-8 text ({e.reason} at byte {e.start})") from e
    return build_from_covers(parse_cover_list(text))


def dump_lattice(lattice: FiniteLattice) -> str:
    payload = lattice.to_cover_list().model_dump(exclude_none=True)
    payload["covers"] = [list(pair) for pair in payload["covers"]]
    return json.dumps(payload, indent=2)


def save_lattice(lattice: FiniteLattice, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_lattice(lattice), encoding="utf-8")
    return path
