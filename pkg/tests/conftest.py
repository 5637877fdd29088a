from __future__ import annotations

from pathlib import Path

import pytest

from chordal_betti.complex_core import GluingSpec, validate_spec

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def example() -> GluingSpec:
    """Three cliques of orders 3, 5, 6 glued along 2 and 3 vertices (N = 9)."""
    return validate_spec((3, 5, 6), (2, 3))


@pytest.fixture
def golden():
    def read(name: str) -> str:
        return (GOLDEN / name).read_text()

    return read
