"""Hypothesis strategies shared by the test modules."""

from __future__ import annotations

from hypothesis import assume
from hypothesis import strategies as st

from chordal_betti.complex_core import validate_spec


@st.composite
def specs(draw, max_e=3, min_n=1, max_n=5, max_vertices=10, min_e=1):
    """Feasible gluing specs; nonincreasing clique orders keep every intersection feasible."""
    e = draw(st.integers(min_e, max_e))
    n = sorted((draw(st.integers(min_n, max_n)) for _ in range(e)), reverse=True)
    r = [draw(st.integers(0, n[m + 1] - 1)) for m in range(e - 1)]
    while sum(n) - sum(r) > max_vertices:
        n, r = n[:-1], r[:-1]
    assume(len(n) >= min_e)
    return validate_spec(n, r)
