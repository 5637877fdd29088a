"""Text and JSON rendering of Betti tables with an attached invariants block."""

from __future__ import annotations

import json
from typing import Any, Mapping

from .algebra import BettiTable


def betti_rows(table: BettiTable) -> list[list[str]]:
    """Header, total and one row per shift 0..regularity; '.' marks a zero."""
    cols = range(table.proj_dim + 1)
    rows = [[""] + [str(i) for i in cols], ["total:"] + [str(t) for t in table.totals()]]
    for shift in range(table.regularity + 1):
        row = table.row(shift)
        rows.append([f"{shift}:"] + [str(row[i]) if i in row else "." for i in cols])
    return rows


def render_betti_table(table: BettiTable) -> str:
    rows = betti_rows(table)
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    lines = []
    for r in rows:
        cells = [r[0].rjust(widths[0])] + [cell.rjust(w) for cell, w in zip(r[1:], widths[1:])]
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines)


def render_invariants(invariants: Mapping[str, Any]) -> str:
    width = max((len(k) for k in invariants), default=0)
    out = []
    for key, value in invariants.items():
        if isinstance(value, bool):
            text = "yes" if value else "no"
        elif isinstance(value, (list, tuple)):
            text = ", ".join(str(v) for v in value) or "-"
        else:
            text = str(value)
        out.append(f"{key:<{width}}  {text}")
    return "\n".join(out)


def render_text(title: str, table: BettiTable, invariants: Mapping[str, Any]) -> str:
    return f"{title}\n\n{render_betti_table(table)}\n\n{render_invariants(invariants)}\n"


def to_json(table: BettiTable, invariants: Mapping[str, Any]) -> str:
    payload = {
        "n_vars": table.n_vars,
        "entries": [list(t) for t in table.triples()],
        "invariants": dict(invariants),
    }
    return json.dumps(payload, sort_keys=True) + "\n"


def from_json(text: str) -> tuple[BettiTable, dict[str, Any]]:
    payload = json.loads(text)
    table = BettiTable.from_triples(payload["n_vars"], payload["entries"])
    return table, payload["invariants"]
