"""Cross-check the closed forms against Hochster's formula on a handful of specs.

Run with: python3 demos/oracle_crosscheck.py
"""

from __future__ import annotations

import time

from chordal_betti.complex_core import validate_spec
from chordal_betti.oracle import FieldChoice, verify_all

cases = [
    ((3, 5, 6), (2, 3)),
    ((4, 4), (0,)),
    ((5, 3, 2), (2, 1)),
    ((8, 8), (7,)),
]

for n, r in cases:
    spec = validate_spec(n, r)
    for field in (FieldChoice(0), FieldChoice(2)):
        start = time.perf_counter()
        report = verify_all(spec, field)
        bad = report.failures()
        status = "all pass" if not bad else f"{len(bad)} failures"
        print(f"{str(spec):<22} {str(field):<3} {len(report.checks):3d} checks  {status}  "
              f"{time.perf_counter() - start:.2f}s")
        for c in bad:
            print(f"    {c.name}: {c.detail}")
