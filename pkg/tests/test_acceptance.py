"""One test per acceptance criterion; each prints a single PASS/FAIL line.

The oracle tables for the criterion-2 family are computed once per field and shared by
criteria 2, 3, 4 and 6.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import pytest

import example_values as pv
from chordal_betti import closed_form as cf
from chordal_betti import dual_closed_form as dcf
from chordal_betti import identities as ids
from chordal_betti import oracle
from chordal_betti.algebra import BettiTable, IntPolynomial
from chordal_betti.complex_core import (
    FacetComplex,
    GluingSpec,
    alexander_dual,
    enumerate_specs,
    face_masks,
    realize,
    skeleton,
    validate_spec,
)
from chordal_betti.dual_closed_form import Monomial
from chordal_betti.oracle import FieldChoice

FIELDS = {"QQ": FieldChoice(0), "F2": FieldChoice(2), "F3": FieldChoice(3)}


@dataclass
class SpecTables:
    spec: GluingSpec
    primal: dict[int, BettiTable]
    dual: dict[int, BettiTable]


def report(capsys, number: int, title: str, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\ncriterion {number} ({title}): {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture(scope="module")
def family() -> list[GluingSpec]:
    specs = enumerate_specs(3, range(2, 6), 10)
    assert len(specs) == 524
    return specs


@pytest.fixture(scope="module")
def oracle_tables(family):
    cache: dict[str, list[SpecTables]] = {}

    def get(name: str) -> list[SpecTables]:
        if name not in cache:
            field = FIELDS[name]
            out = []
            for spec in family:
                cx = realize(spec)
                primal = oracle.hochster_betti_skeletons(cx, range(-1, cx.dim + 1), field)
                dual = {}
                if spec.e >= 2:
                    dcx = alexander_dual(cx)
                    dual = oracle.hochster_betti_skeletons(dcx, range(-1, dcx.dim + 1), field)
                out.append(SpecTables(spec, primal, dual))
            cache[name] = out
        return cache[name]

    return get


def test_criterion_1_golden_example(capsys):
    start = time.perf_counter()
    spec = validate_spec((3, 5, 6), (2, 3))
    checks = {
        "f-vector": cf.f_vector(spec).entries == pv.F_VECTOR,
        "independence": cf.independence_polynomial(spec).coefficients == pv.INDEPENDENCE,
        "dual": dcf.dual_betti_table(spec) == pv.table(pv.DUAL)
        and dcf.dual_betti_table(spec).totals() == pv.DUAL_TOTALS,
    }
    for k in range(1, 6):
        checks[f"primal k={k}"] = cf.skeleton_betti_table(spec, k) == pv.table(pv.PRIMAL[k])
    for k in (1, 2, 4):
        checks[f"dual k={k}"] = dcf.dual_skeleton_betti_table(spec, k) == pv.table(
            pv.DUAL_SKELETON[k]
        )
    res = dcf.dual_resolution(spec)
    checks["d1"] = res.d1 == tuple(Monomial.from_vertices(9, v) for v in pv.D1)
    checks["d2"] = res.d2 == tuple(
        tuple(None if e is None else Monomial.from_vertices(9, e[1], e[0]) for e in row)
        for row in pv.D2
    )
    for k, expected in pv.PRIMAL_SUMMARY.items():
        inv = cf.skeleton_invariants(spec, k)
        checks[f"summary primal k={k}"] = (inv.multiplicity, inv.h_degree, inv.euler) == expected
    for k, expected in pv.DUAL_SUMMARY.items():
        prof = dcf.dual_skeleton_profile(spec, k)
        checks[f"summary dual k={k}"] = (prof.multiplicity, prof.h_degree, prof.euler) == expected
    seconds = time.perf_counter() - start
    bad = [name for name, ok in checks.items() if not ok]
    ok = not bad and seconds < 1
    report(capsys, 1, "golden example", ok, f"{len(checks) - len(bad)}/{len(checks)} items, {seconds:.3f}s {bad}")
    assert ok


def _closed_tables(spec: GluingSpec) -> SpecTables:
    cx_dim = spec.dim
    primal = {k: cf.skeleton_betti_table(spec, k) for k in range(-1, cx_dim + 1)}
    dual = {}
    if spec.e >= 2:
        N = spec.n_vertices
        dual = {k: dcf.dual_skeleton_betti_table(spec, k) for k in range(-1, N - 2)}
    return SpecTables(spec, primal, dual)


def _compare(reference: list[SpecTables], other: list[SpecTables]) -> tuple[int, list[str]]:
    compared, bad = 0, []
    for a, b in zip(reference, other):
        for side in ("primal", "dual"):
            ta, tb = getattr(a, side), getattr(b, side)
            if ta.keys() != tb.keys():
                bad.append(f"{a.spec} {side}: skeleton ranges differ")
                continue
            for k in ta:
                compared += 1
                diff = ta[k].first_difference(tb[k])
                if diff is not None:
                    bad.append(f"{a.spec} {side} k={k}: {diff}")
    return compared, bad


def test_criterion_2_oracle_equivalence(capsys, family, oracle_tables):
    start = time.perf_counter()
    closed = [_closed_tables(spec) for spec in family]
    compared, bad = _compare(closed, oracle_tables("QQ"))
    seconds = time.perf_counter() - start
    report(capsys, 2, "oracle equivalence over QQ", not bad,
           f"{len(family)} specs, {compared} tables, {len(bad)} mismatches, {seconds:.1f}s")
    assert not bad, bad[:5]


@pytest.mark.parametrize("name", ["F2", "F3"])
def test_criterion_3_field_independence(capsys, oracle_tables, name):
    start = time.perf_counter()
    compared, bad = _compare(oracle_tables("QQ"), oracle_tables(name))
    seconds = time.perf_counter() - start
    report(capsys, 3, f"field independence {name} vs QQ", not bad,
           f"{compared} tables, {len(bad)} mismatches, {seconds:.1f}s")
    assert not bad, bad[:5]


def test_criterion_4_invariant_extraction(capsys, oracle_tables):
    bad: list[str] = []
    checked = boundary_rmin = boundary_bound = 0
    for entry in oracle_tables("QQ"):
        spec = entry.spec
        N = spec.n_vertices
        for k, table in entry.primal.items():
            got = oracle.invariants_from_betti(table, N)
            inv = cf.skeleton_invariants(spec, k)
            checked += 1
            boundary_rmin += k == spec.r_min
            if (got.regularity, got.proj_dim, got.depth) != (inv.regularity, inv.proj_dim, inv.depth):
                bad.append(f"{spec} k={k}: oracle {got}, closed form {inv}")
        if spec.e < 2:
            continue
        full = oracle.invariants_from_betti(entry.dual[N - 3], N)
        prof = dcf.dual_profile(spec)
        checked += 1
        if (full.regularity, full.proj_dim, full.depth) != (prof.regularity, 2, prof.krull_dim):
            bad.append(f"{spec} dual: oracle {full}, closed form {prof}")
        for k, table in entry.dual.items():
            got = oracle.invariants_from_betti(table, N)
            sk = dcf.dual_skeleton_profile(spec, k)
            checked += 1
            # ideal regularity is one more than the ring's
            if (got.regularity + 1, got.proj_dim, got.depth) != (sk.ideal_regularity, sk.proj_dim, sk.depth):
                bad.append(f"{spec} dual k={k}: oracle {got}, closed form {sk}")
            lo = N - spec.r_min - 3
            if lo <= k < N - 3:
                rb = dcf.regularity_bound_check(spec, k)
                # the skeleton ideal keeps the old generators and adds the (k+1)-faces
                gen_degree = max(j for (i, j) in table.entries if i == 1)
                ok = (
                    rb.ideal_reg_full == full.regularity + 1
                    and rb.skeleton_gen_degree == gen_degree == got.regularity + 1
                    and rb.bound_holds == (full.regularity + 1 <= gen_degree)
                    and rb.bound_holds
                    and rb.equality == (full.regularity + 1 == gen_degree)
                )
                boundary_bound += k == lo
                checked += 1
                if not ok:
                    bad.append(f"{spec} regularity bound k={k}: {rb}")
    report(capsys, 4, "invariant extraction", not bad,
           f"{checked} checks, {boundary_rmin} at k=r_min, {boundary_bound} at k=N-r_min-3, {len(bad)} mismatches")
    assert not bad, bad[:5]


def test_criterion_5_identity_sweep(capsys):
    tallies = ids.run_sweep(bound=12, max_e=4)
    bad = [t for t in tallies if not t.passed]
    total = sum(t.checked for t in tallies)
    ok = not bad and len(tallies) == 8
    report(capsys, 5, "identity sweep", ok,
           f"{len(tallies)} families, {total} cases, {sum(len(t.counterexamples) for t in bad)} counterexamples")
    assert ok, [(t.kind, t.counterexamples[:3]) for t in bad]


def _numerator(cx: FacetComplex) -> IntPolynomial:
    return oracle.hilbert_from_faces(cx)


def test_criterion_6_structural_checks(capsys, family, oracle_tables):
    bad: list[str] = []
    resolutions = numerators = thresholds = 0
    tables = {entry.spec: entry for entry in oracle_tables("QQ")}
    for spec in family:
        cx = realize(spec)
        N = spec.n_vertices
        entry = tables[spec]
        for k, table in entry.primal.items():
            numerators += 1
            if table.numerator() != _numerator(skeleton(cx, k)):
                bad.append(f"{spec} primal k={k}: numerator")
        if spec.e < 2:
            continue
        res = dcf.dual_resolution(spec)
        resolutions += 1
        if not (res.composition_is_zero() and res.is_homogeneous()):
            bad.append(f"{spec}: d1 d2 != 0")
        dcx = alexander_dual(cx)
        for k, table in entry.dual.items():
            numerators += 1
            if table.numerator() != _numerator(skeleton(dcx, k)):
                bad.append(f"{spec} dual k={k}: numerator")
        simplex = FacetComplex.simplex(N)
        for k in range(-1, N - spec.n_max - 1):
            thresholds += 1
            if face_masks(skeleton(dcx, k)) != face_masks(skeleton(simplex, k)):
                bad.append(f"{spec} threshold k={k}: face sets differ")
            if not dcf.dual_skeleton_profile(spec, k).simplex_equal:
                bad.append(f"{spec} threshold k={k}: closed form disagrees")
    report(capsys, 6, "structural checks", not bad,
           f"{resolutions} resolutions, {numerators} numerators, {thresholds} threshold skeletons, {len(bad)} failures")
    assert not bad, bad[:5]
