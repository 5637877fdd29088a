"""Brute-force Stanley-Reisner oracle.

Reduced homology comes from exact ranks of simplicial boundary matrices, and graded
Betti numbers from Hochster's formula

    beta_{i,j} = sum over |W| = j of dim H~_{j-i-1}(cx restricted to W).

Nothing in the engine touches the closed formulas. :func:`verify_all` at the bottom
is the harness that compares the two routes.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from .algebra import BettiTable, FVector, IntPolynomial, sign
from .complex_core import (
    FacetComplex,
    GluingSpec,
    alexander_dual,
    brute_f_vector,
    check_cap,
    clique_sets,
    minimal_nonfaces,
    realize,
    skeleton,
)

# int64 fraction-free elimination stays exact while entries stay below this bound
_SAFE = 1 << 30


@dataclass(frozen=True)
class FieldChoice:
    """Coefficient field: characteristic 0 means the rationals."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        p = self.characteristic
        if p != 0 and (p < 2 or p > 257 or any(p % d == 0 for d in range(2, int(p**0.5) + 1))):
            raise ValueError(f"unsupported field characteristic {p}; need 0 or a prime <= 257")

    @classmethod
    def rationals(cls) -> FieldChoice:
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> FieldChoice:
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> FieldChoice:
        """'q' for the rationals, 'f2', 'f3', ... for prime fields."""
        text = text.strip().lower()
        if text in ("q", "qq", "rationals"):
            return cls(0)
        if text.startswith("f") and text[1:].isdigit():
            return cls(int(text[1:]))
        raise ValueError(f"unknown field {text!r}")

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"F{self.characteristic}"


QQ = FieldChoice(0)


@dataclass(frozen=True)
class HomologyProfile:
    """dims[i] = dim H~_i for 0 <= i <= dim; ``empty_class`` = dim H~_{-1}."""

    dims: tuple[int, ...]
    empty_class: int = 0

    @property
    def reduced_euler(self) -> int:
        return -self.empty_class + sum(sign(i) * d for i, d in enumerate(self.dims))

    def is_acyclic(self) -> bool:
        return self.empty_class == 0 and not any(self.dims)


# ---------------------------------------------------------------- exact ranks


def _rank_mod_p(M: np.ndarray, p: int) -> int:
    M = M % p
    rows, cols = M.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.flatnonzero(M[rank:, c])
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            M[[rank, piv], c:] = M[[piv, rank], c:]
        inv = pow(int(M[rank, c]), p - 2, p)
        M[rank, c:] = (M[rank, c:] * inv) % p
        below = rank + 1 + np.flatnonzero(M[rank + 1 :, c])
        if below.size:
            M[below, c:] = (M[below, c:] - np.outer(M[below, c], M[rank, c:])) % p
        rank += 1
    return rank


def _rank_python_ints(rows: list[list[int]]) -> int:
    """Fraction-free elimination on Python integers (no size limit)."""
    from math import gcd

    rows = [r[:] for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivots = [idx for idx in range(rank, len(rows)) if rows[idx][c]]
        if not pivots:
            continue
        best = min(pivots, key=lambda idx: abs(rows[idx][c]))
        rows[rank], rows[best] = rows[best], rows[rank]
        prow = rows[rank]
        a = prow[c]
        for idx in range(rank + 1, len(rows)):
            b = rows[idx][c]
            if b:
                new = [a * x - b * y for x, y in zip(rows[idx], prow)]
                g = 0
                for x in new:
                    g = gcd(g, x)
                rows[idx] = [x // g for x in new] if g > 1 else new
        rank += 1
    return rank


def _rank_rational(M: np.ndarray) -> int:
    """Rank over QQ by fraction-free integer elimination with row-content removal."""
    M = M.astype(np.int64, copy=True)
    rows, cols = M.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        col = M[rank:, c]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        piv = rank + nz[np.argmin(np.abs(col[nz]))]
        if piv != rank:
            M[[rank, piv], c:] = M[[piv, rank], c:]
        below = rank + 1 + np.flatnonzero(M[rank + 1 :, c])
        if below.size:
            block = M[below, c:]
            prow = M[rank, c:]
            if max(int(np.abs(block).max()), int(np.abs(prow).max())) >= _SAFE:
                rest = M[rank:, c:].tolist()
                return rank + _rank_python_ints(rest)
            block = M[rank, c] * block - np.outer(block[:, 0], prow)
            g = np.gcd.reduce(block, axis=1)
            g[g == 0] = 1
            M[below, c:] = block // g[:, None]
        rank += 1
    return rank


def matrix_rank(M: np.ndarray, field: FieldChoice = QQ) -> int:
    """Exact rank of an integer matrix over ``field``."""
    if M.size == 0:
        return 0
    if M.shape[1] > M.shape[0]:
        M = M.T
    if field.characteristic:
        return _rank_mod_p(M.astype(np.int64), field.characteristic)
    return _rank_rational(M)


# ------------------------------------------------------- face-set machinery


class _FaceTable:
    """Face indicator over all 2^N vertex subsets of a complex, plus subset transforms."""

    def __init__(self, cx: FacetComplex):
        N = cx.n_vertices
        self.N = N
        size = 1 << N
        is_face = np.zeros(size, dtype=bool)
        is_face[list(cx.facet_masks)] = True
        for b in range(N):
            view = is_face.reshape(-1, 2, 1 << b)
            view[:, 0, :] |= view[:, 1, :]
        self.is_face = is_face
        masks = np.arange(size, dtype=np.int64)
        pop = np.zeros(size, dtype=np.int64)
        for b in range(N):
            pop += (masks >> b) & 1
        self.popcount = pop
        self.faces_by_size = [np.flatnonzero(is_face & (pop == s)) for s in range(N + 1)]

    def induced_counts(self) -> np.ndarray:
        """counts[s, W] = number of faces with s vertices contained in W."""
        N, size = self.N, 1 << self.N
        counts = np.zeros((N + 1, size), dtype=np.int64)
        counts[self.popcount[self.is_face], np.flatnonzero(self.is_face)] = 1
        for b in range(N):
            view = counts.reshape(N + 1, -1, 2, 1 << b)
            view[:, :, 1, :] += view[:, :, 0, :]
        return counts

    def cone_mask(self) -> np.ndarray:
        """cone[W]: some vertex of W lies in every facet of the restriction to W."""
        N, size = self.N, 1 << self.N
        masks = np.arange(size, dtype=np.int64)
        cone = np.zeros(size, dtype=bool)
        for v in range(N):
            bit = 1 << v
            without = (masks & bit) == 0
            bad = np.zeros(size, dtype=bool)
            bad[without] = self.is_face[without] & ~self.is_face[masks[without] | bit]
            for b in range(N):
                view = bad.reshape(-1, 2, 1 << b)
                view[:, 1, :] |= view[:, 0, :]
            cone |= ~without & ~bad
        return cone

    def boundary(self, W: int, s: int) -> np.ndarray:
        """Boundary matrix from faces of size s inside W to faces of size s-1 inside W."""
        tops = self.faces_by_size[s]
        tops = tops[(tops & ~W) == 0]
        bottoms = self.faces_by_size[s - 1]
        bottoms = bottoms[(bottoms & ~W) == 0]
        M = np.zeros((len(bottoms), len(tops)), dtype=np.int64)
        if not len(tops) or not len(bottoms):
            return M
        index = {int(m): i for i, m in enumerate(bottoms)}
        cols = np.arange(len(tops))
        for b in range(self.N):
            bit = 1 << b
            has = (tops & bit) != 0
            if not has.any():
                continue
            sub = tops[has] ^ bit
            rows = np.fromiter((index[int(m)] for m in sub), dtype=np.int64, count=len(sub))
            signs = 1 - 2 * (self.popcount[tops[has] & (bit - 1)] & 1)
            M[rows, cols[has]] = signs
        return M


def _ranks_by_elimination(table: _FaceTable, W: int, counts: list[int], field: FieldChoice):
    """ranks[d] = rank of the boundary from d-faces to (d-1)-faces, d = 0..top."""
    top = max(s for s, c in enumerate(counts) if c) - 1
    ranks = [0] * (top + 2)
    if top >= 0:
        ranks[0] = 1  # augmentation onto the empty face
    for d in range(1, top + 1):
        ranks[d] = matrix_rank(table.boundary(W, d + 1), field)
    return ranks


def _ranks_of_cone(counts: list[int]):
    """A cone is acyclic, so ranks follow from the face counts alone."""
    top = max(s for s, c in enumerate(counts) if c) - 1
    ranks = [0] * (top + 2)
    for d in range(top, -1, -1):
        ranks[d] = counts[d + 1] - ranks[d + 1]
    return ranks


def _skeleton_homology(counts: list[int], ranks: list[int], k: int) -> dict[int, int]:
    """Nonzero reduced homology dims of the k-skeleton, keyed by degree (-1..k)."""
    out = {}
    top = len(ranks) - 2
    for d in range(-1, min(k, top) + 1):
        dim_c = counts[d + 1]
        rank_out = ranks[d] if d >= 0 else 0
        rank_in = ranks[d + 1] if d < k and d + 1 <= top else 0
        h = dim_c - rank_out - rank_in
        if h:
            out[d] = h
    return out


# ---------------------------------------------------------------- public ops


def reduced_homology(cx: FacetComplex, field: FieldChoice = QQ, cap: int | None = None) -> HomologyProfile:
    """Reduced homology by exact rank computation of every boundary matrix."""
    check_cap(cx.n_vertices, cap)
    table = _FaceTable(cx)
    W = (1 << cx.n_vertices) - 1
    counts = [len(table.faces_by_size[s]) for s in range(cx.n_vertices + 1)]
    ranks = _ranks_by_elimination(table, W, counts, field)
    homology = _skeleton_homology(counts, ranks, cx.dim)
    return HomologyProfile(
        tuple(homology.get(d, 0) for d in range(cx.dim + 1)), homology.get(-1, 0)
    )


def hochster_betti_skeletons(
    cx: FacetComplex,
    ks: Iterable[int],
    field: FieldChoice = QQ,
    cap: int | None = None,
    use_cones: bool = True,
) -> dict[int, BettiTable]:
    """Betti tables of several skeletons of ``cx`` from one pass over vertex subsets.

    The k-skeleton of a restriction has the same boundary maps in degrees <= k, so the
    ranks computed for a subset W serve every requested k.
    """
    check_cap(cx.n_vertices, cap)
    ks = sorted(set(ks))
    N = cx.n_vertices
    table = _FaceTable(cx)
    counts = table.induced_counts()
    cones = table.cone_mask() if use_cones else np.zeros(1 << N, dtype=bool)
    acc: dict[int, dict[tuple[int, int], int]] = {k: {} for k in ks}
    popcount = table.popcount
    for W in range(1 << N):
        j = int(popcount[W])
        cW = counts[:, W].tolist()
        if W == 0:
            for k in ks:
                acc[k][(0, 0)] = acc[k].get((0, 0), 0) + 1
            continue
        if not cW[0]:
            continue  # the void restriction never happens: the empty face is always there
        if cones[W]:
            ranks = _ranks_of_cone(cW)
        else:
            ranks = _ranks_by_elimination(table, W, cW, field)
        for k in ks:
            for d, h in _skeleton_homology(cW, ranks, k).items():
                key = (j - d - 1, j)
                acc[k][key] = acc[k].get(key, 0) + h
    return {k: BettiTable(N, acc[k]) for k in ks}


def hochster_betti(cx: FacetComplex, field: FieldChoice = QQ, cap: int | None = None) -> BettiTable:
    """Graded Betti table of the Stanley-Reisner ring via Hochster's formula."""
    return hochster_betti_skeletons(cx, [cx.dim], field, cap)[cx.dim]


@dataclass(frozen=True)
class OracleInvariants:
    proj_dim: int
    regularity: int
    depth: int


def invariants_from_betti(table: BettiTable, n_vertices: int) -> OracleInvariants:
    pdim = table.proj_dim
    return OracleInvariants(proj_dim=pdim, regularity=table.regularity, depth=n_vertices - pdim)


def pure_skeleton(cx: FacetComplex, i: int) -> FacetComplex:
    """Subcomplex generated by the i-dimensional faces of ``cx``."""
    faces = [f for f in cx.faces() if len(f) == i + 1]
    if not faces:
        raise ValueError(f"complex has no faces of dimension {i}")
    return FacetComplex.from_faces(cx.n_vertices, faces)


def is_cohen_macaulay(cx: FacetComplex, field: FieldChoice = QQ, cap: int | None = None) -> bool:
    """depth == Krull dimension, with depth read off the Hochster table."""
    table = hochster_betti(cx, field, cap)
    return cx.n_vertices - table.proj_dim == cx.dim + 1


def is_sequentially_cm(cx: FacetComplex, field: FieldChoice = QQ, cap: int | None = None) -> bool:
    """Duval's criterion: every pure i-skeleton is Cohen-Macaulay."""
    return all(is_cohen_macaulay(pure_skeleton(cx, i), field, cap) for i in range(cx.dim + 1))


def hilbert_from_faces(cx: FacetComplex, cap: int | None = None) -> IntPolynomial:
    """Hilbert numerator over (1-t)^N from the brute-force f-vector."""
    f = brute_f_vector(cx, cap)
    N = cx.n_vertices
    poly = IntPolynomial()
    for i, fi in enumerate(f.entries):
        poly = poly + IntPolynomial.monomial(i, fi) * IntPolynomial.one_minus_t_power(N - i)
    return poly


# ------------------------------------------------------------ verification


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0


@dataclass
class VerificationReport:
    spec: str
    field: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def render(self) -> str:
        lines = [f"verify {self.spec} over {self.field}"]
        width = max((len(c.name) for c in self.checks), default=0)
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"  {status}  {c.name:<{width}}  {c.seconds:7.3f}s"
            if c.detail:
                line += f"  {c.detail}"
            lines.append(line)
        total = len(self.checks)
        bad = len(self.failures())
        lines.append(f"{total - bad}/{total} checks passed")
        return "\n".join(lines)

    def to_json(self) -> str:
        payload = {
            "spec": self.spec,
            "field": self.field,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail, "seconds": round(c.seconds, 6)}
                for c in self.checks
            ],
        }
        return json.dumps(payload, sort_keys=True, indent=2)


def _table_detail(closed: BettiTable, brute: BettiTable) -> str:
    diff = closed.first_difference(brute)
    if diff is None:
        return ""
    i, j, a, b = diff
    return f"first mismatch at beta_{{{i},{j}}}: closed form {a}, oracle {b}"


def verify_all(
    spec: GluingSpec,
    field: FieldChoice = QQ,
    max_k: int | None = None,
    cap: int | None = None,
) -> VerificationReport:
    """Run every closed formula against its brute-force counterpart."""
    from . import closed_form as cf
    from . import dual_closed_form as dcf

    check_cap(spec.n_vertices, cap)
    report = VerificationReport(str(spec), str(field))
    N = spec.n_vertices

    def run(name: str, fn: Callable[[], tuple[bool, str]]) -> None:
        start = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, not a crashed report
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        report.checks.append(CheckResult(name, ok, detail, time.perf_counter() - start))

    def eq(a, b, what: str = "") -> tuple[bool, str]:
        return (a == b, "" if a == b else f"{what}closed form {a}, oracle {b}")

    cx = realize(spec)
    brute_f = brute_f_vector(cx, cap)
    top_k = spec.dim if max_k is None else min(max_k, spec.dim)
    primal_ks = list(range(-1, top_k + 1))

    run("f_vector", lambda: eq(cf.f_vector(spec), brute_f))
    run(
        "independence_polynomial",
        lambda: eq(cf.independence_polynomial(spec).coefficients, brute_f.entries),
    )
    run("hilbert_numerator", lambda: eq(cf.hilbert_numerator(spec), hilbert_from_faces(cx, cap)))
    run(
        "minimal_nonfaces_quadratic",
        lambda: eq(
            {len(s) for s in minimal_nonfaces(cx, cap)} <= {2}, True, "sizes of minimal non-faces: "
        ),
    )

    primal_tables = hochster_betti_skeletons(cx, primal_ks, field, cap)
    for k in primal_ks:
        brute = primal_tables[k]
        run(
            f"primal_betti[k={k}]",
            lambda k=k, brute=brute: (
                cf.skeleton_betti_table(spec, k) == brute,
                _table_detail(cf.skeleton_betti_table(spec, k), brute),
            ),
        )

        def invariants(k=k, brute=brute):
            inv = cf.skeleton_invariants(spec, k)
            got = invariants_from_betti(brute, N)
            sk = skeleton(cx, k)
            sk_f = brute_f_vector(sk, cap)
            closed = (inv.regularity, inv.proj_dim, inv.depth, inv.multiplicity, inv.h_degree)
            oracle = (
                got.regularity,
                got.proj_dim,
                got.depth,
                sk_f.entries[-1],
                sk_f.h_polynomial().degree,
            )
            return eq(closed, oracle, "(reg, pdim, depth, mult, deg h): ")

        run(f"primal_invariants[k={k}]", invariants)

        def euler(k=k):
            sk = skeleton(cx, k)
            hom = reduced_homology(sk, field, cap)
            closed = cf.euler_characteristic(spec, k)
            faces = brute_f_vector(sk, cap).reduced_euler()
            return eq((closed, closed), (hom.reduced_euler, faces), "(euler via homology, via faces): ")

        run(f"primal_euler[k={k}]", euler)
        run(
            f"primal_numerator[k={k}]",
            lambda k=k, brute=brute: eq(brute.numerator(), hilbert_from_faces(skeleton(cx, k), cap)),
        )

    if spec.e < 2:
        return report

    dual = alexander_dual(cx, cap)
    dual_f = brute_f_vector(dual, cap)
    run("dual_f_vector", lambda: eq(dcf.dual_f_vector(spec), dual_f))

    def dual_h():
        h, mult = dcf.dual_h_vector(spec)
        brute = hilbert_from_faces(dual, cap).divide_by_one_minus_t(2)
        return eq((h, mult), (brute, dual_f.entries[-1]), "(h, multiplicity): ")

    run("dual_h_vector", dual_h)

    dual_ks = list(range(-1, N - 2))
    if max_k is not None:
        dual_ks = [k for k in dual_ks if k <= max_k] + [N - 3]
    dual_tables = hochster_betti_skeletons(dual, dual_ks, field, cap)
    full = dual_tables[N - 3]
    run("dual_betti", lambda: (dcf.dual_betti_table(spec) == full, _table_detail(dcf.dual_betti_table(spec), full)))

    def profile():
        prof = dcf.dual_profile(spec)
        got = invariants_from_betti(full, N)
        hom = reduced_homology(dual, field, cap)
        spheres = hom.dims[N - 3]
        lower = sum(hom.dims[: N - 3]) + hom.empty_class
        closed = (prof.regularity, 2, N - 2, prof.cm_type, prof.sphere_count, 0, prof.multiplicity)
        oracle = (got.regularity, got.proj_dim, got.depth, full.totals()[-1], spheres, lower, dual_f.entries[-1])
        return eq(closed, oracle, "(reg, pdim, depth, type, spheres, lower homology, mult): ")

    run("dual_profile", profile)

    def resolution():
        res = dcf.dual_resolution(spec)
        ground = frozenset(range(1, N + 1))
        gens = sorted(tuple(sorted(ground - s)) for s in clique_sets(spec))
        nonfaces = sorted(tuple(sorted(s)) for s in minimal_nonfaces(dual, cap))
        ok = (
            res.composition_is_zero()
            and res.is_homogeneous()
            and res.columns_well_formed()
            and res.numerator() == full.numerator()
            and gens == nonfaces
        )
        return ok, "" if ok else "resolution structure check failed"

    run("dual_resolution", resolution)

    for k in dual_ks:
        brute = dual_tables[k]
        run(
            f"dual_skeleton_betti[k={k}]",
            lambda k=k, brute=brute: (
                dcf.dual_skeleton_betti_table(spec, k) == brute,
                _table_detail(dcf.dual_skeleton_betti_table(spec, k), brute),
            ),
        )

        def dual_skel(k=k, brute=brute):
            prof = dcf.dual_skeleton_profile(spec, k)
            sk = skeleton(dual, k)
            sk_f = brute_f_vector(sk, cap)
            hom = reduced_homology(sk, field, cap)
            got = invariants_from_betti(brute, N)
            top_dim = hom.dims[k] if 0 <= k < len(hom.dims) else hom.empty_class
            closed = (
                prof.proj_dim,
                prof.ideal_regularity,
                prof.multiplicity,
                prof.euler,
                prof.sphere_count,
                prof.cm_type,
                prof.h_degree,
                prof.depth == prof.krull_dim,
            )
            oracle = (
                got.proj_dim,
                got.regularity + 1,
                sk_f.f(k),
                hom.reduced_euler,
                top_dim,
                brute.totals()[-1],
                sk_f.h_polynomial().degree,
                got.depth == sk_f.dim + 1,
            )
            return eq(closed, oracle, "(pdim, reg I, mult, euler, spheres, type, deg h, CM): ")

        run(f"dual_skeleton_profile[k={k}]", dual_skel)

        if k <= N - spec.n_max - 2:
            def threshold(k=k):
                same = skeleton(dual, k).faces() == skeleton(FacetComplex.simplex(N), k).faces()
                return same, "" if same else "dual skeleton differs from the simplex skeleton"

            run(f"threshold_simplex[k={k}]", threshold)

    for k in range(N - spec.r_min - 3, N - 3):
        if k not in dual_tables:
            continue

        def bound(k=k):
            res = dcf.regularity_bound_check(spec, k)
            reg_full = full.regularity + 1
            deg = max(j for (i, j) in dual_tables[k].entries if i == 1)
            ok = (
                res.ideal_reg_full == reg_full
                and res.skeleton_gen_degree == deg
                and res.bound_holds == (reg_full <= deg)
                and res.equality == (reg_full == deg)
            )
            return ok, "" if ok else f"oracle reg(I) {reg_full}, skeleton generator degree {deg}"

        run(f"regularity_bound[k={k}]", bound)

    return report

