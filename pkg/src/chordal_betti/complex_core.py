"""Gluing specifications, their explicit facet realizations, and face-level primitives.

Vertices are labelled 1..N. Internally faces are bitmasks with bit v-1 standing for
vertex v, which keeps subset enumeration cheap at oracle scale.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

from .algebra import FVector
from .errors import (
    BadParentIndex,
    InfeasibleIntersection,
    LengthMismatch,
    OracleCapExceeded,
    VoidDual,
)

DEFAULT_ORACLE_CAP = 14
CAP_ENV_VAR = "CHORDAL_BETTI_ORACLE_CAP"


def oracle_cap(cap: int | None = None) -> int:
    """Effective vertex cap: explicit argument, else the environment override, else 14."""
    if cap is not None:
        return int(cap)
    env = os.environ.get(CAP_ENV_VAR)
    if env:
        return int(env)
    return DEFAULT_ORACLE_CAP


def check_cap(n_vertices: int, cap: int | None = None) -> None:
    limit = oracle_cap(cap)
    if n_vertices > limit:
        raise OracleCapExceeded(
            f"{n_vertices} vertices exceeds the oracle cap of {limit} "
            f"(raise it with --oracle-cap or {CAP_ENV_VAR})"
        )


@dataclass(frozen=True)
class GluingSpec:
    """Clique orders n_1..n_e, intersection sizes r_1..r_{e-1}, and gluing parents.

    ``parents[m]`` is the 1-based index of the clique that S_{m+2} is glued onto.
    Build instances with :func:`validate_spec`; the constructor does not check anything.
    """

    n: tuple[int, ...]
    r: tuple[int, ...]
    parents: tuple[int, ...]

    @property
    def e(self) -> int:
        return len(self.n)

    @property
    def n_vertices(self) -> int:
        return sum(self.n) - sum(self.r)

    @property
    def dim(self) -> int:
        return max(self.n) - 1

    @property
    def n_max(self) -> int:
        return max(self.n)

    @property
    def n_min(self) -> int:
        return min(self.n)

    @property
    def r_min(self) -> int:
        """Smallest gluing size; a lone simplex behaves as if glued along a facet, n_1 - 1."""
        if not self.r:
            return self.n[0] - 1
        return min(self.r)

    @property
    def c0(self) -> int:
        """Number of gluings along the empty face."""
        return sum(1 for x in self.r if x == 0)

    def __str__(self) -> str:
        n = ",".join(map(str, self.n))
        r = ",".join(map(str, self.r))
        return f"n=({n}) r=({r})"


def validate_spec(
    n: Sequence[int], r: Sequence[int] = (), parents: Sequence[int] | None = None
) -> GluingSpec:
    """Check a gluing specification and fill in default parents.

    Each S_{m+1} must keep at least one fresh vertex (r_m <= n_{m+1} - 1) and must be
    glued onto an earlier clique that is strictly larger than the intersection, so that
    the e cliques stay the facets of the glued complex. The default parent is the
    largest such index.
    """
    n = tuple(int(x) for x in n)
    r = tuple(int(x) for x in r)
    if not n:
        raise LengthMismatch("need at least one clique")
    if len(r) != len(n) - 1:
        raise LengthMismatch(f"expected {len(n) - 1} intersection sizes, got {len(r)}")
    if any(x < 1 for x in n):
        raise InfeasibleIntersection("clique orders must be positive")
    if parents is not None:
        parents = tuple(int(x) for x in parents)
        if len(parents) != len(r):
            raise LengthMismatch(f"expected {len(r)} parents, got {len(parents)}")

    chosen = []
    for m, rm in enumerate(r):
        # S_{m+2} in 1-based terms; earlier cliques are 1..m+1
        if rm < 0:
            raise InfeasibleIntersection(f"r_{m + 1} = {rm} is negative")
        if rm > n[m + 1] - 1:
            raise InfeasibleIntersection(
                f"r_{m + 1} = {rm} leaves no fresh vertex in a clique of order {n[m + 1]}"
            )
        if parents is None:
            feasible = [p for p in range(1, m + 2) if n[p - 1] > rm]
            if not feasible:
                raise InfeasibleIntersection(
                    f"no clique before S_{m + 2} has more than r_{m + 1} = {rm} vertices"
                )
            chosen.append(feasible[-1])
        else:
            p = parents[m]
            if not 1 <= p <= m + 1:
                raise BadParentIndex(f"parent of S_{m + 2} must lie in 1..{m + 1}, got {p}")
            if n[p - 1] <= rm:
                raise InfeasibleIntersection(
                    f"S_{p} has {n[p - 1]} vertices, too few to glue along {rm} of them"
                )
            chosen.append(p)
    return GluingSpec(n, r, tuple(chosen))


@dataclass(frozen=True)
class FacetComplex:
    """Simplicial complex on vertices 1..n_vertices given by its facets.

    Vertices that lie in no facet are allowed (they are non-faces of size one); this is
    how the empty complex {∅} and most Alexander duals look.
    """

    n_vertices: int
    facets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        facets = []
        for f in self.facets:
            f = frozenset(int(v) for v in f)
            if any(v < 1 or v > self.n_vertices for v in f):
                raise ValueError(f"facet {sorted(f)} uses a vertex outside 1..{self.n_vertices}")
            facets.append(f)
        if not facets:
            raise ValueError("the void complex has no facets; use [frozenset()] for {∅}")
        for a, b in combinations(facets, 2):
            if a <= b or b <= a:
                raise ValueError(f"facets {sorted(a)} and {sorted(b)} are nested")
        facets.sort(key=lambda f: (len(f), sorted(f)))
        object.__setattr__(self, "facets", tuple(facets))

    @classmethod
    def from_faces(cls, n_vertices: int, faces: Iterable[Iterable[int]]) -> FacetComplex:
        """Keep only the inclusion-maximal sets among ``faces``."""
        sets = sorted({frozenset(f) for f in faces}, key=len, reverse=True)
        maximal: list[frozenset[int]] = []
        for s in sets:
            if not any(s <= m for m in maximal):
                maximal.append(s)
        return cls(n_vertices, tuple(maximal))

    @classmethod
    def simplex(cls, n_vertices: int) -> FacetComplex:
        return cls(n_vertices, (frozenset(range(1, n_vertices + 1)),))

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @property
    def facet_masks(self) -> tuple[int, ...]:
        return tuple(to_mask(f) for f in self.facets)

    def contains(self, face: Iterable[int]) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def is_full_simplex(self) -> bool:
        return len(self.facets) == 1 and len(self.facets[0]) == self.n_vertices

    def faces(self) -> set[frozenset[int]]:
        out: set[frozenset[int]] = set()
        for f in self.facets:
            items = sorted(f)
            for size in range(len(items) + 1):
                out.update(frozenset(c) for c in combinations(items, size))
        return out


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def from_mask(mask: int) -> frozenset[int]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def clique_sets(spec: GluingSpec) -> list[frozenset[int]]:
    """The cliques S_1..S_e in gluing order.

    S_1 = {1..n_1}; each later clique reuses the r_m highest-numbered vertices of its
    parent and appends fresh labels.
    """
    facets: list[list[int]] = [list(range(1, spec.n[0] + 1))]
    next_label = spec.n[0] + 1
    for m, rm in enumerate(spec.r):
        parent = sorted(facets[spec.parents[m] - 1])
        shared = parent[len(parent) - rm :] if rm else []
        fresh = list(range(next_label, next_label + spec.n[m + 1] - rm))
        next_label += len(fresh)
        facets.append(shared + fresh)
    return [frozenset(f) for f in facets]


def realize(spec: GluingSpec) -> FacetComplex:
    """Explicit facet complex of a validated spec, vertices 1..N_r."""
    return FacetComplex(spec.n_vertices, tuple(clique_sets(spec)))


def face_masks(cx: FacetComplex) -> set[int]:
    """All faces as bitmasks (submasks of every facet)."""
    out: set[int] = set()
    for fm in cx.facet_masks:
        sub = fm
        while True:
            out.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & fm
    return out


def brute_f_vector(cx: FacetComplex, cap: int | None = None) -> FVector:
    """Count faces by enumerating every subset of every facet."""
    check_cap(cx.n_vertices, cap)
    counts = [0] * (cx.n_vertices + 2)
    for mask in face_masks(cx):
        counts[mask.bit_count()] += 1
    return FVector(tuple(counts))


def skeleton(cx: FacetComplex, k: int) -> FacetComplex:
    """Faces of dimension <= k."""
    if k < -1:
        raise ValueError("skeleton dimension must be >= -1")
    if k >= cx.dim:
        return cx
    if k == -1:
        return FacetComplex(cx.n_vertices, (frozenset(),))
    faces = set()
    for f in cx.facets:
        if len(f) <= k + 1:
            faces.add(f)
        else:
            faces.update(frozenset(c) for c in combinations(sorted(f), k + 1))
    return FacetComplex.from_faces(cx.n_vertices, faces)


def minimal_nonfaces(cx: FacetComplex, cap: int | None = None) -> list[frozenset[int]]:
    """Inclusion-minimal vertex sets that are not faces, by size then lexicographically."""
    check_cap(cx.n_vertices, cap)
    faces = face_masks(cx)
    out = []
    for size in range(1, cx.n_vertices + 1):
        for combo in combinations(range(1, cx.n_vertices + 1), size):
            mask = to_mask(combo)
            if mask in faces:
                continue
            if all((mask & ~(1 << (v - 1))) in faces for v in combo):
                out.append(frozenset(combo))
    return out


def alexander_dual(cx: FacetComplex, cap: int | None = None) -> FacetComplex:
    """Complements of the minimal non-faces."""
    check_cap(cx.n_vertices, cap)
    if cx.is_full_simplex():
        raise VoidDual("the Alexander dual of the full simplex is void")
    ground = frozenset(range(1, cx.n_vertices + 1))
    return FacetComplex(cx.n_vertices, tuple(ground - s for s in minimal_nonfaces(cx, cap)))


def enumerate_specs(
    max_e: int, n_range: Iterable[int], max_vertices: int, min_e: int = 1
) -> list[GluingSpec]:
    """Every feasible spec with min_e <= e <= max_e, n_i in n_range and N_r <= max_vertices.

    Clique orders run over all ordered tuples and intersections over all feasible values;
    parents take their defaults.
    """
    sizes = sorted(set(n_range))
    out = []
    for e in range(min_e, max_e + 1):
        for n in product(sizes, repeat=e):
            for r in product(*(range(x) for x in n[1:])):
                if sum(n) - sum(r) > max_vertices:
                    continue
                try:
                    out.append(validate_spec(n, r))
                except InfeasibleIntersection:
                    continue
    return out
