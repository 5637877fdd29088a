"""Closed formulas for the Alexander dual of a glued complex and for the dual's skeletons.

Same subset-counting binomial convention as :mod:`chordal_betti.closed_form`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import BettiTable, FVector, IntPolynomial, binom, sign
from .complex_core import GluingSpec, clique_sets
from .errors import InternalMismatch, NegativeBetti, RangeError, VoidDual


@dataclass(frozen=True)
class Monomial:
    """Signed squarefree-or-not monomial stored as an exponent vector over x_1..x_N."""

    exponents: tuple[int, ...]
    coefficient: int = 1

    @classmethod
    def from_vertices(cls, n_vars: int, vertices, coefficient: int = 1) -> Monomial:
        exps = [0] * n_vars
        for v in vertices:
            exps[v - 1] += 1
        return cls(tuple(exps), coefficient)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(
            tuple(a + b for a, b in zip(self.exponents, other.exponents)),
            self.coefficient * other.coefficient,
        )

    def __str__(self) -> str:
        body = "".join(
            f"x{v + 1}" if e == 1 else f"x{v + 1}^{e}"
            for v, e in enumerate(self.exponents)
            if e
        ) or "1"
        if self.coefficient == 1:
            return body
        if self.coefficient == -1:
            return "-" + body
        return f"{self.coefficient}{body}"


@dataclass(frozen=True)
class GradedResolution:
    """0 <- I <-d1- F1 <-d2- F2 <- 0 with monomial matrices; None marks a zero entry."""

    n_vars: int
    generator_shifts: tuple[int, ...]
    relation_shifts: tuple[int, ...]
    d1: tuple[Monomial, ...]
    d2: tuple[tuple[Monomial | None, ...], ...]

    def composition_is_zero(self) -> bool:
        """d1 * d2 == 0, checked column by column as sums of signed monomials."""
        for col in range(len(self.relation_shifts)):
            acc: dict[tuple[int, ...], int] = {}
            for row, g in enumerate(self.d1):
                entry = self.d2[row][col]
                if entry is None:
                    continue
                prod = g * entry
                acc[prod.exponents] = acc.get(prod.exponents, 0) + prod.coefficient
            if any(acc.values()):
                return False
        return True

    def is_homogeneous(self) -> bool:
        for col, shift in enumerate(self.relation_shifts):
            for row, g in enumerate(self.d1):
                entry = self.d2[row][col]
                if entry is not None and g.degree + entry.degree != shift:
                    return False
        return True

    def columns_well_formed(self) -> bool:
        for col in range(len(self.relation_shifts)):
            nonzero = [self.d2[row][col] for row in range(len(self.d1)) if self.d2[row][col]]
            if len(nonzero) != 2 or nonzero[0].coefficient * nonzero[1].coefficient >= 0:
                return False
        return True

    def numerator(self) -> IntPolynomial:
        """1 - sum t^(generator shifts) + sum t^(relation shifts)."""
        poly = IntPolynomial((1,))
        for s in self.generator_shifts:
            poly = poly - IntPolynomial.monomial(s)
        for s in self.relation_shifts:
            poly = poly + IntPolynomial.monomial(s)
        return poly


@dataclass(frozen=True)
class DualProfile:
    krull_dim: int
    regularity: int
    a_invariant: int
    cm_type: int
    multiplicity: int
    gorenstein: bool
    pure_resolution: bool
    linear_resolution: bool
    sphere_dim: int | None
    sphere_count: int

    @property
    def acyclic(self) -> bool:
        return self.sphere_count == 0


@dataclass(frozen=True)
class DualSkeletonProfile:
    k: int
    krull_dim: int
    proj_dim: int
    depth: int
    cohen_macaulay: bool
    cm_type: int
    ideal_regularity: int
    multiplicity: int
    h_degree: int
    euler: int
    sphere_count: int
    simplex_equal: bool


@dataclass(frozen=True)
class RegularityBound:
    ideal_reg_full: int
    skeleton_gen_degree: int
    bound_holds: bool
    equality: bool


def _require_dual(spec: GluingSpec) -> None:
    if spec.e < 2:
        raise VoidDual(f"{spec} is a single simplex; its Alexander dual is void")


def _dual_face_count(spec: GluingSpec, i: int) -> int:
    """f_i of the dual."""
    N = spec.n_vertices
    t = N - i - 1
    return binom(N, i + 1) - sum(binom(n, t) for n in spec.n) + sum(binom(r, t) for r in spec.r)


def dual_f_vector(spec: GluingSpec) -> FVector:
    _require_dual(spec)
    return FVector(tuple(_dual_face_count(spec, i) for i in range(-1, spec.n_vertices - 2)))


def dual_h_vector(spec: GluingSpec) -> tuple[IntPolynomial, int]:
    """h-polynomial of the (Cohen-Macaulay) dual ring and its multiplicity h(1)."""
    _require_dual(spec)
    N = spec.n_vertices
    h = IntPolynomial(
        tuple(
            (k + 1)
            - sum(max(0, k - N + n + 1) for n in spec.n)
            + sum(max(0, k - N + r + 1) for r in spec.r)
            for k in range(N - 1)
        )
    )
    quadratic = sum((N - r) * (N - r - 1) for r in spec.r) - sum(
        (N - n) * (N - n - 1) for n in spec.n
    )
    if quadratic % 2 or quadratic // 2 != h(1):
        raise InternalMismatch(f"h(1) = {h(1)} but the quadratic form gives {quadratic / 2}")
    return h, h(1)


def dual_betti_table(spec: GluingSpec) -> BettiTable:
    _require_dual(spec)
    N = spec.n_vertices
    triples = [(0, 0, 1)]
    triples += [(1, N - n, 1) for n in spec.n]
    triples += [(2, N - r, 1) for r in spec.r]
    return BettiTable.from_triples(N, triples)


def dual_resolution(spec: GluingSpec) -> GradedResolution:
    """Generators g_m = product of the variables outside S_m, one relation per gluing."""
    _require_dual(spec)
    N = spec.n_vertices
    cliques = clique_sets(spec)
    ground = frozenset(range(1, N + 1))
    d1 = tuple(Monomial.from_vertices(N, sorted(ground - s)) for s in cliques)
    d2: list[list[Monomial | None]] = [[None] * (spec.e - 1) for _ in range(spec.e)]
    for m, p in enumerate(spec.parents):
        parent, child = cliques[p - 1], cliques[m + 1]
        d2[p - 1][m] = Monomial.from_vertices(N, sorted(parent - child))
        d2[m + 1][m] = Monomial.from_vertices(N, sorted(child - parent), -1)
    return GradedResolution(
        n_vars=N,
        generator_shifts=tuple(N - n for n in spec.n),
        relation_shifts=tuple(N - r for r in spec.r),
        d1=d1,
        d2=tuple(tuple(row) for row in d2),
    )


def dual_profile(spec: GluingSpec) -> DualProfile:
    _require_dual(spec)
    N = spec.n_vertices
    _, mult = dual_h_vector(spec)
    pure = len(set(spec.n)) == 1 and len(set(spec.r)) == 1
    c0 = spec.c0
    return DualProfile(
        krull_dim=N - 2,
        regularity=N - spec.r_min - 2,
        a_invariant=-spec.r_min,
        cm_type=spec.e - 1,
        multiplicity=mult,
        gorenstein=spec.e == 2,
        pure_resolution=pure,
        linear_resolution=pure and spec.r[0] == spec.n[0] - 1,
        sphere_dim=N - 3 if c0 else None,
        sphere_count=c0,
    )


def _shifted_row(spec: GluingSpec, k: int, i: int) -> int:
    N = spec.n_vertices
    top = N - i - k - 1
    value = binom(N, i + k + 1) * binom(i + k, k + 1)
    value -= sum(binom(n, top) * binom(n - N + i + k, i - 1) for n in spec.n)
    value += sum(binom(r, top) * binom(r - N + i + k, i - 1) for r in spec.r)
    if i == 1:
        value += sum(1 for r in spec.r if N - r == k + 2)
    return value


def dual_skeleton_betti_table(spec: GluingSpec, k: int) -> BettiTable:
    """Betti table of the k-skeleton of the dual; k = N-3 is the dual itself."""
    _require_dual(spec)
    N = spec.n_vertices
    if k < -1 or k > N - 3:
        raise RangeError(f"dual skeleton dimension must lie in -1..{N - 3}")
    full = dual_betti_table(spec)
    if k == N - 3:
        return full
    entries = {(i, j): v for (i, j), v in full.entries.items() if j - i < k + 1}
    entries[(0, 0)] = 1
    for i in range(1, N + 1):
        v = _shifted_row(spec, k, i)
        if v < 0:
            raise NegativeBetti(f"dual skeleton k={k} of {spec}: beta_{{{i},{i + k + 1}}} = {v}")
        if v:
            entries[(i, i + k + 1)] = v
    return BettiTable(N, entries)


def dual_skeleton_f_vector(spec: GluingSpec, k: int) -> FVector:
    return dual_f_vector(spec).truncate(k)


def dual_skeleton_cm_type(spec: GluingSpec, k: int) -> int:
    N = spec.n_vertices
    if k == N - 3:
        return spec.e - 1
    top = N - k - 2
    return (
        binom(N - 1, k + 1)
        - sum(binom(n - 1, top) for n in spec.n)
        + sum(binom(r - 1, top) for r in spec.r)
    )


def dual_skeleton_profile(spec: GluingSpec, k: int) -> DualSkeletonProfile:
    _require_dual(spec)
    N = spec.n_vertices
    if k < -1 or k > N - 3:
        raise RangeError(f"dual skeleton dimension must lie in -1..{N - 3}")
    top = k == N - 3
    if top:
        h, _ = dual_h_vector(spec)
        # a wedge of c0 spheres of dimension N-3
        euler = sign(N - 3) * spec.c0
        spheres = spec.c0
        ideal_reg = N - spec.r_min - 1
        pdim = 2
    else:
        h = dual_skeleton_f_vector(spec, k).h_polynomial()
        spheres = dual_skeleton_cm_type(spec, k)
        euler = sign(k) * spheres
        ideal_reg = k + 2
        pdim = N - k - 1
    return DualSkeletonProfile(
        k=k,
        krull_dim=k + 1,
        proj_dim=pdim,
        depth=N - pdim,
        cohen_macaulay=True,
        cm_type=dual_skeleton_cm_type(spec, k),
        ideal_regularity=ideal_reg,
        multiplicity=_dual_face_count(spec, k),
        h_degree=h.degree,
        euler=euler,
        sphere_count=spheres,
        simplex_equal=k <= N - spec.n_max - 2,
    )


def regularity_bound_check(spec: GluingSpec, k: int) -> RegularityBound:
    """Compare reg(I) of the dual with the generator degree k+2 of its k-skeleton ideal."""
    _require_dual(spec)
    N = spec.n_vertices
    lo, hi = N - spec.r_min - 3, N - 3
    if not lo <= k < hi:
        raise RangeError(f"k = {k} outside {lo} <= k < {hi}")
    reg_full = N - spec.r_min - 1
    return RegularityBound(
        ideal_reg_full=reg_full,
        skeleton_gen_degree=k + 2,
        bound_holds=reg_full <= k + 2,
        equality=k == lo,
    )
