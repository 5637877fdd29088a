"""Closed formulas for a glued chordal clique complex and its k-skeletons.

Everything is exact integer arithmetic. Binomials follow the subset-counting convention
(:func:`~chordal_betti.algebra.binom`): C(a, b) vanishes unless 0 <= b <= a.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .algebra import BettiTable, FVector, IntPolynomial, binom, sign
from .complex_core import GluingSpec
from .errors import BadRowRequest, NegativeBetti


class CMClass(enum.Flag):
    NONE = 0
    COHEN_MACAULAY = enum.auto()
    INITIALLY_CM = enum.auto()
    SEQUENTIALLY_CM = enum.auto()

    def labels(self) -> list[str]:
        names = {
            CMClass.COHEN_MACAULAY: "CohenMacaulay",
            CMClass.INITIALLY_CM: "InitiallyCM",
            CMClass.SEQUENTIALLY_CM: "SequentiallyCM",
        }
        return [label for flag, label in names.items() if flag in self]


@dataclass(frozen=True)
class SkeletonInvariants:
    krull_dim: int
    regularity: int
    proj_dim: int
    depth: int
    multiplicity: int
    h_degree: int
    a_invariant: int
    euler: int
    cm_class: CMClass


def _face_count(spec: GluingSpec, t: int) -> int:
    """f_{t-1}: faces with t vertices."""
    return sum(binom(n, t) for n in spec.n) - sum(binom(r, t) for r in spec.r)


def f_vector(spec: GluingSpec) -> FVector:
    return FVector(tuple(_face_count(spec, t) for t in range(spec.n_max + 1)))


def skeleton_f_vector(spec: GluingSpec, k: int) -> FVector:
    return f_vector(spec).truncate(k)


def independence_polynomial(spec: GluingSpec) -> IntPolynomial:
    """Independence polynomial of the co-chordal graph whose independence complex this is."""
    poly = IntPolynomial()
    for n in spec.n:
        poly = poly + IntPolynomial.one_plus_t_power(n)
    for r in spec.r:
        poly = poly - IntPolynomial.one_plus_t_power(r)
    return poly


def hilbert_numerator(spec: GluingSpec) -> IntPolynomial:
    """Numerator P(t) of the Hilbert series written over (1-t)^N."""
    N = spec.n_vertices
    poly = IntPolynomial()
    for n in spec.n:
        poly = poly + IntPolynomial.one_minus_t_power(N - n)
    for r in spec.r:
        poly = poly - IntPolynomial.one_minus_t_power(N - r)
    return poly


def general_skeleton_betti(f: FVector, n: int, t_lin: int, k: int, i: int, j: int) -> int:
    """beta_{i,i+j} of the k-skeleton of a complex whose ideal has a t_lin-linear resolution.

    ``f`` is the f-vector of the full complex on ``n`` vertices. The ring's linear strand
    sits in row j = t_lin - 1. Besides beta_{0,0} only two rows survive: that linear row
    while it lies at or below k, and the shifted row j = k+1. When the shifted row sits
    at or below the linear strand it is an alternating sum over faces of size <= k+1;
    above it, over faces of size >= k+2.
    """
    if i < 0 or j < 0:
        raise BadRowRequest(f"negative index i={i}, j={j}")
    if i == 0:
        return 1 if j == 0 else 0
    s = i + j
    lin = t_lin - 1
    if j == k + 1 and j <= lin:
        return sum(sign(j - r) * binom(n - r, s - r) * f.f(r - 1) for r in range(k + 2))
    if j == lin and j <= k:
        return sum(sign(j - r) * binom(n - r, s - r) * f.f(r - 1) for r in range(s + 1))
    if j == k + 1:
        return sum(
            sign(j - r + 1) * binom(n - r, s - r) * f.f(r - 1) for r in range(k + 2, s + 1)
        )
    return 0


def _linear_row(spec: GluingSpec, i: int) -> int:
    N = spec.n_vertices
    return -sum(binom(N - n, i + 1) for n in spec.n) + sum(binom(N - r, i + 1) for r in spec.r)


def _shifted_row(spec: GluingSpec, k: int, i: int) -> int:
    N = spec.n_vertices
    return sum(
        _face_count(spec, t) * sign(k - t) * binom(N - t, k + i + 1 - t)
        for t in range(k + 2, i + k + 2)
    )


def _checked(table: dict[tuple[int, int], int], N: int, what: str) -> BettiTable:
    for (i, j), v in table.items():
        if v < 0:
            raise NegativeBetti(f"{what}: beta_{{{i},{j}}} = {v}")
    return BettiTable(N, table)


def skeleton_betti_table(spec: GluingSpec, k: int) -> BettiTable:
    """Graded Betti table of K[(Delta_r)_(k)]; k >= dim gives the full complex."""
    if k < -1:
        raise BadRowRequest("skeleton dimension must be >= -1")
    N = spec.n_vertices
    k = min(k, spec.dim)
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    if k <= 0:
        # the shifted row sits at or below the linear row, so use the general form
        f = f_vector(spec)
        for i in range(1, N + 1):
            entries[(i, i + k + 1)] = general_skeleton_betti(f, N, 2, k, i, k + 1)
        return _checked(entries, N, f"skeleton k={k} of {spec}")
    for i in range(1, N + 1):
        entries[(i, i + 1)] = _linear_row(spec, i)
        if k < spec.dim:
            entries[(i, i + k + 1)] = _shifted_row(spec, k, i)
    return _checked(entries, N, f"skeleton k={k} of {spec}")


def h_polynomial(spec: GluingSpec, k: int) -> IntPolynomial:
    """h-polynomial of the k-skeleton ring, numerator of the Hilbert series over (1-t)^dim."""
    if k >= spec.dim:
        return hilbert_numerator(spec).divide_by_one_minus_t(spec.n_vertices - spec.n_max)
    return skeleton_f_vector(spec, k).h_polynomial()


def euler_characteristic(spec: GluingSpec, k: int) -> int:
    """Reduced Euler characteristic of the k-skeleton."""
    if k < spec.dim:
        return sum(sign(t - 1) * _face_count(spec, t) for t in range(k + 2))
    if spec.r_min == 0:
        return spec.c0
    return 0


def multiplicity(spec: GluingSpec, k: int) -> int:
    return _face_count(spec, min(k, spec.dim) + 1)


def h_degree(spec: GluingSpec, k: int) -> int:
    """Degree of the h-polynomial.

    Below the top dimension this is k+1 unless the coefficient of t^N in the
    numerator cancels, which needs r_min = 0, k odd and a balance of face counts; the
    degree is then read off the exact h-polynomial.
    """
    if -1 <= k < spec.dim and not extremal_corner_cancels(spec, k):
        return k + 1
    return h_polynomial(spec, k).degree


def extremal_corner_cancels(spec: GluingSpec, k: int) -> bool:
    if spec.r_min != 0 or k % 2 == 0:
        return False
    balance = sum(binom(n - 1, k + 1) for n in spec.n) - sum(binom(r - 1, k + 1) for r in spec.r)
    return balance == spec.c0


def skeleton_invariants(spec: GluingSpec, k: int) -> SkeletonInvariants:
    if k < -1:
        raise BadRowRequest("skeleton dimension must be >= -1")
    N = spec.n_vertices
    r_min = spec.r_min
    full = k >= spec.dim
    kk = min(k, spec.dim)
    krull = kk + 1
    if not full:
        regularity = k + 1
    else:
        # the ideal of a lone simplex is zero
        regularity = 1 if spec.e > 1 else 0
    proj_dim = N - kk - 1 if kk <= r_min else N - r_min - 1
    depth = min(kk, r_min) + 1
    hdeg = h_degree(spec, k)

    flags = CMClass.NONE
    if depth == krull:
        flags |= CMClass.COHEN_MACAULAY
    # initial dimension = smallest facet size of the skeleton
    if depth == min(spec.n_min, kk + 1):
        flags |= CMClass.INITIALLY_CM
    # sufficient conditions only; skeletons of a sequentially CM complex stay sequentially CM
    if CMClass.COHEN_MACAULAY in flags or all(r == n - 1 for r, n in zip(spec.r, spec.n[1:])):
        flags |= CMClass.SEQUENTIALLY_CM

    return SkeletonInvariants(
        krull_dim=krull,
        regularity=regularity,
        proj_dim=proj_dim,
        depth=depth,
        multiplicity=multiplicity(spec, k),
        h_degree=hdeg,
        a_invariant=hdeg - krull,
        euler=euler_characteristic(spec, k),
        cm_class=flags,
    )
