"""Binomial identities obtained by reading the Hilbert series of a glued complex two ways.

Every identity here is a polynomial identity in its upper arguments, so binomials use the
generalized convention :func:`~chordal_betti.algebra.gbinom` (upper negation for a
negative top). The subset-counting convention breaks the convolution lemma as soon as
A > n, and breaks the Chu-Vandermonde variant whenever n > r.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Iterable, Iterator

from .algebra import IntPolynomial, gbinom, sign
from .complex_core import GluingSpec
from .errors import RangeError, UnknownIdentity


class IdentityKind(enum.Enum):
    CONVOLUTION_LEMMA = "convolution-lemma"
    GENERAL_HILBERT = "general-hilbert"
    EQUAL_N = "equal-n"
    EQUAL_R = "equal-r"
    EQUAL_NR = "equal-nr"
    REDUCED = "reduced"
    CHU_VANDERMONDE = "chu-vandermonde"
    SINGLE_CLIQUE = "single-clique"

    @classmethod
    def parse(cls, text: str) -> IdentityKind:
        key = text.strip().lower().replace("_", "-")
        for kind in cls:
            if kind.value == key or kind.name.lower().replace("_", "-") == key:
                return kind
        raise UnknownIdentity(f"unknown identity {text!r}; choose from {', '.join(k.value for k in cls)}")


# parameter layout per identity, used in messages and by the CLI
PARAM_LAYOUT = {
    IdentityKind.CONVOLUTION_LEMMA: "(n, A, s)",
    IdentityKind.GENERAL_HILBERT: "(e, n_1..n_e, r_1..r_{e-1}, j)",
    IdentityKind.EQUAL_N: "(n, j, r_1..r_{e-1})",
    IdentityKind.EQUAL_R: "(r, j, n_1..n_e)",
    IdentityKind.EQUAL_NR: "(n, r, e, j)",
    IdentityKind.REDUCED: "(n, r, e, j)",
    IdentityKind.CHU_VANDERMONDE: "(n, r, j)",
    IdentityKind.SINGLE_CLIQUE: "(n, j)",
}


@dataclass(frozen=True)
class IdentityCase:
    kind: IdentityKind
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        _validate(self.kind, self.params)

    def __str__(self) -> str:
        return f"{self.kind.value}{self.params}"


@dataclass(frozen=True)
class IdentityResult:
    case: IdentityCase
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class PolynomialResult:
    """Both Hilbert numerators of a glued complex, and whether the per-j check agrees."""

    lhs: IntPolynomial
    rhs: IntPolynomial
    coefficientwise_equal: bool

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    @property
    def consistent(self) -> bool:
        return self.equal == self.coefficientwise_equal


def _fail(kind: IdentityKind, msg: str) -> RangeError:
    return RangeError(f"{kind.value} {PARAM_LAYOUT[kind]}: {msg}")


def _validate(kind: IdentityKind, p: tuple[int, ...]) -> None:
    if kind is IdentityKind.CONVOLUTION_LEMMA:
        if len(p) != 3 or min(p) < 0:
            raise _fail(kind, "need three non-negative integers")
    elif kind is IdentityKind.GENERAL_HILBERT:
        if not p or p[0] < 1 or len(p) != 2 * p[0] + 1:
            raise _fail(kind, "length must be 2e + 1 with e >= 1")
        e = p[0]
        n, r, j = p[1 : e + 1], p[e + 1 : 2 * e], p[-1]
        if j < 1 or min(n) < 1 or any(x < 1 for x in r):
            raise _fail(kind, "need n_m >= 1, r_m >= 1, j >= 1")
        if any(rm > nm for rm, nm in zip(r, n[1:])):
            raise _fail(kind, "need r_m <= n_{m+1}")
    elif kind is IdentityKind.EQUAL_N:
        if len(p) < 2:
            raise _fail(kind, "need at least n and j")
        n, j, r = p[0], p[1], p[2:]
        if j < 1 or n < 1 or any(not 1 <= x <= n for x in r):
            raise _fail(kind, "need n >= r_m >= 1 and j >= 1")
    elif kind is IdentityKind.EQUAL_R:
        if len(p) < 3:
            raise _fail(kind, "need r, j and at least one n")
        r, j, n = p[0], p[1], p[2:]
        if j < 1 or r < 1 or any(x < r for x in n):
            raise _fail(kind, "need n_m >= r >= 1 and j >= 1")
    elif kind in (IdentityKind.EQUAL_NR, IdentityKind.REDUCED):
        if len(p) != 4:
            raise _fail(kind, "need four integers")
        n, r, e, j = p
        if not n >= r >= 1 or e < 1 or j < 1:
            raise _fail(kind, "need n >= r >= 1, e >= 1, j >= 1")
    elif kind is IdentityKind.CHU_VANDERMONDE:
        # stated for n >= r but the identity is polynomial; n < r is accepted as well
        if len(p) != 3 or min(p) < 1:
            raise _fail(kind, "need n, r, j >= 1")
    elif kind is IdentityKind.SINGLE_CLIQUE:
        if len(p) != 2 or min(p) < 1:
            raise _fail(kind, "need n, j >= 1")
    else:  # pragma: no cover - enum is closed
        raise UnknownIdentity(str(kind))


C = lru_cache(maxsize=None)(gbinom)


def _alternating(coeff: Iterable[int], top: int, j: int) -> int:
    """sum_{i=0}^{j} (-1)^i c_i C(top - i, j - i), where c is indexed by i."""
    return sum(sign(i) * c * C(top - i, j - i) for i, c in enumerate(coeff) if i <= j)


def _face_coefficients(n: Iterable[int], r: Iterable[int], j: int) -> list[int]:
    n, r = tuple(n), tuple(r)
    return [sum(C(x, i) for x in n) - sum(C(x, i) for x in r) for i in range(j + 1)]


def _general(n: tuple[int, ...], r: tuple[int, ...], j: int) -> tuple[int, int]:
    N = sum(n) - sum(r)
    lhs = sum(C(N - x, j) for x in n) - sum(C(N - x, j) for x in r)
    rhs = _alternating(_face_coefficients(n, r, j), N, j)
    return lhs, rhs


def check_convolution_lemma(n: int, A: int, s: int) -> IdentityResult:
    """sum_t (-1)^t C(A, t) C(n - t, s - t) against C(n - A, s)."""
    case = IdentityCase(IdentityKind.CONVOLUTION_LEMMA, (n, A, s))
    lhs = sum(sign(t) * C(A, t) * C(n - t, s - t) for t in range(s + 1))
    return IdentityResult(case, lhs, C(n - A, s))


def check_hilbert_identity(spec: GluingSpec, j: int) -> IdentityResult:
    """Coefficient j of the Hilbert numerator: rational form against face expansion."""
    case = IdentityCase(IdentityKind.GENERAL_HILBERT, (spec.e, *spec.n, *spec.r, j))
    lhs, rhs = _general(spec.n, spec.r, j)
    return IdentityResult(case, lhs, rhs)


def check_hilbert_polynomial(spec: GluingSpec) -> PolynomialResult:
    """Compare the two numerators as whole polynomials, and the same thing coefficientwise.

    The rational form is sum (1-t)^(N-n_m) - sum (1-t)^(N-r_m); the face expansion is
    sum_t f_{t-1} t^t (1-t)^(N-t). Coefficient j of either one is (-1)^j times the
    corresponding side of the per-j identity.
    """
    N = spec.n_vertices
    rational = IntPolynomial()
    for x in spec.n:
        rational = rational + IntPolynomial.one_minus_t_power(N - x)
    for x in spec.r:
        rational = rational - IntPolynomial.one_minus_t_power(N - x)
    faces = IntPolynomial()
    for t, f in enumerate(_face_coefficients(spec.n, spec.r, N)):
        faces = faces + IntPolynomial.monomial(t, f) * IntPolynomial.one_minus_t_power(N - t)
    per_j = True
    for j in range(1, N + 1):
        lhs, rhs = _general(spec.n, spec.r, j)
        if sign(j) * lhs != rational[j] or sign(j) * rhs != faces[j] or lhs != rhs:
            per_j = False
    per_j = per_j and rational[0] == faces[0]
    return PolynomialResult(rational, faces, per_j)


def check_specializations(case: IdentityCase) -> IdentityResult:
    """Evaluate both sides of one specialization of the general identity."""
    kind, p = case.kind, case.params
    if kind is IdentityKind.EQUAL_N:
        n, j, r = p[0], p[1], p[2:]
        e = len(r) + 1
        N = e * n - sum(r)
        lhs = e * C(N - n, j)
        rhs = sum(C(N - x, j) for x in r) + _alternating(
            (e * C(n, i) - sum(C(x, i) for x in r) for i in range(j + 1)), N, j
        )
    elif kind is IdentityKind.EQUAL_R:
        r, j, n = p[0], p[1], p[2:]
        e = len(n)
        N = sum(n) - (e - 1) * r
        lhs = (e - 1) * C(N - r, j)
        rhs = sum(C(N - x, j) for x in n) - _alternating(
            (sum(C(x, i) for x in n) - (e - 1) * C(r, i) for i in range(j + 1)), N, j
        )
    elif kind is IdentityKind.EQUAL_NR:
        n, r, e, j = p
        N = e * n - (e - 1) * r
        lhs = e * C(N - n, j) - (e - 1) * C(N - r, j)
        rhs = _alternating((e * C(n, i) - (e - 1) * C(r, i) for i in range(j + 1)), N, j)
    elif kind is IdentityKind.REDUCED:
        n, r, e, j = p
        lhs = (e - 1) * C(n - r, j)
        rhs = -_alternating((e * C(n, i) - (e - 1) * C(r, i) for i in range(j + 1)), n, j)
    elif kind is IdentityKind.CHU_VANDERMONDE:
        n, r, j = p
        lhs = C(r - n, j)
        rhs = _alternating((C(n, i) for i in range(j + 1)), r, j)
    elif kind is IdentityKind.SINGLE_CLIQUE:
        n, j = p
        lhs = -_alternating((C(n, i) for i in range(j + 1)), n, j)
        rhs = 0
    else:
        raise UnknownIdentity(f"{kind.value} is not a specialization; use its own checker")
    return IdentityResult(case, lhs, rhs)


def check_case(case: IdentityCase) -> IdentityResult:
    """Dispatch any identity case to its checker."""
    p = case.params
    if case.kind is IdentityKind.CONVOLUTION_LEMMA:
        return check_convolution_lemma(*p)
    if case.kind is IdentityKind.GENERAL_HILBERT:
        e = p[0]
        lhs, rhs = _general(p[1 : e + 1], p[e + 1 : 2 * e], p[-1])
        return IdentityResult(case, lhs, rhs)
    return check_specializations(case)


# ------------------------------------------------------------------ sweeps


def _general_families(bound: int, max_e: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    for e in range(1, max_e + 1):
        for n in _nonincreasing(e, 1, bound):
            for r in _nonincreasing(e - 1, 1, bound):
                if all(rm <= nm for rm, nm in zip(r, n[1:])):
                    yield n, r


def _nonincreasing(length: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    for combo in combinations_with_replacement(range(hi, lo - 1, -1), length):
        yield combo


def sweep_cases(kind: IdentityKind, bound: int = 12, max_e: int = 4) -> Iterator[IdentityCase]:
    """Deterministic nested ranges, one multiset representative per parameter family."""
    js = range(1, bound + 1)
    if kind is IdentityKind.CONVOLUTION_LEMMA:
        for n, A, s in product(range(bound + 1), repeat=3):
            yield IdentityCase(kind, (n, A, s))
    elif kind is IdentityKind.GENERAL_HILBERT:
        for n, r in _general_families(bound, max_e):
            for j in js:
                yield IdentityCase(kind, (len(n), *n, *r, j))
    elif kind is IdentityKind.EQUAL_N:
        for n in range(1, bound + 1):
            for e in range(1, max_e + 1):
                for r in _nonincreasing(e - 1, 1, n):
                    for j in js:
                        yield IdentityCase(kind, (n, j, *r))
    elif kind is IdentityKind.EQUAL_R:
        for r in range(1, bound + 1):
            for e in range(1, max_e + 1):
                for n in _nonincreasing(e, r, bound):
                    for j in js:
                        yield IdentityCase(kind, (r, j, *n))
    elif kind in (IdentityKind.EQUAL_NR, IdentityKind.REDUCED):
        for n in range(1, bound + 1):
            for r in range(1, n + 1):
                for e in range(1, bound + 1):
                    for j in js:
                        yield IdentityCase(kind, (n, r, e, j))
    elif kind is IdentityKind.CHU_VANDERMONDE:
        for n, r, j in product(range(1, bound + 1), repeat=3):
            yield IdentityCase(kind, (n, r, j))
    elif kind is IdentityKind.SINGLE_CLIQUE:
        for n, j in product(range(1, bound + 1), repeat=2):
            yield IdentityCase(kind, (n, j))


@dataclass
class SweepTally:
    kind: IdentityKind
    checked: int = 0
    counterexamples: list[IdentityResult] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def run_sweep(
    bound: int = 12, max_e: int = 4, only: Iterable[IdentityKind] | None = None
) -> list[SweepTally]:
    """Check every case of the selected identities; counterexamples are kept, not raised."""
    if bound < 1 or max_e < 1:
        raise RangeError("sweep bounds must be positive")
    kinds = list(IdentityKind) if only is None else list(only)
    out = []
    for kind in kinds:
        tally = SweepTally(kind)
        start = time.perf_counter()
        if kind is IdentityKind.GENERAL_HILBERT:
            # same cases as sweep_cases, but the face coefficients are shared across j
            for n, r in _general_families(bound, max_e):
                N = sum(n) - sum(r)
                coeff = _face_coefficients(n, r, bound)
                for j in range(1, bound + 1):
                    lhs = sum(C(N - x, j) for x in n) - sum(C(N - x, j) for x in r)
                    rhs = _alternating(coeff, N, j)
                    tally.checked += 1
                    if lhs != rhs:
                        case = IdentityCase(kind, (len(n), *n, *r, j))
                        tally.counterexamples.append(IdentityResult(case, lhs, rhs))
            tally.seconds = time.perf_counter() - start
            out.append(tally)
            continue
        for case in sweep_cases(kind, bound, max_e):
            res = check_case(case)
            tally.checked += 1
            if not res.equal:
                tally.counterexamples.append(res)
        tally.seconds = time.perf_counter() - start
        out.append(tally)
    return out
