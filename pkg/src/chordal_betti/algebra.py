"""Exact integer building blocks: binomials, polynomials in one variable, Betti tables."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import BadRowRequest


def sign(exponent: int) -> int:
    """(-1)^exponent as an int, for any integer exponent."""
    return -1 if exponent % 2 else 1


def binom(a: int, b: int) -> int:
    """Subset-counting binomial: number of b-subsets of an a-set, zero outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def gbinom(a: int, b: int) -> int:
    """Generalized binomial a(a-1)...(a-b+1)/b!, a polynomial in a; zero for b < 0."""
    if b < 0:
        return 0
    if a >= 0:
        return math.comb(a, b)
    # upper negation: C(-m, b) = (-1)^b C(m + b - 1, b)
    return sign(b) * math.comb(-a + b - 1, b)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial in t with arbitrary-precision integer coefficients, index = degree."""

    coefficients: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> IntPolynomial:
        if degree < 0:
            raise ValueError("negative degree")
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def one_minus_t_power(cls, exponent: int) -> IntPolynomial:
        """(1 - t)^exponent for exponent >= 0."""
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls(tuple(sign(i) * math.comb(exponent, i) for i in range(exponent + 1)))

    @classmethod
    def one_plus_t_power(cls, exponent: int) -> IntPolynomial:
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls(tuple(math.comb(exponent, i) for i in range(exponent + 1)))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, degree: int) -> int:
        if 0 <= degree < len(self.coefficients):
            return self.coefficients[degree]
        return 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.coefficients)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(tuple(self[i] + other[i] for i in range(size)))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coefficients))
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def divide_by_one_minus_t(self, times: int = 1) -> IntPolynomial:
        """Exact quotient by (1 - t)^times; raises ValueError if the division leaves a remainder."""
        coeffs = list(self.coefficients)
        for _ in range(times):
            if not coeffs:
                return IntPolynomial()
            # p(t) = (1 - t) q(t)  <=>  q_k = sum_{i <= k} p_i
            running = 0
            quotient = []
            for c in coeffs:
                running += c
                quotient.append(running)
            if quotient[-1] != 0:
                raise ValueError("polynomial is not divisible by (1 - t)")
            coeffs = quotient[:-1]
        return IntPolynomial(tuple(coeffs))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for deg, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mag = abs(c)
            if deg == 0:
                body = str(mag)
            else:
                var = "t" if deg == 1 else f"t^{deg}"
                body = var if mag == 1 else f"{mag}{var}"
            terms.append(("-" if c < 0 else "+", body))
        first_op, first = terms[0]
        out = ("-" if first_op == "-" else "") + first
        for op, body in terms[1:]:
            out += f" {op} {body}"
        return out


@dataclass(frozen=True)
class FVector:
    """Face numbers f_{-1}, f_0, ..., f_{d-1}; entries[0] is the empty face."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(x) for x in self.entries)
        while len(entries) > 1 and entries[-1] == 0:
            entries = entries[:-1]
        if not entries or entries[0] != 1:
            raise ValueError("an f-vector starts with f_{-1} = 1")
        if any(x < 0 for x in entries):
            raise ValueError("face numbers are non-negative")
        object.__setattr__(self, "entries", entries)

    def f(self, i: int) -> int:
        """Number of i-dimensional faces (i >= -1)."""
        idx = i + 1
        if 0 <= idx < len(self.entries):
            return self.entries[idx]
        return 0

    @property
    def dim(self) -> int:
        return len(self.entries) - 2

    def truncate(self, k: int) -> FVector:
        """f-vector of the k-skeleton."""
        return FVector(self.entries[: max(k, -1) + 2])

    def reduced_euler(self) -> int:
        return sum(sign(idx - 1) * x for idx, x in enumerate(self.entries))

    def h_polynomial(self) -> IntPolynomial:
        """h(t) = sum_i f_{i-1} t^i (1-t)^(d-i), with d = dim + 1."""
        d = self.dim + 1
        h = IntPolynomial()
        for i, fi in enumerate(self.entries):
            h = h + IntPolynomial.monomial(i, fi) * IntPolynomial.one_minus_t_power(d - i)
        return h

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers beta_{i,j}; zero entries are never stored."""

    n_vars: int
    entries: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for (i, j), v in self.entries.items():
            if v < 0:
                raise ValueError(f"negative Betti number at ({i}, {j})")
            if v:
                clean[(int(i), int(j))] = int(v)
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    @classmethod
    def from_triples(cls, n_vars: int, triples: Iterable[Sequence[int]]) -> BettiTable:
        acc: dict[tuple[int, int], int] = {}
        for i, j, v in triples:
            acc[(i, j)] = acc.get((i, j), 0) + v
        return cls(n_vars, acc)

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        if i < 0 or j < 0:
            raise BadRowRequest(f"negative index ({i}, {j})")
        return self.entries.get((i, j), 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.n_vars == other.n_vars and dict(self.entries) == dict(other.entries)

    def __hash__(self) -> int:
        return hash((self.n_vars, tuple(self.entries.items())))

    def triples(self) -> list[tuple[int, int, int]]:
        return [(i, j, v) for (i, j), v in self.entries.items()]

    @property
    def proj_dim(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    @property
    def regularity(self) -> int:
        return max((j - i for i, j in self.entries), default=0)

    def row(self, shift: int) -> dict[int, int]:
        """Entries of the row j - i = shift, keyed by homological degree i."""
        return {i: v for (i, j), v in self.entries.items() if j - i == shift}

    def row_support(self) -> set[int]:
        return {j - i for i, j in self.entries}

    def totals(self) -> list[int]:
        out = [0] * (self.proj_dim + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return out

    def numerator(self) -> IntPolynomial:
        """sum_{i,j} (-1)^i beta_{i,j} t^j, the Hilbert numerator over (1-t)^n_vars."""
        top = max((j for _, j in self.entries), default=0)
        coeffs = [0] * (top + 1)
        for (i, j), v in self.entries.items():
            coeffs[j] += sign(i) * v
        return IntPolynomial(tuple(coeffs))

    def first_difference(self, other: BettiTable) -> tuple[int, int, int, int] | None:
        """First (i, j, mine, theirs) where the two tables disagree, in (i, j) order."""
        keys = sorted(set(self.entries) | set(other.entries))
        for key in keys:
            a, b = self.entries.get(key, 0), other.entries.get(key, 0)
            if a != b:
                return key[0], key[1], a, b
        return None
