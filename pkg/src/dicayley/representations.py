"""Irreducible representations of Dic(A, y).

All values live in Z[zeta_N] with N = lcm(exp(A), 4), so the +-i images of x
and the characters of A share one ring.  Every representation matrix here is
monomial with root-of-unity entries; ``entries(g)`` exposes that structure as
``((row, col), exponent)`` pairs which keeps weighted sums cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .abelian import Character
from .cyclotomic import CyclotomicInt, root_of_unity
from .dicyclic import DicElement, DicyclicGroup

Matrix = list[list[CyclotomicInt]]


def rep_conductor(G: DicyclicGroup) -> int:
    return math.lcm(G.A.exponent, 4)


class _Rep:
    dim: int
    conductor: int

    def entries(self, g: DicElement) -> list[tuple[tuple[int, int], int]]:
        raise NotImplementedError

    def matrix(self, g: DicElement) -> Matrix:
        N = self.conductor
        out = [[CyclotomicInt.zero(N) for _ in range(self.dim)] for _ in range(self.dim)]
        for (i, j), e in self.entries(g):
            out[i][j] = root_of_unity(N, e)
        return out

    def character(self, g: DicElement) -> CyclotomicInt:
        return CyclotomicInt.from_exponents(self.conductor, (e for (i, j), e in self.entries(g) if i == j))

    def weighted_sum(self, weights: Mapping[DicElement, int]) -> Matrix:
        """sum_g w(g) rho(g), accumulated as exponent counts per matrix entry."""
        N = self.conductor
        counts = {(i, j): [0] * N for i in range(self.dim) for j in range(self.dim)}
        for g, w in weights.items():
            if w:
                for pos, e in self.entries(g):
                    counts[pos][e] += w
        return [
            [CyclotomicInt.from_exponent_counts(N, counts[(i, j)]) for j in range(self.dim)]
            for i in range(self.dim)
        ]

    def subset_sum(self, elements: Iterable[DicElement]) -> Matrix:
        return self.weighted_sum({g: 1 for g in elements})


@dataclass(frozen=True, eq=False)
class OneDimRep(_Rep):
    """rho(x^eps a) = x_image^eps * pi(a) with pi trivial on A^2."""

    group: DicyclicGroup
    base: Character
    x_exponent: int  # x -> zeta_N^x_exponent, one of +-1, +-i

    dim = 1

    def __post_init__(self) -> None:
        N = self.base.conductor
        if not self.base.trivial_on_squares:
            raise ValueError("one-dimensional reps come from characters trivial on A^2")
        if (2 * self.x_exponent - self.base.exponent_at(self.group.y)) % N:
            raise ValueError("x image must square to pi(y)")

    @property
    def conductor(self) -> int:
        return self.base.conductor

    @property
    def x_image(self) -> CyclotomicInt:
        return root_of_unity(self.conductor, self.x_exponent)

    def exponent_at(self, g: DicElement) -> int:
        e, a = g
        return (e * self.x_exponent + self.base.exponent_at(a)) % self.conductor

    def entries(self, g: DicElement) -> list[tuple[tuple[int, int], int]]:
        return [((0, 0), self.exponent_at(g))]

    @property
    def label(self) -> str:
        names = {0: "1", self.conductor // 4: "i", self.conductor // 2: "-1", 3 * self.conductor // 4: "-i"}
        return f"1d pi={self.group.A.format_element(self.base.index)} x->{names[self.x_exponent]}"


@dataclass(frozen=True, eq=False)
class TwoDimRep(_Rep):
    """R_pi(x) = [[0, pi(y)], [1, 0]], R_pi(a) = diag(pi(a), pi(-a))."""

    group: DicyclicGroup
    pi: Character

    dim = 2

    def __post_init__(self) -> None:
        if self.pi.trivial_on_squares:
            raise ValueError("induced irrep needs a character whose kernel does not contain A^2")

    @property
    def conductor(self) -> int:
        return self.pi.conductor

    def entries(self, g: DicElement) -> list[tuple[tuple[int, int], int]]:
        e, a = g
        N = self.conductor
        ea = self.pi.exponent_at(a)
        if e == 0:
            return [((0, 0), ea), ((1, 1), (-ea) % N)]
        ey = self.pi.exponent_at(self.group.y)
        return [((0, 1), (ey - ea) % N), ((1, 0), ea)]

    @property
    def label(self) -> str:
        return f"2d pi={self.group.A.format_element(self.pi.index)}"


@dataclass(frozen=True)
class IrrepInventory:
    group: DicyclicGroup
    one_dim: tuple[OneDimRep, ...]
    two_dim: tuple[TwoDimRep, ...]

    @property
    def all(self) -> tuple[_Rep, ...]:
        return self.one_dim + self.two_dim

    def dimension_square_sum(self) -> int:
        return sum(r.dim**2 for r in self.all)


def one_dim_reps(G: DicyclicGroup) -> list[OneDimRep]:
    N = rep_conductor(G)
    out = []
    for pi in G.A.characters(N):
        if not pi.trivial_on_squares:
            continue
        ey = pi.exponent_at(G.y)
        if ey == 0:
            lifts = (0, N // 2)
        else:
            assert ey == N // 2
            lifts = (N // 4, 3 * N // 4)
        out.extend(OneDimRep(G, pi, ex) for ex in lifts)
    return out


def induced_rep(G: DicyclicGroup, pi: Character) -> TwoDimRep:
    N = rep_conductor(G)
    if pi.conductor != N:
        pi = Character(G.A, pi.index, N)
    return TwoDimRep(G, pi)


def two_dim_characters(G: DicyclicGroup, conductor: int | None = None) -> list[Character]:
    """All characters of A whose kernel misses part of A^2 (both members of each conjugate pair)."""
    return [pi for pi in G.A.characters(conductor) if not pi.trivial_on_squares]


def irrep_inventory(G: DicyclicGroup) -> IrrepInventory:
    N = rep_conductor(G)
    A = G.A
    two = []
    for pi in two_dim_characters(G, N):
        # representative of {pi, conj pi}: the lexicographically smaller index
        if pi.index <= A.neg(pi.index):
            two.append(TwoDimRep(G, pi))
    inv = IrrepInventory(G, tuple(one_dim_reps(G)), tuple(two))
    if inv.dimension_square_sum() != G.order:
        raise AssertionError(f"sum of squared dimensions {inv.dimension_square_sum()} != {G.order}")
    return inv


def character_inner_product(
    G: DicyclicGroup,
    chi1: Callable[[DicElement], CyclotomicInt],
    chi2: Callable[[DicElement], CyclotomicInt],
) -> Fraction:
    """(chi1 | chi2) = |G|^-1 sum_g chi1(g) conj(chi2(g)), exactly."""
    total = None
    for g in G.elements:
        term = chi1(g) * chi2(g).conj()
        total = term if total is None else total + term
    q = total.as_rational_integer()
    if q is None:
        raise ValueError(f"inner product is not rational: {total}")
    return Fraction(q, G.order)


def trivial_character(G: DicyclicGroup) -> Callable[[DicElement], CyclotomicInt]:
    N = rep_conductor(G)
    return lambda g: CyclotomicInt.integer(N, 1)

