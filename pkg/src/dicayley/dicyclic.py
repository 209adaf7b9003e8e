"""Generalized dicyclic groups Dic(A, y) = <A, x | x^2 = y, x a x^-1 = a^-1>.

An element (eps, a) stands for x^eps * a.  The multiplication rules follow from
the presentation (a x = x a^-1, x^2 = y):

    (0,a)(0,b) = (0, a+b)        (0,a)(1,b) = (1, b-a)
    (1,a)(0,b) = (1, a+b)        (1,a)(1,b) = (0, y+b-a)
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .abelian import AbelianGroup, AElement

DicElement = tuple[int, AElement]


class DicyclicGroup:
    def __init__(self, A: AbelianGroup, y: AElement) -> None:
        if A.order % 2:
            raise ValueError(f"|A| = {A.order} must be even")
        if A.exponent < 3:
            raise ValueError(f"exponent of {A.spec} is {A.exponent}; must be at least 3")
        y = A.check(tuple(y))
        if A.element_order(y) != 2:
            raise ValueError(f"y = {A.format_element(y)} does not have order 2")
        self.A = A
        self.y = y
        self.order = 2 * A.order
        self.identity: DicElement = (0, A.zero)
        self.elements: tuple[DicElement, ...] = tuple((e, a) for e in (0, 1) for a in A.elements)
        self.index: dict[DicElement, int] = {g: i for i, g in enumerate(self.elements)}

    def __repr__(self) -> str:
        return f"Dic({self.A.spec}, y={self.A.format_element(self.y)})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DicyclicGroup) and self.A == other.A and self.y == other.y

    def __hash__(self) -> int:
        return hash((self.A, self.y))

    def check(self, g: DicElement) -> DicElement:
        if g not in self.index:
            raise ValueError(f"{g!r} is not an element of {self!r}")
        return g

    def mul(self, g: DicElement, h: DicElement) -> DicElement:
        (e1, a), (e2, b) = self.check(g), self.check(h)
        A = self.A
        if e2 == 0:
            return (e1, A.add(a, b))
        if e1 == 0:
            return (1, A.sub(b, a))
        return (0, A.add(self.y, A.sub(b, a)))

    def inv(self, g: DicElement) -> DicElement:
        e, a = self.check(g)
        if e == 0:
            return (0, self.A.neg(a))
        return (1, self.A.add(self.y, a))

    @cached_property
    def mul_table(self) -> tuple[tuple[int, ...], ...]:
        idx = self.index
        return tuple(tuple(idx[self.mul(g, h)] for h in self.elements) for g in self.elements)

    @cached_property
    def inv_table(self) -> tuple[int, ...]:
        return tuple(self.index[self.inv(g)] for g in self.elements)

    def format_element(self, g: DicElement) -> str:
        e, a = g
        body = self.A.format_element(a)
        return body if e == 0 else f"x{body}"


def construct_dicyclic(A: AbelianGroup, y: AElement) -> DicyclicGroup:
    return DicyclicGroup(A, y)


@dataclass(frozen=True)
class ConnectionSet:
    """S = S1 u x*S2 together with the validity flags computed on construction."""

    group: DicyclicGroup = field(repr=False, compare=False)
    s1: frozenset[AElement]
    s2: frozenset[AElement]
    identity_free: bool = field(init=False)
    symmetric: bool = field(init=False)
    generating: bool = field(init=False)

    def __post_init__(self) -> None:
        A = self.group.A
        for a in self.s1 | self.s2:
            A.check(a)
        object.__setattr__(self, "identity_free", A.zero not in self.s1)
        sym = all(A.neg(a) in self.s1 for a in self.s1) and all(
            A.add(self.group.y, a) in self.s2 for a in self.s2
        )
        object.__setattr__(self, "symmetric", sym)
        object.__setattr__(self, "generating", len(generated_subgroup(self.group, self)) == self.group.order)

    @property
    def elements(self) -> frozenset[DicElement]:
        return frozenset([(0, a) for a in self.s1] + [(1, a) for a in self.s2])

    @property
    def flags(self) -> dict[str, bool]:
        return {"identity_free": self.identity_free, "symmetric": self.symmetric, "generating": self.generating}

    @property
    def s2_symmetric(self) -> bool:
        A = self.group.A
        return all(A.neg(a) in self.s2 for a in self.s2)

    def require(self, *, generating: bool = False) -> None:
        if not self.identity_free:
            raise ValueError("connection set contains the identity")
        if not self.symmetric:
            raise ValueError("connection set is not closed under inverses (need S1 = -S1 and y + S2 = S2)")
        if generating and not self.generating:
            raise ValueError("connection set does not generate the group (Cayley graph is disconnected)")


def make_connection_set(G: DicyclicGroup, s1: Iterable[AElement], s2: Iterable[AElement]) -> ConnectionSet:
    return ConnectionSet(G, frozenset(tuple(a) for a in s1), frozenset(tuple(a) for a in s2))


def connection_set_from_elements(G: DicyclicGroup, elements: Iterable[DicElement]) -> ConnectionSet:
    s1, s2 = [], []
    for e, a in elements:
        (s2 if e else s1).append(a)
    return make_connection_set(G, s1, s2)


def generated_subgroup(G: DicyclicGroup, S: ConnectionSet) -> frozenset[DicElement]:
    table = G.mul_table
    inv = G.inv_table
    gens = {G.index[g] for g in S.elements}
    gens |= {inv[i] for i in gens}
    start = G.index[G.identity]
    seen = {start}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        row = table[g]
        for s in gens:
            h = row[s]
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return frozenset(G.elements[i] for i in seen)


def word_lengths(G: DicyclicGroup, S: ConnectionSet) -> dict[DicElement, int]:
    """l_S(g): BFS depth of g from the identity in Cay(G, S)."""
    S.require(generating=True)
    table = G.mul_table
    gens = [G.index[g] for g in S.elements]
    start = G.index[G.identity]
    depth = {start: 0}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        row = table[g]
        for s in gens:
            h = row[s]
            if h not in depth:
                depth[h] = depth[g] + 1
                queue.append(h)
    return {G.elements[i]: d for i, d in depth.items()}


def split_lengths(
    G: DicyclicGroup, S: ConnectionSet, lengths: dict[DicElement, int] | None = None
) -> tuple[dict[AElement, int], dict[AElement, int]]:
    """(l_S restricted to A, a -> l_S(x a))."""
    if lengths is None:
        lengths = word_lengths(G, S)
    on_a = {a: lengths[(0, a)] for a in G.A.elements}
    on_xa = {a: lengths[(1, a)] for a in G.A.elements}
    return on_a, on_xa


def symmetric_connection_sets(G: DicyclicGroup) -> list[ConnectionSet]:
    """Every identity-free symmetric S, enumerated via the split criterion.

    S1 ranges over unions of the classes {a, -a} of A \\ {0}; S2 over unions of
    the cosets of <y>.  Order: S1 choice bits vary slowest.
    """
    return [make_connection_set(G, s1, s2) for s1, s2 in _symmetric_pairs(G)]


def inverse_classes(G: DicyclicGroup) -> tuple[list[frozenset[AElement]], list[frozenset[AElement]]]:
    A = G.A
    classes, seen = [], set()
    for a in A.elements:
        if a != A.zero and a not in seen:
            c = frozenset({a, A.neg(a)})
            seen |= c
            classes.append(c)
    cosets, seen = [], set()
    for a in A.elements:
        if a not in seen:
            c = frozenset({a, A.add(G.y, a)})
            seen |= c
            cosets.append(c)
    return classes, cosets


def _symmetric_pairs(G: DicyclicGroup):
    classes, cosets = inverse_classes(G)
    for m1 in range(1 << len(classes)):
        s1 = frozenset().union(*(c for i, c in enumerate(classes) if m1 >> i & 1))
        for m2 in range(1 << len(cosets)):
            s2 = frozenset().union(*(c for i, c in enumerate(cosets) if m2 >> i & 1))
            yield s1, s2
