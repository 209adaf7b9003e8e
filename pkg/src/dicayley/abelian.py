"""Finite abelian groups given as products of cyclic factors.

Notation is additive: the identity is the zero tuple and elements are residue
tuples.  Element and character orderings are lexicographic on tuples.
"""

from __future__ import annotations

import itertools
import math
import re
from functools import cached_property
from typing import Iterable, Mapping

from .cyclotomic import CyclotomicInt, root_of_unity

AElement = tuple[int, ...]
MultiSetNat = Mapping[AElement, int]


class AbelianGroup:
    """Z_{n_1} x ... x Z_{n_k} with factors kept in the given order."""

    def __init__(self, factors: Iterable[int]) -> None:
        factors = tuple(int(n) for n in factors)
        if not factors:
            raise ValueError("at least one cyclic factor is required")
        for n in factors:
            if n < 2:
                raise ValueError(f"cyclic factor must be >= 2, got {n}")
        self.factors = factors
        self.order = math.prod(factors)
        self.exponent = math.lcm(*factors)
        self.elements: tuple[AElement, ...] = tuple(
            itertools.product(*(range(n) for n in factors))
        )
        self.index: dict[AElement, int] = {a: i for i, a in enumerate(self.elements)}
        self.zero: AElement = (0,) * len(factors)

    @property
    def spec(self) -> str:
        return "x".join(f"Z{n}" for n in self.factors)

    def __repr__(self) -> str:
        return f"AbelianGroup({self.spec})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, AbelianGroup) and self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __len__(self) -> int:
        return self.order

    def __contains__(self, a: object) -> bool:
        return a in self.index

    def check(self, a: AElement) -> AElement:
        if a not in self.index:
            raise ValueError(f"{a!r} is not an element of {self.spec}")
        return a

    def element(self, value: int | Iterable[int]) -> AElement:
        """Coerce an int (single factor) or tuple to a reduced element."""
        if isinstance(value, int):
            value = (value,)
        value = tuple(value)
        if len(value) != len(self.factors):
            raise ValueError(f"element {value!r} has wrong length for {self.spec}")
        return tuple(v % n for v, n in zip(value, self.factors))

    # group law

    def add(self, a: AElement, b: AElement) -> AElement:
        self.check(a)
        self.check(b)
        return tuple((x + y) % n for x, y, n in zip(a, b, self.factors))

    def sub(self, a: AElement, b: AElement) -> AElement:
        return self.add(a, self.neg(b))

    def neg(self, a: AElement) -> AElement:
        self.check(a)
        return tuple((-x) % n for x, n in zip(a, self.factors))

    def scale(self, k: int, a: AElement) -> AElement:
        return tuple((k * x) % n for x, n in zip(a, self.factors))

    def element_order(self, a: AElement) -> int:
        self.check(a)
        return math.lcm(*(n // math.gcd(x, n) for x, n in zip(a, self.factors)))

    @cached_property
    def add_table(self) -> tuple[tuple[int, ...], ...]:
        idx = self.index
        return tuple(
            tuple(idx[tuple((x + y) % n for x, y, n in zip(a, b, self.factors))] for b in self.elements)
            for a in self.elements
        )

    @cached_property
    def neg_table(self) -> tuple[int, ...]:
        return tuple(self.index[self.neg(a)] for a in self.elements)

    # subgroups and atoms

    def squares_subgroup(self) -> frozenset[AElement]:
        return frozenset(self.scale(2, a) for a in self.elements)

    def two_rank(self) -> int:
        q, r = divmod(self.order, len(self.squares_subgroup()))
        n = q.bit_length() - 1
        assert r == 0 and q == 1 << n
        return n

    def involutions(self) -> list[AElement]:
        return [a for a in self.elements if self.element_order(a) == 2]

    def cyclic_subgroup(self, g: AElement) -> frozenset[AElement]:
        return frozenset(self.scale(k, g) for k in range(self.element_order(g)))

    def atom_of(self, g: AElement) -> frozenset[AElement]:
        """All x with <x> = <g>, i.e. the multiples k*g with k a unit mod ord(g)."""
        n = self.element_order(g)
        return frozenset(self.scale(k, g) for k in range(1, n + 1) if math.gcd(k, n) == 1)

    @cached_property
    def atoms(self) -> tuple[frozenset[AElement], ...]:
        seen: set[AElement] = set()
        out = []
        for a in self.elements:
            if a not in seen:
                atom = self.atom_of(a)
                seen |= atom
                out.append(atom)
        return tuple(out)

    def in_boolean_algebra(self, s: Iterable[AElement]) -> bool:
        s = frozenset(s)
        return all(self.atom_of(self.check(a)) <= s for a in s)

    def atom_violation(self, s: Iterable[AElement]) -> frozenset[AElement] | None:
        """First atom (in element order) that meets s without being contained in it."""
        s = frozenset(s)
        for atom in self.atoms:
            if atom & s and not atom <= s:
                return atom
        return None

    def multiset_in_C(self, f: MultiSetNat) -> bool:
        return self.multiset_violation(f) is None

    def multiset_violation(self, f: MultiSetNat) -> frozenset[AElement] | None:
        """First atom on which f is not constant; f must be total on the group."""
        missing = [a for a in self.elements if a not in f]
        if missing:
            raise ValueError(f"multiset is not total: missing {missing[0]!r}")
        for atom in self.atoms:
            if len({f[a] for a in atom}) > 1:
                return atom
        return None

    def is_symmetric(self, s: Iterable[AElement]) -> bool:
        s = frozenset(s)
        return all(self.neg(a) in s for a in s)

    def subset_product(self, s1: Iterable[AElement], s2: Iterable[AElement]) -> frozenset[AElement]:
        s2 = list(s2)
        return frozenset(self.add(a, b) for a in s1 for b in s2)

    def subset_power(self, s: Iterable[AElement], n: int) -> frozenset[AElement]:
        if n < 0:
            raise ValueError("power must be non-negative")
        s = frozenset(s)
        out = frozenset([self.zero])
        for _ in range(n):
            out = self.subset_product(out, s)
        return out

    # characters

    def characters(self, conductor: int | None = None) -> list[Character]:
        conductor = self.exponent if conductor is None else conductor
        return [Character(self, j, conductor) for j in self.elements]

    # text formats

    def format_element(self, a: AElement) -> str:
        if len(a) == 1:
            return str(a[0])
        return "(" + ",".join(str(x) for x in a) + ")"

    def format_set(self, s: Iterable[AElement]) -> str:
        return "[" + ",".join(self.format_element(a) for a in sorted(s)) + "]"

    def parse_element(self, text: str) -> AElement:
        text = text.strip()
        if text.startswith("(") and text.endswith(")"):
            parts = [p for p in text[1:-1].split(",")]
        else:
            parts = [text]
        try:
            raw = tuple(int(p) for p in parts)
        except ValueError:
            raise ValueError(f"malformed element {text!r}") from None
        if len(raw) != len(self.factors):
            raise ValueError(f"element {text!r} has wrong arity for {self.spec}")
        for v, n in zip(raw, self.factors):
            if not 0 <= v < n:
                raise ValueError(f"residue {v} out of range for Z{n} in {text!r}")
        return raw

    def parse_set(self, text: str) -> frozenset[AElement]:
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError(f"set must be written as [..], got {text!r}")
        body = text[1:-1].strip()
        if not body:
            return frozenset()
        items = re.findall(r"\([^()]*\)|[^,\s()]+", body)
        return frozenset(self.parse_element(t) for t in items)


def parse_group(spec: str) -> AbelianGroup:
    """Parse ``Z4`` or ``Z2xZ6`` style specs."""
    text = spec.strip()
    if not re.fullmatch(r"Z\d+(?:xZ\d+)*", text):
        raise ValueError(f"malformed group spec {spec!r}; expected e.g. Z4 or Z2xZ6")
    return AbelianGroup(int(t) for t in text[1:].split("xZ"))


class Character:
    """Character a -> zeta_N^(sum_i j_i * (N / n_i) * a_i) of an abelian group."""

    def __init__(self, group: AbelianGroup, index: AElement, conductor: int | None = None) -> None:
        conductor = group.exponent if conductor is None else conductor
        if conductor % group.exponent:
            raise ValueError("conductor must be a multiple of the group exponent")
        self.group = group
        self.index = group.check(tuple(index))
        self.conductor = conductor
        self._weights = tuple(j * (conductor // n) for j, n in zip(self.index, group.factors))

    def exponent_at(self, a: AElement) -> int:
        return sum(w * x for w, x in zip(self._weights, a)) % self.conductor

    @cached_property
    def exponents(self) -> tuple[int, ...]:
        """Exponent of zeta_N at every element, in element order."""
        return tuple(self.exponent_at(a) for a in self.group.elements)

    def value(self, a: AElement) -> CyclotomicInt:
        return root_of_unity(self.conductor, self.exponent_at(self.group.check(a)))

    def __call__(self, a: AElement) -> CyclotomicInt:
        return self.value(a)

    def sum_over(self, s: Iterable[AElement]) -> CyclotomicInt:
        """pi(S); the empty sum is 0."""
        counts = [0] * self.conductor
        idx = self.group.index
        ex = self.exponents
        for a in s:
            counts[ex[idx[a]]] += 1
        return CyclotomicInt.from_exponent_counts(self.conductor, counts)

    def weighted_sum(self, f: MultiSetNat) -> CyclotomicInt:
        """pi(A, f) = sum_a f(a) pi(a)."""
        counts = [0] * self.conductor
        idx = self.group.index
        ex = self.exponents
        for a, w in f.items():
            counts[ex[idx[a]]] += w
        return CyclotomicInt.from_exponent_counts(self.conductor, counts)

    def conj(self) -> Character:
        return Character(self.group, self.group.neg(self.index), self.conductor)

    @cached_property
    def trivial_on_squares(self) -> bool:
        return all(self.exponent_at(b) == 0 for b in self.group.squares_subgroup())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.group == other.group and self.index == other.index and self.conductor == other.conductor

    def __hash__(self) -> int:
        return hash((self.group, self.index, self.conductor))

    def __repr__(self) -> str:
        return f"Character({self.group.spec}, {self.index}, N={self.conductor})"
