"""Executable integrality and distance-integrality criteria for Cay(Dic(A, y), S).

Every function returns a :class:`Verdict`.  Passing ``oracles=True`` also runs
the independent spectral routes (representation oracle and exact matrix
spectrum) and records whether all routes agree.

Perfect-square tests on character sums use |pi(T)|^2 = pi(T) * conj(pi(T)).
Because pi(T^-1) = conj(pi(T)) for a character pi, the requirement
"pi(S2) pi(S2^-1) = alpha^2 for some integer alpha" is exactly
"|pi(S2)|^2 is a rational integer and a perfect square".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Iterable

from .abelian import AElement, Character
from .cyclotomic import CyclotomicInt, is_perfect_square_value
from .dicyclic import (
    ConnectionSet,
    DicElement,
    DicyclicGroup,
    generated_subgroup,
    make_connection_set,
    split_lengths,
    word_lengths,
)
from .graphs import cayley_graph, distance_matrix, distance_power, is_connected
from .representations import IrrepInventory, irrep_inventory, two_dim_characters
from .spectra import babai_witness, hl_witness, integer_spectrum


@dataclass
class Verdict:
    claim_id: str
    holds: bool
    witnesses: list[tuple[str, Any]] = field(default_factory=list)
    oracle_agreement: bool | None = None
    details: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.holds and not self.witnesses:
            raise ValueError(f"{self.claim_id}: failing verdict needs a witness")

    @property
    def witness(self) -> tuple[str, Any] | None:
        return self.witnesses[0] if self.witnesses else None


@lru_cache(maxsize=64)
def inventory_for(G: DicyclicGroup) -> IrrepInventory:
    return irrep_inventory(G)


@lru_cache(maxsize=64)
def _two_dim_chars(G: DicyclicGroup) -> tuple[Character, ...]:
    return tuple(two_dim_characters(G))


def _fmt(G: DicyclicGroup, a: AElement) -> str:
    return G.A.format_element(a)


def _fmt_set(G: DicyclicGroup, s: Iterable[AElement]) -> str:
    return G.A.format_set(s)


def _first_bad_square(G: DicyclicGroup, values) -> tuple[Character, CyclotomicInt] | None:
    for pi, z in values:
        sq = z.abs_square()
        if not is_perfect_square_value(sq):
            return pi, sq
    return None


# integrality


def integrality_criterion(G: DicyclicGroup, S: ConnectionSet, *, oracles: bool = False) -> Verdict:
    """Cay(G, S) is integral iff S1 is a union of atoms and |pi(S2)|^2 is a
    perfect square for every character pi of A with A^2 outside its kernel."""
    S.require()
    A = G.A
    witnesses = []
    bad_atom = A.atom_violation(S.s1)
    cond1 = bad_atom is None
    if not cond1:
        witnesses.append(("S1 not a union of atoms; atom", _fmt_set(G, bad_atom)))
    bad = _first_bad_square(G, ((pi, pi.sum_over(S.s2)) for pi in _two_dim_chars(G)))
    cond2 = bad is None
    if not cond2:
        pi, sq = bad
        witnesses.append((f"|pi(S2)|^2 = {sq} is not a perfect square; character", _fmt(G, pi.index)))
    verdict = Verdict("integrality", cond1 and cond2, witnesses, details={"condition1": cond1, "condition2": cond2})
    if oracles:
        rep = babai_witness(G, S, inventory_for(G))
        spec = integer_spectrum(cayley_graph(G, S).adjacency)
        verdict.details["babai"] = rep is None
        verdict.details["spectrum"] = spec.is_integral
        verdict.details["eigenvalues"] = spec.eigenvalues
        verdict.oracle_agreement = verdict.holds == (rep is None) == spec.is_integral
    return verdict


def cyclic_corollary_check(G: DicyclicGroup, S: ConnectionSet) -> Verdict:
    """A cyclic: integral iff S1 in B(A) and 2*chi_{R_pi}((xS2)^(2)) is a square
    for the chosen representative of each conjugate pair pi, conj(pi)."""
    A = G.A
    if len(A.factors) != 1 or A.order < 4:
        raise ValueError("cyclic corollary needs A cyclic of order 2m with m >= 2")
    S.require()
    witnesses = []
    cond1 = A.in_boolean_algebra(S.s1)
    if not cond1:
        witnesses.append(("S1 not a union of atoms; atom", _fmt_set(G, A.atom_violation(S.s1))))
    cond2 = True
    xs2 = [(1, a) for a in sorted(S.s2)]
    for rep in inventory_for(G).two_dim:
        # product multiset (xS2)^(2): all ordered pairs, with repetition
        total = CyclotomicInt.zero(rep.conductor)
        for g, h in itertools.product(xs2, repeat=2):
            total = total + rep.character(G.mul(g, h))
        if not is_perfect_square_value(total * 2):
            cond2 = False
            witnesses.append(
                (f"2*chi((xS2)^(2)) = {total * 2} is not a perfect square; character", _fmt(G, rep.pi.index))
            )
            break
    holds = cond1 and cond2
    theorem = integrality_criterion(G, S)
    agrees = holds == theorem.holds
    return Verdict(
        "cyclic_corollary",
        holds,
        witnesses,
        oracle_agreement=agrees,
        details={"condition1": cond1, "condition2": cond2, "agrees_with_theorem": agrees},
    )


def boolean_pair_equivalence(G: DicyclicGroup, S: ConnectionSet) -> Verdict:
    """(S1, S2 in B(A)) <=> (Cay(G, S) integral and S2 = -S2)."""
    S.require()
    A = G.A
    left = A.in_boolean_algebra(S.s1) and A.in_boolean_algebra(S.s2)
    right = integrality_criterion(G, S).holds and S.s2_symmetric
    holds = left == right
    witnesses = [] if holds else [("biconditional violated", {"left": left, "right": right})]
    return Verdict("boolean_pair", holds, witnesses, details={"left": left, "right": right})


# distance powers


class DistancePowerBuilder:
    """Computes S^D for a fixed generating S with S1, S2 in B(A), memoising per distance."""

    def __init__(self, G: DicyclicGroup, S: ConnectionSet) -> None:
        S.require(generating=True)
        A = G.A
        if not (A.in_boolean_algebra(S.s1) and A.in_boolean_algebra(S.s2)):
            raise ValueError("distance power construction needs S1 and S2 in B(A)")
        self.G, self.S = G, S
        self.lengths = word_lengths(G, S)
        self.diameter = max(self.lengths.values())
        self._s1_pow = [frozenset([G.identity])]
        self._xs2_pow = [frozenset([G.identity])]
        self._blocks: dict[tuple[int, int], frozenset[DicElement]] = {}
        self._single: dict[int, frozenset[DicElement]] = {}

    def _power(self, cache: list, gens: frozenset[DicElement], n: int) -> frozenset[DicElement]:
        G = self.G
        while len(cache) <= n:
            cache.append(frozenset(G.mul(g, s) for g in cache[-1] for s in gens))
        return cache[n]

    def s1_power(self, k: int) -> frozenset[DicElement]:
        return self._power(self._s1_pow, frozenset((0, a) for a in self.S.s1), k)

    def xs2_power(self, ell: int) -> frozenset[DicElement]:
        return self._power(self._xs2_pow, frozenset((1, a) for a in self.S.s2), ell)

    def block(self, k: int, ell: int) -> frozenset[DicElement]:
        """S1^(k) (xS2)^(ell)."""
        key = (k, ell)
        if key not in self._blocks:
            G = self.G
            self._blocks[key] = frozenset(G.mul(g, h) for g in self.s1_power(k) for h in self.xs2_power(ell))
        return self._blocks[key]

    def single(self, d: int) -> frozenset[DicElement]:
        """Union over k + l = d of the intersection over m1 + m2 <= d-1 of block(k,l) minus block(m1,m2)."""
        if d not in self._single:
            lower = [(m1, m2) for total in range(d) for m1 in range(total + 1) for m2 in [total - m1]]
            out: set[DicElement] = set()
            for k in range(d + 1):
                part = set(self.block(k, d - k))
                for m1, m2 in lower:
                    part -= self.block(m1, m2)
                out |= part
            self._single[d] = frozenset(out)
        return self._single[d]

    def constructive(self, D: Iterable[int]) -> frozenset[DicElement]:
        return frozenset().union(*(self.single(d) for d in D))

    def shells(self, D: Iterable[int]) -> frozenset[DicElement]:
        D = set(D)
        return frozenset(g for g, ell in self.lengths.items() if ell in D)

    def xs2_identity_holds(self, ell: int) -> bool:
        """(xS2)^(l) = S2^(l) for even l and x S2^(l) for odd l."""
        A = self.G.A
        s2_pow = A.subset_power(self.S.s2, ell)
        eps = ell % 2
        return self.xs2_power(ell) == frozenset((eps, a) for a in s2_pow)


def distance_power_sets(
    G: DicyclicGroup,
    S: ConnectionSet,
    D: Iterable[int],
    *,
    builder: DistancePowerBuilder | None = None,
) -> tuple[frozenset[AElement], frozenset[AElement], Verdict]:
    D = sorted(set(D))
    if not D or any(d < 1 for d in D):
        raise ValueError("D must be a non-empty set of positive integers")
    b = builder or DistancePowerBuilder(G, S)
    A = G.A
    constructive = b.constructive(D)
    shells = b.shells(D)
    s1d = frozenset(a for e, a in constructive if e == 0)
    s2d = frozenset(a for e, a in constructive if e == 1)
    SD = make_connection_set(G, s1d, s2d)
    base = cayley_graph(G, S)
    power = distance_power(base, D)
    checks = {
        "constructive_equals_shells": constructive == shells,
        "identity_free": SD.identity_free,
        "symmetric": SD.symmetric,
        "s1d_in_B": A.in_boolean_algebra(s1d),
        "s2d_in_B": A.in_boolean_algebra(s2d),
        "s2d_symmetric": SD.s2_symmetric,
        "power_is_cayley_graph": bool((cayley_graph(G, SD).adjacency == power.adjacency).all()),
        "integral": integer_spectrum(power.adjacency).is_integral,
        "xs2_identity": all(b.xs2_identity_holds(ell) for ell in range(max(D) + 1)),
    }
    if 1 in D:
        checks["connected"] = SD.generating
    witnesses = [(f"check failed: {name}", None) for name, ok in checks.items() if not ok]
    verdict = Verdict("distance_powers", not witnesses, witnesses, details=checks)
    return s1d, s2d, verdict


# distance integrality


def _distance_conditions(G: DicyclicGroup, on_a: dict, on_xa: dict):
    A = G.A
    witnesses = []
    bad_atom = A.multiset_violation(on_a)
    cond1 = bad_atom is None
    if not cond1:
        witnesses.append(("l_S not constant on atom", _fmt_set(G, bad_atom)))
    bad = _first_bad_square(G, ((pi, pi.weighted_sum(on_xa)) for pi in _two_dim_chars(G)))
    cond2 = bad is None
    if not cond2:
        pi, sq = bad
        witnesses.append((f"|pi(A, l_S(x.))|^2 = {sq} is not a perfect square; character", _fmt(G, pi.index)))
    return cond1, cond2, witnesses


def distance_integrality_criterion(G: DicyclicGroup, S: ConnectionSet, *, oracles: bool = False) -> Verdict:
    """Distance integral iff l_S is atom-constant on A and |pi(A, l_S(x.))| is an
    integer for every character pi with A^2 outside its kernel."""
    S.require(generating=True)
    lengths = word_lengths(G, S)
    on_a, on_xa = split_lengths(G, S, lengths)
    cond1, cond2, witnesses = _distance_conditions(G, on_a, on_xa)
    verdict = Verdict(
        "distance_integrality", cond1 and cond2, witnesses, details={"condition1": cond1, "condition2": cond2}
    )
    if oracles:
        rep = hl_witness(G, S, inventory_for(G))
        spec = integer_spectrum(distance_matrix(cayley_graph(G, S)))
        verdict.details["hl"] = rep is None
        verdict.details["spectrum"] = spec.is_integral
        verdict.details["eigenvalues"] = spec.eigenvalues
        verdict.oracle_agreement = verdict.holds == (rep is None) == spec.is_integral
    return verdict


def proposition_conditions(G: DicyclicGroup, S: ConnectionSet) -> Verdict:
    """Atom-constancy, the square test, and vanishing of pi(A, l_S(x.)) whenever
    pi(y) = -1, each reported on its own.  The last one should never fail."""
    S.require(generating=True)
    A = G.A
    lengths = word_lengths(G, S)
    on_a, on_xa = split_lengths(G, S, lengths)
    cond1, cond2, witnesses = _distance_conditions(G, on_a, on_xa)
    cond3 = True
    for pi in A.characters():
        if pi.exponent_at(G.y) == 0:
            continue
        z = pi.weighted_sum(on_xa)
        if not z.is_zero():
            cond3 = False
            witnesses.append((f"pi(A, l_S(x.)) = {z} != 0 with pi(y) = -1; character", _fmt(G, pi.index)))
            break
    # l_S(x^3 a) = l_S(x (y + a)) = l_S(x a)
    coset_invariant = all(on_xa[a] == on_xa[A.add(G.y, a)] for a in A.elements)
    if not coset_invariant:
        witnesses.append(("l_S(x(y+a)) != l_S(xa)", None))
    holds = cond1 and cond2 and cond3
    return Verdict(
        "proposition",
        holds,
        witnesses,
        details={
            "condition1": cond1,
            "condition2": cond2,
            "condition3": cond3,
            "coset_invariant": coset_invariant,
        },
    )


def _c_membership(G: DicyclicGroup, S: ConnectionSet) -> tuple[bool, bool]:
    on_a, on_xa = split_lengths(G, S)
    return G.A.multiset_in_C(on_a), G.A.multiset_in_C(on_xa)


def sufficient_condition_check(G: DicyclicGroup, S: ConnectionSet, *, oracles: bool = False) -> Verdict:
    """(A, l_S), (A, l_S(x.)) in C(A) implies distance integral."""
    S.require(generating=True)
    in_a, in_xa = _c_membership(G, S)
    premise = in_a and in_xa
    di = distance_integrality_criterion(G, S, oracles=oracles)
    holds = (not premise) or di.holds
    if oracles:
        holds = holds and ((not premise) or (di.details["hl"] and di.details["spectrum"]))
    witnesses = [] if holds else [("premise holds but graph is not distance integral", None)]
    return Verdict(
        "sufficient_condition",
        holds,
        witnesses,
        oracle_agreement=di.oracle_agreement,
        details={"premise": premise, "distance_integral": di.holds},
    )


def symmetric_S2_criterion(G: DicyclicGroup, S: ConnectionSet, *, oracles: bool = False) -> Verdict:
    """Under S2 = -S2: distance integral iff both length multisets are in C(A)."""
    S.require(generating=True)
    if not S.s2_symmetric:
        raise ValueError("hypothesis S2 = -S2 not satisfied")
    in_a, in_xa = _c_membership(G, S)
    premise = in_a and in_xa
    di = distance_integrality_criterion(G, S, oracles=oracles)
    holds = premise == di.holds
    witnesses = [] if holds else [("biconditional violated", {"in_C": premise, "distance_integral": di.holds})]
    return Verdict(
        "symmetric_s2",
        holds,
        witnesses,
        oracle_agreement=di.oracle_agreement,
        details={"premise": premise, "distance_integral": di.holds},
    )


def equivalence_theorem_check(G: DicyclicGroup, S: ConnectionSet, *, oracles: bool = False) -> Verdict:
    """Under S2 = -S2 and <S> = G: integral iff distance integral."""
    S.require(generating=True)
    if not S.s2_symmetric:
        raise ValueError("hypothesis S2 = -S2 not satisfied")
    integral = integrality_criterion(G, S, oracles=oracles)
    dist = distance_integrality_criterion(G, S, oracles=oracles)
    holds = integral.holds == dist.holds
    witnesses = [] if holds else [("integral != distance integral", {"integral": integral.holds, "distance_integral": dist.holds})]
    agreement = None
    if oracles:
        agreement = bool(integral.oracle_agreement and dist.oracle_agreement)
    return Verdict(
        "equivalence",
        holds,
        witnesses,
        oracle_agreement=agreement,
        details={"integral": integral.holds, "distance_integral": dist.holds},
    )


def family_corollary_check(G: DicyclicGroup, s1: Iterable[AElement], D: Iterable[int]) -> Verdict:
    """S = S1 u x{0, y}: every distance power is an integral Cayley graph with
    S2^D = -S2^D, connected if 1 in D, and distance integral when connected."""
    A = G.A
    s1 = frozenset(s1)
    if A.zero in s1:
        raise ValueError("S1 must not contain the identity")
    if not A.in_boolean_algebra(s1):
        raise ValueError("S1 must be a union of atoms")
    if not _generates_A(G, s1):
        raise ValueError("S1 must generate A")
    S = make_connection_set(G, s1, {A.zero, G.y})
    D = sorted(set(D))
    checks = {"base_connected": S.generating}
    s1d, s2d, dp = distance_power_sets(G, S, D)
    power = distance_power(cayley_graph(G, S), D)
    checks["power_integral"] = integer_spectrum(power.adjacency).is_integral
    checks["s2d_symmetric"] = dp.details["s2d_symmetric"]
    checks["power_is_cayley_graph"] = dp.details["power_is_cayley_graph"]
    checks["distance_power_theorem"] = dp.holds
    connected = is_connected(power)
    if 1 in D:
        checks["connected_when_1_in_D"] = connected
    if connected:
        SD = make_connection_set(G, s1d, s2d)
        checks["distance_integral"] = integer_spectrum(distance_matrix(power)).is_integral
        checks["distance_integral_criterion"] = distance_integrality_criterion(G, SD).holds
    witnesses = [(f"check failed: {name}", None) for name, ok in checks.items() if not ok]
    details = dict(checks, connected=connected, s1d=_fmt_set(G, s1d), s2d=_fmt_set(G, s2d))
    return Verdict("family_corollary", not witnesses, witnesses, details=details)


def _generates_A(G: DicyclicGroup, s1: frozenset[AElement]) -> bool:
    sub = generated_subgroup(G, make_connection_set(G, s1, ()))
    return len(sub) == G.A.order
