"""Acceptance gate: each criterion reports one PASS/FAIL line in the terminal summary."""

from __future__ import annotations

import time

import pytest
from conftest import ACCEPTANCE_LINES

from dicayley.abelian import AbelianGroup
from dicayley.criteria import (
    distance_integrality_criterion,
    integrality_criterion,
    inventory_for,
)
from dicayley.dicyclic import DicyclicGroup, make_connection_set, symmetric_connection_sets
from dicayley.graphs import cayley_graph, distance_matrix
from dicayley.representations import character_inner_product, irrep_inventory
from dicayley.spectra import exact_eigenvalues_2x2, float_nearest_integer_gap, phi_matrix
from dicayley.sweep import SweepConfig, _dicyclic, enumerate_dicyclic_groups, generate_instances, run_sweep

RANDOM_SAMPLES = 10_000
RANDOM_SEED = 1


def report(n: int, name: str, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES[n] = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {name} ({detail})"
    assert ok, detail


def timed_sweep(config: SweepConfig):
    t0 = time.perf_counter()
    rep = run_sweep(config)
    return rep, time.perf_counter() - t0


@pytest.fixture(scope="session")
def exhaustive16():
    return timed_sweep(SweepConfig(max_dic_order=16))


def _random(checks):
    return SweepConfig(max_dic_order=32, mode="random", sample_count=RANDOM_SAMPLES, seed=RANDOM_SEED, checks=checks)


@pytest.fixture(scope="session")
def random_integrality():
    return timed_sweep(_random(("integrality",)))


@pytest.fixture(scope="session")
def random_distance():
    return timed_sweep(_random(("distance_integrality",)))


def _by_check(records, check):
    return [r for r in records if r["check"] == check]


def test_criterion_1_inventory():
    t0 = time.perf_counter()
    groups = enumerate_dicyclic_groups(32)
    problems = []
    for G in groups:
        A = G.A
        inv = irrep_inventory(G)
        n = A.two_rank()
        if len(inv.one_dim) != 2 ** (n + 1) or len(inv.two_dim) != (A.order - 2**n) // 2:
            problems.append(f"{G}: counts")
        if inv.dimension_square_sum() != 2 * A.order:
            problems.append(f"{G}: dimension sum")
        tables = set()
        for rep in inv.all:
            if character_inner_product(G, rep.character, rep.character) != 1:
                problems.append(f"{G}: {rep.label} not irreducible")
            tables.add(tuple(rep.character(g) for g in G.elements))
        if len(tables) != len(inv.all):
            problems.append(f"{G}: repeated character")
    elapsed = time.perf_counter() - t0
    ok = not problems and elapsed < 10 and len(groups) > 0
    report(1, "representation inventory", ok, f"{len(groups)} groups, {len(problems)} problems, {elapsed:.1f}s < 10s")


def test_criterion_2_integrality(exhaustive16, random_integrality):
    (ex, t_ex), (rnd, t_rnd) = exhaustive16, random_integrality
    ex_recs = _by_check(ex.records, "integrality")
    rnd_recs = _by_check(rnd.records, "integrality")
    bad = [r for r in ex_recs + rnd_recs if not r["agreement"]]
    expected_ex = sum(len(symmetric_connection_sets(G)) for G in enumerate_dicyclic_groups(16))
    # the exhaustive campaign also runs every other check, so this total is an upper bound
    elapsed = t_rnd + t_ex
    ok = not bad and len(ex_recs) == expected_ex and len(rnd_recs) == RANDOM_SAMPLES and elapsed < 300
    report(
        2,
        "integrality criterion == Babai oracle == adjacency spectrum",
        ok,
        f"{len(ex_recs)} exhaustive + {len(rnd_recs)} random, {len(bad)} disagreements, {elapsed:.0f}s < 300s",
    )


def test_criterion_3_distance_integrality(exhaustive16, random_distance):
    (ex, t_ex), (rnd, t_rnd) = exhaustive16, random_distance
    ex_recs = _by_check(ex.records, "distance_integrality")
    rnd_recs = _by_check(rnd.records, "distance_integrality")
    bad = [r for r in ex_recs + rnd_recs if not r["agreement"]]
    expected_ex = sum(
        1 for G in enumerate_dicyclic_groups(16) for S in symmetric_connection_sets(G) if S.generating
    )
    elapsed = t_rnd + t_ex
    ok = not bad and len(ex_recs) == expected_ex and len(rnd_recs) > 0 and elapsed < 600
    report(
        3,
        "distance criterion == HL oracle == distance spectrum",
        ok,
        f"{len(ex_recs)} exhaustive + {len(rnd_recs)} random connected, {len(bad)} disagreements, {elapsed:.0f}s < 600s",
    )


def test_criterion_4_distance_powers(exhaustive16):
    ex, _ = exhaustive16
    recs = _by_check(ex.records, "distance_powers")
    expected = 0
    for G in enumerate_dicyclic_groups(16):
        for S in symmetric_connection_sets(G):
            if S.generating and G.A.in_boolean_algebra(S.s1) and G.A.in_boolean_algebra(S.s2):
                expected += 1
    bad = [r for r in recs if not r["holds"]]
    subsets = sum(r["oracle"]["subsets_tested"] for r in recs)
    ok = not bad and len(recs) == expected > 0
    report(4, "distance powers", ok, f"{len(recs)} instances, {subsets} distance sets, {len(bad)} violations")


def test_criterion_5_proposition(exhaustive16):
    ex, _ = exhaustive16
    recs = _by_check(ex.records, "proposition")
    bad = [r for r in recs if not (r["oracle"]["condition3"] and r["oracle"]["coset_invariant"])]
    mismatched = [r for r in recs if not r["agreement"]]
    ok = not bad and not mismatched and len(recs) == len(_by_check(ex.records, "distance_integrality"))
    report(5, "pi(A, l_S(x.)) = 0 whenever pi(y) = -1", ok, f"{len(recs)} generating sets, {len(bad)} violations")


def test_criterion_6_equivalence(exhaustive16):
    ex, _ = exhaustive16
    recs = _by_check(ex.records, "equivalence")
    bad = [r for r in recs if not (r["holds"] and r["agreement"])]
    ok = not bad and len(recs) > 0
    report(6, "integral <=> distance integral when S2 = -S2", ok, f"{len(recs)} instances, {len(bad)} violations")


def test_criterion_7_worked_examples():
    q8 = DicyclicGroup(AbelianGroup([4]), (2,))
    checks = {}
    v = integrality_criterion(q8, make_connection_set(q8, set(), set(q8.A.elements)), oracles=True)
    checks["Q8 S=xA spectrum {4,0^6,-4}"] = v.holds and v.oracle_agreement and v.details["eigenvalues"] == (
        (4, 1),
        (0, 6),
        (-4, 1),
    )
    z8 = DicyclicGroup(AbelianGroup([8]), (4,))
    v = integrality_criterion(z8, make_connection_set(z8, set(), {(0,), (1,), (4,), (5,)}), oracles=True)
    checks["Z8 y=4 S2={0,1,4,5} witness 8"] = (
        not v.holds and v.oracle_agreement and v.witness[0].startswith("|pi(S2)|^2 = 8 ") and v.witness[1] == "2"
    )
    S = make_connection_set(q8, {(1,), (3,)}, {(0,), (2,)})
    integral = integrality_criterion(q8, S, oracles=True)
    dist = distance_integrality_criterion(q8, S, oracles=True)
    rep = next(r for r in inventory_for(q8).two_dim if r.pi.index == (1,))
    phi = phi_matrix(q8, S, rep)
    checks["Q8 S1={1,3} S2={0,2} Phi eigenvalues {-2,-2}"] = (
        integral.holds and integral.oracle_agreement and dist.holds and dist.oracle_agreement
        and exact_eigenvalues_2x2(phi) == (-2, -2)
    )
    failed = [k for k, ok in checks.items() if not ok]
    report(7, "worked examples", not failed, f"{len(checks) - len(failed)}/{len(checks)} exact matches")


def test_criterion_8_float_cross_check(random_integrality, random_distance):
    cfg = _random(("integrality",))
    instances = list(generate_instances(cfg))
    int_recs = _by_check(random_integrality[0].records, "integrality")
    dist_recs = iter(_by_check(random_distance[0].records, "distance_integrality"))
    assert len(instances) == len(int_recs) == RANDOM_SAMPLES
    mismatches = 0
    compared = 0
    for (factors, y, s1, s2), rec in zip(instances, int_recs):
        G = _dicyclic(factors, y)
        S = make_connection_set(G, s1, s2)
        graph = cayley_graph(G, S)
        exact = rec["oracle"]["spectrum"]
        gap = float_nearest_integer_gap(graph.adjacency)
        mismatches += (gap < 1e-6) != exact
        compared += 1
        if S.generating:
            drec = next(dist_recs)
            assert (drec["s1"], drec["s2"]) == (rec["s1"], rec["s2"])
            gap = float_nearest_integer_gap(distance_matrix(graph))
            mismatches += (gap < 1e-6) != drec["oracle"]["spectrum"]
            compared += 1
    ok = mismatches == 0 and compared >= RANDOM_SAMPLES
    report(8, "exact spectra vs float eigensolver at 1e-6", ok, f"{compared} matrices, {mismatches} mismatches")


def test_criterion_9_determinism(tmp_path):
    cfg = SweepConfig(max_dic_order=32, mode="random", sample_count=400, seed=RANDOM_SEED)
    paths = [tmp_path / "a.jsonl", tmp_path / "b.jsonl"]
    for p in paths:
        run_sweep(cfg, out=p)
    a, b = (p.read_bytes() for p in paths)
    ok = a == b and len(a) > 0
    report(9, "byte-identical JSONL for identical seeds", ok, f"{len(a.splitlines())} records, {len(a)} bytes")

