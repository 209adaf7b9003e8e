"""Exhaustive and seeded random sweep campaigns over (A, y, S)."""

from __future__ import annotations

import csv
import itertools
import json
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from multiprocessing import Pool
from pathlib import Path
from typing import Any, Iterable, Iterator

from .abelian import AbelianGroup, parse_group
from .criteria import (
    DistancePowerBuilder,
    Verdict,
    boolean_pair_equivalence,
    distance_integrality_criterion,
    distance_power_sets,
    equivalence_theorem_check,
    integrality_criterion,
    proposition_conditions,
)
from .dicyclic import DicyclicGroup, inverse_classes, make_connection_set

ALL_CHECKS = ("integrality", "distance_integrality", "distance_powers", "equivalence", "proposition", "boolean_pair")

# (factors, y, s1, s2) with sets as sorted tuples; small and picklable
Instance = tuple[tuple[int, ...], tuple[int, ...], tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]


@dataclass(frozen=True)
class SweepConfig:
    max_dic_order: int = 16
    mode: str = "exhaustive"
    sample_count: int = 0
    seed: int = 0
    jobs: int = 1
    checks: tuple[str, ...] = ALL_CHECKS
    timings: bool = False

    def __post_init__(self) -> None:
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"mode must be exhaustive or random, got {self.mode!r}")
        if self.mode == "random" and self.sample_count < 1:
            raise ValueError("random mode needs sample_count >= 1")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")


@dataclass
class CampaignReport:
    records: list[dict[str, Any]] = field(default_factory=list)
    instances: int = 0

    @property
    def disagreements(self) -> list[dict[str, Any]]:
        return [r for r in self.records if r["agreement"] is False]

    def summary(self) -> dict[str, Any]:
        per_check: dict[str, Counter] = {}
        for r in self.records:
            c = per_check.setdefault(r["check"], Counter())
            c["records"] += 1
            c["holds"] += bool(r["holds"])
            c["agreements"] += r["agreement"] is True
            c["disagreements"] += r["agreement"] is False
        integral = [r for r in self.records if r["check"] == "integrality" and r["holds"]]
        dist = [r for r in self.records if r["check"] == "distance_integrality" and r["holds"]]
        return {
            "instances": self.instances,
            "records": len(self.records),
            "agreements": sum(r["agreement"] is True for r in self.records),
            "disagreements": len(self.disagreements),
            "integral": len(integral),
            "distance_integral": len(dist),
            "asymmetric_integral": len(asymmetric_integral(self.records)),
            "per_check": {k: dict(sorted(v.items())) for k, v in sorted(per_check.items())},
        }


def invariant_factor_forms(order: int) -> list[tuple[int, ...]]:
    """All (n_1, ..., n_k) with n_1 | n_2 | ... | n_k, n_1 >= 2 and product = order."""
    out = []

    def rec(remaining: int, prev: int, acc: tuple[int, ...]) -> None:
        if remaining == 1:
            out.append(acc)
            return
        for n in range(prev, remaining + 1):
            if remaining % n == 0 and n % prev == 0:
                rest = remaining // n
                # later factors are multiples of n, so n^(#rest factors) must divide
                if rest == 1 or rest % n == 0:
                    rec(rest, n, acc + (n,))

    for first in range(2, order + 1):
        if order % first == 0:
            rest = order // first
            if rest == 1 or rest % first == 0:
                rec(rest, first, (first,))
    return sorted(out, key=lambda f: (len(f), f))


def enumerate_dicyclic_groups(max_dic_order: int) -> list[DicyclicGroup]:
    groups = []
    for order in range(2, max_dic_order // 2 + 1, 2):
        for factors in invariant_factor_forms(order):
            A = _abelian(factors)
            if A.exponent < 3:
                continue
            for y in A.involutions():
                groups.append(DicyclicGroup(A, y))
    return groups


@lru_cache(maxsize=None)
def _abelian(factors: tuple[int, ...]) -> AbelianGroup:
    return AbelianGroup(factors)


@lru_cache(maxsize=None)
def _dicyclic(factors: tuple[int, ...], y: tuple[int, ...]) -> DicyclicGroup:
    return DicyclicGroup(_abelian(factors), y)


def _instance(G: DicyclicGroup, s1: Iterable, s2: Iterable) -> Instance:
    return (G.A.factors, G.y, tuple(sorted(s1)), tuple(sorted(s2)))


def generate_instances(config: SweepConfig) -> Iterator[Instance]:
    groups = enumerate_dicyclic_groups(config.max_dic_order)
    if config.mode == "exhaustive":
        for G in groups:
            classes, cosets = inverse_classes(G)
            for m1 in range(1 << len(classes)):
                s1 = [a for i, c in enumerate(classes) if m1 >> i & 1 for a in c]
                for m2 in range(1 << len(cosets)):
                    s2 = [a for i, c in enumerate(cosets) if m2 >> i & 1 for a in c]
                    yield _instance(G, s1, s2)
        return
    rng = random.Random(config.seed)
    if not groups:
        return
    for _ in range(config.sample_count):
        G = groups[rng.randrange(len(groups))]
        classes, cosets = inverse_classes(G)
        s1 = [a for c in classes if rng.getrandbits(1) for a in c]
        s2 = [a for c in cosets if rng.getrandbits(1) for a in c]
        yield _instance(G, s1, s2)


def _witness(v: Verdict) -> dict[str, Any] | None:
    w = v.witness
    if w is None:
        return None
    desc, value = w
    return {"description": desc, "value": value}


def _base_record(G: DicyclicGroup, S) -> dict[str, Any]:
    A = G.A
    return {
        "group": A.spec,
        "y": A.format_element(G.y),
        "s1": A.format_set(S.s1),
        "s2": A.format_set(S.s2),
        "flags": S.flags,
    }


def run_instance(instance: Instance, checks: tuple[str, ...] = ALL_CHECKS, timings: bool = False) -> list[dict[str, Any]]:
    factors, y, s1, s2 = instance
    G = _dicyclic(tuple(factors), tuple(y))
    S = make_connection_set(G, s1, s2)
    base = _base_record(G, S)
    records = []

    def emit(check: str, fn) -> None:
        t0 = time.perf_counter()
        holds, witness, oracle, agreement = fn()
        micros = int((time.perf_counter() - t0) * 1e6) if timings else None
        records.append(
            dict(base, check=check, holds=holds, witness=witness, oracle=oracle, agreement=agreement, micros=micros)
        )

    A = G.A
    s_in_b = A.in_boolean_algebra(S.s1) and A.in_boolean_algebra(S.s2)

    if "integrality" in checks:
        def integrality():
            v = integrality_criterion(G, S, oracles=True)
            oracle = {"babai": v.details["babai"], "spectrum": v.details["spectrum"]}
            return v.holds, _witness(v), oracle, v.oracle_agreement

        emit("integrality", integrality)

    if "boolean_pair" in checks:
        def boolean_pair():
            v = boolean_pair_equivalence(G, S)
            return v.holds, _witness(v), dict(v.details), v.holds

        emit("boolean_pair", boolean_pair)

    if not S.generating:
        return records

    if "distance_integrality" in checks:
        def distance_integrality():
            v = distance_integrality_criterion(G, S, oracles=True)
            oracle = {"hl": v.details["hl"], "spectrum": v.details["spectrum"]}
            return v.holds, _witness(v), oracle, v.oracle_agreement

        emit("distance_integrality", distance_integrality)

    if "proposition" in checks:
        def proposition():
            v = proposition_conditions(G, S)
            di = distance_integrality_criterion(G, S)
            d = v.details
            agree = d["condition3"] and d["coset_invariant"] and (d["condition1"] and d["condition2"]) == di.holds
            return v.holds, _witness(v), dict(d), agree

        emit("proposition", proposition)

    if "equivalence" in checks and S.s2_symmetric:
        def equivalence():
            v = equivalence_theorem_check(G, S, oracles=True)
            return v.holds, _witness(v), dict(v.details), bool(v.holds and v.oracle_agreement)

        emit("equivalence", equivalence)

    if "distance_powers" in checks and s_in_b:
        def distance_powers():
            builder = DistancePowerBuilder(G, S)
            diam = builder.diameter
            tested = 0
            failing = None
            for r in range(1, diam + 1):
                for D in itertools.combinations(range(1, diam + 1), r):
                    tested += 1
                    _, _, v = distance_power_sets(G, S, D, builder=builder)
                    if not v.holds and failing is None:
                        failing = {"D": list(D), "failed": [w[0] for w in v.witnesses]}
            oracle = {"diameter": diam, "subsets_tested": tested}
            return failing is None, failing and {"description": "distance power check failed", "value": failing}, oracle, failing is None

        emit("distance_powers", distance_powers)

    return records


def _run_chunk(args) -> list[dict[str, Any]]:
    instance, checks, timings = args
    return run_instance(instance, checks, timings)


def run_sweep(config: SweepConfig, out: str | Path | None = None) -> CampaignReport:
    """Run the campaign; with ``out`` write JSONL records plus summary JSON and CSV."""
    report = CampaignReport()
    instances = list(generate_instances(config))
    report.instances = len(instances)
    jobs = [(inst, config.checks, config.timings) for inst in instances]
    if config.jobs == 1:
        results = map(_run_chunk, jobs)
        for recs in results:
            report.records.extend(recs)
    else:
        with Pool(config.jobs) as pool:
            chunk = max(1, len(jobs) // (config.jobs * 8))
            for recs in pool.imap(_run_chunk, jobs, chunksize=chunk):
                report.records.extend(recs)
    if out is not None:
        write_report(report, out)
    return report


def record_line(record: dict[str, Any]) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def write_report(report: CampaignReport, out: str | Path) -> None:
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w") as fh:
        for r in report.records:
            fh.write(record_line(r) + "\n")
    summary = report.summary()
    summary["asymmetric_integral_catalog"] = asymmetric_integral(report.records)
    Path(str(out) + ".summary.json").write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    with open(str(out) + ".summary.csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["check", "records", "holds", "agreements", "disagreements"])
        for check, c in summary["per_check"].items():
            writer.writerow([check, c.get("records", 0), c.get("holds", 0), c.get("agreements", 0), c.get("disagreements", 0)])


def asymmetric_integral(records: Iterable[dict[str, Any]]) -> list[dict[str, Any]]:
    """Integral instances with S2 != -S2, each confirmed by the exact spectrum."""
    out = []
    for r in records:
        if r["check"] != "integrality" or not r["holds"]:
            continue
        A = parse_group(r["group"])
        s2 = A.parse_set(r["s2"])
        if all(A.neg(a) in s2 for a in s2):
            continue
        out.append({k: r[k] for k in ("group", "y", "s1", "s2")} | {"spectrum_integral": r["oracle"]["spectrum"]})
    return out


def catalog_asymmetric_integral(config: SweepConfig) -> list[dict[str, Any]]:
    cfg = SweepConfig(
        max_dic_order=config.max_dic_order,
        mode=config.mode,
        sample_count=config.sample_count,
        seed=config.seed,
        jobs=config.jobs,
        checks=("integrality",),
    )
    return asymmetric_integral(run_sweep(cfg).records)


def count_symmetric_sets(G: DicyclicGroup) -> int:
    classes, cosets = inverse_classes(G)
    return 2 ** (len(classes) + len(cosets))


def expected_two_dim_count(A: AbelianGroup) -> int:
    return (A.order - 2 ** A.two_rank()) // 2

