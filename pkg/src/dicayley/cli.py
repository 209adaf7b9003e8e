"""Command-line front end: ``dicayley <subcommand> ...``.

Exit status is 0 when every route agrees, 2 when the criterion and an oracle
disagree, and 1 on malformed input or a violated precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable

from . import criteria
from .abelian import parse_group
from .dicyclic import ConnectionSet, DicyclicGroup, make_connection_set, split_lengths, word_lengths
from .graphs import cayley_graph, distance_matrix, is_connected, write_edge_list, write_matrix_csv
from .representations import OneDimRep, irrep_inventory
from .sweep import ALL_CHECKS, SweepConfig, asymmetric_integral, run_sweep

EXIT_OK, EXIT_INPUT, EXIT_DISAGREE = 0, 1, 2


class InputError(Exception):
    pass


def _group(args) -> DicyclicGroup:
    A = parse_group(args.group)
    if args.y is None:
        raise InputError("--y is required")
    return DicyclicGroup(A, A.parse_element(args.y))


def _connection_set(args, G: DicyclicGroup) -> ConnectionSet:
    S = make_connection_set(G, G.A.parse_set(args.s1), G.A.parse_set(args.s2))
    S.require()
    return S


def _parse_d(text: str) -> list[int]:
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    try:
        D = [int(t) for t in body.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"malformed distance set {text!r}") from None
    if not D or any(d < 1 for d in D):
        raise InputError("--d must be a non-empty set of positive integers")
    return D


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in obj]
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    return str(obj)


def _emit(args, payload: dict[str, Any]) -> None:
    if args.format == "json":
        text = json.dumps(_jsonable(payload), indent=2, sort_keys=True)
    else:
        lines = []
        for key, value in payload.items():
            if key == "witnesses":
                for desc, val in value:
                    lines.append(f"witness: {desc}" + ("" if val is None else f" = {val}"))
            elif isinstance(value, dict):
                inner = " ".join(f"{k}={_jsonable(v)}" for k, v in value.items())
                lines.append(f"{key}: {inner}")
            else:
                lines.append(f"{key}: {_jsonable(value)}")
        text = "\n".join(lines)
    if getattr(args, "out", None):
        Path(args.out).write_text(text + "\n")
    print(text)


def _verdict_payload(G: DicyclicGroup, S: ConnectionSet, v: criteria.Verdict) -> dict[str, Any]:
    return {
        "check": v.claim_id,
        "group": G.A.spec,
        "y": G.A.format_element(G.y),
        "s1": G.A.format_set(S.s1),
        "s2": G.A.format_set(S.s2),
        "flags": S.flags,
        "holds": v.holds,
        "witnesses": v.witnesses,
        "details": v.details,
        "agreement": v.oracle_agreement,
    }


def _export(args, G: DicyclicGroup, S: ConnectionSet) -> None:
    prefix = getattr(args, "export", None)
    if not prefix:
        return
    graph = cayley_graph(G, S)
    write_matrix_csv(graph.adjacency, f"{prefix}.adjacency.csv")
    write_edge_list(graph, f"{prefix}.edges.txt")
    if is_connected(graph):
        write_matrix_csv(distance_matrix(graph), f"{prefix}.distance.csv")


def _verdict_command(fn: Callable[..., criteria.Verdict], oracles: bool = True):
    def run(args) -> int:
        G = _group(args)
        S = _connection_set(args, G)
        v = fn(G, S, oracles=True) if oracles else fn(G, S)
        _emit(args, _verdict_payload(G, S, v))
        _export(args, G, S)
        if v.oracle_agreement is False:
            return EXIT_DISAGREE
        # claims that are theorems (rather than yes/no criteria) must hold
        if v.claim_id not in ("integrality", "distance_integrality", "cyclic_corollary") and not v.holds:
            return EXIT_DISAGREE
        return EXIT_OK

    return run


def cmd_proposition(args) -> int:
    G = _group(args)
    S = _connection_set(args, G)
    v = criteria.proposition_conditions(G, S)
    di = criteria.distance_integrality_criterion(G, S, oracles=True)
    payload = _verdict_payload(G, S, v)
    d = v.details
    agreement = bool(
        d["condition3"] and d["coset_invariant"] and (d["condition1"] and d["condition2"]) == di.holds and di.oracle_agreement
    )
    payload["agreement"] = agreement
    _emit(args, payload)
    return EXIT_OK if agreement else EXIT_DISAGREE


def cmd_distance_power(args) -> int:
    G = _group(args)
    S = _connection_set(args, G)
    D = _parse_d(args.d)
    s1d, s2d, v = criteria.distance_power_sets(G, S, D)
    payload = _verdict_payload(G, S, v)
    payload["D"] = D
    payload["s1_D"] = G.A.format_set(s1d)
    payload["s2_D"] = G.A.format_set(s2d)
    _emit(args, payload)
    if args.export:
        SD = make_connection_set(G, s1d, s2d)
        _export(args, G, SD)
    return EXIT_OK if v.holds else EXIT_DISAGREE


def cmd_family(args) -> int:
    G = _group(args)
    D = _parse_d(args.d)
    v = criteria.family_corollary_check(G, G.A.parse_set(args.s1), D)
    payload = {"check": v.claim_id, "group": G.A.spec, "y": G.A.format_element(G.y), "D": D, "holds": v.holds,
               "witnesses": v.witnesses, "details": v.details}
    _emit(args, payload)
    return EXIT_OK if v.holds else EXIT_DISAGREE


def cmd_lengths(args) -> int:
    G = _group(args)
    S = _connection_set(args, G)
    S.require(generating=True)
    on_a, on_xa = split_lengths(G, S, word_lengths(G, S))
    A = G.A
    payload = {
        "group": A.spec,
        "y": A.format_element(G.y),
        "l_on_A": {A.format_element(a): on_a[a] for a in A.elements},
        "l_on_xA": {A.format_element(a): on_xa[a] for a in A.elements},
    }
    _emit(args, payload)
    return EXIT_OK


def cmd_irreps(args) -> int:
    G = _group(args)
    inv = irrep_inventory(G)
    A = G.A
    rows = []
    for rep in inv.all:
        if isinstance(rep, OneDimRep):
            x_img = rep.label.split("x->")[1]
            rows.append({"dim": 1, "pi": A.format_element(rep.base.index), "x": x_img})
        else:
            rows.append({"dim": 2, "pi": A.format_element(rep.pi.index), "x": "[[0,pi(y)],[1,0]]"})
    payload = {
        "group": A.spec,
        "y": A.format_element(G.y),
        "order": G.order,
        "one_dim": len(inv.one_dim),
        "two_dim": len(inv.two_dim),
        "dimension_square_sum": inv.dimension_square_sum(),
    }
    if args.format == "json":
        payload["reps"] = rows
        _emit(args, payload)
    else:
        lines = [f"{k}: {v}" for k, v in payload.items()]
        lines.append(f"{'dim':>3}  {'pi':<12} x")
        lines.extend(f"{r['dim']:>3}  {r['pi']:<12} {r['x']}" for r in rows)
        text = "\n".join(lines)
        if args.out:
            Path(args.out).write_text(text + "\n")
        print(text)
    return EXIT_OK


def cmd_atoms(args) -> int:
    A = parse_group(args.group)
    payload = {
        "group": A.spec,
        "order": A.order,
        "exponent": A.exponent,
        "two_rank": A.two_rank(),
        "squares": A.format_set(A.squares_subgroup()),
        "involutions": [A.format_element(a) for a in A.involutions()],
        "atoms": [A.format_set(atom) for atom in A.atoms],
    }
    _emit(args, payload)
    return EXIT_OK


def _sweep_config(args, checks: tuple[str, ...] | None = None) -> SweepConfig:
    if checks is None:
        checks = tuple(c.strip() for c in args.checks.split(",") if c.strip()) if args.checks else ALL_CHECKS
    return SweepConfig(
        max_dic_order=args.max_dic_order,
        mode=args.mode,
        sample_count=args.samples,
        seed=args.seed,
        jobs=args.jobs,
        checks=checks,
        timings=args.timings,
    )


def cmd_sweep(args) -> int:
    config = _sweep_config(args)
    report = run_sweep(config, out=args.out)
    summary = report.summary()
    if args.format == "json":
        print(json.dumps(summary, indent=2, sort_keys=True))
    else:
        for key in ("instances", "records", "agreements", "disagreements", "integral", "distance_integral", "asymmetric_integral"):
            print(f"{key}: {summary[key]}")
        for check, counts in summary["per_check"].items():
            print(f"  {check}: " + " ".join(f"{k}={v}" for k, v in counts.items()))
    return EXIT_DISAGREE if summary["disagreements"] else EXIT_OK


def cmd_catalog(args) -> int:
    config = _sweep_config(args, checks=("integrality",))
    report = run_sweep(config)
    entries = asymmetric_integral(report.records)
    if args.out:
        Path(args.out).write_text(json.dumps(entries, indent=2, sort_keys=True) + "\n")
    if args.format == "json":
        print(json.dumps(entries, indent=2, sort_keys=True))
    else:
        print(f"asymmetric integral instances: {len(entries)}")
        for e in entries:
            print(f"  {e['group']} y={e['y']} s1={e['s1']} s2={e['s2']} spectrum_integral={e['spectrum_integral']}")
    bad = report.disagreements or [e for e in entries if not e["spectrum_integral"]]
    return EXIT_DISAGREE if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dicayley", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, sets: bool = True, y: bool = True) -> None:
        p.add_argument("--group", required=True, help="abelian group, e.g. Z8 or Z2xZ4")
        if y:
            p.add_argument("--y", help="element of order 2, e.g. 4 or (0,2)")
        if sets:
            p.add_argument("--s1", default="[]", help="subset of A, e.g. [1,3]")
            p.add_argument("--s2", default="[]", help="subset of A for the coset xA")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", help="also write the report to this file")

    verdict_cmds = {
        "check-integral": (criteria.integrality_criterion, True),
        "check-distance-integral": (criteria.distance_integrality_criterion, True),
        "check-equivalence": (criteria.equivalence_theorem_check, True),
        "check-boolean-pair": (criteria.boolean_pair_equivalence, False),
        "check-cyclic": (criteria.cyclic_corollary_check, False),
        "check-sufficient": (criteria.sufficient_condition_check, True),
        "check-symmetric-s2": (criteria.symmetric_S2_criterion, True),
    }
    for name, (fn, oracles) in verdict_cmds.items():
        p = sub.add_parser(name, help=(fn.__doc__ or name).strip().splitlines()[0])
        common(p)
        p.add_argument("--export", metavar="PREFIX", help="write adjacency/distance CSV and an edge list")
        p.set_defaults(func=_verdict_command(fn, oracles))

    p = sub.add_parser("check-proposition", help="evaluate the three distance conditions separately")
    common(p)
    p.set_defaults(func=cmd_proposition)

    p = sub.add_parser("distance-power", help="S^D by construction, compared with BFS shells")
    common(p)
    p.add_argument("--d", required=True, help="distance set, e.g. [2] or [1,3]")
    p.add_argument("--export", metavar="PREFIX", help="write files for Cay(G, S^D)")
    p.set_defaults(func=cmd_distance_power)

    p = sub.add_parser("check-family", help="distance powers of S1 u x{0,y}")
    common(p)
    p.add_argument("--d", required=True)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("lengths", help="word lengths on A and on xA")
    common(p)
    p.set_defaults(func=cmd_lengths)

    p = sub.add_parser("irreps", help="irreducible representation inventory")
    common(p, sets=False)
    p.set_defaults(func=cmd_irreps)

    p = sub.add_parser("atoms", help="atoms of the Boolean algebra of A")
    common(p, sets=False, y=False)
    p.set_defaults(func=cmd_atoms)

    for name, func in (("sweep", cmd_sweep), ("catalog", cmd_catalog)):
        p = sub.add_parser(name, help="run a campaign" if name == "sweep" else "integral instances with S2 != -S2")
        p.add_argument("--max-dic-order", type=int, default=16)
        p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
        p.add_argument("--samples", type=int, default=0)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", help="JSONL path (summary JSON/CSV written alongside)" if name == "sweep" else "JSON path")
        p.add_argument("--timings", action="store_true", help="record per-check microseconds (breaks byte-identity)")
        if name == "sweep":
            p.add_argument("--checks", help="comma-separated subset of " + ",".join(ALL_CHECKS))
        p.set_defaults(func=func)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
