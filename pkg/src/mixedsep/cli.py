"""Command line front end.

Exit codes: 0 separated (or success), 1 connected, 2 usage or input error,
3 criteria disagree.
"""
from __future__ import annotations

import argparse
import sys
import time

from . import io
from .augmentation import augmented_graph
from .errors import CriterionDisagreement, GraphError
from .generate import random_graph
from .separation import (
    AUGMENTATION,
    CRITERIA,
    DISTRICT,
    ORACLE,
    ORACLE_MAX_EDGES,
    WALK,
    SeparationQuery,
    build_reduced_graph,
    decide,
)
from .sweep import SweepConfig, run_sweep

EXIT_SEPARATED, EXIT_CONNECTED, EXIT_ERROR, EXIT_DISAGREE = 0, 1, 2, 3

_CRITERION_FLAGS = {"walk": WALK, "augment": AUGMENTATION, "district": DISTRICT, "oracle": ORACLE}


class _Usage(Exception):
    pass


def _names(text: str) -> list:
    return [t.strip() for t in text.split(",") if t.strip()]


def _read_graph(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return io.parse_graph_file(text)


def _query(args) -> SeparationQuery:
    return SeparationQuery(_names(args.a), _names(args.b), _names(args.c))


def cmd_query(args, out) -> int:
    G = _read_graph(args.graph)
    q = _query(args)
    q.masks(G)
    t0 = time.perf_counter_ns()
    if args.criterion == "all":
        decisions = {}
        for name in CRITERIA:
            if name == ORACLE and len(G.edges) > args.oracle_max_edges:
                continue
            decisions[name] = decide(G, q, name, oracle_max_edges=args.oracle_max_edges)
        verdicts = {name: d.separated for name, d in decisions.items()}
        decision = decisions[DISTRICT]
        label = "all"
    else:
        verdicts = None
        decision = decide(G, q, _CRITERION_FLAGS[args.criterion],
                          oracle_max_edges=args.oracle_max_edges)
        label = decision.criterion
    micros = (time.perf_counter_ns() - t0) // 1000 if args.timing else 0

    if verdicts is not None and len(set(verdicts.values())) > 1:
        out.write(io.dumps({"disagreement": verdicts}))
        return EXIT_DISAGREE
    record = io.query_result(q, decision, label, micros, verdicts)
    if args.json:
        out.write(io.dumps(record))
    else:
        verdict = "separated" if decision.separated else "connected"
        out.write(f"{verdict} ({label})\n")
        w = record["witness"]
        if w is not None and "steps" in w:
            out.write(f"walk: {decision.witness}\n")
        elif w is not None:
            for key in ("v_star", "a_star", "b_star"):
                out.write(f"{key}: {','.join(w[key])}\n")
        if args.timing:
            out.write(f"time: {micros} us\n")
    return EXIT_SEPARATED if decision.separated else EXIT_CONNECTED


def cmd_reduce(args, out) -> int:
    G = _read_graph(args.graph)
    reduced = build_reduced_graph(G, _query(args))
    out.write(io.undirected_to_dot(reduced.contracted()))
    return 0


def cmd_augment(args, out) -> int:
    out.write(io.undirected_to_dot(augmented_graph(_read_graph(args.graph))))
    return 0


def cmd_dot(args, out) -> int:
    out.write(io.mixed_to_dot(_read_graph(args.graph)))
    return 0


def cmd_random(args, out) -> int:
    import random

    try:
        G = random_graph(args.n, args.p_dir, args.p_bi, random.Random(args.seed))
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    out.write(io.format_graph_file(G))
    return 0


def cmd_validate(args, out) -> int:
    try:
        config = SweepConfig(
            n=args.n, graphs=args.graphs, seed=args.seed, p_dir=args.p_dir, p_bi=args.p_bi,
            samples=args.samples, oracle_max_edges=args.oracle_max_edges,
            criteria=tuple(_names(args.criteria)), check_witnesses=args.witnesses,
        )
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    report = run_sweep(config)
    out.write(io.dumps(report.to_dict()))
    ok = report.disagreements == 0 and report.witness_failures == 0
    return 0 if ok else EXIT_DISAGREE


def _sets(p):
    p.add_argument("graph", help="graph file, '-' for stdin")
    p.add_argument("--a", default="", help="comma separated vertices")
    p.add_argument("--b", default="", help="comma separated vertices")
    p.add_argument("--c", default="", help="comma separated vertices")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mixedsep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("query", help="decide whether A and B are m-separated given C")
    _sets(p)
    p.add_argument("--criterion", default="district", choices=sorted(_CRITERION_FLAGS) + ["all"])
    p.add_argument("--json", action="store_true")
    p.add_argument("--timing", action="store_true", help="report elapsed time (breaks byte-determinism)")
    p.add_argument("--oracle-max-edges", type=int, default=ORACLE_MAX_EDGES)
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("reduce", help="DOT of the reduced graph G' with C-districts contracted")
    _sets(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("augment", help="DOT of the augmented graph")
    p.add_argument("graph")
    p.set_defaults(func=cmd_augment)

    p = sub.add_parser("dot", help="DOT of the mixed graph itself")
    p.add_argument("graph")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("random", help="seeded random graph file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p-dir", type=float, default=0.3)
    p.add_argument("--p-bi", type=float, default=0.2)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("validate", help="cross-check all criteria on random graphs")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--graphs", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p-dir", type=float, default=0.3)
    p.add_argument("--p-bi", type=float, default=0.2)
    p.add_argument("--samples", type=int, default=64,
                   help="conditioning sets per pair when there are more subsets than this")
    p.add_argument("--oracle-max-edges", type=int, default=ORACLE_MAX_EDGES)
    p.add_argument("--criteria", default=",".join(CRITERIA))
    p.add_argument("--witnesses", action="store_true", help="also validate every witness")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (GraphError, OSError, _Usage) as exc:
        print(f"mixedsep: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except CriterionDisagreement as exc:
        print(f"mixedsep: criteria disagree: {exc}", file=sys.stderr)
        return EXIT_DISAGREE


if __name__ == "__main__":
    sys.exit(main())
