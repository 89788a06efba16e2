"""Cross-criterion validation over seeded random graphs."""
from __future__ import annotations

import itertools
import random
from dataclasses import asdict, dataclass, field

from .generate import random_graph
from .io import format_graph_file
from .separation import (
    AUGMENTATION,
    CRITERIA,
    DISTRICT,
    ORACLE,
    ORACLE_MAX_EDGES,
    WALK,
    SeparationQuery,
    msep_augmentation,
    msep_district,
    msep_walk,
    oracle_decision,
)
from .witness import check_decision


@dataclass
class SweepConfig:
    n: int = 4
    graphs: int = 50
    seed: int = 0
    p_dir: float = 0.3
    p_bi: float = 0.2
    samples: int = 64
    oracle_max_edges: int = ORACLE_MAX_EDGES
    criteria: tuple = CRITERIA
    check_witnesses: bool = False

    def __post_init__(self):
        if self.n < 1 or self.graphs < 0 or self.samples < 1:
            raise ValueError("n >= 1, graphs >= 0 and samples >= 1 required")
        unknown = set(self.criteria) - set(CRITERIA)
        if unknown:
            raise ValueError(f"unknown criteria {sorted(unknown)}")


@dataclass
class SweepReport:
    graphs_tested: int = 0
    queries_tested: int = 0
    disagreements: int = 0
    oracle_queries: int = 0
    witness_failures: int = 0
    failures: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


_RUNNERS = {
    WALK: msep_walk,
    AUGMENTATION: msep_augmentation,
    DISTRICT: msep_district,
}


def conditioning_sets(rest: list, samples: int, rng: random.Random):
    """Every subset of ``rest`` if there are at most ``samples`` of them, else a sample."""
    if 2 ** len(rest) <= samples:
        for k in range(len(rest) + 1):
            yield from itertools.combinations(rest, k)
        return
    for _ in range(samples):
        yield tuple(v for v in rest if rng.random() < 0.5)


def singleton_queries(G, samples: int, rng: random.Random):
    vs = G.vertices
    for a, b in itertools.combinations(vs, 2):
        rest = [v for v in vs if v != a and v != b]
        for c in conditioning_sets(rest, samples, rng):
            yield SeparationQuery(a, b, c)


def evaluate(G, q, criteria, oracle_max_edges, check_witnesses=False):
    """Decisions keyed by criterion, plus witness problems found."""
    decisions = {}
    problems = []
    for name in criteria:
        if name == ORACLE:
            if len(G.edges) > oracle_max_edges:
                continue
            d = oracle_decision(G, q, oracle_max_edges)
        else:
            d = _RUNNERS[name](G, q, check_witnesses)
        decisions[name] = d
        if check_witnesses:
            problems += [f"{name}: {p}" for p in check_decision(G, q, d)]
    return decisions, problems


def run_sweep(config: SweepConfig) -> SweepReport:
    rng = random.Random(config.seed)
    report = SweepReport()
    for _ in range(config.graphs):
        G = random_graph(config.n, config.p_dir, config.p_bi, rng)
        report.graphs_tested += 1
        for q in singleton_queries(G, config.samples, rng):
            decisions, problems = evaluate(
                G, q, config.criteria, config.oracle_max_edges, config.check_witnesses)
            report.queries_tested += 1
            if ORACLE in decisions:
                report.oracle_queries += 1
            verdicts = {name: d.separated for name, d in decisions.items()}
            disagree = len(set(verdicts.values())) > 1
            report.disagreements += disagree
            report.witness_failures += bool(problems)
            if (disagree or problems) and len(report.failures) < 5:
                report.failures.append({
                    "graph": format_graph_file(G),
                    "a": sorted(q.a), "b": sorted(q.b), "c": sorted(q.c),
                    "verdicts": verdicts,
                    "problems": problems,
                })
    return report
