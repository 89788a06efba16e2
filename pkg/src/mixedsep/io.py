"""Graph files, DOT export and JSON query results.

Graph file grammar, one statement per line::

    u -> v      directed edge
    u <-> v     bidirected edge
    node u      vertex, possibly isolated
    # ...       comment (also allowed after a statement)
"""
from __future__ import annotations

import json
import re

from .augmentation import UndirectedGraph, Walk
from .errors import GraphError, ParseError
from .graph import Edge, EdgeKind, MixedGraph, check_vertex_name
from .separation import Certificate, SeparationDecision, SeparationQuery

_EDGE_RE = re.compile(r"^(\S+?)\s*(<->|->)\s*(\S+)$")
_NODE_RE = re.compile(r"^node\s+(\S+)$")


def parse_graph_file(text: str) -> MixedGraph:
    vertices = []
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            m = _NODE_RE.match(line)
            if m:
                vertices.append(check_vertex_name(m.group(1)))
                continue
            m = _EDGE_RE.match(line)
            if not m:
                raise ParseError(lineno, f"cannot parse statement {line!r}")
            u, arrow, v = m.groups()
            kind = EdgeKind.DIRECTED if arrow == "->" else EdgeKind.BIDIRECTED
            edges.append(Edge(kind, check_vertex_name(u), check_vertex_name(v)))
        except ParseError:
            raise
        except GraphError as exc:
            raise ParseError(lineno, str(exc)) from exc
    return MixedGraph(vertices, edges)


def format_graph_file(G: MixedGraph) -> str:
    """Canonical text: isolated vertices as ``node`` lines, then sorted edges."""
    touched = {e.u for e in G.edges} | {e.v for e in G.edges}
    lines = [f"node {v}" for v in G.vertices if v not in touched]
    lines += [str(e) for e in G.edges]
    return "".join(line + "\n" for line in lines)


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def undirected_to_dot(H: UndirectedGraph) -> str:
    lines = ["graph {"]
    lines += [f"  {_quote(v)};" for v in H.vertices]
    lines += [f"  {_quote(a)} -- {_quote(b)};" for a, b in H.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def mixed_to_dot(G: MixedGraph) -> str:
    lines = ["digraph {"]
    lines += [f"  {_quote(v)};" for v in G.vertices]
    for e in G.edges:
        attr = "" if e.is_directed else " [dir=both]"
        lines.append(f"  {_quote(e.u)} -> {_quote(e.v)}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def walk_record(walk: Walk) -> list:
    return [{"edge": str(st.edge), "from": st.source, "to": st.target} for st in walk.steps]


def witness_record(witness):
    if witness is None:
        return None
    if isinstance(witness, Certificate):
        return {
            "a_star": sorted(witness.a_star),
            "b_star": sorted(witness.b_star),
            "v_star": sorted(witness.v_star),
        }
    return {"start": witness.start, "steps": walk_record(witness)}


def query_result(q: SeparationQuery, decision: SeparationDecision, criterion: str = None,
                 timing_micros: int = 0, verdicts: dict = None) -> dict:
    record = {
        "a": sorted(q.a),
        "b": sorted(q.b),
        "c": sorted(q.c),
        "criterion": criterion or decision.criterion,
        "separated": decision.separated,
        "timing_micros": int(timing_micros),
        "witness": witness_record(decision.witness),
    }
    if verdicts is not None:
        record["verdicts"] = dict(sorted(verdicts.items()))
    return record


def dumps(record) -> str:
    return json.dumps(record, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
