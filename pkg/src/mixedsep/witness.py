"""Independent checks of separation witnesses.

These work from the raw edge list with ordinary Python sets and share no code
with the decision procedures, so a passing check is real evidence.
"""
from __future__ import annotations

from .augmentation import Walk
from .graph import EdgeKind, MixedGraph
from .separation import Certificate, SeparationQuery


def walk_problems(G: MixedGraph, walk: Walk, q: SeparationQuery) -> list:
    """Reasons ``walk`` is not m-connecting from q.a to q.b given q.c (empty if it is)."""
    problems = []
    edges = set(G.edges)
    if walk.start not in q.a:
        problems.append(f"start {walk.start!r} not in A")
    if not walk.steps:
        problems.append("empty walk")
        return problems
    if walk.end not in q.b:
        problems.append(f"end {walk.end!r} not in B")
    at = walk.start
    for k, st in enumerate(walk.steps):
        if st.edge not in edges:
            problems.append(f"step {k}: {st.edge} is not an edge of the graph")
        if st.source != at:
            problems.append(f"step {k}: starts at {st.source!r}, walk is at {at!r}")
        at = st.edge.v if st.source == st.edge.u else st.edge.u
    for k in range(1, len(walk.steps)):
        before, after = walk.steps[k - 1], walk.steps[k]
        v = after.source
        head_before = before.edge.kind is EdgeKind.BIDIRECTED or before.edge.v == v
        head_after = after.edge.kind is EdgeKind.BIDIRECTED or after.edge.v == v
        if head_before and head_after:
            if v not in q.c:
                problems.append(f"position {k}: collider {v!r} outside C")
        elif v in q.c:
            problems.append(f"position {k}: non-collider {v!r} in C")
    return problems


def _ancestors(G, S):
    parents = {}
    for e in G.edges:
        if e.kind is EdgeKind.DIRECTED:
            parents.setdefault(e.v, set()).add(e.u)
    out = set(S)
    stack = list(S)
    while stack:
        for p in parents.get(stack.pop(), ()):
            if p not in out:
                out.add(p)
                stack.append(p)
    return out


def _district_closure(edges, start):
    spouses = {}
    for e in edges:
        if e.kind is EdgeKind.BIDIRECTED:
            spouses.setdefault(e.u, set()).add(e.v)
            spouses.setdefault(e.v, set()).add(e.u)
    out = set(start)
    stack = list(start)
    while stack:
        for s in spouses.get(stack.pop(), ()):
            if s not in out:
                out.add(s)
                stack.append(s)
    return out


def certificate_problems(G: MixedGraph, q: SeparationQuery, cert: Certificate) -> list:
    """Reasons ``cert`` fails the A*/B* district-disjointness predicate."""
    problems = []
    v_star = _ancestors(G, q.a | q.b | q.c)
    if set(cert.v_star) != v_star:
        problems.append("V* is not an(A ∪ B ∪ C)")
    if not q.a <= cert.a_star:
        problems.append("A not contained in A*")
    if not q.b <= cert.b_star:
        problems.append("B not contained in B*")
    if cert.a_star & cert.b_star:
        problems.append("A* and B* intersect")
    if (cert.a_star | cert.b_star) & q.c:
        problems.append("A* or B* meets C")
    if set(cert.a_star | cert.b_star | q.c) != v_star:
        problems.append("A* ∪ B* ∪ C differs from V*")
    sub_edges = [e for e in G.edges if e.u in v_star and e.v in v_star]

    def closure(S):
        kids = {e.v for e in sub_edges if e.kind is EdgeKind.DIRECTED and e.u in S}
        return _district_closure(sub_edges, set(S) | kids)

    shared = closure(cert.a_star) & closure(cert.b_star)
    if shared:
        problems.append(f"district closures share {sorted(shared)}")
    return problems


def check_decision(G: MixedGraph, q: SeparationQuery, decision) -> list:
    w = decision.witness
    if w is None:
        return []
    if decision.separated:
        if not isinstance(w, Certificate):
            return ["separated verdict without a certificate"]
        return certificate_problems(G, q, w)
    if not isinstance(w, Walk):
        return ["connected verdict without a walk"]
    return walk_problems(G, w, q)
