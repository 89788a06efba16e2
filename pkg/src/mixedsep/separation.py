"""Four decision procedures for m-separation in mixed graphs.

``msep_walk``
    breadth-first search for an m-connecting walk.
``msep_augmentation``
    undirected separation in the augmented graph of the ancestral subgraph.
``msep_district``
    the reduced graph G' and the A*/B* district-disjointness test.
``msep_oracle``
    exhaustive enumeration of walks that use each oriented edge at most once.

Every procedure returns a :class:`SeparationDecision` carrying a witness: an
m-connecting :class:`Walk` when the sets are connected, or a
:class:`Certificate` (A*, B*, V*) when they are separated.  The oracle carries
no certificate.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Union

from .augmentation import (
    Step,
    UndirectedGraph,
    Walk,
    _as_set,
    augmented_adjacency,
    check_disjoint,
)
from .errors import CriterionDisagreement, InstanceTooLarge
from .graph import Edge, MixedGraph, VertexSetLike, bit_indices

WALK = "walk"
AUGMENTATION = "augmentation"
DISTRICT = "district"
ORACLE = "oracle"
CRITERIA = (WALK, AUGMENTATION, DISTRICT, ORACLE)

ORACLE_MAX_EDGES = 14


@dataclass(frozen=True)
class SeparationQuery:
    """Is ``a`` m-separated from ``b`` given ``c``?"""

    a: frozenset
    b: frozenset
    c: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "a", _as_set(self.a))
        object.__setattr__(self, "b", _as_set(self.b))
        object.__setattr__(self, "c", _as_set(self.c))

    def masks(self, G: MixedGraph):
        a, b, c = G.mask(self.a), G.mask(self.b), G.mask(self.c)
        if a & b or a & c or b & c:
            check_disjoint(self.a, self.b, self.c)
        return a, b, c

    def swapped(self) -> "SeparationQuery":
        return SeparationQuery(self.b, self.a, self.c)


@dataclass(frozen=True)
class Certificate:
    v_star: frozenset
    a_star: frozenset
    b_star: frozenset


@dataclass(frozen=True)
class SeparationDecision:
    separated: bool
    criterion: str
    witness: Union[Walk, Certificate, None] = None


@dataclass(frozen=True)
class ReducedGraph:
    """G' over V*: skeleton of G[V*] plus edges for collider paths through C.

    ``contraction`` lists the districts of G[C]; :meth:`contracted` merges
    each multi-vertex one into a single node.
    """

    base: UndirectedGraph
    contraction: tuple

    def contracted(self) -> UndirectedGraph:
        rename = {}
        for members in self.contraction:
            if len(members) > 1:
                label = district_label(members)
                for v in members:
                    rename[v] = label
        vertices = {rename.get(v, v) for v in self.base.vertices}
        edges = set()
        for u, v in self.base.edges:
            u, v = rename.get(u, u), rename.get(v, v)
            if u != v:
                edges.add((u, v))
        return UndirectedGraph(vertices, edges)


def district_label(members) -> str:
    return "C={" + ",".join(sorted(members)) + "}"


# -- walk search ---------------------------------------------------------------
#
# Search state: (vertex, arrived-with-arrowhead).  Whether the next step is
# legal depends only on that mark, the arrowhead of the departing edge end and
# C-membership, so two marks per vertex suffice.

_VIA_CHILD, _VIA_PARENT, _VIA_SPOUSE = 0, 1, 2


def _departures(G, i, head, c):
    """(kind, targets, arrives_with_head) moves allowed out of state (i, head)."""
    in_c = (c >> i) & 1
    if head is None or (head is False and not in_c):
        return ((_VIA_CHILD, G._ch[i], True), (_VIA_SPOUSE, G._sp[i], True),
                (_VIA_PARENT, G._pa[i], False))
    if head is False:
        return ()
    if in_c:
        return ((_VIA_SPOUSE, G._sp[i], True), (_VIA_PARENT, G._pa[i], False))
    return ((_VIA_CHILD, G._ch[i], True),)


def _walk_search(G, a, b, c, within):
    """BFS over walk states inside ``G[within]``.

    Returns ``(hit, parent, reached)`` where ``hit`` is the first state on a
    B vertex (or None) and ``reached`` masks every vertex entered.
    """
    seen = {True: 0, False: 0}
    parent = {}
    queue = deque()
    for i in bit_indices(a):
        queue.append((i, None))
    while queue:
        state = queue.popleft()
        i, head = state
        for kind, targets, arrive_head in _departures(G, i, head, c):
            fresh = targets & within & ~seen[arrive_head]
            if not fresh:
                continue
            seen[arrive_head] |= fresh
            for j in bit_indices(fresh):
                nxt = (j, arrive_head)
                parent[nxt] = (state, kind)
                if (b >> j) & 1:
                    return nxt, parent, seen[True] | seen[False]
                queue.append(nxt)
    return None, parent, seen[True] | seen[False]


def _edge_for(G, i, j, kind) -> Edge:
    vs = G.vertices
    if kind == _VIA_CHILD:
        return Edge.directed(vs[i], vs[j])
    if kind == _VIA_PARENT:
        return Edge.directed(vs[j], vs[i])
    return Edge.bidirected(vs[i], vs[j])


def _walk_from_states(G, hit, parent) -> Walk:
    steps = []
    state = hit
    while state[1] is not None:
        prev, kind = parent[state]
        steps.append(Step(_edge_for(G, prev[0], state[0], kind), G.vertices[prev[0]]))
        state = prev
    steps.reverse()
    return Walk(G.vertices[state[0]], steps)


def _certificate(G, a, b, c, vstar, reached) -> Certificate:
    a_star = (a | reached) & vstar & ~c & ~b
    b_star = vstar & ~c & ~a_star
    return Certificate(G.names(vstar), G.names(a_star), G.names(b_star))


def msep_walk(G: MixedGraph, q: SeparationQuery, with_witness: bool = True) -> SeparationDecision:
    a, b, c = q.masks(G)
    hit, parent, _ = _walk_search(G, a, b, c, G._full)
    if hit is not None:
        return SeparationDecision(False, WALK, _walk_from_states(G, hit, parent) if with_witness else None)
    if not with_witness:
        return SeparationDecision(True, WALK)
    # certificate: everything m-connected to A inside the ancestral subgraph
    vstar = G._ancestors(a | b | c)
    hit, _, reached = _walk_search(G, a, b, c, vstar)
    if hit is not None:
        raise CriterionDisagreement("walk search differs between G and its ancestral subgraph")
    return SeparationDecision(True, WALK, _certificate(G, a, b, c, vstar, reached))


# -- turning undirected paths into m-connecting walks ---------------------------


def _single_edge(G, i, j) -> Step:
    if (G._ch[i] >> j) & 1:
        kind = _VIA_CHILD
    elif (G._pa[i] >> j) & 1:
        kind = _VIA_PARENT
    else:
        kind = _VIA_SPOUSE
    return Step(_edge_for(G, i, j, kind), G.vertices[i])


def _pure_collider_steps(G, i, j, chain) -> list:
    """Steps of a pure collider path from ``i`` to ``j`` with intermediates in ``chain``."""
    if ((G._pa[i] | G._ch[i] | G._sp[i]) >> j) & 1:
        return [_single_edge(G, i, j)]
    chain &= ~((1 << i) | (1 << j))
    parent = {}
    queue = deque()
    for kind, targets in ((_VIA_CHILD, G._ch[i]), (_VIA_SPOUSE, G._sp[i])):
        for x in bit_indices(targets & chain):
            if x not in parent:
                parent[x] = (i, kind)
                queue.append(x)
    while queue:
        y = queue.popleft()
        if ((G._sp[y] | G._pa[y]) >> j) & 1:
            # last edge must have its arrowhead at y
            kind = _VIA_PARENT if (G._pa[y] >> j) & 1 else _VIA_SPOUSE
            path = [Step(_edge_for(G, y, j, kind), G.vertices[y])]
            while y != i:
                prev, kind = parent[y]
                path.append(Step(_edge_for(G, prev, y, kind), G.vertices[prev]))
                y = prev
            path.reverse()
            return path
        for x in bit_indices(G._sp[y] & chain):
            if x not in parent:
                parent[x] = (y, _VIA_SPOUSE)
                queue.append(x)
    raise AssertionError("no pure collider path where one was promised")


def _directed_path_to(G, i, targets) -> list:
    """Shortest directed path i -> ... -> t, t the first vertex of ``targets`` met."""
    parent = {i: None}
    queue = deque([i])
    while queue:
        v = queue.popleft()
        for w in bit_indices(G._ch[v]):
            if w in parent:
                continue
            parent[w] = v
            if (targets >> w) & 1:
                path = [w]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
            queue.append(w)
    raise AssertionError("vertex outside the ancestral set")


def _repair(G, start, steps, a, b, c) -> Walk:
    """Make a walk from A to B m-connecting given C.

    Input walks have every non-collider outside C; a collider outside C lies in
    an(A ∪ B ∪ C), so a directed path leads from it to A, B or C.  Hitting C we
    go down and back up, hitting A we restart there, hitting B we stop.
    """
    vs = G.vertices
    idx = G._index
    out = []
    for st in steps:
        v = st.source
        i = idx[v]
        if out and not (c >> i) & 1 and out[-1].edge.arrowhead_at(v) and st.edge.arrowhead_at(v):
            path = _directed_path_to(G, i, a | b | c)
            down = [Step(Edge.directed(vs[p], vs[q]), vs[p]) for p, q in zip(path, path[1:])]
            up = [Step(s.edge, s.target) for s in reversed(down)]
            hit = path[-1]
            if (c >> hit) & 1:
                out += down + up
            elif (a >> hit) & 1:
                start, out = vs[hit], up
            else:
                return Walk(start, out + down)
        out.append(st)
        t = idx[st.target]
        if (b >> t) & 1:
            return Walk(start, out)
        if (a >> t) & 1:
            start, out = st.target, []
    raise AssertionError("walk never reached B")


def _bfs_path(adj, a, b, c):
    """Undirected BFS from ``a`` avoiding ``c``; returns (reached, path to B or None)."""
    parent = {i: None for i in bit_indices(a)}
    reached = a
    queue = deque(parent)
    while queue:
        i = queue.popleft()
        fresh = adj[i] & ~c & ~reached
        reached |= fresh
        for j in bit_indices(fresh):
            parent[j] = i
            if (b >> j) & 1:
                path = [j]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                path.reverse()
                return reached, path
            queue.append(j)
    return reached, None


def _expand_path(G, path, chain_for) -> tuple:
    steps = []
    for i, j in zip(path, path[1:]):
        steps += _pure_collider_steps(G, i, j, chain_for(i, j))
    return G.vertices[path[0]], steps


# -- augmentation criterion -----------------------------------------------------


def msep_augmentation(G: MixedGraph, q: SeparationQuery, with_witness: bool = True) -> SeparationDecision:
    a, b, c = q.masks(G)
    vstar = G._ancestors(a | b | c)
    adj = augmented_adjacency(G, vstar)
    reached, path = _bfs_path(adj, a, b, c)
    if path is None:
        witness = _certificate(G, a, b, c, vstar, reached) if with_witness else None
        return SeparationDecision(True, AUGMENTATION, witness)
    witness = None
    if with_witness:
        start, steps = _expand_path(G, path, lambda i, j: vstar)
        witness = _repair(G, start, steps, a, b, c)
    return SeparationDecision(False, AUGMENTATION, witness)


# -- district criterion ------------------------------------------------------------


def _reduced_adjacency(G, vstar, c):
    """Neighbour masks of G' and the districts of G[C] as masks."""
    adj = {i: (G._pa[i] | G._ch[i] | G._sp[i]) & vstar for i in bit_indices(vstar)}
    c_districts = []
    remaining = c
    while remaining:
        low = remaining & -remaining
        k = G._district_closure(low, c)
        c_districts.append(k)
        remaining &= ~k
        senders = 0
        for i in bit_indices(k):
            senders |= G._pa[i] | G._sp[i]
        senders &= vstar
        for i in bit_indices(senders):
            adj[i] |= senders & ~(1 << i)
    return adj, c_districts


def _closure_with_children(G, m, vstar):
    ch = 0
    for i in bit_indices(m):
        ch |= G._ch[i]
    return G._district_closure((m | ch) & vstar, vstar)


def build_reduced_graph(G: MixedGraph, q: SeparationQuery) -> ReducedGraph:
    a, b, c = q.masks(G)
    vstar = G._ancestors(a | b | c)
    adj, c_districts = _reduced_adjacency(G, vstar, c)
    vs = G.vertices
    edges = [(vs[i], vs[j]) for i, m in adj.items() for j in bit_indices(m) if i < j]
    base = UndirectedGraph(G.names(vstar), edges)
    return ReducedGraph(base, tuple(G.names(k) for k in c_districts))


def _partition(G, a, b, c):
    vstar = G._ancestors(a | b | c)
    adj, c_districts = _reduced_adjacency(G, vstar, c)
    reached, _ = _bfs_path(adj, a, 0, c)
    a_star = (reached & ~b & ~c) | a
    b_star = vstar & ~c & ~a_star
    return vstar, adj, c_districts, a_star, b_star


def partition_star(G: MixedGraph, q: SeparationQuery) -> tuple:
    """The canonical (A*, B*): A* is what G' connects to A around C."""
    a, b, c = q.masks(G)
    _, _, _, a_star, b_star = _partition(G, a, b, c)
    return G.names(a_star), G.names(b_star)


def msep_district(G: MixedGraph, q: SeparationQuery, with_witness: bool = True) -> SeparationDecision:
    a, b, c = q.masks(G)
    vstar, adj, c_districts, a_star, b_star = _partition(G, a, b, c)

    touching = 0
    for i in bit_indices(a_star):
        touching |= adj[i]
    nonadjacent = not (touching & b_star)
    disjoint = not (_closure_with_children(G, a_star, vstar)
                    & _closure_with_children(G, b_star, vstar))
    if nonadjacent != disjoint:
        raise CriterionDisagreement(
            f"G' adjacency says {nonadjacent}, district closures say {disjoint}")

    if disjoint:
        witness = None
        if with_witness:
            witness = Certificate(G.names(vstar), G.names(a_star), G.names(b_star))
        return SeparationDecision(True, DISTRICT, witness)
    witness = None
    if with_witness:
        _, path = _bfs_path(adj, a, b, c)
        # inserted G' edges are collider paths whose intermediates lie in C
        start, steps = _expand_path(G, path, lambda i, j: c)
        witness = _repair(G, start, steps, a, b, c)
    return SeparationDecision(False, DISTRICT, witness)


# -- exhaustive oracle ---------------------------------------------------------------


def oracle_walk(G: MixedGraph, q: SeparationQuery, max_edges: int = ORACLE_MAX_EDGES) -> Optional[Walk]:
    """Depth-first search over walks using each (edge, direction) at most once.

    The walk is additionally never allowed to re-enter a vertex with the same
    arrowhead mark it already entered with; cutting such a loop out of a
    connecting walk leaves a connecting walk, so no answer is lost.
    """
    q.masks(G)
    if len(G.edges) > max_edges:
        raise InstanceTooLarge(len(G.edges), max_edges)
    # oriented steps as integers: 2k enters edge k at u, 2k+1 at v
    steps = []
    for e in G.edges:
        steps.append(Step(e, e.u))
        steps.append(Step(e, e.v))
    source = [st.source for st in steps]
    target = [st.target for st in steps]
    head_out = [st.edge.arrowhead_at(st.source) for st in steps]
    head_in = [st.edge.arrowhead_at(st.target) for st in steps]
    leaving = {v: [] for v in G.vertices}
    for k, v in enumerate(source):
        leaving[v].append(k)
    A, B, C = q.a, q.b, q.c
    trail = []

    def extend(k, used, marks):
        v = target[k]
        if v in B:
            return True
        in_c = v in C
        arrived_head = head_in[k]
        for nxt in leaving[v]:
            if (used >> nxt) & 1:
                continue
            if (arrived_head and head_out[nxt]) != in_c:
                continue
            mark = (target[nxt], head_in[nxt])
            if mark in marks:
                continue
            trail.append(nxt)
            if extend(nxt, used | (1 << nxt), marks | {mark}):
                return True
            trail.pop()
        return False

    for a in sorted(A):
        for k in leaving[a]:
            trail.append(k)
            if extend(k, 1 << k, frozenset([(target[k], head_in[k])])):
                return Walk(a, [steps[i] for i in trail])
            trail.pop()
    return None


def msep_oracle(G: MixedGraph, q: SeparationQuery, max_edges: int = ORACLE_MAX_EDGES) -> bool:
    return oracle_walk(G, q, max_edges) is None


def oracle_decision(G: MixedGraph, q: SeparationQuery, max_edges: int = ORACLE_MAX_EDGES) -> SeparationDecision:
    walk = oracle_walk(G, q, max_edges)
    return SeparationDecision(walk is None, ORACLE, walk)


# -- lemma and dispatch ---------------------------------------------------------------


def lemma_boundary_check(G: MixedGraph, A: VertexSetLike, B: VertexSetLike) -> bool:
    """Separation of A and B given all remaining vertices, by district closures."""
    A, B = _as_set(A), _as_set(B)
    a, b = G.mask(A), G.mask(B)
    check_disjoint(A, B)
    full = G._full
    return not (_closure_with_children(G, a, full) & _closure_with_children(G, b, full))


_PROCEDURES = {
    WALK: msep_walk,
    AUGMENTATION: msep_augmentation,
    DISTRICT: msep_district,
}


def decide(
    G: MixedGraph,
    q: SeparationQuery,
    criterion: str = DISTRICT,
    paranoid: bool = False,
    with_witness: bool = True,
    oracle_max_edges: int = ORACLE_MAX_EDGES,
) -> SeparationDecision:
    """Run one criterion; with ``paranoid`` run every applicable one and compare."""
    if criterion not in CRITERIA:
        raise ValueError(f"unknown criterion {criterion!r}")
    if criterion == ORACLE:
        decision = oracle_decision(G, q, oracle_max_edges)
    else:
        decision = _PROCEDURES[criterion](G, q, with_witness)
    if paranoid:
        verdicts = run_all(G, q, oracle_max_edges)
        if len(set(verdicts.values()) | {decision.separated}) > 1:
            raise CriterionDisagreement(f"verdicts differ: {verdicts}")
    return decision


def run_all(G: MixedGraph, q: SeparationQuery, oracle_max_edges: int = ORACLE_MAX_EDGES) -> dict:
    """Verdict of every criterion; the oracle only within its edge bound."""
    verdicts = {name: fn(G, q, False).separated for name, fn in _PROCEDURES.items()}
    if len(G.edges) <= oracle_max_edges:
        verdicts[ORACLE] = msep_oracle(G, q, oracle_max_edges)
    return verdicts
