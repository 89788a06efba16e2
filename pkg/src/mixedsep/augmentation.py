"""Walks, collider connectivity, augmented graphs and undirected separation."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import OverlappingSets, SelfLoop, UnknownVertex
from .graph import Edge, MixedGraph, VertexSetLike, bit_indices


class UndirectedGraph:
    """Simple undirected graph without self-loops."""

    __slots__ = ("_vertices", "_edges", "_adj")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[tuple] = ()):
        names = set(vertices)
        pairs = set()
        for a, b in edges:
            if a == b:
                raise SelfLoop(a)
            names.add(a)
            names.add(b)
            pairs.add((a, b) if a < b else (b, a))
        self._vertices = tuple(sorted(names))
        self._edges = frozenset(pairs)
        adj = {v: set() for v in self._vertices}
        for a, b in pairs:
            adj[a].add(b)
            adj[b].add(a)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def edges(self) -> frozenset:
        return self._edges

    def sorted_edges(self) -> list:
        return sorted(self._edges)

    def neighbors(self, v: str) -> frozenset:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def has_edge(self, a: str, b: str) -> bool:
        return (a, b) in self._edges or (b, a) in self._edges

    def __eq__(self, other):
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self):
        return hash((self._vertices, self._edges))

    def __repr__(self):
        return f"UndirectedGraph({len(self._vertices)} vertices, {len(self._edges)} edges)"


def skeleton(G: MixedGraph) -> UndirectedGraph:
    return UndirectedGraph(G.vertices, ((e.u, e.v) for e in G.edges))


@dataclass(frozen=True)
class Step:
    """One traversal of ``edge``, entered at ``source``."""

    edge: Edge
    source: str

    @property
    def target(self) -> str:
        return self.edge.other(self.source)

    def __str__(self):
        e = self.edge
        if not e.is_directed:
            arrow = "<->"
        elif e.u == self.source:
            arrow = "->"
        else:
            arrow = "<-"
        return f"{self.source} {arrow} {self.target}"


@dataclass(frozen=True)
class Walk:
    """A possibly self-intersecting walk given as a start vertex and steps."""

    start: str
    steps: tuple

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        at = self.start
        for st in self.steps:
            if st.source != at:
                raise ValueError(f"step {st} does not continue from {at!r}")
            at = st.target

    @property
    def end(self) -> str:
        return self.steps[-1].target if self.steps else self.start

    def vertices(self) -> tuple:
        return (self.start,) + tuple(st.target for st in self.steps)

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        if not self.steps:
            return self.start
        parts = [self.start]
        for st in self.steps:
            parts.append(str(st).split(" ", 2)[1])
            parts.append(st.target)
        return " ".join(parts)


def is_collider_at(prev_step: Step, next_step: Step, v: str) -> bool:
    """True iff both edge ends meeting at ``v`` carry arrowheads."""
    if prev_step.target != v or next_step.source != v:
        raise ValueError(f"steps do not meet at {v!r}")
    return prev_step.edge.arrowhead_at(v) and next_step.edge.arrowhead_at(v)


# -- collider connectivity ---------------------------------------------------


def _collider_reach(G: MixedGraph, i: int, within: int) -> int:
    # dis(i ∪ ch(i)) inside G[within]; two vertices are collider connected
    # exactly when these closures meet.
    return G._district_closure(((1 << i) | G._ch[i]) & within, within)


def augmented_adjacency(G: MixedGraph, within: int) -> dict:
    """Neighbour masks of the augmented graph of ``G[within]``."""
    reach = {i: _collider_reach(G, i, within) for i in bit_indices(within)}
    adj = {}
    for i, ri in reach.items():
        m = 0
        for j, rj in reach.items():
            if j != i and ri & rj:
                m |= 1 << j
        adj[i] = m
    return adj


def collider_connected(G: MixedGraph, u: str, v: str) -> bool:
    """Whether a pure collider path joins ``u`` and ``v`` (adjacency counts)."""
    G.mask(u)
    G.mask(v)
    if u == v:
        raise ValueError("collider_connected needs two distinct vertices")
    i, j = G._index[u], G._index[v]
    return bool(_collider_reach(G, i, G._full) & _collider_reach(G, j, G._full))


def augmented_graph(G: MixedGraph) -> UndirectedGraph:
    adj = augmented_adjacency(G, G._full)
    vs = G.vertices
    edges = [(vs[i], vs[j]) for i, m in adj.items() for j in bit_indices(m) if i < j]
    return UndirectedGraph(vs, edges)


def check_disjoint(*sets):
    seen = set()
    for s in sets:
        shared = seen & s
        if shared:
            raise OverlappingSets(shared)
        seen |= s


def _as_set(vertices: VertexSetLike) -> frozenset:
    if isinstance(vertices, str):
        return frozenset((vertices,))
    return frozenset(vertices)


def reachable_avoiding(H: UndirectedGraph, sources, blocked) -> set:
    seen = set(sources)
    queue = deque(sorted(seen))
    while queue:
        v = queue.popleft()
        for w in H.neighbors(v):
            if w not in seen and w not in blocked:
                seen.add(w)
                queue.append(w)
    return seen


def u_separated(H: UndirectedGraph, A: VertexSetLike, B: VertexSetLike, C: VertexSetLike) -> bool:
    """True iff every path in ``H`` from ``A`` to ``B`` meets ``C``."""
    A, B, C = _as_set(A), _as_set(B), _as_set(C)
    for v in A | B | C:
        H.neighbors(v)
    check_disjoint(A, B, C)
    return not (reachable_avoiding(H, A, C) & B)
