"""Immutable mixed graphs with directed and bidirected edges.

Vertices are strings and are kept in lexicographic order.  Internally every
vertex set is an ``int`` bitmask whose bit ``i`` stands for ``vertices[i]``;
the public methods take and return ``frozenset`` of names.
"""
from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import MalformedVertexName, SelfLoop, UnknownVertex

VertexSetLike = Union[str, Iterable[str]]

RESERVED_TOKENS = ("->", "#")


class EdgeKind(enum.Enum):
    DIRECTED = "->"
    BIDIRECTED = "<->"


def check_vertex_name(name: str) -> str:
    if not isinstance(name, str) or not name:
        raise MalformedVertexName(name, "must be a nonempty string")
    if not name.isprintable() or any(ch.isspace() for ch in name):
        raise MalformedVertexName(name, "whitespace or unprintable character")
    for token in RESERVED_TOKENS:
        if token in name:
            raise MalformedVertexName(name, f"contains reserved token {token!r}")
    return name


@dataclass(frozen=True)
class Edge:
    """A directed edge ``u -> v`` or a bidirected edge ``u <-> v``.

    Bidirected edges are unordered and stored with ``u < v``.
    """

    kind: EdgeKind
    u: str
    v: str

    def __post_init__(self):
        if self.u == self.v:
            raise SelfLoop(self.u)
        if self.kind is EdgeKind.BIDIRECTED and self.v < self.u:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)

    @classmethod
    def directed(cls, tail: str, head: str) -> "Edge":
        return cls(EdgeKind.DIRECTED, tail, head)

    @classmethod
    def bidirected(cls, a: str, b: str) -> "Edge":
        return cls(EdgeKind.BIDIRECTED, a, b)

    @property
    def is_directed(self) -> bool:
        return self.kind is EdgeKind.DIRECTED

    def arrowhead_at(self, x: str) -> bool:
        if x != self.u and x != self.v:
            raise ValueError(f"{x!r} is not an endpoint of {self}")
        return self.kind is EdgeKind.BIDIRECTED or x == self.v

    def other(self, x: str) -> str:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise ValueError(f"{x!r} is not an endpoint of {self}")

    def sort_key(self):
        return (self.u, self.v, self.kind is EdgeKind.BIDIRECTED)

    def __str__(self):
        return f"{self.u} {self.kind.value} {self.v}"


@functools.lru_cache(maxsize=1 << 16)
def bit_indices(mask: int) -> tuple:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class MixedGraph:
    """A finite mixed graph, immutable after construction.

    ``u -> v``, ``v -> u`` and ``u <-> v`` may all coexist; exact duplicates
    collapse.  Directed cycles are allowed.
    """

    __slots__ = ("_vertices", "_index", "_edges", "_pa", "_ch", "_sp", "_full")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[Edge] = ()):
        edge_set = set()
        names = set()
        for name in vertices:
            names.add(check_vertex_name(name))
        for e in edges:
            if not isinstance(e, Edge):
                raise TypeError(f"expected Edge, got {type(e).__name__}")
            names.add(check_vertex_name(e.u))
            names.add(check_vertex_name(e.v))
            edge_set.add(e)

        self._vertices = tuple(sorted(names))
        self._index = {v: i for i, v in enumerate(self._vertices)}
        self._edges = tuple(sorted(edge_set, key=Edge.sort_key))
        n = len(self._vertices)
        pa = [0] * n
        ch = [0] * n
        sp = [0] * n
        for e in self._edges:
            i, j = self._index[e.u], self._index[e.v]
            if e.kind is EdgeKind.DIRECTED:
                pa[j] |= 1 << i
                ch[i] |= 1 << j
            else:
                sp[i] |= 1 << j
                sp[j] |= 1 << i
        self._pa = tuple(pa)
        self._ch = tuple(ch)
        self._sp = tuple(sp)
        self._full = (1 << n) - 1

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def edges(self) -> tuple:
        return self._edges

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, v):
        return v in self._index

    def __eq__(self, other):
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self):
        return hash((self._vertices, self._edges))

    def __repr__(self):
        return f"MixedGraph({len(self._vertices)} vertices, {len(self._edges)} edges)"

    @classmethod
    def from_pairs(cls, directed=(), bidirected=(), vertices=()) -> "MixedGraph":
        edges = [Edge.directed(u, v) for u, v in directed]
        edges += [Edge.bidirected(u, v) for u, v in bidirected]
        return cls(vertices, edges)

    # -- mask plumbing ---------------------------------------------------

    def mask(self, vertices: VertexSetLike) -> int:
        if isinstance(vertices, str):
            vertices = (vertices,)
        m = 0
        index = self._index
        for v in vertices:
            try:
                m |= 1 << index[v]
            except KeyError:
                raise UnknownVertex(v) from None
        return m

    def names(self, mask: int) -> frozenset:
        vs = self._vertices
        return frozenset(vs[i] for i in bit_indices(mask))

    def sorted_names(self, mask: int) -> list:
        vs = self._vertices
        return [vs[i] for i in bit_indices(mask)]

    def _union(self, table, mask: int) -> int:
        out = 0
        for i in bit_indices(mask):
            out |= table[i]
        return out

    def _ancestors(self, mask: int) -> int:
        pa = self._pa
        result = frontier = mask
        while frontier:
            nxt = 0
            for i in bit_indices(frontier):
                nxt |= pa[i]
            frontier = nxt & ~result
            result |= frontier
        return result

    def _district_closure(self, mask: int, within: int) -> int:
        """Union of the districts of ``G[within]`` meeting ``mask``."""
        sp = self._sp
        result = frontier = mask & within
        while frontier:
            nxt = 0
            for i in bit_indices(frontier):
                nxt |= sp[i]
            frontier = nxt & within & ~result
            result |= frontier
        return result

    # -- vocabulary ------------------------------------------------------

    def parents(self, vertices: VertexSetLike) -> frozenset:
        """Parents of the members of ``vertices`` that are not members themselves."""
        m = self.mask(vertices)
        return self.names(self._union(self._pa, m) & ~m)

    def children(self, vertices: VertexSetLike) -> frozenset:
        m = self.mask(vertices)
        return self.names(self._union(self._ch, m) & ~m)

    def spouses(self, vertices: VertexSetLike) -> frozenset:
        m = self.mask(vertices)
        return self.names(self._union(self._sp, m) & ~m)

    def adjacent(self, u: str, v: str) -> bool:
        self.mask(u)
        j = self.mask(v)
        k = self._index[u]
        return bool((self._pa[k] | self._ch[k] | self._sp[k]) & j)

    def ancestors(self, vertices: VertexSetLike) -> frozenset:
        """Reflexive ancestors: every member of ``vertices`` is its own ancestor."""
        return self.names(self._ancestors(self.mask(vertices)))

    def is_ancestral(self, vertices: VertexSetLike) -> bool:
        m = self.mask(vertices)
        return self._ancestors(m) == m

    def districts(self) -> list:
        """Connected components of the bidirected part, ordered by least member."""
        out = []
        remaining = self._full
        while remaining:
            low = remaining & -remaining
            comp = self._district_closure(low, self._full)
            out.append(self.names(comp))
            remaining &= ~comp
        return out

    def district_of(self, vertices: VertexSetLike) -> frozenset:
        return self.names(self._district_closure(self.mask(vertices), self._full))

    def induced_subgraph(self, vertices: VertexSetLike) -> "MixedGraph":
        keep = self.names(self.mask(vertices))
        edges = [e for e in self._edges if e.u in keep and e.v in keep]
        return MixedGraph(keep, edges)


def build_graph(vertices: Iterable[str] = (), edges: Iterable[Edge] = ()) -> MixedGraph:
    return MixedGraph(vertices, edges)
