from pathlib import Path

import pytest
from hypothesis import strategies as st

from mixedsep import Edge, MixedGraph, parse_graph_file

DATA = Path(__file__).parent / "data"

_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def fig1():
    return parse_graph_file((DATA / "fig1.g").read_text())


@pytest.fixture(scope="session")
def fig1_path():
    return str(DATA / "fig1.g")


@pytest.fixture
def report():
    def record(criterion, ok, detail=""):
        status = "PASS" if ok else "FAIL"
        _ACCEPTANCE_LINES.append(f"[{status}] {criterion}: {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def mixed_graphs(draw, min_vertices=1, max_vertices=6):
    n = draw(st.integers(min_vertices, max_vertices))
    names = [f"v{i}" for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(n):
            if i != j and draw(st.booleans()) and draw(st.booleans()):
                edges.append(Edge.directed(names[i], names[j]))
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.integers(0, 3)) == 0:
                edges.append(Edge.bidirected(names[i], names[j]))
    return MixedGraph(names, edges)


@st.composite
def graphs_with_query(draw, min_vertices=2, max_vertices=6):
    """A graph and disjoint (A, B, C) with A and B nonempty."""
    G = draw(mixed_graphs(min_vertices, max_vertices))
    labels = draw(st.lists(st.sampled_from("abcn"), min_size=len(G), max_size=len(G)))
    sets = {k: {v for v, lab in zip(G.vertices, labels) if lab == k} for k in "abc"}
    if not sets["a"]:
        sets["a"] = {G.vertices[0]}
        sets["b"].discard(G.vertices[0])
        sets["c"].discard(G.vertices[0])
    if not sets["b"]:
        spare = [v for v in G.vertices if v not in sets["a"]]
        if not spare:
            sets["a"].discard(G.vertices[-1])
            spare = [G.vertices[-1]]
        sets["b"] = {spare[-1]}
        sets["c"].discard(spare[-1])
    return G, sets["a"], sets["b"], sets["c"]


def pure_collider_connected_bruteforce(G, u, v):
    """Enumerate pure collider paths from u with at most |V| edges."""
    incident = {x: [] for x in G.vertices}
    for e in G.edges:
        incident[e.u].append(e)
        incident[e.v].append(e)

    def head(e, x):
        return (not e.is_directed) or e.v == x

    def grow(at, last, depth):
        if depth >= len(G):
            return False
        for e in incident[at]:
            if last is not None and not (head(last, at) and head(e, at)):
                continue
            nxt = e.other(at)
            if nxt == v or grow(nxt, e, depth + 1):
                return True
        return False

    return grow(u, None, 0)
