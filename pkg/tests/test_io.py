import pytest
from hypothesis import given, settings

from mixedsep import ParseError, augmented_graph, format_graph_file, parse_graph_file
from mixedsep.io import mixed_to_dot, undirected_to_dot

from conftest import DATA, mixed_graphs


def test_parse_small():
    G = parse_graph_file("x -> b\ng <-> h")
    assert len(G.vertices) == 4 and len(G.edges) == 2


def test_parse_fig1_file(fig1):
    assert len(fig1.edges) == 12
    assert {"f <-> g", "d -> y"} <= {str(e) for e in fig1.edges}


def test_parse_comments_nodes_and_spacing():
    G = parse_graph_file("# header\n\nnode lone\na->b   # trailing\n  c<->a\n")
    assert G.vertices == ("a", "b", "c", "lone")
    assert len(G.edges) == 2


def test_duplicates_collapse():
    assert len(parse_graph_file("a -> b\na -> b\nb <-> a\na <-> b\n").edges) == 2


@pytest.mark.parametrize("text, line", [
    ("x -> x", 1),
    ("a -> b\nwhat is this", 2),
    ("a -> b\n\nc <- d", 3),
    ("node", 1),
    ("a -> b -> c", 1),
])
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph_file(text)
    assert info.value.line == line


def test_self_loop_reason():
    with pytest.raises(ParseError, match="self-loop"):
        parse_graph_file("x -> x")


def test_canonical_text():
    G = parse_graph_file("node z\nb <-> a\na -> b\n")
    assert format_graph_file(G) == "node z\na -> b\na <-> b\n"


@settings(max_examples=200, deadline=None)
@given(mixed_graphs())
def test_round_trip(G):
    text = format_graph_file(G)
    assert parse_graph_file(text) == G
    assert format_graph_file(parse_graph_file(text)) == text


def test_dot_outputs(fig1):
    dot = mixed_to_dot(fig1)
    assert dot.startswith("digraph {")
    assert '"c" -> "d" [dir=both];' in dot
    assert '"x" -> "b";' in dot
    empty = undirected_to_dot(augmented_graph(parse_graph_file("")))
    assert empty == "graph {\n}\n"


def test_dot_quoting():
    G = parse_graph_file('a"q -> b\\\n')
    assert '"a\\"q"' in mixed_to_dot(G)


def test_fixture_files_are_canonical():
    text = (DATA / "random_n6_seed42.g").read_text()
    assert format_graph_file(parse_graph_file(text)) == text
