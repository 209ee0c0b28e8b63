import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from distinguishing.graph import (EdgeLabeling, Graph, GraphFormatError, Permutation, VertexLabeling,
                                  cycle_graph, format_graph, is_tree, parse_graph, path_graph,
                                  unicyclic_cycle)


def test_parse_smallest_edge():
    g = parse_graph("2 1\n0 1")
    assert g.n == 2 and g.edges == ((0, 1),)


def test_parse_path():
    assert parse_graph("4 3\n0 1\n1 2\n2 3") == path_graph(4)


def test_parse_comments_and_blank_lines():
    g = parse_graph("# a triangle\n3 3\n\n0 1\n# middle\n1 2\n0 2\n")
    assert g.edges == ((0, 1), (0, 2), (1, 2))


def test_edge_count_mismatch():
    with pytest.raises(GraphFormatError, match="edge count mismatch"):
        parse_graph("3 2\n0 1\n1 2\n2 0\n")
    with pytest.raises(GraphFormatError, match="edge count mismatch"):
        parse_graph("3 3\n0 1\n1 2\n")


@pytest.mark.parametrize("text, line, fragment", [
    ("3 2\n0 1\n1 x\n", 3, "two integers"),
    ("3 2\n0 1\n1 3\n", 3, "out of range"),
    ("3 2\n0 1\n0 1\n", 3, "duplicate"),
    ("3 2\n0 1\n1 1\n", 3, "self-loop"),
    ("3 2 1\n0 1\n1 2\n", 1, "two integers"),
])
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(GraphFormatError, match=fragment) as info:
        parse_graph(text)
    assert info.value.line == line


def test_missing_header():
    with pytest.raises(GraphFormatError):
        parse_graph("# nothing here\n")


def test_is_tree():
    assert is_tree(path_graph(4))
    assert not is_tree(cycle_graph(3))
    assert not is_tree(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_unicyclic_cycle_examples():
    assert unicyclic_cycle(cycle_graph(5)) == (0, 1, 2, 3, 4)
    pendant = Graph.from_edges(4, [(1, 2), (2, 3), (1, 3), (0, 3)])
    assert unicyclic_cycle(pendant) == (1, 2, 3)
    assert unicyclic_cycle(path_graph(4)) is None


def test_unicyclic_cycle_is_lexicographically_smallest():
    # cycle 5-2-7-3 with trees hanging off it
    g = Graph.from_edges(9, [(5, 2), (2, 7), (7, 3), (3, 5), (0, 5), (1, 0), (4, 7), (6, 4), (8, 2)])
    cyc = unicyclic_cycle(g)
    t = len(cyc)
    rotations = [cyc[i:] + cyc[:i] for i in range(t)]
    assert cyc == min(rotations + [r[::-1] for r in rotations])
    assert cyc == (2, 5, 3, 7)


def test_labeling_validation():
    with pytest.raises(ValueError):
        VertexLabeling((1, 3), k=2)
    with pytest.raises(ValueError):
        EdgeLabeling({(0, 1): 0})
    assert VertexLabeling((1, 2, 2)).k == 2
    assert EdgeLabeling({(1, 0): 2})[0, 1] == 2


def test_permutation():
    p = Permutation((1, 2, 0))
    assert (p * p.inverse()).is_identity()
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


def test_graph_rejects_bad_edges():
    for edges in ([(0, 0)], [(0, 1), (1, 0)], [(0, 5)]):
        with pytest.raises(ValueError):
            Graph.from_edges(3, edges)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges)


@given(graphs(), st.randoms())
def test_format_parse_round_trip(g, rng):
    again = parse_graph(format_graph(g))
    assert again.edges == g.edges and again.n == g.n
    # shuffled edge order and orientation parse to the same graph
    lines = [f"{v} {u}" if rng.random() < 0.5 else f"{u} {v}" for u, v in g.edges]
    rng.shuffle(lines)
    assert parse_graph(f"{g.n} {g.m}\n" + "\n".join(lines)) == g


@st.composite
def unicyclic_graphs(draw):
    t = draw(st.integers(3, 6))
    extra = draw(st.integers(0, 6))
    edges = [(i, (i + 1) % t) for i in range(t)]
    for v in range(t, t + extra):
        edges.append((v, draw(st.integers(0, v - 1))))
    perm = draw(st.permutations(range(t + extra)))
    return Graph.from_edges(t + extra, [(perm[u], perm[v]) for u, v in edges])


@settings(max_examples=150)
@given(unicyclic_graphs(), st.randoms())
def test_cycle_properties(g, rng):
    cyc = unicyclic_cycle(g)
    assert not is_tree(g) and cyc is not None
    ring = [tuple(sorted((cyc[i], cyc[(i + 1) % len(cyc)]))) for i in range(len(cyc))]
    for e in ring:
        assert is_tree(Graph.from_edges(g.n, [f for f in g.edges if f != e]))
    shuffled = list(g.edges)
    rng.shuffle(shuffled)
    assert unicyclic_cycle(Graph.from_edges(g.n, shuffled)) == cyc


@given(st.integers(1, 12), st.randoms())
def test_tree_has_no_cycle(n, rng):
    from builders import random_tree
    t = random_tree(n, random.Random(rng.random()))
    assert is_tree(t) and unicyclic_cycle(t) is None
