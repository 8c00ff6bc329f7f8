import random

import pytest

from edgering.graphs import (
    Graph,
    GraphParseError,
    attach_path,
    complete_bipartite_graph,
    complete_graph,
    connected_components,
    cycle_graph,
    induced_subgraph,
    is_bipartite,
    is_connected,
    make_family,
    parse_graph,
    path_graph,
    render_graph,
    star_graph,
    two_triangles_path,
)
from oracles import has_odd_cycle


def test_parse_triangle():
    g = parse_graph("3 3\n1 2\n2 3\n1 3\n")
    assert g.d == 3
    assert g.edges == ((1, 2), (1, 3), (2, 3))


def test_parse_four_cycle():
    g = parse_graph("4 4\n1 2\n2 3\n3 4\n1 4\n")
    assert g == cycle_graph(4)


def test_parse_rejects_loop_with_line_number():
    with pytest.raises(GraphParseError) as exc:
        parse_graph("2 1\n1 1\n")
    assert exc.value.line == 2


def test_parse_rejects_out_of_range():
    with pytest.raises(GraphParseError) as exc:
        parse_graph("3 1\n1 5\n")
    assert exc.value.line == 2


def test_parse_rejects_reversed_and_malformed():
    with pytest.raises(GraphParseError):
        parse_graph("3 1\n2 1\n")
    with pytest.raises(GraphParseError):
        parse_graph("3 1\nfoo bar\n")
    with pytest.raises(GraphParseError):
        parse_graph("3 2\n1 2\n")
    with pytest.raises(GraphParseError):
        parse_graph("3 1\n1 2\n2 3\n")


def test_parse_collapses_duplicate_lines():
    g = parse_graph("3 3\n1 2\n1 2\n2 3\n")
    assert g.edges == ((1, 2), (2, 3))


def test_round_trip_random_graphs():
    rng = random.Random(7)
    for _ in range(200):
        d = rng.randint(1, 9)
        pool = [(i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)]
        edges = [e for e in pool if rng.random() < 0.4]
        g = Graph.of(d, edges)
        assert parse_graph(render_graph(g)) == g


def test_bipartite_examples():
    bp = is_bipartite(cycle_graph(4))
    assert bp is not None
    assert {bp.left, bp.right} == {frozenset({1, 3}), frozenset({2, 4})}
    assert is_bipartite(complete_graph(3)) is None
    bp = is_bipartite(star_graph(5))
    assert bp.left == frozenset({1})
    assert bp.right == frozenset({2, 3, 4, 5})


def test_bipartite_matches_odd_cycle_search_exhaustively():
    # every graph on up to 6 vertices, not only connected ones
    rng = random.Random(11)
    for d in range(1, 6):
        pool = [(i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)]
        for mask in range(1 << len(pool)):
            edges = [pool[k] for k in range(len(pool)) if mask >> k & 1]
            g = Graph.of(d, edges)
            assert (is_bipartite(g) is not None) == (not has_odd_cycle(g))
    for _ in range(100):
        d = rng.randint(6, 7)
        pool = [(i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)]
        edges = [e for e in pool if rng.random() < 0.4]
        g = Graph.of(d, edges)
        assert (is_bipartite(g) is not None) == (not has_odd_cycle(g))


def test_components():
    g, _ = induced_subgraph(complete_graph(3), [1, 2])
    assert connected_components(g) == [frozenset({1, 2})]
    assert connected_components(Graph.of(3, [])) == [
        frozenset({1}),
        frozenset({2}),
        frozenset({3}),
    ]
    parts = connected_components(connected_components_probe())
    assert len(parts) == 2


def connected_components_probe() -> Graph:
    # two triangles joined by one bridge, bridge endpoints removed
    g = two_triangles_path(1)
    sub, _ = induced_subgraph(g, [1, 2, 5, 6])
    return sub


def test_components_cover_and_disjoint():
    rng = random.Random(3)
    for _ in range(100):
        d = rng.randint(1, 8)
        pool = [(i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)]
        edges = [e for e in pool if rng.random() < 0.3]
        g = Graph.of(d, edges)
        parts = connected_components(g)
        seen: set[int] = set()
        for part in parts:
            assert not (seen & part)
            seen |= part
        assert seen == set(range(1, d + 1))


def test_induced_subgraph_examples():
    sub, kept = induced_subgraph(complete_graph(4), [1, 2, 3])
    assert sub == complete_graph(3)
    assert kept == (1, 2, 3)
    sub, _ = induced_subgraph(cycle_graph(4), [1, 2])
    assert sub.edges == ((1, 2),)
    sub, _ = induced_subgraph(cycle_graph(4), [1, 3])
    assert sub.edges == ()
    with pytest.raises(ValueError):
        induced_subgraph(complete_graph(3), [])


def test_families():
    assert complete_graph(4).m == 6
    assert complete_bipartite_graph(2, 2).m == 4
    assert is_bipartite(complete_bipartite_graph(2, 2)) is not None
    assert star_graph(4).edges == ((1, 2), (1, 3), (1, 4))
    assert path_graph(4).m == 3
    g = two_triangles_path(1)
    assert (g.d, g.m) == (6, 7)
    g = two_triangles_path(3)
    assert (g.d, g.m) == (8, 9)
    assert is_connected(g)
    g = attach_path(complete_graph(4), 1, 2)
    assert (g.d, g.m) == (6, 8)
    with pytest.raises(ValueError):
        attach_path(complete_graph(4), 9, 2)
    with pytest.raises(ValueError):
        two_triangles_path(0)


def test_two_triangles_structure():
    from itertools import combinations

    for ell in range(2, 6):
        g = two_triangles_path(ell)
        assert is_connected(g)
        assert is_bipartite(g) is None
        tri = [
            frozenset((a, b, c))
            for a, b, c in combinations(g.vertices(), 3)
            if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)
        ]
        assert tri == [frozenset({1, 2, 3}), frozenset({4, 5, 6})]


def test_family_spec_parser():
    assert make_family("complete(4)") == complete_graph(4)
    assert make_family("complete_bipartite(2,3)") == complete_bipartite_graph(2, 3)
    assert make_family("two_triangles_path(2)") == two_triangles_path(2)
    assert make_family("attach_path(complete(4),1,2)") == attach_path(complete_graph(4), 1, 2)
    with pytest.raises(ValueError):
        make_family("hedgehog(4)")
    with pytest.raises(ValueError):
        make_family("complete(4")
