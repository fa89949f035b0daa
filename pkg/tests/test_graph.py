import math

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import connected_graphs, from_nx, graphs, odd_girth_oracle, to_nx
from specexcess.generators import circulant, complete, cycle, folded_cube, hypercube, kneser, path
from specexcess.graph import (
    Graph,
    Graph6Error,
    GraphError,
    IntersectionArray,
    basic_profile,
    bfs_layers,
    distance_profile,
    encode_graph6,
    excess_vector,
    is_connected,
    is_distance_regular_direct,
    odd_girth_combinatorial,
    parse_graph6,
)


# construction

def test_rejects_bad_graphs():
    with pytest.raises(GraphError):
        Graph(0, [])
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0b00])
    with pytest.raises(GraphError):
        Graph(2, [0b01, 0b00])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])


def test_basic_accessors():
    g = path(4)
    assert g.neighbors(1) == [0, 2]
    assert g.degrees() == [1, 2, 2, 1]
    assert list(g.edges()) == [(0, 1), (1, 2), (2, 3)]
    assert g.edge_count == 3
    assert g.laplacian_matrix()[1] == [-1, 2, -1, 0]
    assert Graph.from_matrix(g.adjacency_matrix()) == g


def test_relabel():
    g = path(3)
    h = g.relabel([1, 0, 2])
    assert h.has_edge(1, 0) and h.has_edge(0, 2) and not h.has_edge(1, 2)
    with pytest.raises(GraphError):
        g.relabel([0, 0, 1])


# graph6

@pytest.mark.parametrize(
    "text, n, edges",
    [
        ("@", 1, []),
        ("Bw", 3, [(0, 1), (0, 2), (1, 2)]),
        ("DUW", 5, [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]),
    ],
)
def test_graph6_known_strings(text, n, edges):
    g = parse_graph6(text)
    assert g.n == n
    assert sorted(g.edges()) == edges
    assert encode_graph6(g) == text


def test_graph6_header_and_petersen():
    assert encode_graph6(kneser(5, 2)) == "I?LRCecq?"
    assert parse_graph6(">>graph6<<Bw") == complete(3)


@pytest.mark.parametrize(
    "text, offset",
    [
        ("", 0),
        ("?", 0),
        ("B", 1),
        ("Bw?", 2),
        ("Bx", 1),
        ("B!", 1),
        ("~?", 2),
        ("~??B", 1),
    ],
)
def test_graph6_errors_carry_offsets(text, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.offset == offset


@given(graphs(max_n=62))
@settings(max_examples=60)
def test_graph6_round_trip(g):
    text = encode_graph6(g)
    assert parse_graph6(text) == g
    # networkx as an independent encoder
    assert text == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def test_graph6_long_header():
    g = cycle(70)
    text = encode_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g
    assert text == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


# traversal and profiles

def test_profiles():
    assert basic_profile(cycle(6)) == (True, True, 2, 3, True)
    p = basic_profile(kneser(5, 2))
    assert (p.connected, p.regular, p.valency, p.diameter, p.bipartite) == (True, True, 3, 2, False)
    assert not basic_profile(Graph.from_edges(3, [(0, 1)])).connected
    assert not basic_profile(path(3)).regular


@given(graphs())
def test_connectivity_and_bipartite_match_networkx(g):
    h = to_nx(g)
    assert is_connected(g) == nx.is_connected(h)
    assert basic_profile(g).bipartite == nx.is_bipartite(h)


@given(connected_graphs())
def test_bfs_layers_match_networkx(g):
    h = to_nx(g)
    for root in range(g.n):
        dist = nx.single_source_shortest_path_length(h, root)
        layers = bfs_layers(g, root)
        for i, mask in enumerate(layers):
            assert {v for v in range(g.n) if mask >> v & 1} == {v for v, d in dist.items() if d == i}
        assert distance_profile(g, root).eccentricity == max(dist.values())


@given(connected_graphs())
def test_eccentricity_maximum_is_diameter(g):
    ecc = max(distance_profile(g, u).eccentricity for u in range(g.n))
    assert ecc == basic_profile(g).diameter == nx.diameter(to_nx(g))


def test_odd_girth_examples():
    assert odd_girth_combinatorial(cycle(7)) == 7
    assert odd_girth_combinatorial(kneser(5, 2)) == 5
    assert odd_girth_combinatorial(complete(4)) == 3
    assert odd_girth_combinatorial(hypercube(3)) == math.inf
    assert odd_girth_combinatorial(folded_cube(7)) == 7


@given(graphs())
def test_odd_girth_matches_double_cover_oracle(g):
    assert odd_girth_combinatorial(g) == odd_girth_oracle(to_nx(g))


@given(graphs())
def test_odd_girth_infinite_iff_bipartite(g):
    assert (odd_girth_combinatorial(g) == math.inf) == nx.is_bipartite(to_nx(g))


def test_excess_examples():
    assert excess_vector(kneser(5, 2), 2) == [6] * 10
    assert excess_vector(cycle(5), 2) == [2] * 5
    assert excess_vector(path(3), 1) == [1, 2, 1]
    assert excess_vector(path(3), 5) == [0, 0, 0]
    with pytest.raises(GraphError):
        excess_vector(Graph.from_edges(2, []), 1)


@given(connected_graphs(), st.integers(0, 5))
def test_excess_matches_networkx(g, d):
    h = to_nx(g)
    expected = [
        sum(1 for x in nx.single_source_shortest_path_length(h, u).values() if x == d)
        for u in range(g.n)
    ]
    assert excess_vector(g, d) == expected


# intersection arrays

def test_intersection_array_basics():
    arr = IntersectionArray((3, 2), (1, 1))
    assert str(arr) == "{3,2;1,1}"
    assert arr.diameter == 2 and arr.valency == 3
    assert arr.a == (0, 2)
    assert arr.layer_sizes() == [1, 3, 6]
    with pytest.raises(ValueError):
        IntersectionArray((3, 2), (2, 1))
    with pytest.raises(ValueError):
        IntersectionArray((3,), (1, 1))


def test_direct_drg_examples():
    assert is_distance_regular_direct(kneser(5, 2)) == IntersectionArray((3, 2), (1, 1))
    assert is_distance_regular_direct(cycle(7)) == IntersectionArray((2, 1, 1), (1, 1, 1))
    assert is_distance_regular_direct(kneser(7, 3)) == IntersectionArray((4, 3, 3), (1, 1, 2))
    assert is_distance_regular_direct(circulant(13, (1, 5))) is None
    with pytest.raises(GraphError):
        is_distance_regular_direct(path(4))
    with pytest.raises(GraphError):
        is_distance_regular_direct(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_direct_drg_matches_networkx_on_regular_graphs():
    for h in nx.graph_atlas_g()[1:]:
        if not nx.is_connected(h) or len({d for _, d in h.degree}) != 1:
            continue
        g = from_nx(h)
        arr = is_distance_regular_direct(g)
        assert (arr is not None) == nx.is_distance_regular(h)
        if arr is not None and g.n > 1:
            b, c = nx.intersection_array(h)
            assert (list(arr.b), list(arr.c)) == (b, c)


@pytest.mark.parametrize("g", [kneser(5, 2), kneser(7, 3), folded_cube(5), cycle(9), hypercube(4)])
def test_array_counting_identity(g):
    arr = is_distance_regular_direct(g)
    sizes = arr.layer_sizes()
    assert sum(sizes) == g.n
    for i in range(arr.diameter):
        assert sizes[i] * arr.b[i] == sizes[i + 1] * arr.c[i]
