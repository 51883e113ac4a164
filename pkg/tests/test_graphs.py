import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exactroot import (
    Digraph,
    Graph,
    VertexMapping,
    bipartition,
    block_decomposition,
    complement,
    complement_digraph,
    connected_components,
    exact_square,
    exact_square_digraph,
    is_clique_tree,
    is_tree,
)
from helpers import (
    complete_graph,
    cycle_graph,
    exact_square_by_distances,
    floyd_warshall_digraph,
    path_graph,
    random_graph,
    star_graph,
)

INF = float("inf")


def edges(g):
    return sorted(g.edges)


# --- construction and invariants -------------------------------------------

def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])
    with pytest.raises(ValueError):
        Graph(2, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(-1)


def test_graph_value_semantics():
    a = Graph(3, [(0, 1), (1, 2)])
    b = Graph(3, [(1, 2), (0, 1), (1, 0)])
    assert a == b and hash(a) == hash(b)
    assert a != Graph(3, [(0, 1)])
    with pytest.raises(AttributeError):
        a.n = 5


def test_vertex_mapping_injective():
    m = VertexMapping([(0, 3), (1, 4)])
    assert m[0] == 3 and m.inverse()[4] == 1
    with pytest.raises(ValueError):
        VertexMapping([(0, 3), (1, 3)])
    with pytest.raises(ValueError):
        VertexMapping([(0, 3), (0, 4)])


# --- exact squares ----------------------------------------------------------

def test_exact_square_path():
    assert edges(exact_square(path_graph(4))) == [(0, 2), (1, 3)]


def test_exact_square_k2_empty():
    assert edges(exact_square(complete_graph(2))) == []


def test_exact_square_star():
    sq = exact_square(star_graph(3))
    assert edges(sq) == [(1, 2), (1, 3), (2, 3)]


def test_exact_square_c5_pentagram():
    sq = exact_square(cycle_graph(5))
    assert edges(sq) == sorted(tuple(sorted((i, (i + 2) % 5))) for i in range(5))


@pytest.mark.parametrize("n,p,seed", [(1, 0, 0), (6, 0.4, 1), (9, 0.25, 2),
                                      (9, 0.7, 3), (12, 0.5, 4), (15, 0.15, 5)])
def test_exact_square_matches_distance_oracle(n, p, seed):
    g = random_graph(n, p, seed)
    assert exact_square(g) == exact_square_by_distances(g)


@given(st.integers(2, 9), st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_exact_square_properties(n, seed):
    g = random_graph(n, 0.4, seed)
    sq = exact_square(g)
    # edge-disjoint from g, and contained in the distance-<=2 graph
    assert not (sq.edges & g.edges)
    from helpers import floyd_warshall

    dist = floyd_warshall(g)
    for u, v in sq.edges:
        assert dist[u][v] == 2
    for u in range(n):
        for v in range(u + 1, n):
            if dist[u][v] == 2:
                assert sq.has_edge(u, v)


def test_exact_square_bipartite_parts_never_joined():
    g = Graph(6, [(0, 3), (0, 4), (1, 4), (2, 4), (2, 5)])
    parts = bipartition(g)
    sq = exact_square(g)
    for u, v in sq.edges:
        assert (u in parts[0]) == (v in parts[0])


# --- complements ------------------------------------------------------------

def test_complement_examples():
    assert edges(complement(complete_graph(3))) == []
    assert edges(complement(Graph(2))) == [(0, 1)]
    assert edges(complement(cycle_graph(5))) == edges(exact_square(cycle_graph(5)))


@given(st.integers(0, 8), st.integers(0, 10**6))
@settings(max_examples=50, deadline=None)
def test_complement_involution(n, seed):
    g = random_graph(n, 0.5, seed)
    assert complement(complement(g)) == g


# --- digraphs ----------------------------------------------------------------

def test_exact_square_digraph_examples():
    assert sorted(exact_square_digraph(Digraph(3, [(0, 1), (1, 2)])).arcs) == [(0, 2)]
    assert sorted(exact_square_digraph(Digraph(2, [(0, 1), (1, 0)])).arcs) == []
    tri = Digraph(3, [(0, 1), (1, 2), (2, 0)])
    assert sorted(exact_square_digraph(tri).arcs) == [(0, 2), (1, 0), (2, 1)]


def test_exact_square_digraph_matches_oracle():
    import random

    rng = random.Random(9)
    for _ in range(25):
        n = rng.randint(1, 8)
        arcs = [
            (u, v) for u in range(n) for v in range(n)
            if u != v and rng.random() < 0.3
        ]
        d = Digraph(n, arcs)
        dist = floyd_warshall_digraph(d)
        expect = sorted(
            (x, y) for x in range(n) for y in range(n) if dist[x][y] == 2
        )
        assert sorted(exact_square_digraph(d).arcs) == expect


def test_complement_digraph():
    assert sorted(complement_digraph(Digraph(2)).arcs) == [(0, 1), (1, 0)]
    full = Digraph(3, [(u, v) for u in range(3) for v in range(3) if u != v])
    assert sorted(complement_digraph(full).arcs) == []
    assert sorted(complement_digraph(Digraph(2, [(0, 1)])).arcs) == [(1, 0)]
    d = Digraph(4, [(0, 1), (2, 3), (3, 0)])
    assert complement_digraph(complement_digraph(d)) == d


def test_digraph_square_agrees_with_graph_square_on_symmetric():
    g = random_graph(7, 0.4, 11)
    d = Digraph(7, [(u, v) for u, v in g.edges] + [(v, u) for u, v in g.edges])
    sq_d = exact_square_digraph(d)
    sq_g = exact_square(g)
    assert sorted(sq_d.arcs) == sorted(
        [(u, v) for u, v in sq_g.edges] + [(v, u) for u, v in sq_g.edges]
    )


# --- components and blocks ---------------------------------------------------

def test_connected_components_examples():
    g = Graph(4, [(0, 1), (0, 2), (1, 2)])
    assert connected_components(g) == [frozenset({0, 1, 2}), frozenset({3})]
    assert connected_components(Graph(3)) == [frozenset({0}), frozenset({1}), frozenset({2})]
    g = Graph(5, [(0, 1), (1, 2), (3, 4)])
    assert connected_components(g) == [frozenset({0, 1, 2}), frozenset({3, 4})]


def test_block_decomposition_examples():
    bd = block_decomposition(path_graph(3))
    assert bd.blocks == (frozenset({0, 1}), frozenset({1, 2}))
    assert bd.cut_vertices == frozenset({1})
    bd = block_decomposition(complete_graph(3))
    assert bd.blocks == (frozenset({0, 1, 2}),)
    assert bd.cut_vertices == frozenset()
    bowtie = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    bd = block_decomposition(bowtie)
    assert bd.blocks == (frozenset({0, 1, 2}), frozenset({2, 3, 4}))
    assert bd.cut_vertices == frozenset({2})
    assert bd.block_membership[2] == (0, 1)


def test_block_decomposition_isolated_and_bridges():
    g = Graph(4, [(1, 2)])
    bd = block_decomposition(g)
    assert bd.blocks == (
        frozenset({0}), frozenset({1, 2}), frozenset({3})
    )
    assert bd.cut_vertices == frozenset()


@given(st.integers(1, 10), st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_block_edge_partition(n, seed):
    g = random_graph(n, 0.35, seed)
    bd = block_decomposition(g)
    # every edge in exactly one block
    count = 0
    for block in bd.blocks:
        inside = [e for e in g.edges if e[0] in block and e[1] in block]
        count += len(inside)
    assert count == len(g.edges)
    for v in range(n):
        assert len(bd.block_membership[v]) >= 1
    # cut-vertex iff in >= 2 blocks
    for v in range(n):
        comp = next(c for c in connected_components(g) if v in c)
        removed = Graph(
            g.n, [e for e in g.edges if v not in e]
        )
        still = [c for c in connected_components(removed) if c & (comp - {v})]
        is_cut = len(still) >= 2
        assert is_cut == (v in bd.cut_vertices)


# --- clique trees and trees ---------------------------------------------------

def test_is_clique_tree_examples():
    assert is_clique_tree(path_graph(5))
    bowtie = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    assert is_clique_tree(bowtie)
    assert not is_clique_tree(cycle_graph(4))
    assert is_clique_tree(Graph(1))
    assert not is_clique_tree(Graph(2))  # disconnected
    assert not is_clique_tree(Graph(0))


def test_is_clique_tree_matches_cycle_definition():
    # equivalent definition: connected and every cycle induces a clique
    import itertools

    for seed in range(40):
        g = random_graph(6, 0.45, seed + 500)
        if len(connected_components(g)) != 1:
            continue
        # brute force: some cycle whose vertex set is not a clique?
        bad_cycle = False
        for k in range(3, 7):
            for sub in itertools.permutations(range(6), k):
                if sub[0] != min(sub):
                    continue
                if all(
                    g.has_edge(sub[i], sub[(i + 1) % k]) for i in range(k)
                ):
                    verts = set(sub)
                    if any(
                        not g.has_edge(a, b)
                        for a in verts
                        for b in verts
                        if a < b
                    ):
                        bad_cycle = True
                        break
            if bad_cycle:
                break
        assert is_clique_tree(g) == (not bad_cycle)


def test_is_tree():
    assert is_tree(complete_graph(2))
    assert not is_tree(complete_graph(3))
    assert is_tree(star_graph(4))
    assert not is_tree(Graph(2))
    assert is_tree(Graph(1))


def test_bipartition():
    assert bipartition(cycle_graph(5)) is None
    parts = bipartition(path_graph(4))
    assert parts == (frozenset({0, 2}), frozenset({1, 3}))


def test_induced_subgraph_and_relabel():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    sub = g.induced_subgraph([1, 2, 4])
    assert sub.n == 3 and edges(sub) == [(0, 1)]
    rel = g.relabel({0: 4, 1: 3, 2: 2, 3: 1, 4: 0})
    assert edges(rel) == [(0, 1), (1, 2), (2, 3), (3, 4)]
