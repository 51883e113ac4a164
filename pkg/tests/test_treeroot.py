import pytest

from exactroot import (
    Graph,
    VertexMapping,
    block_decomposition,
    bruteforce_tree_roots,
    canonical_tree,
    clique_tree_via_canonical,
    complete_tree_root,
    connected_components,
    exact_square,
    is_clique_tree,
    is_tree,
    recognize_tree_root,
    restriction_iso,
    retrace_embedding,
    stage1,
    stage2_embedding_matrix,
)
from exactroot.generators import random_clique_tree, random_tree
from helpers import complete_graph, cycle_graph, disjoint_union, path_graph, star_graph


BOWTIE = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


# --- canonical trees -------------------------------------------------------------

def test_canonical_tree_k3():
    ct = canonical_tree(complete_graph(3))
    assert sorted(ct.tree.edges) == [(0, 3), (1, 3), (2, 3)]
    assert ct.provenance[3] == ("block", 0)
    assert ct.w_vertices == frozenset({0, 1, 2})


def test_canonical_tree_k2():
    ct = canonical_tree(complete_graph(2))
    assert sorted(ct.tree.edges) == [(0, 2), (1, 2)]


def test_canonical_tree_bowtie():
    ct = canonical_tree(BOWTIE)
    assert ct.tree.n == 7
    assert sorted(ct.tree.edges) == [(0, 5), (1, 5), (2, 5), (2, 6), (3, 6), (4, 6)]
    assert is_tree(ct.tree)


def test_canonical_tree_rejects_non_clique_tree():
    with pytest.raises(ValueError):
        canonical_tree(cycle_graph(4))
    with pytest.raises(ValueError):
        canonical_tree(Graph(2))


def test_clique_tree_via_canonical():
    assert clique_tree_via_canonical(path_graph(4))
    assert clique_tree_via_canonical(BOWTIE)
    assert not clique_tree_via_canonical(cycle_graph(4))


# --- stage 1 -----------------------------------------------------------------------

def test_stage1_early_no():
    assert stage1(cycle_graph(4)) is None  # one component
    three = disjoint_union(
        disjoint_union(complete_graph(3), complete_graph(3)), Graph(1)
    )
    assert stage1(three) is None  # three components
    assert stage1(disjoint_union(cycle_graph(4), complete_graph(2))) is None


def test_stage1_k3_k1():
    g = disjoint_union(complete_graph(3), Graph(1))
    s1 = stage1(g)
    assert s1 is not None
    assert s1.c1 == complete_graph(3)
    assert s1.c2 == Graph(1)
    assert s1.hatc2.n == 1
    assert s1.d_t == (3,)
    assert s1.b_c2 == (1,)
    assert s1.cv_c2 == frozenset()


def test_stage1_artifacts_on_p5_square():
    g = exact_square(path_graph(5))  # path 0-2-4 plus edge 1-3
    s1 = stage1(g)
    assert s1 is not None
    assert s1.c1_vertices == (0, 2, 4)
    assert s1.c2_vertices == (1, 3)
    assert is_clique_tree(s1.hatc2)
    assert is_tree(s1.t_hatc2.tree) and is_tree(s1.t_c2.tree)


# --- stage 2 and retracing -----------------------------------------------------------

def test_stage2_matrix_on_p5_square():
    g = exact_square(path_graph(5))
    s1 = stage1(g)
    m = stage2_embedding_matrix(s1)
    heights = [l.height for l in m.rows]
    assert heights == sorted(heights)
    assert len(m.cols) == 2 * (s1.t_c2.tree.n - 1)
    assert m.entries[-1].any()  # some unit entry in the last row


def test_stage2_rejects_degenerate():
    g = disjoint_union(complete_graph(3), Graph(1))
    s1 = stage1(g)
    with pytest.raises(ValueError):
        stage2_embedding_matrix(s1)


def test_stage2_last_row_zero_when_degree_condition_fails():
    # C1 = path (two blocks, both block vertices of degree 2); C2's hub sits
    # in three blocks, so no payload vertex may take it, and the two payload
    # vertices cannot land on two leaves either (leaves are 4 apart)
    g = disjoint_union(path_graph(3), star_graph(3))
    s1 = stage1(g)
    assert s1 is not None
    m = stage2_embedding_matrix(s1)
    assert not m.entries[-1].any()
    assert recognize_tree_root(g).decision is False
    assert not bruteforce_tree_roots(g, limit=7)


def test_k2_with_bowtie_is_a_yes_instance():
    # the bowtie's cut-vertex lies in exactly two blocks and the lone block
    # vertex of K2's canonical tree has degree exactly two, so the bound
    # holds with equality and a root exists
    g = disjoint_union(path_graph(2), BOWTIE)
    ans = recognize_tree_root(g)
    assert ans.decision and exact_square(ans.root) == g
    assert bruteforce_tree_roots(g, limit=7)


def test_retrace_embedding_good_and_edge_preserving():
    caterpillar = Graph(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)])
    for g in [
        exact_square(path_graph(5)),
        exact_square(star_graph(4)),
        exact_square(caterpillar),
    ]:
        s1 = stage1(g)
        if s1.hatc2.n < 2:
            continue
        m = stage2_embedding_matrix(s1)
        last = len(m.rows) - 1
        cols = [c for c in range(len(m.cols)) if m.entries[last, c]]
        assert cols
        phi = retrace_embedding(m, (last, cols[0]))
        src = s1.t_hatc2.tree
        tgt = s1.t_c2.tree
        assert len(phi) == src.n and len(phi.image()) == src.n
        for a, b in src.edges:
            assert tgt.has_edge(phi[a], phi[b])
        for s in range(s1.hatc2.n):
            f = phi[s]
            assert f < s1.c2.n
            assert s1.d_t[s] >= s1.b_c2[f]
        with pytest.raises(ValueError):
            zero_cols = [c for c in range(len(m.cols)) if not m.entries[last, c]]
            if not zero_cols:
                raise ValueError("all columns unit; nothing to test")
            retrace_embedding(m, (last, zero_cols[0]))


# --- recognition -----------------------------------------------------------------------

def test_recognize_examples():
    g = disjoint_union(complete_graph(3), Graph(1))
    ans = recognize_tree_root(g)
    assert ans.decision
    assert sorted(ans.root.edges) == [(0, 3), (1, 3), (2, 3)]
    assert exact_square(ans.root) == g

    g = exact_square(path_graph(5))
    ans = recognize_tree_root(g)
    assert ans.decision and exact_square(ans.root) == g

    g = disjoint_union(Graph(1), path_graph(3))
    assert recognize_tree_root(g).decision is False

    g = disjoint_union(complete_graph(3), complete_graph(3))
    ans = recognize_tree_root(g)
    assert ans.decision and exact_square(ans.root) == g
    degs = sorted(ans.root.degree(v) for v in range(6))
    assert degs == [1, 1, 1, 1, 3, 3]  # the spider


def test_recognize_trivial_inputs():
    assert recognize_tree_root(Graph(0)).decision is False
    assert recognize_tree_root(Graph(1)).decision is False
    ans = recognize_tree_root(Graph(2))
    assert ans.decision and ans.root == complete_graph(2)
    assert recognize_tree_root(complete_graph(2)).decision is False


def test_recognize_certificate_is_identity_iso():
    g = exact_square(random_tree(40, 3))
    ans = recognize_tree_root(g)
    assert ans.decision
    assert ans.iso_to_input == VertexMapping((v, v) for v in range(g.n))
    assert exact_square(ans.root) == g


def test_recognsize_matches_oracle_small():
    from exactroot import enumerate_all_graphs

    for n in range(2, 6):
        for g in enumerate_all_graphs(n):
            decision = recognize_tree_root(g).decision
            assert decision == bool(bruteforce_tree_roots(g, limit=7))


def test_recognize_swap_assignment_agrees():
    import random

    rng = random.Random(77)
    for _ in range(120):
        a = random_clique_tree(rng.randint(1, 6), rng.randrange(10**9))
        b = random_clique_tree(rng.randint(1, 6), rng.randrange(10**9))
        g = disjoint_union(a, b)
        assert (
            recognize_tree_root(g).decision
            == recognize_tree_root(g, swap=True).decision
        )


def test_recognize_all_tree_squares_medium():
    for n, seed in [(12, 0), (25, 1), (60, 2), (120, 3)]:
        t = random_tree(n, seed)
        g = exact_square(t)
        ans = recognize_tree_root(g)
        assert ans.decision and exact_square(ans.root) == g


def test_recognize_needs_alternative_embedding():
    # regression: the first retraced embedding of the unique unit entry can
    # miss a cut-vertex even though a sibling embedding covers it
    t = random_tree(68, 26)
    g = exact_square(t)
    ans = recognize_tree_root(g)
    assert ans.decision and exact_square(ans.root) == g


# --- completion -----------------------------------------------------------------------

def test_complete_tree_root_k2_p3():
    # W1 = K2 on {0,1}; W2 = path 2-3-4; the lone block vertex maps to the
    # middle of the path (the only choice satisfying the degree condition)
    g = Graph(5, [(0, 1), (2, 3), (3, 4)])
    t_w1 = canonical_tree(complete_graph(2))
    root = complete_tree_root(t_w1, g, VertexMapping([(2, 3)]))
    assert sorted(root.edges) == [(0, 2), (0, 3), (1, 3), (1, 4)]
    assert exact_square(root) == g
    # mapping the block vertex to a path end violates the degree condition
    with pytest.raises(ValueError, match="degree|cut"):
        complete_tree_root(t_w1, g, VertexMapping([(2, 2)]))


def test_complete_tree_root_two_triangles():
    g = disjoint_union(complete_graph(3), complete_graph(3))
    t_w1 = canonical_tree(complete_graph(3))
    root = complete_tree_root(t_w1, g, VertexMapping([(3, 3)]))
    assert exact_square(root) == g
    degs = sorted(root.degree(v) for v in range(6))
    assert degs == [1, 1, 1, 1, 3, 3]


def test_complete_tree_root_nothing_to_add():
    # W2 is fully covered by the image: the result is the canonical tree of
    # W1 itself, its block vertex renamed to the image vertex
    g = disjoint_union(complete_graph(2), Graph(1))
    t_w1 = canonical_tree(complete_graph(2))
    root = complete_tree_root(t_w1, g, VertexMapping([(2, 2)]))
    assert root == Graph(3, [(0, 2), (1, 2)])
    assert exact_square(root) == g


def test_complete_tree_root_validates_input():
    g = Graph(5, [(0, 1), (2, 3), (3, 4)])
    with pytest.raises(ValueError, match="canonical"):
        complete_tree_root(canonical_tree(complete_graph(3)), g,
                           VertexMapping([(3, 3)]))
    with pytest.raises(ValueError):
        complete_tree_root(canonical_tree(complete_graph(2)),
                           cycle_graph(4), VertexMapping([(2, 1)]))


# --- restriction -----------------------------------------------------------------------

def test_restriction_iso_identity():
    ct = canonical_tree(BOWTIE)
    ident = VertexMapping((v, v) for v in range(ct.tree.n))
    psi = restriction_iso(ident, ct, ct)
    assert psi == VertexMapping((v, v) for v in range(5))


def test_restriction_iso_on_two_triangles_instance():
    g = disjoint_union(complete_graph(3), complete_graph(3))
    s1 = stage1(g)
    # hatC2 is a single vertex here; build the canonical-tree iso by hand:
    # K1's canonical tree (an edge) into C2's canonical tree (a star)
    c_hat = s1.t_hatc2
    c_2 = s1.t_c2
    phi = VertexMapping([(0, 0), (1, 3)])  # original->original, block->block
    psi = restriction_iso(phi, c_hat, c_2)
    assert psi == VertexMapping([(0, 0)])


def test_restriction_iso_rejects_block_image():
    g = disjoint_union(complete_graph(3), complete_graph(3))
    s1 = stage1(g)
    with pytest.raises(ValueError, match="block"):
        restriction_iso(VertexMapping([(0, 3), (1, 0)]), s1.t_hatc2, s1.t_c2)


# --- structural laws as properties ----------------------------------------------------

def test_tree_square_is_two_clique_trees():
    for seed in range(30):
        n = 2 + (seed * 7) % 60
        t = random_tree(n, seed)
        sq = exact_square(t)
        comps = connected_components(sq)
        assert len(comps) == 2
        for comp in comps:
            assert is_clique_tree(sq.induced_subgraph(comp))


def test_cut_vertex_law_and_degree_bound():
    for seed in range(30):
        n = 2 + (seed * 11) % 80
        t = random_tree(n, seed + 1000)
        sq = exact_square(t)
        bd = block_decomposition(sq)
        for v in range(n):
            non_leaf = sum(1 for w in t.neighbors(v) if t.degree(w) >= 2)
            assert (v in bd.cut_vertices) == (non_leaf >= 2)
            assert len(bd.block_membership[v]) <= t.degree(v)


def test_coverage_matrix_semantics_vs_enumeration():
    # entry (r, c) of the coverage matrix must equal: "some good embedding of
    # row limb r into column limb c covers every cut-vertex of C2 inside the
    # limb minus its root" -- checked against exhaustive enumeration of the
    # plain matrix's embeddings on small random instances
    import random

    from exactroot.treeroot import _coverage_problem

    rng = random.Random(321)
    cases = 0
    for trial in range(60):
        n1 = rng.randint(2, 5)
        n2 = rng.randint(2, 5)
        g = disjoint_union(
            random_clique_tree(n1, rng.randrange(10**9)),
            random_clique_tree(n2, rng.randrange(10**9)),
        )
        s1 = stage1(g)
        if s1 is None or s1.hatc2.n < 2:
            continue
        plain = stage2_embedding_matrix(s1)
        cov = _coverage_problem(s1)
        assert plain._problem.row_ids == cov.row_ids
        assert plain._problem.col_ids == cov.col_ids
        rows = len(cov.row_ids)
        for r in range(rows):
            for c in range(len(cov.col_ids)):
                if not plain.entries[r, c]:
                    assert not cov.entries[r, c]
                    continue
                u, _ = cov.target.endpoints(cov.col_ids[c])
                limb_cv = {
                    v for v in s1.cv_c2
                    if v == u or _in_limb(cov.target, cov.col_ids[c], v)
                }
                want = False
                for phi in plain._problem.iter_embeddings(r, c, [100000]):
                    if limb_cv - {u} <= set(phi.values()):
                        want = True
                        break
                assert bool(cov.entries[r, c]) == want, (r, c, sorted(g.edges))
                cases += 1
    assert cases > 200


def _in_limb(tables, edge_id, vertex):
    # vertex lies strictly beyond the limb's root
    u, v = tables.endpoints(edge_id)
    if vertex == v:
        return True
    # walk from the vertex toward u; the first step off u must pass through v
    from collections import deque

    seen = {u}
    frontier = deque([v])
    while frontier:
        x = frontier.popleft()
        if x == vertex:
            return True
        seen.add(x)
        for w in tables.tree.neighbors(x):
            if w not in seen:
                frontier.append(w)
    return False
