import itertools

import pytest

from exactroot import (
    Graph,
    bruteforce_subtree_embedding,
    enumerate_labeled_trees,
    limbs_of_rooted,
    limbs_of_unrooted,
    subtree_isomorphic,
    tree_canonical_form,
)
from helpers import complete_graph, path_graph, star_graph


def test_limbs_of_rooted_path():
    limbs = limbs_of_rooted(path_graph(3), 0)
    assert [(l.root, l.anchor, l.height) for l in limbs] == [(1, 2, 1), (0, 1, 2)]


def test_limbs_of_rooted_star():
    t = Graph(4, [(1, 0), (1, 2), (1, 3)])
    limbs = limbs_of_rooted(t, 0)
    assert [(l.root, l.anchor, l.height) for l in limbs] == [
        (1, 2, 1), (1, 3, 1), (0, 1, 2)
    ]


def test_limbs_of_rooted_k2():
    limbs = limbs_of_rooted(complete_graph(2), 0)
    assert [(l.root, l.anchor, l.height) for l in limbs] == [(0, 1, 1)]


def test_limbs_of_rooted_errors():
    with pytest.raises(ValueError, match="leaf"):
        limbs_of_rooted(path_graph(3), 1)
    with pytest.raises(ValueError):
        limbs_of_rooted(complete_graph(3), 0)


def test_limbs_of_unrooted_counts():
    assert len(limbs_of_unrooted(complete_graph(2))) == 2
    assert len(limbs_of_unrooted(path_graph(3))) == 4
    assert len(limbs_of_unrooted(star_graph(3))) == 6
    with pytest.raises(ValueError):
        limbs_of_unrooted(Graph(1))


def test_limb_heights_on_unrooted_path():
    heights = sorted(l.height for l in limbs_of_unrooted(path_graph(4)))
    assert heights == [1, 1, 2, 2, 3, 3]


def test_subtree_isomorphic_examples():
    assert subtree_isomorphic(path_graph(3), star_graph(3))
    assert not subtree_isomorphic(star_graph(3), path_graph(5))
    t = path_graph(4)
    assert subtree_isomorphic(t, t)
    assert subtree_isomorphic(Graph(1), path_graph(2))
    assert not subtree_isomorphic(path_graph(3), path_graph(2))


def tree_classes(n_lo, n_hi):
    """One representative per isomorphism class of trees with n_lo<=n<=n_hi."""
    out = []
    seen = set()
    for n in range(n_lo, n_hi + 1):
        if n == 1:
            out.append(Graph(1))
            continue
        for t in enumerate_labeled_trees(n):
            key = tree_canonical_form(t)
            if key not in seen:
                seen.add(key)
                out.append(t)
    return out


def test_subtree_isomorphic_matches_brute_force():
    small = tree_classes(1, 5)
    hosts = tree_classes(1, 7)
    for s in small:
        for t in hosts:
            expect = (
                bruteforce_subtree_embedding(s, t)
                if s.n >= 1 and t.n >= 1
                else False
            )
            assert subtree_isomorphic(s, t) == expect, (sorted(s.edges), sorted(t.edges))


def test_embedding_problem_retrace_is_an_embedding():
    from exactroot.limbs import EmbeddingProblem

    s = path_graph(3)
    t = star_graph(3)
    problem = EmbeddingProblem(s, 0, t)
    last = len(problem.row_ids) - 1
    unit_cols = [c for c in range(len(problem.col_ids)) if problem.entries[last, c]]
    assert unit_cols
    phi = next(problem.iter_embeddings(last, unit_cols[0], [10**9]))
    assert len(set(phi.values())) == len(phi) == s.n
    for u, v in s.edges:
        assert t.has_edge(phi[u], phi[v])


def test_embedding_enumeration_is_exhaustive_and_deterministic():
    from exactroot.limbs import EmbeddingProblem

    s = star_graph(2)  # path on 3 vertices shaped as a star
    t = star_graph(3)
    problem = EmbeddingProblem(s, 1, t)
    last = len(problem.row_ids) - 1
    results = []
    for c in range(len(problem.col_ids)):
        if problem.entries[last, c]:
            results.extend(
                tuple(sorted(phi.items()))
                for phi in problem.iter_embeddings(last, c, [10**9])
            )
    assert len(results) == len(set(results))
    # every embedding must be injective and edge-preserving
    for item in results:
        phi = dict(item)
        assert len(set(phi.values())) == s.n
        for u, v in s.edges:
            assert t.has_edge(phi[u], phi[v])
    # brute-force count of rooted embeddings of the path rooted at its leaf 1
    count = 0
    for image in itertools.permutations(range(t.n), s.n):
        if all(t.has_edge(image[u], image[v]) for u, v in s.edges):
            count += 1
    assert len(results) == count
