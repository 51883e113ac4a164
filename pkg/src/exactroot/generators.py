"""Instance families and seeded random graphs for tests and demos."""

from __future__ import annotations

import random

from .graphs import Graph
from .oracle import tree_from_prufer


def _validate_sequence(seq) -> list[int]:
    s = [int(x) for x in seq]
    if len(s) < 2:
        raise ValueError("sequence needs at least two entries")
    if s[0] <= 1:
        raise ValueError("entries must all exceed 1")
    if any(a >= b for a, b in zip(s, s[1:])):
        raise ValueError("sequence must be strictly increasing")
    return s


def gen_GS(seq) -> Graph:
    """The two-component witness family for non-unique tree roots.

    First component: a complete graph on m hub vertices, the i-th hub glued
    to a clique of size n_i - 1 (forming a K_{n_i}). Second component: the
    same flowers with the m hubs contracted into one universal hub. Layout is
    fixed (hubs, then clique blocks in sequence order) for reproducibility."""
    s = _validate_sequence(seq)
    m = len(s)
    edges = [(i, j) for i in range(m) for j in range(i + 1, m)]
    offset = m
    for i, ni in enumerate(s):
        block = list(range(offset, offset + ni - 1))
        offset += ni - 1
        for a_idx, a in enumerate(block):
            edges.append((i, a))
            for b in block[a_idx + 1:]:
                edges.append((a, b))
    hub = offset
    offset += 1
    for ni in s:
        block = list(range(offset, offset + ni - 1))
        offset += ni - 1
        for a_idx, a in enumerate(block):
            edges.append((hub, a))
            for b in block[a_idx + 1:]:
                edges.append((a, b))
    return Graph(offset, edges)


def gen_TL(seq, perm) -> Graph:
    """A tree root of gen_GS(seq), one per permutation of the sequence.

    A hub carries m spokes; spoke i carries n_i - 1 second-layer vertices;
    the first second-layer vertex of spoke i carries l_i - 1 leaves, where
    (l_1..l_m) is the chosen permutation. Distinct permutations give
    non-isomorphic trees with the same exact square."""
    s = _validate_sequence(seq)
    ell = [int(x) for x in perm]
    if sorted(ell) != s:
        raise ValueError("perm must be a permutation of the sequence")
    m = len(s)
    edges = [(0, 1 + i) for i in range(m)]
    offset = 1 + m
    heavy = []
    for i, ni in enumerate(s):
        block = list(range(offset, offset + ni - 1))
        offset += ni - 1
        heavy.append(block[0])
        edges.extend((1 + i, a) for a in block)
    for i, li in enumerate(ell):
        leaves = list(range(offset, offset + li - 1))
        offset += li - 1
        edges.extend((heavy[i], a) for a in leaves)
    return Graph(offset, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniformly random labeled tree (random Pruefer sequence), fixed seed."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return Graph(1)
    rng = random.Random(seed)
    return tree_from_prufer([rng.randrange(n) for _ in range(n - 2)], n)


def random_clique_tree(n: int, seed: int) -> Graph:
    """Random clique tree by gluing cliques of size 2..5 at existing
    vertices; deterministic per seed."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    edges = []
    count = 1
    while count < n:
        attach = rng.randrange(count)
        want = rng.randint(2, 5)
        grow = min(want - 1, n - count)
        block = [attach] + list(range(count, count + grow))
        count += grow
        for i, a in enumerate(block):
            for b in block[i + 1:]:
                edges.append((a, b))
    return Graph(n, edges)
