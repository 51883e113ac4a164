"""Shared test helpers: small named graphs, an independent distance oracle,
and seeded random instances."""

import random

from exactroot import Graph

INF = float("inf")


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(n_leaves, center=0):
    others = [v for v in range(n_leaves + 1) if v != center]
    return Graph(n_leaves + 1, [(center, v) for v in others])


def disjoint_union(a, b):
    edges = list(a.edges) + [(u + a.n, v + a.n) for u, v in b.edges]
    return Graph(a.n + b.n, edges)


def floyd_warshall(g):
    """All-pairs distances; the independent oracle for exact squares."""
    n = g.n
    dist = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in g.edges:
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == INF:
                continue
            di = dist[i]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return dist


def floyd_warshall_digraph(d):
    n = d.n
    dist = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in d.arcs:
        dist[u][v] = 1
    for k in range(n):
        for i in range(n):
            if dist[i][k] == INF:
                continue
            for j in range(n):
                if dist[i][k] + dist[k][j] < dist[i][j]:
                    dist[i][j] = dist[i][k] + dist[k][j]
    return dist


def exact_square_by_distances(g):
    dist = floyd_warshall(g)
    return Graph(
        g.n,
        [
            (i, j)
            for i in range(g.n)
            for j in range(i + 1, g.n)
            if dist[i][j] == 2
        ],
    )


def random_graph(n, p, seed):
    rng = random.Random(seed)
    return Graph(
        n,
        [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < p
        ],
    )


def random_connected_bipartite(n, seed, min_side=2):
    """Connected bipartite graph on n vertices with both sides >= min_side."""
    rng = random.Random(seed)
    while True:
        left_size = rng.randint(min_side, n - min_side)
        left = list(range(left_size))
        right = list(range(left_size, n))
        edges = set()
        # random spanning structure first, then extra cross edges
        for v in right:
            edges.add((rng.choice(left), v))
        for u in left:
            edges.add((u, rng.choice(right)))
        extra = rng.randint(0, 2 * n)
        for _ in range(extra):
            edges.add((rng.choice(left), rng.choice(right)))
        g = Graph(n, edges)
        from exactroot import connected_components

        if len(connected_components(g)) == 1:
            return g
