"""Clique edge covers, the reduction gadget for bipartite roots, clique-dual
pairs, and the triangle-free-root characterization.

Deciding bipartite-root existence in general is as hard as clique edge
cover, so this module only verifies certificates, converts witnesses in both
directions across the reduction, and searches exhaustively under a hard size
gate."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graphs import (
    Graph,
    bipartition,
    connected_components,
    exact_square,
)
from .oracle import BudgetError


def _normalize_cliques(cliques, n: int, what: str) -> tuple[frozenset, ...]:
    out = []
    for c in cliques:
        fs = frozenset(int(v) for v in c)
        for v in fs:
            if not (0 <= v < n):
                raise ValueError(f"{what}: vertex {v} out of range")
        out.append(fs)
    return tuple(out)


@dataclass(frozen=True)
class CliqueCover:
    """k cliques of a host graph jointly containing every edge."""

    cliques: tuple

    def __init__(self, cliques):
        object.__setattr__(
            self, "cliques", tuple(frozenset(int(v) for v in c) for c in cliques)
        )

    def __len__(self):
        return len(self.cliques)


@dataclass(frozen=True)
class LabeledCliqueCover:
    """A clique edge cover of a host graph F', one clique per vertex of a
    partner graph F, realizing F's adjacency through intersections."""

    cliques: tuple

    def __init__(self, cliques):
        object.__setattr__(
            self, "cliques", tuple(frozenset(int(v) for v in c) for c in cliques)
        )

    def __len__(self):
        return len(self.cliques)


@dataclass(frozen=True)
class TriangleFreeCollection:
    """One clique of the host graph per vertex; the certificate format for
    triangle-free exact-distance square roots."""

    cliques: tuple

    def __init__(self, cliques):
        object.__setattr__(
            self, "cliques", tuple(frozenset(int(v) for v in c) for c in cliques)
        )

    def __len__(self):
        return len(self.cliques)


# ---------------------------------------------------------------------------
# clique edge covers and the reduction gadget
# ---------------------------------------------------------------------------

def verify_clique_cover(g: Graph, cover: CliqueCover) -> bool:
    """True iff every clique induces a complete subgraph of g and every edge
    of g lies in at least one clique."""
    cliques = _normalize_cliques(cover.cliques, g.n, "clique cover")
    for c in cliques:
        cl = sorted(c)
        for i, u in enumerate(cl):
            for v in cl[i + 1:]:
                if not g.has_edge(u, v):
                    return False
    for u, v in g.edges:
        if not any(u in c and v in c for c in cliques):
            return False
    return True


def gadget_Gk(g: Graph, k: int) -> Graph:
    """The reduction gadget: g, plus a universal vertex n, plus a disjoint
    k-clique on vertices n+1..n+k. g has a k-clique edge cover iff the gadget
    has a bipartite exact-distance square root."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if g.n == 0 or len(connected_components(g)) != 1:
        raise ValueError("gadget requires connected input")
    n = g.n
    edges = list(g.edges)
    edges.extend((v, n) for v in range(n))
    for i in range(k):
        for j in range(i + 1, k):
            edges.append((n + 1 + i, n + 1 + j))
    return Graph(n + 1 + k, edges)


def cover_to_bipartite_root(g: Graph, cover: CliqueCover) -> Graph:
    """Convert a k-clique edge cover of g into a bipartite root of the
    gadget: the universal vertex u joins every clique vertex c_i, and c_i
    joins the members of its clique. The result's exact square is recomputed
    and must equal the gadget exactly."""
    if g.n == 0 or len(connected_components(g)) != 1:
        raise ValueError("gadget requires connected input")
    if not verify_clique_cover(g, cover):
        raise ValueError("invalid clique cover")
    k = len(cover.cliques)
    if k < 1:
        raise ValueError("cover must contain at least one clique")
    n = g.n
    u = n
    edges = [(u, n + 1 + i) for i in range(k)]
    for i, c in enumerate(cover.cliques):
        edges.extend((n + 1 + i, v) for v in sorted(c))
    b = Graph(n + 1 + k, edges)
    assert exact_square(b) == gadget_Gk(g, k)
    return b


def bipartite_root_to_cover(gk: Graph, b: Graph, n: int, k: int) -> CliqueCover:
    """Read a k-clique edge cover off a bipartite root of a gadget: clique i
    is the neighborhood of c_i minus the universal vertex."""
    if not (n >= 1 and k >= 1 and gk.n == n + 1 + k and b.n == gk.n):
        raise ValueError("inconsistent gadget dimensions")
    base = gk.induced_subgraph(range(n))
    if gk != gadget_Gk(base, k):
        raise ValueError("gk is not a gadget with the stated parameters")
    if bipartition(b) is None:
        raise ValueError("root is not bipartite")
    if exact_square(b) != gk:
        raise ValueError("root's exact square does not equal the gadget")
    u = n
    cover = CliqueCover(
        [frozenset(b.neighbors(n + 1 + i)) - {u} for i in range(k)]
    )
    assert verify_clique_cover(base, cover)
    return cover


# ---------------------------------------------------------------------------
# clique-dual pairs (squares of bipartite graphs)
# ---------------------------------------------------------------------------

def verify_clique_dual(f: Graph, fprime: Graph, labeled: LabeledCliqueCover) -> bool:
    """True iff `labeled` presents fprime as a clique-dual of f: one clique
    of fprime per vertex of f, every fprime edge covered, and vertices of f
    adjacent exactly when their cliques intersect."""
    if len(labeled.cliques) != f.n:
        raise ValueError("need exactly one clique per vertex of f")
    cliques = _normalize_cliques(labeled.cliques, fprime.n, "clique dual")
    for c in cliques:
        cl = sorted(c)
        for i, u in enumerate(cl):
            for v in cl[i + 1:]:
                if not fprime.has_edge(u, v):
                    return False
    for u, v in fprime.edges:
        if not any(u in c and v in c for c in cliques):
            return False
    for i in range(f.n):
        for j in range(i + 1, f.n):
            if f.has_edge(i, j) != bool(cliques[i] & cliques[j]):
                return False
    return True


def dual_transpose(f: Graph, fprime: Graph,
                   labeled: LabeledCliqueCover) -> LabeledCliqueCover:
    """The symmetric presentation: clique i of the result collects the f
    vertices whose cliques contain vertex i of fprime. Requires hosts without
    isolated vertices and a verifying input; the output verifies again."""
    for name, graph in (("f", f), ("fprime", fprime)):
        if any(graph.degree(v) == 0 for v in range(graph.n)):
            raise ValueError(f"{name} must have no isolated vertices")
    if not verify_clique_dual(f, fprime, labeled):
        raise ValueError("input does not verify as a clique-dual presentation")
    out = LabeledCliqueCover(
        [
            frozenset(j for j in range(f.n) if i in labeled.cliques[j])
            for i in range(fprime.n)
        ]
    )
    assert verify_clique_dual(fprime, f, out)
    return out


def extract_clique_dual(h: Graph) -> tuple[Graph, Graph, LabeledCliqueCover]:
    """From a connected bipartite graph with both sides of size >= 2, the two
    components of its exact square form a clique-dual pair, covered by the
    neighborhoods of the first side. Components are returned relabeled by
    sorted vertex order."""
    parts = bipartition(h)
    if parts is None:
        raise ValueError("graph is not bipartite")
    if len(connected_components(h)) != 1:
        raise ValueError("graph must be connected")
    left, right = (sorted(parts[0]), sorted(parts[1]))
    if len(left) < 2 or len(right) < 2:
        raise ValueError("both sides must have at least two vertices")
    sq = exact_square(h)
    f = sq.induced_subgraph(left)
    fprime = sq.induced_subgraph(right)
    right_pos = {v: i for i, v in enumerate(right)}
    cover = LabeledCliqueCover(
        [frozenset(right_pos[w] for w in h.neighbors(v)) for v in left]
    )
    assert verify_clique_dual(f, fprime, cover)
    return f, fprime, cover


def recognize_bipartite_root_structure(
    g: Graph, labeled: LabeledCliqueCover, split
) -> Graph | None:
    """Certificate-checked construction of a bipartite root.

    `split` is a pair of vertex sets partitioning V(g) with no edges across;
    the cliques are given in g's labeling, indexed by the sorted vertices of
    the first side. When the clique-dual verification passes, returns the
    bipartite graph joining each first-side vertex to its clique, whose exact
    square is g; returns None when verification fails."""
    if any(g.degree(v) == 0 for v in range(g.n)):
        raise ValueError("input must have no isolated vertices")
    side1 = sorted(set(split[0]))
    side2 = sorted(set(split[1]))
    if sorted(side1 + side2) != list(range(g.n)):
        raise ValueError("split must partition the vertex set")
    side2_set = set(side2)
    for u, v in g.edges:
        if (u in side2_set) != (v in side2_set):
            raise ValueError("split must not cut any edge")
    if len(labeled.cliques) != len(side1):
        raise ValueError("need exactly one clique per vertex of the first side")
    f = g.induced_subgraph(side1)
    fprime = g.induced_subgraph(side2)
    pos2 = {v: i for i, v in enumerate(side2)}
    try:
        local = LabeledCliqueCover(
            [frozenset(pos2[v] for v in c) for c in labeled.cliques]
        )
    except KeyError:
        raise ValueError("cliques must consist of second-side vertices") from None
    if not verify_clique_dual(f, fprime, local):
        return None
    edges = []
    for i, v in enumerate(side1):
        edges.extend((v, u) for u in sorted(labeled.cliques[i]))
    h = Graph(g.n, edges)
    assert exact_square(h) == g
    return h


# ---------------------------------------------------------------------------
# triangle-free roots
# ---------------------------------------------------------------------------

def verify_triangle_free_collection(g: Graph, coll: TriangleFreeCollection) -> bool:
    """The four certificate conditions for a triangle-free root: no vertex in
    its own clique, membership symmetric, adjacency realized exactly by
    intersections, and no clique containing an adjacent-in-certificate pair."""
    if len(coll.cliques) != g.n:
        raise ValueError("need exactly one clique per vertex")
    cliques = _normalize_cliques(coll.cliques, g.n, "collection")
    for i, c in enumerate(cliques):
        if i in c:
            return False
        for j in c:
            if i not in cliques[j]:
                return False
        for j in c:
            for k in c:
                if j != k and j in cliques[k]:
                    return False
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if g.has_edge(i, j) != bool(cliques[i] & cliques[j]):
                return False
    return True


def triangle_free_root_from_collection(g: Graph,
                                       coll: TriangleFreeCollection) -> Graph:
    """Build the root that joins each vertex to its clique; the result is
    triangle-free with exact square equal to g (both re-checked)."""
    if not verify_triangle_free_collection(g, coll):
        raise ValueError("collection does not verify")
    edges = set()
    for i, c in enumerate(coll.cliques):
        for v in c:
            edges.add((i, v) if i < v else (v, i))
    h = Graph(g.n, edges)
    for u, v in h.edges:
        assert not set(h.neighbors(u)) & set(h.neighbors(v)), "root has a triangle"
    assert exact_square(h) == g
    return h


def extract_collection_from_root(h: Graph) -> TriangleFreeCollection:
    """Neighborhood collection of a triangle-free graph; it verifies against
    the exact square of h."""
    for u, v in h.edges:
        if set(h.neighbors(u)) & set(h.neighbors(v)):
            raise ValueError("graph contains a triangle")
    return TriangleFreeCollection([frozenset(h.neighbors(v)) for v in range(h.n)])


def bruteforce_clique_collection(g: Graph,
                                 limit_n: int = 7) -> TriangleFreeCollection | None:
    """Exhaustive certificate search at desk scale. Candidate collections are
    exactly the symmetric loop-free membership relations, i.e. graphs on
    V(g); the certificate conditions force those graphs inside the
    complement, which prunes the scan. Survivors are re-checked by the
    Python verifier before being returned."""
    if g.n > limit_n:
        raise BudgetError(
            f"instance exceeds brute-force budget (n <= {limit_n}, got {g.n})"
        )
    n = g.n
    if n == 0:
        return TriangleFreeCollection([])
    gb = [0] * n
    for u, v in g.edges:
        gb[u] |= 1 << v
        gb[v] |= 1 << u
    pairs = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if not (gb[u] >> v) & 1
    ]
    pu = np.array([u for u, _ in pairs], dtype=np.int64)
    pv = np.array([v for _, v in pairs], dtype=np.int64)
    mask = int(
        _kernels.scan_collection(np.array(gb, dtype=np.int64), n, pu, pv)
    )
    if mask < 0:
        return None
    members: list[set] = [set() for _ in range(n)]
    for t, (u, v) in enumerate(pairs):
        if (mask >> t) & 1:
            members[u].add(v)
            members[v].add(u)
    coll = TriangleFreeCollection([frozenset(m) for m in members])
    assert verify_triangle_free_collection(g, coll)
    return coll
