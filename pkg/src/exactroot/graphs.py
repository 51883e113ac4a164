"""Immutable simple graphs and digraphs, plus the structural primitives the
rest of the package is built on: exact-distance-2 squares, complements,
connected components, block decompositions and clique-tree / tree tests.

Vertices are always 0..n-1. All values are immutable after construction and
every operation is a pure function, so everything here is safe to share
across threads.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

import numpy as np

from . import _kernels


class Graph:
    """A finite simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_adj", "_csr")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        norm = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "_adj", tuple(tuple(sorted(s)) for s in adj))
        object.__setattr__(self, "_csr", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def vertices(self) -> range:
        return range(self.n)

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Adjacency in CSR form (int64 indptr/indices), cached."""
        cached = self._csr
        if cached is None:
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            for v in range(self.n):
                indptr[v + 1] = indptr[v] + len(self._adj[v])
            indices = np.empty(int(indptr[-1]), dtype=np.int64)
            pos = 0
            for v in range(self.n):
                for w in self._adj[v]:
                    indices[pos] = w
                    pos += 1
            cached = (indptr, indices)
            object.__setattr__(self, "_csr", cached)
        return cached

    def bitset_rows(self) -> np.ndarray:
        """Neighborhood bitmasks as int64 (requires n <= 62)."""
        if self.n > 62:
            raise ValueError("bitset rows support at most 62 vertices")
        rows = np.zeros(self.n, dtype=np.int64)
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return rows

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced on `vertices`, relabeled to 0..k-1 in sorted order."""
        verts = sorted(set(vertices))
        index = {v: i for i, v in enumerate(verts)}
        edges = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return Graph(len(verts), edges)

    def relabel(self, mapping: Mapping[int, int]) -> "Graph":
        """Image under a bijection of 0..n-1 onto itself."""
        if sorted(mapping) != list(range(self.n)) or sorted(mapping.values()) != list(range(self.n)):
            raise ValueError("relabeling must be a bijection of the vertex set")
        return Graph(self.n, [(mapping[u], mapping[v]) for u, v in self.edges])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


class Digraph:
    """A finite simple directed graph on vertices 0..n-1 (no loops)."""

    __slots__ = ("n", "arcs", "_out", "_csr")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        out: list[set[int]] = [set() for _ in range(n)]
        norm = set()
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            norm.add((u, v))
            out[u].add(v)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", frozenset(norm))
        object.__setattr__(self, "_out", tuple(tuple(sorted(s)) for s in out))
        object.__setattr__(self, "_csr", None)

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        cached = self._csr
        if cached is None:
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            for v in range(self.n):
                indptr[v + 1] = indptr[v] + len(self._out[v])
            indices = np.empty(int(indptr[-1]), dtype=np.int64)
            pos = 0
            for v in range(self.n):
                for w in self._out[v]:
                    indices[pos] = w
                    pos += 1
            cached = (indptr, indices)
            object.__setattr__(self, "_csr", cached)
        return cached

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={len(self.arcs)})"


class VertexMapping(Mapping):
    """An injective partial map between vertex sets; used for all certificates."""

    __slots__ = ("_map",)

    def __init__(self, pairs):
        if isinstance(pairs, Mapping):
            pairs = pairs.items()
        d = {}
        for u, v in pairs:
            if u in d and d[u] != v:
                raise ValueError(f"vertex {u} mapped twice")
            d[u] = v
        if len(set(d.values())) != len(d):
            raise ValueError("mapping is not injective")
        object.__setattr__(self, "_map", dict(sorted(d.items())))

    def __setattr__(self, name, value):
        raise AttributeError("VertexMapping is immutable")

    def __getitem__(self, key):
        return self._map[key]

    def __iter__(self):
        return iter(self._map)

    def __len__(self):
        return len(self._map)

    def domain(self) -> frozenset:
        return frozenset(self._map)

    def image(self) -> frozenset:
        return frozenset(self._map.values())

    def inverse(self) -> "VertexMapping":
        return VertexMapping((v, u) for u, v in self._map.items())

    def __repr__(self):
        return f"VertexMapping({self._map})"

    def __hash__(self):
        return hash(frozenset(self._map.items()))


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected pieces, bridges, isolated vertices) and
    cut-vertices of a graph. Every vertex belongs to at least one block;
    a vertex is a cut-vertex exactly when it belongs to two or more."""

    blocks: tuple[frozenset, ...]
    cut_vertices: frozenset
    block_membership: tuple[tuple[int, ...], ...]


def _graph_from_dense(mat: np.ndarray) -> Graph:
    n = mat.shape[0]
    iu, iv = np.nonzero(np.triu(mat, 1))
    return Graph(n, list(zip(iu.tolist(), iv.tolist())))


def exact_square(g: Graph) -> Graph:
    """Graph on the same vertices whose edges join pairs at distance exactly 2.

    Vertices in different components are never joined (their distance is
    infinite, not 2)."""
    indptr, indices = g.csr()
    return _graph_from_dense(_kernels.exact_square_dense(indptr, indices, g.n))


def complement(g: Graph) -> Graph:
    """Complement on the same vertex set; an involution."""
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    return Graph(g.n, edges)


def exact_square_digraph(d: Digraph) -> Digraph:
    """Arc (x, y) iff the directed distance from x to y is exactly 2."""
    indptr, indices = d.csr()
    mat = _kernels.exact_square_digraph_dense(indptr, indices, d.n)
    iu, iv = np.nonzero(mat)
    return Digraph(d.n, list(zip(iu.tolist(), iv.tolist())))


def complement_digraph(d: Digraph) -> Digraph:
    """All arcs (x, y), x != y, that are not arcs of d; an involution."""
    arcs = [
        (u, v)
        for u in range(d.n)
        for v in range(d.n)
        if u != v and not d.has_arc(u, v)
    ]
    return Digraph(d.n, arcs)


def connected_components(g: Graph) -> list[frozenset]:
    """Maximal connected vertex sets, ordered by smallest contained vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        frontier = [s]
        while frontier:
            v = frontier.pop()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    frontier.append(w)
        comps.append(frozenset(comp))
    return comps


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Blocks and cut-vertices via iterative lowpoint DFS.

    Bridges yield 2-vertex blocks and an isolated vertex yields a singleton
    block, so every vertex lies in at least one block and every edge in
    exactly one. Blocks are returned in canonical order (smallest vertex,
    then sorted vertex tuple)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    raw_blocks: list[frozenset] = []
    edge_stack: list[tuple[int, int]] = []
    for root in range(n):
        if disc[root] != -1:
            continue
        if g.degree(root) == 0:
            disc[root] = 0
            raw_blocks.append(frozenset((root,)))
            continue
        t = 0
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, 0)]
        while stack:
            v, pv, i = stack[-1]
            adj = g.neighbors(v)
            if i < len(adj):
                stack[-1] = (v, pv, i + 1)
                w = adj[i]
                if w == pv:
                    continue
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, 0))
                elif disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    if low[v] < low[u]:
                        low[u] = low[v]
                    if low[v] >= disc[u]:
                        comp = set()
                        while True:
                            e = edge_stack.pop()
                            comp.add(e[0])
                            comp.add(e[1])
                            if e == (u, v):
                                break
                        raw_blocks.append(frozenset(comp))
        assert not edge_stack
    blocks = tuple(sorted(raw_blocks, key=lambda b: (min(b), sorted(b))))
    membership: list[list[int]] = [[] for _ in range(n)]
    for i, b in enumerate(blocks):
        for v in b:
            membership[v].append(i)
    cut = frozenset(v for v in range(n) if len(membership[v]) >= 2)
    return BlockDecomposition(blocks, cut, tuple(tuple(m) for m in membership))


def bipartition(g: Graph) -> tuple[frozenset, frozenset] | None:
    """A 2-coloring as two vertex sets, or None when g has an odd cycle.

    Canonical: in every component the side holding its smallest vertex joins
    the first set."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        frontier = [s]
        while frontier:
            v = frontier.pop()
            for w in g.neighbors(v):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    frontier.append(w)
                elif color[w] == color[v]:
                    return None
    left = frozenset(v for v in range(g.n) if color[v] == 0)
    return left, frozenset(range(g.n)) - left


def is_tree(g: Graph) -> bool:
    """Connected with exactly n-1 edges."""
    if g.n == 0:
        return False
    return len(g.edges) == g.n - 1 and len(connected_components(g)) == 1


def is_clique_tree(g: Graph) -> bool:
    """Connected and every block induces a complete graph.

    A single vertex counts as a clique tree; the empty graph does not."""
    if g.n == 0:
        return False
    if len(connected_components(g)) != 1:
        return False
    for block in block_decomposition(g).blocks:
        bl = sorted(block)
        for i, u in enumerate(bl):
            for v in bl[i + 1:]:
                if not g.has_edge(u, v):
                    return False
    return True
