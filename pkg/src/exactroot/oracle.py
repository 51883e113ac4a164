"""Brute-force ground-truth engines, used to validate every recognizer at
desk scale. The checks here deliberately avoid the recogniser code paths:
squares are recomputed from bitset neighborhoods in plain Python, so a bug in
the fast kernels cannot hide behind an identical bug in its oracle.

All engines carry hard size budgets; pass `limit` explicitly (or set
EXACTROOT_BUDGET when going through the CLI) to raise them."""

from __future__ import annotations

import itertools

import numpy as np

from . import _kernels
from .graphs import (
    Graph,
    VertexMapping,
    connected_components,
    is_tree,
)


class BudgetError(RuntimeError):
    """An exhaustive search would exceed its configured size budget."""


# ---------------------------------------------------------------------------
# bitset helpers (independent of the kernel implementations)
# ---------------------------------------------------------------------------

def _bits(g: Graph) -> list[int]:
    rows = [0] * g.n
    for u, v in g.edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return rows


def _square_bits(h: list[int], n: int) -> list[int]:
    # distance exactly 2 == common neighbor, not adjacent, not equal
    out = [0] * n
    for u in range(n):
        acc = 0
        m = h[u]
        while m:
            v = (m & -m).bit_length() - 1
            acc |= h[v]
            m &= m - 1
        out[u] = acc & ~h[u] & ~(1 << u)
    return out


def _graph_from_bits(bits: list[int], n: int) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if (bits[u] >> v) & 1
    ]
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def enumerate_all_graphs(n: int, limit: int = 5):
    """All 2**C(n,2) labeled graphs on n vertices, each exactly once."""
    if n > limit:
        raise BudgetError(f"all-graphs enumeration exceeds its budget (n <= {limit}, got {n})")
    if n < 0:
        raise ValueError("n must be non-negative")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[t] for t in range(len(pairs)) if (mask >> t) & 1])


def tree_from_prufer(seq, n: int) -> Graph:
    """Decode a Pruefer sequence (length n-2, entries in 0..n-1) into a tree."""
    seq = list(seq)
    if n < 2 or len(seq) != n - 2:
        raise ValueError("sequence length must be n - 2 with n >= 2")
    deg = [1] * n
    for s in seq:
        deg[s] += 1
    edges = []
    for s in seq:
        leaf = min(v for v in range(n) if deg[v] == 1)
        edges.append((leaf, s))
        deg[leaf] -= 1
        deg[s] -= 1
    a, b = (v for v in range(n) if deg[v] == 1)
    edges.append((a, b))
    return Graph(n, edges)


def enumerate_labeled_trees(n: int, limit: int = 9):
    """All n**(n-2) labeled trees on n vertices via Pruefer decoding."""
    if n < 2:
        raise ValueError("labeled-tree enumeration needs n >= 2")
    if n > limit:
        raise BudgetError(f"labeled-tree enumeration exceeds its budget (n <= {limit}, got {n})")
    for seq in itertools.product(range(n), repeat=n - 2):
        yield tree_from_prufer(seq, n)


# ---------------------------------------------------------------------------
# isomorphism at desk scale
# ---------------------------------------------------------------------------

def small_graph_isomorphic(a: Graph, b: Graph, limit: int = 12) -> VertexMapping | None:
    """An isomorphism a -> b if one exists (backtracking with degree and
    neighbor-degree pruning), else None."""
    if a.n > limit or b.n > limit:
        raise BudgetError(f"isomorphism search exceeds its budget (n <= {limit})")
    if a.n != b.n or len(a.edges) != len(b.edges):
        return None
    n = a.n
    deg_a = [a.degree(v) for v in range(n)]
    deg_b = [b.degree(v) for v in range(n)]
    if sorted(deg_a) != sorted(deg_b):
        return None

    def refine(g, deg):
        return [
            (deg[v], tuple(sorted(deg[w] for w in g.neighbors(v))))
            for v in range(n)
        ]

    lab_a = refine(a, deg_a)
    lab_b = refine(b, deg_b)
    if sorted(lab_a) != sorted(lab_b):
        return None
    cands = [
        [w for w in range(n) if lab_b[w] == lab_a[v]]
        for v in range(n)
    ]
    order = sorted(range(n), key=lambda v: len(cands[v]))
    image = [-1] * n
    used = [False] * n

    def place(idx: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        for w in cands[v]:
            if used[w]:
                continue
            ok = True
            for u in a.neighbors(v):
                if image[u] != -1 and not b.has_edge(image[u], w):
                    ok = False
                    break
            if ok:
                for u in range(n):
                    if image[u] != -1 and not a.has_edge(u, v) and b.has_edge(image[u], w):
                        ok = False
                        break
            if ok:
                image[v] = w
                used[w] = True
                if place(idx + 1):
                    return True
                image[v] = -1
                used[w] = False
        return False

    if place(0):
        return VertexMapping((v, image[v]) for v in range(n))
    return None


def _tree_canon(g: Graph, root: int, parent: int):
    return ("v",) + tuple(
        sorted(_tree_canon(g, w, root) for w in g.neighbors(root) if w != parent)
    )


def tree_canonical_form(t: Graph):
    """A hashable canonical form for a tree (AHU, rooted at the center)."""
    if not is_tree(t):
        raise ValueError("canonical form is defined for trees only")
    if t.n == 1:
        return ("v",)
    # peel leaf layers until one or two centers remain
    deg = [t.degree(v) for v in range(t.n)]
    removed = [False] * t.n
    layer = [v for v in range(t.n) if deg[v] == 1]
    remaining = t.n
    while remaining > 2:
        for v in layer:
            removed[v] = True
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in t.neighbors(v):
                if not removed[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    centers = sorted(v for v in range(t.n) if not removed[v])
    if len(centers) == 1:
        return _tree_canon(t, centers[0], -1)
    c1, c2 = centers
    return ("e",) + tuple(sorted((_tree_canon(t, c1, c2), _tree_canon(t, c2, c1))))


# ---------------------------------------------------------------------------
# root searches
# ---------------------------------------------------------------------------

def bruteforce_any_root(g: Graph, limit: int = 5) -> Graph | None:
    """Some labeled H with exact square equal to g, else None. Candidates are
    restricted to subgraphs of the complement (an edge of a root never stays
    an edge of the square)."""
    if g.n > limit:
        raise BudgetError(f"any-root search exceeds its budget (n <= {limit}, got {g.n})")
    n = g.n
    gb = _bits(g)
    non_edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if not (gb[u] >> v) & 1
    ]
    h = [0] * n
    for mask in range(1 << len(non_edges)):
        for i in range(n):
            h[i] = 0
        for t, (u, v) in enumerate(non_edges):
            if (mask >> t) & 1:
                h[u] |= 1 << v
                h[v] |= 1 << u
        if _square_bits(h, n) == gb:
            return _graph_from_bits(h, n)
    return None


def bruteforce_tree_roots(g: Graph, limit: int = 9,
                          first_only: bool = False) -> list[Graph]:
    """All labeled trees t on n(g) vertices with exact square isomorphic to g
    (or just the first one found when `first_only`, for decision checks; a
    clique union can have tens of thousands of labeled roots).

    A jitted Pruefer scan filters candidates on isomorphism invariants of the
    square (edge count, degree sequence, component sizes); survivors are
    confirmed with an independent bitset square plus explicit isomorphism."""
    n = g.n
    if n > limit:
        raise BudgetError(f"tree-root search exceeds its budget (n <= {limit}, got {n})")
    if n == 0:
        return []
    if n == 1:
        return [Graph(1)] if g == Graph(1) else []
    gb = _bits(g)
    comp_sizes = np.array(
        sorted(len(c) for c in connected_components(g)), dtype=np.int64
    )
    degseq = np.array(sorted(g.degree(v) for v in range(n)), dtype=np.int64)
    total = n ** (n - 2)
    buf = np.empty(min(total, 1 << 20), dtype=np.int64)
    count = _kernels.prufer_scan(
        n,
        np.array(gb, dtype=np.int64),
        len(g.edges),
        comp_sizes,
        degseq,
        buf,
    )
    if count < 0:
        raise BudgetError("tree-root survivor buffer overflow")
    roots = []
    for code in buf[:count]:
        code = int(code)
        seq = []
        for _ in range(n - 2):
            seq.append(code % n)
            code //= n
        seq.reverse()
        t = tree_from_prufer(seq, n)
        sq = _graph_from_bits(_square_bits(_bits(t), n), n)
        if small_graph_isomorphic(sq, g, limit=max(limit, 12)) is not None:
            roots.append(t)
            if first_only:
                break
    return roots


def count_nonisomorphic_tree_roots(g: Graph, limit: int = 9) -> int:
    """Number of isomorphism classes among the tree roots of g."""
    return len({tree_canonical_form(t) for t in bruteforce_tree_roots(g, limit)})


def bruteforce_subtree_embedding(s: Graph, t: Graph, limit_s: int = 7,
                                 limit_t: int = 9) -> bool:
    """True iff the tree s is isomorphic to a subtree of the tree t,
    by exhaustive search over vertex subsets."""
    if not is_tree(s) or not is_tree(t):
        raise ValueError("both arguments must be trees")
    if s.n > limit_s or t.n > limit_t:
        raise BudgetError(
            f"subtree search exceeds its budget (|s| <= {limit_s}, |t| <= {limit_t})"
        )
    if s.n > t.n:
        return False
    canon_s = tree_canonical_form(s)
    for subset in itertools.combinations(range(t.n), s.n):
        sub = t.induced_subgraph(subset)
        # a connected subgraph of a tree is induced, so induced is enough
        if len(sub.edges) == s.n - 1 and len(connected_components(sub)) == 1:
            if tree_canonical_form(sub) == canon_s:
                return True
    return False


def bruteforce_triangle_free_root(g: Graph, limit: int = 7) -> Graph | None:
    """Some triangle-free H with exact square equal to g (labeled), else None."""
    if g.n > limit:
        raise BudgetError(f"triangle-free root search exceeds its budget (n <= {limit}, got {g.n})")
    n = g.n
    if n == 0:
        return Graph(0)
    gb = _bits(g)
    non_edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if not (gb[u] >> v) & 1
    ]
    pu = np.array([u for u, _ in non_edges], dtype=np.int64)
    pv = np.array([v for _, v in non_edges], dtype=np.int64)
    mask = int(_kernels.scan_triangle_free_root(np.array(gb, dtype=np.int64), n, pu, pv))
    if mask < 0:
        return None
    h = [0] * n
    for t, (u, v) in enumerate(non_edges):
        if (mask >> t) & 1:
            h[u] |= 1 << v
            h[v] |= 1 << u
    root = _graph_from_bits(h, n)
    assert _square_bits(h, n) == gb
    return root


def bruteforce_bipartite_root(g: Graph, limit: int = 10,
                              limit_bits: int = 20) -> Graph | None:
    """Some bipartite H with exact square equal to g (labeled), else None.

    Candidate roots have all edges across a side assignment; since squares
    never join the two sides of a bipartite graph, every component of g must
    sit entirely on one side, which keeps the scan feasible."""
    if g.n > limit:
        raise BudgetError(f"bipartite root search exceeds its budget (n <= {limit}, got {g.n})")
    n = g.n
    if n == 0:
        return Graph(0)
    gb = _bits(g)
    comps = connected_components(g)
    k = len(comps)
    for pick in range(1 << (k - 1)) if k else range(1):
        left: list[int] = []
        right: list[int] = []
        for i, comp in enumerate(comps):
            # component 0 pinned to the left side; sides are symmetric
            if i == 0 or not (pick >> (i - 1)) & 1:
                left.extend(comp)
            else:
                right.extend(comp)
        pairs = [(u, v) for u in sorted(left) for v in sorted(right)]
        if len(pairs) > limit_bits:
            raise BudgetError(
                f"bipartite root scan exceeds its budget (<= {limit_bits} "
                f"candidate edges, got {len(pairs)})"
            )
        if not pairs:
            if not g.edges:
                return Graph(n)
            continue
        pu = np.array([u for u, _ in pairs], dtype=np.int64)
        pv = np.array([v for _, v in pairs], dtype=np.int64)
        mask = int(_kernels.scan_bipartite_root(np.array(gb, dtype=np.int64), n, pu, pv))
        if mask >= 0:
            h = [0] * n
            for t, (u, v) in enumerate(pairs):
                if (mask >> t) & 1:
                    h[u] |= 1 << v
                    h[v] |= 1 << u
            assert _square_bits(h, n) == gb
            return _graph_from_bits(h, n)
    return None


# ---------------------------------------------------------------------------
# clique covers
# ---------------------------------------------------------------------------

def maximal_cliques(g: Graph) -> list[frozenset]:
    """All maximal cliques (Bron-Kerbosch), canonically ordered."""
    out: list[frozenset] = []

    def bk(r: set, p: set, x: set):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot_pool = p | x
        pivot = max(pivot_pool, key=lambda v: len(set(g.neighbors(v)) & p))
        for v in sorted(p - set(g.neighbors(pivot))):
            nv = set(g.neighbors(v))
            bk(r | {v}, p & nv, x & nv)
            p.discard(v)
            x.add(v)

    bk(set(), set(range(g.n)), set())
    return sorted(out, key=lambda c: (min(c), sorted(c))) if out else []


def bruteforce_clique_cover(g: Graph, k: int) -> tuple[frozenset, ...] | None:
    """A k-clique edge cover of g found exhaustively, else None.

    Only covers by maximal cliques are searched (any cover stays one after
    expanding each clique to a maximal one); the result is padded with
    singleton cliques to exactly k entries."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if not g.edges:
        if g.n == 0:
            return tuple() if k == 0 else None
        return tuple([frozenset((0,))] * k)
    if k == 0:
        return None
    cliques = [c for c in maximal_cliques(g) if len(c) >= 2]
    edge_list = sorted(g.edges)
    edge_index = {e: i for i, e in enumerate(edge_list)}
    full = (1 << len(edge_list)) - 1
    masks = []
    for c in cliques:
        m = 0
        cl = sorted(c)
        for i, u in enumerate(cl):
            for v in cl[i + 1:]:
                m |= 1 << edge_index[(u, v)]
        masks.append(m)
    for j in range(1, min(k, len(cliques)) + 1):
        for combo in itertools.combinations(range(len(cliques)), j):
            acc = 0
            for idx in combo:
                acc |= masks[idx]
            if acc == full:
                chosen = [cliques[idx] for idx in combo]
                chosen.extend([frozenset((0,))] * (k - j))
                return tuple(chosen)
    return None
