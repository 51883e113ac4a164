"""Rooted limbs of trees and the bottom-up limb-embedding machinery.

A limb (u, v) of a tree T is the maximal subtree containing the edge uv in
which u is a leaf, rooted at u; its height is the largest distance from u
inside it. Embeddability of one limb into another is decided bottom-up by
height: a limb embeds iff its child limbs can be matched injectively into the
target's child limbs, which is a bipartite matching problem on a small 0/1
matrix built from already-decided entries.

The same machinery decides plain subtree isomorphism (conditions disabled)
and, with the degree-versus-block-count conditions enabled, the
"well-embedding" step of the tree-root recognizer.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graphs import Graph, is_tree
from .matching import (
    iter_row_saturating_assignments,
    row_and_column_saturating_matching,
)


@dataclass(frozen=True)
class Limb:
    """The rooted maximal subtree of `host` containing edge (root, anchor)
    with `root` as a leaf."""

    host: Graph
    root: int
    anchor: int
    height: int


class _EdgeTables:
    """Per-directed-edge data for one tree: heights, subtree sizes, reverse
    edges and child edges, with directed edge ids equal to CSR positions."""

    __slots__ = (
        "tree", "n", "indptr", "indices", "tails", "rev", "height", "size",
        "_finalize_order",
    )

    def __init__(self, tree: Graph):
        if not is_tree(tree):
            raise ValueError("limbs are defined for trees only")
        if tree.n < 2:
            raise ValueError("limbs need a tree with at least one edge")
        self.tree = tree
        self.n = tree.n
        indptr, indices = tree.csr()
        self.indptr = indptr
        self.indices = indices
        m = len(indices)
        self.tails = np.repeat(np.arange(tree.n, dtype=np.int64), np.diff(indptr))
        rev = np.empty(m, dtype=np.int64)
        for e in range(m):
            u = int(self.tails[e])
            v = int(indices[e])
            lo, hi = int(indptr[v]), int(indptr[v + 1])
            rev[e] = lo + bisect_left(indices[lo:hi].tolist(), u)
        self.rev = rev
        # heights and sizes by a Kahn pass from the leafward edges inward;
        # the pass order (children before parents) is kept for reuse
        height = np.zeros(m, dtype=np.int64)
        size = np.zeros(m, dtype=np.int64)
        deg = np.diff(indptr)
        remaining = np.array([deg[int(indices[e])] - 1 for e in range(m)], dtype=np.int64)
        queue = deque(int(e) for e in range(m) if remaining[e] == 0)
        order = []
        while queue:
            e = queue.popleft()
            order.append(e)
            u = int(self.tails[e])
            v = int(indices[e])
            hmax = 0
            ssum = 0
            for f in range(int(indptr[v]), int(indptr[v + 1])):
                if f == rev[e]:
                    continue
                if height[f] > hmax:
                    hmax = height[f]
                ssum += size[f] - 1
            height[e] = 1 + hmax
            size[e] = 2 + ssum
            for f in range(int(indptr[u]), int(indptr[u + 1])):
                if f == e:
                    continue
                p = int(rev[f])
                remaining[p] -= 1
                if remaining[p] == 0:
                    queue.append(p)
        self.height = height
        self.size = size
        self._finalize_order = order

    def subtree_counts(self, marked) -> np.ndarray:
        """Per directed edge (u, v): how many marked vertices lie strictly
        beyond u, i.e. in the limb minus its root."""
        counts = np.zeros(len(self.indices), dtype=np.int64)
        for e in self._finalize_order:
            v = int(self.indices[e])
            c = 1 if v in marked else 0
            for f in range(int(self.indptr[v]), int(self.indptr[v + 1])):
                if f != self.rev[e]:
                    c += counts[f]
            counts[e] = c
        return counts

    def edge_id(self, u: int, v: int) -> int:
        lo, hi = int(self.indptr[u]), int(self.indptr[u + 1])
        pos = lo + bisect_left(self.indices[lo:hi].tolist(), v)
        if pos >= hi or self.indices[pos] != v:
            raise ValueError(f"({u}, {v}) is not an edge")
        return pos

    def endpoints(self, e: int) -> tuple[int, int]:
        return int(self.tails[e]), int(self.indices[e])

    def child_ids(self, e: int) -> list[int]:
        """Edge ids (v, w), w != u, for e = (u, v); ascending by w."""
        u, v = self.endpoints(e)
        return [
            f
            for f in range(int(self.indptr[v]), int(self.indptr[v + 1]))
            if int(self.indices[f]) != u
        ]

    def limb(self, e: int) -> Limb:
        u, v = self.endpoints(e)
        return Limb(self.tree, u, v, int(self.height[e]))

    def sorted_ids(self, ids) -> list[int]:
        return sorted(
            ids,
            key=lambda e: (int(self.height[e]), int(self.tails[e]), int(self.indices[e])),
        )

    def downward_ids(self, leaf: int) -> list[int]:
        """The n-1 limbs of the tree rooted at `leaf` (edges oriented away
        from it), sorted by non-decreasing height then (root, anchor)."""
        if self.tree.degree(leaf) != 1:
            raise ValueError(f"vertex {leaf} is not a leaf")
        parent = [-1] * self.n
        order = deque([leaf])
        seen = [False] * self.n
        seen[leaf] = True
        ids = []
        while order:
            v = order.popleft()
            for w in self.tree.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    parent[w] = v
                    ids.append(self.edge_id(v, w))
                    order.append(w)
        return self.sorted_ids(ids)


def limbs_of_rooted(t: Graph, leaf: int) -> list[Limb]:
    """The n-1 limbs of t rooted at `leaf`, by non-decreasing height."""
    tables = _EdgeTables(t)
    return [tables.limb(e) for e in tables.downward_ids(leaf)]


def limbs_of_unrooted(t: Graph) -> list[Limb]:
    """All 2(n-1) limbs of t (both orientations of every edge)."""
    tables = _EdgeTables(t)
    return [tables.limb(e) for e in tables.sorted_ids(range(len(tables.indices)))]


class EmbeddingProblem:
    """The limb-embedding matrix M for a rooted source tree against all limbs
    of a target tree, plus enough structure to retrace the embeddings behind
    any unit entry.

    `row_flag`/`row_value` (and the col twins) drive the optional entry
    conditions: an entry may be 1 only if the flagged root endpoints line up
    and the source value is >= the target value at the root (or likewise at
    the anchor). With use_conditions=False the matrix is plain Matula
    embeddability."""

    def __init__(self, s_tree: Graph, leaf: int, t_tree: Graph,
                 row_flag=None, row_value=None, col_flag=None, col_value=None,
                 use_conditions: bool = False, coverage_marked=None):
        self.source = _EdgeTables(s_tree)
        self.target = _EdgeTables(t_tree)
        self.leaf = leaf
        self.row_ids = self.source.downward_ids(leaf)
        self.col_ids = self.target.sorted_ids(range(len(self.target.indices)))
        self.row_pos = {e: i for i, e in enumerate(self.row_ids)}
        self.col_pos = {e: i for i, e in enumerate(self.col_ids)}
        self.use_conditions = use_conditions
        self.coverage = coverage_marked is not None

        nrows = len(self.row_ids)
        ncols = len(self.col_ids)
        row_children = [
            [self.row_pos[f] for f in self.source.child_ids(e)] for e in self.row_ids
        ]
        col_children = [
            [self.col_pos[f] for f in self.target.child_ids(e)] for e in self.col_ids
        ]
        self._row_children = row_children
        self._col_children = col_children

        def csr_of(lists):
            ptr = np.zeros(len(lists) + 1, dtype=np.int64)
            for i, lst in enumerate(lists):
                ptr[i + 1] = ptr[i] + len(lst)
            flat = np.fromiter(
                (x for lst in lists for x in lst), dtype=np.int64, count=int(ptr[-1])
            )
            return ptr, flat

        row_ptr, row_flat = csr_of(row_children)
        col_ptr, col_flat = csr_of(col_children)

        def endpoint_arrays(tables, ids, flag, value):
            k = len(ids)
            fa = np.zeros(k, dtype=np.uint8)
            va = np.zeros(k, dtype=np.int64)
            fb = np.zeros(k, dtype=np.uint8)
            vb = np.zeros(k, dtype=np.int64)
            if flag is not None:
                for i, e in enumerate(ids):
                    a, b = tables.endpoints(e)
                    if flag(a):
                        fa[i] = 1
                        va[i] = value(a)
                    if flag(b):
                        fb[i] = 1
                        vb[i] = value(b)
            return fa, va, fb, vb

        r_fa, r_va, r_fb, r_vb = endpoint_arrays(self.source, self.row_ids, row_flag, row_value)
        c_fu, c_vu, c_fv, c_vv = endpoint_arrays(self.target, self.col_ids, col_flag, col_value)

        common_args = (
            np.array([int(self.source.height[e]) for e in self.row_ids], dtype=np.int64),
            np.array([int(self.source.size[e]) for e in self.row_ids], dtype=np.int64),
            row_ptr, row_flat,
            r_fa, r_va, r_fb, r_vb,
            np.array([int(self.target.height[e]) for e in self.col_ids], dtype=np.int64),
            np.array([int(self.target.size[e]) for e in self.col_ids], dtype=np.int64),
            col_ptr, col_flat,
            c_fu, c_vu, c_fv, c_vv,
        )
        if self.coverage:
            marked = set(coverage_marked)
            per_edge = self.target.subtree_counts(marked)
            self.col_cvin = np.array(
                [int(per_edge[e]) for e in self.col_ids], dtype=np.int64
            )
            beyond = np.array(
                [
                    int(per_edge[e]) - (1 if int(self.target.indices[e]) in marked else 0)
                    for e in self.col_ids
                ],
                dtype=np.int64,
            )
            self.entries = _kernels.fill_coverage_matrix(
                *common_args, self.col_cvin, beyond,
                np.uint8(1 if use_conditions else 0),
            )
        else:
            self.col_cvin = None
            self.entries = _kernels.fill_embedding_matrix(
                *common_args, np.uint8(1 if use_conditions else 0),
            )

    # -- retracing -------------------------------------------------------

    def iter_embeddings(self, row: int, col: int, budget: list[int]):
        """Yield vertex maps (source tree -> target tree) witnessing entry
        (row, col), in deterministic order. `budget` is a single-element
        list of remaining work units; enumeration stops silently once spent."""
        if self.entries[row, col] == 0:
            raise ValueError(f"entry ({row}, {col}) is zero")
        if self.coverage:
            raise ValueError("plain enumeration is for non-coverage matrices")
        yield from self._embeddings(row, col, budget)

    def coverage_embedding(self, row: int, col: int) -> dict:
        """The deterministic embedding behind a unit entry of a coverage
        matrix: its image contains every marked vertex of the column limb
        except possibly the limb's root. Matchings saturating both the rows
        and the marked ("mandatory") columns are rebuilt level by level."""
        if not self.coverage:
            raise ValueError("coverage retrace needs a coverage matrix")
        if self.entries[row, col] == 0:
            raise ValueError(f"entry ({row}, {col}) is zero")
        out: dict = {}
        stack = [(row, col)]
        while stack:
            r, c = stack.pop()
            a, b = self.source.endpoints(self.row_ids[r])
            u, v = self.target.endpoints(self.col_ids[c])
            out[a] = u
            out[b] = v
            kids_r = self._row_children[r]
            if not kids_r:
                continue
            kids_c = self._col_children[c]
            adj = [
                tuple(j for j, cj in enumerate(kids_c) if self.entries[ri, cj])
                for ri in kids_r
            ]
            mandatory = [
                j for j, cj in enumerate(kids_c) if self.col_cvin[cj] > 0
            ]
            assignment = row_and_column_saturating_matching(
                adj, len(kids_c), mandatory
            )
            for i, ri in enumerate(kids_r):
                stack.append((ri, kids_c[assignment[i]]))
        return out

    def _embeddings(self, row: int, col: int, budget: list[int]):
        if budget[0] <= 0:
            return
        a, b = self.source.endpoints(self.row_ids[row])
        u, v = self.target.endpoints(self.col_ids[col])
        base = {a: u, b: v}
        kids_r = self._row_children[row]
        if not kids_r:
            budget[0] -= 1
            yield base
            return
        kids_c = self._col_children[col]
        adj = [
            tuple(j for j, cj in enumerate(kids_c) if self.entries[ri, cj])
            for ri in kids_r
        ]
        for assignment in iter_row_saturating_assignments(adj, len(kids_c)):
            if budget[0] <= 0:
                return
            budget[0] -= 1

            def expand(idx: int, acc: dict):
                if budget[0] <= 0:
                    return
                if idx == len(kids_r):
                    yield dict(acc)
                    return
                for sub in self._embeddings(kids_r[idx], kids_c[assignment[idx]], budget):
                    merged = dict(acc)
                    merged.update(sub)
                    yield from expand(idx + 1, merged)

            yield from expand(0, base)


def subtree_isomorphic(s: Graph, t: Graph) -> bool:
    """Polynomial-time subtree isomorphism for trees: is s isomorphic to a
    subtree of t? Decided through the limb-embedding matrix with no extra
    conditions; equivalent to checking the last matrix row for a unit entry."""
    if not is_tree(s) or not is_tree(t):
        raise ValueError("both arguments must be trees")
    if s.n > t.n:
        return False
    if s.n == 1:
        return t.n >= 1
    if t.n < 2:
        return False
    leaf = min(v for v in range(s.n) if s.degree(v) == 1)
    problem = EmbeddingProblem(s, leaf, t)
    return bool(problem.entries[-1].any())
