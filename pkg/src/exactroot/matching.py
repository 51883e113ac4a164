"""Maximum bipartite matching on 0/1 matrices.

This is the engine behind the limb-embedding tests: every "can this limb be
embedded here" question reduces to whether a small 0/1 matrix has a matching
that saturates all rows."""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Sequence


@dataclass(frozen=True)
class BipartiteMatrix:
    """A p x q 0/1 matrix given by the positions of its unit entries."""

    p: int
    q: int
    ones: frozenset

    def __init__(self, p: int, q: int, ones):
        if p < 0 or q < 0:
            raise ValueError("matrix dimensions must be non-negative")
        ones = frozenset((int(r), int(c)) for r, c in ones)
        for r, c in ones:
            if not (0 <= r < p and 0 <= c < q):
                raise ValueError(f"unit entry ({r}, {c}) out of bounds")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "ones", ones)

    def row_adjacency(self) -> list[tuple[int, ...]]:
        rows: list[list[int]] = [[] for _ in range(self.p)]
        for r, c in self.ones:
            rows[r].append(c)
        return [tuple(sorted(cols)) for cols in rows]


@dataclass(frozen=True)
class Matching:
    """A set of unit entries, no two sharing a row or a column."""

    pairs: frozenset

    def __init__(self, pairs):
        pairs = frozenset((int(r), int(c)) for r, c in pairs)
        rows = [r for r, _ in pairs]
        cols = [c for _, c in pairs]
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise ValueError("two matched entries share a row or a column")
        object.__setattr__(self, "pairs", pairs)

    def __len__(self):
        return len(self.pairs)


def _kuhn(adj: Sequence[Sequence[int]], q: int) -> list[int]:
    """Kuhn's augmenting-path matching; rows and columns are scanned in
    increasing order, which makes the result deterministic. Returns the
    row matched to each column (-1 when free)."""
    p = len(adj)
    match_col = [-1] * q
    for start in range(p):
        visited = [False] * q
        # iterative DFS: stack of (row, position in its column list)
        st_row = [start]
        st_pos = [0]
        st_via: list[int] = [0]
        while st_row:
            r = st_row[-1]
            pos = st_pos[-1]
            cols = adj[r]
            moved = False
            while pos < len(cols):
                c = cols[pos]
                if not visited[c]:
                    visited[c] = True
                    st_via[-1] = c
                    owner = match_col[c]
                    if owner < 0:
                        for d in range(len(st_row) - 1, -1, -1):
                            match_col[st_via[d]] = st_row[d]
                        st_row.clear()
                        moved = True
                        break
                    st_pos[-1] = pos + 1
                    st_row.append(owner)
                    st_pos.append(0)
                    st_via.append(0)
                    moved = True
                    break
                pos += 1
            if not moved:
                st_row.pop()
                st_pos.pop()
                st_via.pop()
    return match_col


def maximum_matching(mat: BipartiteMatrix) -> Matching:
    """A maximum-cardinality matching of `mat`; deterministic for fixed input."""
    match_col = _kuhn(mat.row_adjacency(), mat.q)
    return Matching(
        (r, c) for c, r in enumerate(match_col) if r >= 0
    )


def is_complete_for_rows(mat: BipartiteMatrix, match: Matching) -> bool:
    """True iff `match` saturates every row of `mat` (p matched entries).

    Raises ValueError when `match` is not a matching of `mat`."""
    if not match.pairs <= mat.ones:
        raise ValueError("matching contains a position that is not a unit entry")
    return len(match.pairs) == mat.p


def row_and_column_saturating_matching(adj: Sequence[Sequence[int]], q: int,
                                       mandatory: Sequence[int]) -> list[int]:
    """A matching saturating every row and every column in `mandatory`;
    returns the matched column per row.

    Exists whenever a row-saturating matching and a mandatory-saturating
    matching exist separately (the Mendelsohn-Dulmage exchange); built
    constructively by flipping, for each mandatory column missed by the
    row-side matching, its alternating path in the symmetric difference of
    the two matchings. Raises ValueError when either side is unsaturatable."""
    p = len(adj)
    m1_col_to_row = _kuhn(adj, q)
    row_to_col = [-1] * p
    for j, r in enumerate(m1_col_to_row):
        if r >= 0:
            row_to_col[r] = j
    if any(c < 0 for c in row_to_col):
        raise ValueError("rows cannot be saturated")
    mand = sorted(set(mandatory))
    if mand:
        col_rows: list[list[int]] = [[] for _ in range(q)]
        for i, cols in enumerate(adj):
            for c in cols:
                col_rows[c].append(i)
        m2 = _kuhn([tuple(col_rows[j]) for j in mand], p)
        m2_row_of_col = {}
        for i, a in enumerate(m2):
            if a >= 0:
                m2_row_of_col[mand[a]] = i
        if len(m2_row_of_col) < len(mand):
            raise ValueError("mandatory columns cannot be saturated")
        for j0 in mand:
            if m1_col_to_row[j0] >= 0:
                continue
            j = j0
            while True:
                r = m2_row_of_col[j]
                old = row_to_col[r]
                row_to_col[r] = j
                m1_col_to_row[j] = r
                m1_col_to_row[old] = -1
                j = old
                if j not in m2_row_of_col:
                    break
    return row_to_col


def _saturates_rows(adj: Sequence[Sequence[int]], q: int, skip_rows: int,
                    banned: set[int]) -> bool:
    """Can rows skip_rows.. all be matched into columns outside `banned`?"""
    sub = [tuple(c for c in cols if c not in banned) for cols in adj[skip_rows:]]
    match_col = _kuhn(sub, q)
    return sum(1 for r in match_col if r >= 0) == len(sub)


def iter_row_saturating_assignments(adj: Sequence[Sequence[int]], q: int):
    """Yield every assignment of a distinct column to each row (as a tuple,
    one column per row), in lexicographic order. Dead branches are pruned
    with a feasibility matching so the enumeration has polynomial delay."""
    p = len(adj)
    if not _saturates_rows(adj, q, 0, set()):
        return
    acc: list[int] = []
    used: set[int] = set()

    def rec(row: int):
        if row == p:
            yield tuple(acc)
            return
        for c in adj[row]:
            if c in used:
                continue
            used.add(c)
            if _saturates_rows(adj, q, row + 1, used):
                acc.append(c)
                yield from rec(row + 1)
                acc.pop()
            used.discard(c)

    yield from rec(0)
