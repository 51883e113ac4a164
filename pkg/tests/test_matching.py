import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exactroot import BipartiteMatrix, Matching, is_complete_for_rows, maximum_matching
from exactroot.matching import (
    iter_row_saturating_assignments,
    row_and_column_saturating_matching,
)


def brute_force_max_matching_size(mat):
    # independent of the augmenting-path code: bitmask DP over used columns
    rows = [0] * mat.p
    for r, c in mat.ones:
        rows[r] |= 1 << c
    best = {0: 0}
    for r in range(mat.p):
        new = dict(best)
        for mask, cnt in best.items():
            avail = rows[r] & ~mask
            while avail:
                bit = avail & -avail
                avail ^= bit
                key = mask | bit
                if new.get(key, -1) < cnt + 1:
                    new[key] = cnt + 1
        best = new
    return max(best.values())


def test_examples():
    full = BipartiteMatrix(2, 2, {(0, 0), (0, 1), (1, 0), (1, 1)})
    assert len(maximum_matching(full)) == 2
    ident = BipartiteMatrix(3, 3, {(i, i) for i in range(3)})
    assert len(maximum_matching(ident)) == 3
    shared = BipartiteMatrix(2, 1, {(0, 0), (1, 0)})
    assert len(maximum_matching(shared)) == 1
    assert is_complete_for_rows(full, maximum_matching(full))
    assert not is_complete_for_rows(shared, maximum_matching(shared))
    empty = BipartiteMatrix(0, 3, set())
    assert is_complete_for_rows(empty, maximum_matching(empty))


def test_matching_validation():
    with pytest.raises(ValueError):
        Matching({(0, 0), (0, 1)})
    with pytest.raises(ValueError):
        Matching({(0, 0), (1, 0)})
    with pytest.raises(ValueError):
        BipartiteMatrix(2, 2, {(2, 0)})
    mat = BipartiteMatrix(2, 2, {(0, 0)})
    with pytest.raises(ValueError):
        is_complete_for_rows(mat, Matching({(1, 1)}))


def test_determinism():
    mat = BipartiteMatrix(3, 4, {(0, 1), (0, 2), (1, 1), (1, 3), (2, 2), (2, 0)})
    results = {frozenset(maximum_matching(mat).pairs) for _ in range(5)}
    assert len(results) == 1


@given(
    st.integers(0, 8),
    st.integers(0, 8),
    st.integers(0, 10**9),
)
@settings(max_examples=120, deadline=None)
def test_maximum_matching_vs_brute_force(p, q, seed):
    import random

    rng = random.Random(seed)
    ones = {
        (r, c) for r in range(p) for c in range(q) if rng.random() < 0.45
    }
    mat = BipartiteMatrix(p, q, ones)
    match = maximum_matching(mat)
    assert match.pairs <= mat.ones
    assert len(match) == brute_force_max_matching_size(mat)
    assert len(match) <= min(p, q)
    assert len(match) <= len(mat.ones) or not mat.ones


def test_exhaustive_small_matrices():
    for p, q in [(2, 2), (3, 2), (2, 3)]:
        cells = [(r, c) for r in range(p) for c in range(q)]
        for mask in range(1 << len(cells)):
            ones = {cells[i] for i in range(len(cells)) if (mask >> i) & 1}
            mat = BipartiteMatrix(p, q, ones)
            assert len(maximum_matching(mat)) == brute_force_max_matching_size(mat)


def test_iter_row_saturating_assignments():
    adj = [(0, 1), (0, 2), (1,)]
    # row 2 is pinned to column 1, which forces row 0 onto column 0
    assert list(iter_row_saturating_assignments(adj, 3)) == [(0, 2, 1)]
    adj = [(0, 1), (0, 1)]
    assert list(iter_row_saturating_assignments(adj, 2)) == [(0, 1), (1, 0)]
    assert list(iter_row_saturating_assignments([(0,), (0,)], 1)) == []
    assert list(iter_row_saturating_assignments([], 2)) == [()]


def test_row_and_column_saturating_matching():
    # rows can be saturated several ways; force a specific column
    adj = [(0, 1), (1, 2)]
    out = row_and_column_saturating_matching(adj, 3, [2])
    assert out[1] == 2 and out[0] in (0, 1)
    out = row_and_column_saturating_matching(adj, 3, [0, 2])
    assert out == [0, 2]
    with pytest.raises(ValueError):
        row_and_column_saturating_matching([(0,), (0,)], 2, [])
    with pytest.raises(ValueError):
        row_and_column_saturating_matching([(0,)], 2, [1])


@given(st.integers(1, 5), st.integers(1, 6), st.integers(0, 10**9))
@settings(max_examples=150, deadline=None)
def test_row_and_column_saturating_matching_property(p, q, seed):
    import random

    rng = random.Random(seed)
    adj = [
        tuple(c for c in range(q) if rng.random() < 0.5) for _ in range(p)
    ]
    mandatory = [c for c in range(q) if rng.random() < 0.3]
    # feasibility by brute force over injections
    feasible = False
    for perm in itertools.permutations(range(q), p):
        if all(perm[i] in adj[i] for i in range(p)) and set(mandatory) <= set(perm):
            feasible = True
            break
    try:
        out = row_and_column_saturating_matching(adj, q, mandatory)
    except ValueError:
        assert not feasible
        return
    assert feasible
    assert len(set(out)) == p
    for i, c in enumerate(out):
        assert c in adj[i]
    assert set(mandatory) <= set(out)
