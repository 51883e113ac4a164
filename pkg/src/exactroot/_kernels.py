"""Hot numeric kernels, each with a numba fast path and a pure numpy/Python fallback.

The backend is picked once at import time from the EXACTROOT_BACKEND
environment variable ("numba" or "numpy"); when the variable is unset the
numba path is used if numba imports, the numpy path otherwise.
set_backend() switches at runtime, which the benchmark script and the
backend-equivalence tests rely on.

All kernels take plain numpy arrays (CSR adjacency or uint64-style bitset
rows) so that both implementations share one calling convention.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    njit = None
    _HAVE_NUMBA = False


# ---------------------------------------------------------------------------
# exact-distance-2 adjacency
# ---------------------------------------------------------------------------

def _np_exact_square_dense(indptr, indices, n):
    if n == 0:
        return np.zeros((0, 0), dtype=np.uint8)
    a = np.zeros((n, n), dtype=np.float32)
    rows = np.repeat(np.arange(n), np.diff(indptr))
    a[rows, indices] = 1.0
    two = a @ a
    out = (two > 0.5) & (a < 0.5)
    np.fill_diagonal(out, False)
    return out.astype(np.uint8)


def _py_exact_square_dense(indptr, indices, n):
    out = np.zeros((n, n), dtype=np.uint8)
    mark = np.zeros(n, dtype=np.uint8)
    for u in range(n):
        mark[u] = 1
        for j in range(indptr[u], indptr[u + 1]):
            mark[indices[j]] = 1
        for j in range(indptr[u], indptr[u + 1]):
            v = indices[j]
            for t in range(indptr[v], indptr[v + 1]):
                w = indices[t]
                if mark[w] == 0:
                    out[u, w] = 1
                    out[w, u] = 1
        mark[u] = 0
        for j in range(indptr[u], indptr[u + 1]):
            mark[indices[j]] = 0
    return out


def _np_exact_square_digraph_dense(out_indptr, out_indices, n):
    if n == 0:
        return np.zeros((0, 0), dtype=np.uint8)
    a = np.zeros((n, n), dtype=np.float32)
    rows = np.repeat(np.arange(n), np.diff(out_indptr))
    a[rows, out_indices] = 1.0
    two = a @ a
    out = (two > 0.5) & (a < 0.5)
    np.fill_diagonal(out, False)
    return out.astype(np.uint8)


def _py_exact_square_digraph_dense(out_indptr, out_indices, n):
    out = np.zeros((n, n), dtype=np.uint8)
    direct = np.zeros(n, dtype=np.uint8)
    for x in range(n):
        direct[x] = 1
        for j in range(out_indptr[x], out_indptr[x + 1]):
            direct[out_indices[j]] = 1
        for j in range(out_indptr[x], out_indptr[x + 1]):
            z = out_indices[j]
            for t in range(out_indptr[z], out_indptr[z + 1]):
                y = out_indices[t]
                if direct[y] == 0:
                    out[x, y] = 1
        direct[x] = 0
        for j in range(out_indptr[x], out_indptr[x + 1]):
            direct[out_indices[j]] = 0
    return out


# ---------------------------------------------------------------------------
# limb-embedding matrix fill (rooted-subtree embeddability, bottom-up by height)
# ---------------------------------------------------------------------------
#
# Rows are the limbs of the rooted source tree sorted by non-decreasing
# height, so the child limbs of row r always sit at smaller row indices.
# Entry (r, c) is 1 iff the source limb embeds into the target limb, with the
# root mapped to the root; when use_conditions is set the embedding must also
# satisfy the degree-versus-block-count gate at the limb's endpoint that is a
# "payload" vertex (row_cond_a/row_cond_b mark which endpoint that is).

def _py_augment(h, q, row, match_col, visited, st_row, st_pos, st_via):
    depth = 0
    st_row[0] = row
    st_pos[0] = 0
    while depth >= 0:
        r = st_row[depth]
        j = st_pos[depth]
        moved = False
        while j < q:
            if h[r * q + j] != 0 and visited[j] == 0:
                visited[j] = 1
                st_via[depth] = j
                owner = match_col[j]
                if owner < 0:
                    for d in range(depth, -1, -1):
                        match_col[st_via[d]] = st_row[d]
                    return True
                st_pos[depth] = j + 1
                depth += 1
                st_row[depth] = owner
                st_pos[depth] = 0
                moved = True
                break
            j += 1
        if not moved:
            depth -= 1
    return False


def _py_rows_saturated(h, p, q, match_col, visited, st_row, st_pos, st_via):
    # Kuhn's algorithm, rows then columns in ascending order; a row that
    # cannot be augmented can never be saturated later, so bail out early.
    for j in range(q):
        match_col[j] = -1
    for i in range(p):
        for j in range(q):
            visited[j] = 0
        if not _py_augment(h, q, i, match_col, visited, st_row, st_pos, st_via):
            return False
    return True


def _py_fill_embedding_matrix(
    row_height, row_size, row_child_ptr, row_child,
    row_cond_a, row_val_a, row_cond_b, row_val_b,
    col_height, col_size, col_child_ptr, col_child,
    col_cond_u, col_val_u, col_cond_v, col_val_v,
    use_conditions,
):
    nrows = row_height.shape[0]
    ncols = col_height.shape[0]
    m = np.zeros((nrows, ncols), dtype=np.uint8)
    max_p = 0
    for r in range(nrows):
        p = row_child_ptr[r + 1] - row_child_ptr[r]
        if p > max_p:
            max_p = p
    max_q = 0
    for c in range(ncols):
        q = col_child_ptr[c + 1] - col_child_ptr[c]
        if q > max_q:
            max_q = q
    hbuf = np.zeros(max(max_p * max_q, 1), dtype=np.uint8)
    match_col = np.zeros(max(max_q, 1), dtype=np.int64)
    visited = np.zeros(max(max_q, 1), dtype=np.uint8)
    st_row = np.zeros(max_q + 2, dtype=np.int64)
    st_pos = np.zeros(max_q + 2, dtype=np.int64)
    st_via = np.zeros(max_q + 2, dtype=np.int64)

    for r in range(nrows):
        hr = row_height[r]
        sr = row_size[r]
        p = row_child_ptr[r + 1] - row_child_ptr[r]
        for c in range(ncols):
            if col_height[c] < hr or col_size[c] < sr:
                continue
            if use_conditions != 0:
                ok_a = (
                    row_cond_a[r] != 0
                    and col_cond_u[c] != 0
                    and row_val_a[r] >= col_val_u[c]
                )
                ok_b = (
                    row_cond_b[r] != 0
                    and col_cond_v[c] != 0
                    and row_val_b[r] >= col_val_v[c]
                )
                if not (ok_a or ok_b):
                    continue
            if hr == 1:
                m[r, c] = 1
                continue
            q = col_child_ptr[c + 1] - col_child_ptr[c]
            if p > q:
                continue
            for i in range(p):
                ri = row_child[row_child_ptr[r] + i]
                for j in range(q):
                    cj = col_child[col_child_ptr[c] + j]
                    hbuf[i * q + j] = m[ri, cj]
            if _py_rows_saturated(hbuf, p, q, match_col, visited, st_row, st_pos, st_via):
                m[r, c] = 1
    return m


def _py_fill_coverage_matrix(
    row_height, row_size, row_child_ptr, row_child,
    row_cond_a, row_val_a, row_cond_b, row_val_b,
    col_height, col_size, col_child_ptr, col_child,
    col_cond_u, col_val_u, col_cond_v, col_val_v,
    col_cvin, col_beyond_head,
    use_conditions,
):
    """Coverage-aware variant of the embedding fill: entry (r, c) is 1 iff
    the source limb embeds into the target limb AND the image contains every
    marked vertex of the target limb besides its root. Child limbs of the
    target that contain marked vertices (col_cvin > 0) must themselves be
    matched, so feasibility needs a matching saturating all rows plus one
    saturating those mandatory columns (which is enough, by the
    Mendelsohn-Dulmage exchange)."""
    nrows = row_height.shape[0]
    ncols = col_height.shape[0]
    m = np.zeros((nrows, ncols), dtype=np.uint8)
    max_p = 0
    for r in range(nrows):
        p = row_child_ptr[r + 1] - row_child_ptr[r]
        if p > max_p:
            max_p = p
    max_q = 0
    for c in range(ncols):
        q = col_child_ptr[c + 1] - col_child_ptr[c]
        if q > max_q:
            max_q = q
    side = max(max_p, max_q)
    hbuf = np.zeros(max(max_p * max_q, 1), dtype=np.uint8)
    tbuf = np.zeros(max(max_p * max_q, 1), dtype=np.uint8)
    match_col = np.zeros(max(side, 1), dtype=np.int64)
    visited = np.zeros(max(side, 1), dtype=np.uint8)
    st_row = np.zeros(side + 2, dtype=np.int64)
    st_pos = np.zeros(side + 2, dtype=np.int64)
    st_via = np.zeros(side + 2, dtype=np.int64)
    mand = np.zeros(max(max_q, 1), dtype=np.int64)

    for r in range(nrows):
        hr = row_height[r]
        sr = row_size[r]
        p = row_child_ptr[r + 1] - row_child_ptr[r]
        for c in range(ncols):
            if col_height[c] < hr or col_size[c] < sr:
                continue
            if use_conditions != 0:
                ok_a = (
                    row_cond_a[r] != 0
                    and col_cond_u[c] != 0
                    and row_val_a[r] >= col_val_u[c]
                )
                ok_b = (
                    row_cond_b[r] != 0
                    and col_cond_v[c] != 0
                    and row_val_b[r] >= col_val_v[c]
                )
                if not (ok_a or ok_b):
                    continue
            if hr == 1:
                if col_beyond_head[c] == 0:
                    m[r, c] = 1
                continue
            q = col_child_ptr[c + 1] - col_child_ptr[c]
            if p > q:
                continue
            nmand = 0
            for j in range(q):
                if col_cvin[col_child[col_child_ptr[c] + j]] > 0:
                    mand[nmand] = j
                    nmand += 1
            for i in range(p):
                ri = row_child[row_child_ptr[r] + i]
                for j in range(q):
                    cj = col_child[col_child_ptr[c] + j]
                    hbuf[i * q + j] = m[ri, cj]
            if not _py_rows_saturated(
                hbuf, p, q, match_col, visited, st_row, st_pos, st_via
            ):
                continue
            if nmand:
                # transpose restricted to mandatory columns, then saturate them
                for a in range(nmand):
                    j = mand[a]
                    for i in range(p):
                        tbuf[a * p + i] = hbuf[i * q + j]
                if not _py_rows_saturated(
                    tbuf, nmand, p, match_col, visited, st_row, st_pos, st_via
                ):
                    continue
            m[r, c] = 1
    return m


# ---------------------------------------------------------------------------
# bitset brute-force scans (vertex neighborhoods packed into int64 masks)
# ---------------------------------------------------------------------------

def _py_scan_triangle_free_root(g_bits, n, pair_u, pair_v):
    nedges = pair_u.shape[0]
    h = np.zeros(n, dtype=np.int64)
    total = 1 << nedges
    for mask in range(total):
        for i in range(n):
            h[i] = 0
        for t in range(nedges):
            if (mask >> t) & 1:
                u = pair_u[t]
                v = pair_v[t]
                h[u] |= 1 << v
                h[v] |= 1 << u
        ok = True
        for u in range(n):
            hu = h[u]
            for v in range(u + 1, n):
                common = hu & h[v]
                adj = (hu >> v) & 1
                if adj and common != 0:
                    ok = False
                    break
                want = (g_bits[u] >> v) & 1
                got = 1 if (common != 0 and adj == 0) else 0
                if want != got:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return mask
    return -1


def _py_scan_collection(g_bits, n, pair_u, pair_v):
    # Candidate neighborhoods h[i] must be cliques of g, pairwise independent
    # inside themselves, and realize g's adjacency through intersections.
    nedges = pair_u.shape[0]
    h = np.zeros(n, dtype=np.int64)
    total = 1 << nedges
    for mask in range(total):
        for i in range(n):
            h[i] = 0
        for t in range(nedges):
            if (mask >> t) & 1:
                u = pair_u[t]
                v = pair_v[t]
                h[u] |= 1 << v
                h[v] |= 1 << u
        ok = True
        for i in range(n):
            hi = h[i]
            for j in range(n):
                if (hi >> j) & 1:
                    if hi & ~g_bits[j] & ~(1 << j):
                        ok = False
                        break
                    if h[j] & hi:
                        ok = False
                        break
            if not ok:
                break
        if ok:
            for u in range(n):
                for v in range(u + 1, n):
                    want = (g_bits[u] >> v) & 1
                    got = 1 if (h[u] & h[v]) != 0 else 0
                    if want != got:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            return mask
    return -1


def _py_scan_bipartite_root(g_bits, n, pair_u, pair_v):
    nedges = pair_u.shape[0]
    h = np.zeros(n, dtype=np.int64)
    total = 1 << nedges
    for mask in range(total):
        for i in range(n):
            h[i] = 0
        for t in range(nedges):
            if (mask >> t) & 1:
                u = pair_u[t]
                v = pair_v[t]
                h[u] |= 1 << v
                h[v] |= 1 << u
        ok = True
        for u in range(n):
            hu = h[u]
            for v in range(u + 1, n):
                want = (g_bits[u] >> v) & 1
                got = 1 if ((hu & h[v]) != 0 and ((hu >> v) & 1) == 0) else 0
                if want != got:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return mask
    return -1


def _py_prufer_scan(n, g_bits, g_edge_count, g_comp_sizes, g_degseq, out_buf):
    """Scan all n**(n-2) labeled trees, keeping sequence codes whose exact
    square matches g on cheap isomorphism invariants (edge count, degree
    sequence, component sizes). Returns the survivor count, or -1 when the
    output buffer would overflow."""
    cap = out_buf.shape[0]
    seq_len = n - 2
    seq = np.zeros(max(seq_len, 1), dtype=np.int64)
    deg = np.zeros(n, dtype=np.int64)
    t_bits = np.zeros(n, dtype=np.int64)
    sq = np.zeros(n, dtype=np.int64)
    work = np.zeros(n, dtype=np.int64)
    count = 0
    total = 1
    for _ in range(seq_len):
        total *= n
    for code in range(total):
        # degrees straight from the sequence multiplicities
        for i in range(n):
            deg[i] = 1
        for i in range(seq_len):
            deg[seq[i]] += 1
        esq = 0
        for i in range(n):
            esq += deg[i] * (deg[i] - 1) // 2
        if esq == g_edge_count:
            # decode the tree
            for i in range(n):
                t_bits[i] = 0
                work[i] = deg[i]
            for i in range(seq_len):
                s = seq[i]
                leaf = -1
                for v in range(n):
                    if work[v] == 1:
                        leaf = v
                        break
                t_bits[leaf] |= 1 << s
                t_bits[s] |= 1 << leaf
                work[leaf] -= 1
                work[s] -= 1
            a = -1
            b = -1
            for v in range(n):
                if work[v] == 1:
                    if a < 0:
                        a = v
                    else:
                        b = v
            t_bits[a] |= 1 << b
            t_bits[b] |= 1 << a
            # exact square bitsets
            for u in range(n):
                acc = 0
                for v in range(n):
                    if (t_bits[u] >> v) & 1:
                        acc |= t_bits[v]
                sq[u] = acc & ~t_bits[u] & ~(1 << u)
            # degree sequence invariant
            for u in range(n):
                d = 0
                for v in range(n):
                    d += (sq[u] >> v) & 1
                work[u] = d
            ok = True
            for i in range(1, n):  # insertion sort
                key = work[i]
                j = i - 1
                while j >= 0 and work[j] > key:
                    work[j + 1] = work[j]
                    j -= 1
                work[j + 1] = key
            for i in range(n):
                if work[i] != g_degseq[i]:
                    ok = False
                    break
            if ok:
                # component sizes invariant
                seen = 0
                ncomp = 0
                for u in range(n):
                    if (seen >> u) & 1:
                        continue
                    frontier = 1 << u
                    comp = 0
                    while frontier:
                        comp |= frontier
                        nxt = 0
                        for v in range(n):
                            if (frontier >> v) & 1:
                                nxt |= sq[v]
                        frontier = nxt & ~comp
                    seen |= comp
                    size = 0
                    for v in range(n):
                        size += (comp >> v) & 1
                    work[ncomp] = size
                    ncomp += 1
                if ncomp == g_comp_sizes.shape[0]:
                    for i in range(1, ncomp):
                        key = work[i]
                        j = i - 1
                        while j >= 0 and work[j] > key:
                            work[j + 1] = work[j]
                            j -= 1
                        work[j + 1] = key
                    for i in range(ncomp):
                        if work[i] != g_comp_sizes[i]:
                            ok = False
                            break
                else:
                    ok = False
                if ok:
                    if count >= cap:
                        return -1
                    out_buf[count] = code
                    count += 1
        # odometer increment
        pos = seq_len - 1
        while pos >= 0:
            seq[pos] += 1
            if seq[pos] < n:
                break
            seq[pos] = 0
            pos -= 1
    return count


# ---------------------------------------------------------------------------
# backend registry
# ---------------------------------------------------------------------------

_PY_IMPLS = {
    "exact_square_dense": _py_exact_square_dense,
    "exact_square_digraph_dense": _py_exact_square_digraph_dense,
    "fill_embedding_matrix": _py_fill_embedding_matrix,
    "fill_coverage_matrix": _py_fill_coverage_matrix,
    "scan_triangle_free_root": _py_scan_triangle_free_root,
    "scan_collection": _py_scan_collection,
    "scan_bipartite_root": _py_scan_bipartite_root,
    "prufer_scan": _py_prufer_scan,
}

_NUMPY_IMPLS = dict(_PY_IMPLS)
_NUMPY_IMPLS["exact_square_dense"] = _np_exact_square_dense
_NUMPY_IMPLS["exact_square_digraph_dense"] = _np_exact_square_digraph_dense

if _HAVE_NUMBA:
    _nb_augment = njit(cache=True)(_py_augment)

    # The Python fill/saturation helpers call each other through module
    # globals, so the jitted variants are dedicated copies wired to the
    # jitted helpers.
    @njit(cache=True)
    def _nb_rows_saturated_impl(h, p, q, match_col, visited, st_row, st_pos, st_via):
        for j in range(q):
            match_col[j] = -1
        for i in range(p):
            for j in range(q):
                visited[j] = 0
            if not _nb_augment(h, q, i, match_col, visited, st_row, st_pos, st_via):
                return False
        return True

    @njit(cache=True)
    def _nb_fill_embedding_matrix(
        row_height, row_size, row_child_ptr, row_child,
        row_cond_a, row_val_a, row_cond_b, row_val_b,
        col_height, col_size, col_child_ptr, col_child,
        col_cond_u, col_val_u, col_cond_v, col_val_v,
        use_conditions,
    ):
        nrows = row_height.shape[0]
        ncols = col_height.shape[0]
        m = np.zeros((nrows, ncols), dtype=np.uint8)
        max_p = 0
        for r in range(nrows):
            p = row_child_ptr[r + 1] - row_child_ptr[r]
            if p > max_p:
                max_p = p
        max_q = 0
        for c in range(ncols):
            q = col_child_ptr[c + 1] - col_child_ptr[c]
            if q > max_q:
                max_q = q
        hbuf = np.zeros(max(max_p * max_q, 1), dtype=np.uint8)
        match_col = np.zeros(max(max_q, 1), dtype=np.int64)
        visited = np.zeros(max(max_q, 1), dtype=np.uint8)
        st_row = np.zeros(max_q + 2, dtype=np.int64)
        st_pos = np.zeros(max_q + 2, dtype=np.int64)
        st_via = np.zeros(max_q + 2, dtype=np.int64)

        for r in range(nrows):
            hr = row_height[r]
            sr = row_size[r]
            p = row_child_ptr[r + 1] - row_child_ptr[r]
            for c in range(ncols):
                if col_height[c] < hr or col_size[c] < sr:
                    continue
                if use_conditions != 0:
                    ok_a = (
                        row_cond_a[r] != 0
                        and col_cond_u[c] != 0
                        and row_val_a[r] >= col_val_u[c]
                    )
                    ok_b = (
                        row_cond_b[r] != 0
                        and col_cond_v[c] != 0
                        and row_val_b[r] >= col_val_v[c]
                    )
                    if not (ok_a or ok_b):
                        continue
                if hr == 1:
                    m[r, c] = 1
                    continue
                q = col_child_ptr[c + 1] - col_child_ptr[c]
                if p > q:
                    continue
                for i in range(p):
                    ri = row_child[row_child_ptr[r] + i]
                    for j in range(q):
                        cj = col_child[col_child_ptr[c] + j]
                        hbuf[i * q + j] = m[ri, cj]
                if _nb_rows_saturated_impl(
                    hbuf, p, q, match_col, visited, st_row, st_pos, st_via
                ):
                    m[r, c] = 1
        return m

    @njit(cache=True)
    def _nb_fill_coverage_matrix(
        row_height, row_size, row_child_ptr, row_child,
        row_cond_a, row_val_a, row_cond_b, row_val_b,
        col_height, col_size, col_child_ptr, col_child,
        col_cond_u, col_val_u, col_cond_v, col_val_v,
        col_cvin, col_beyond_head,
        use_conditions,
    ):
        nrows = row_height.shape[0]
        ncols = col_height.shape[0]
        m = np.zeros((nrows, ncols), dtype=np.uint8)
        max_p = 0
        for r in range(nrows):
            p = row_child_ptr[r + 1] - row_child_ptr[r]
            if p > max_p:
                max_p = p
        max_q = 0
        for c in range(ncols):
            q = col_child_ptr[c + 1] - col_child_ptr[c]
            if q > max_q:
                max_q = q
        side = max(max_p, max_q)
        hbuf = np.zeros(max(max_p * max_q, 1), dtype=np.uint8)
        tbuf = np.zeros(max(max_p * max_q, 1), dtype=np.uint8)
        match_col = np.zeros(max(side, 1), dtype=np.int64)
        visited = np.zeros(max(side, 1), dtype=np.uint8)
        st_row = np.zeros(side + 2, dtype=np.int64)
        st_pos = np.zeros(side + 2, dtype=np.int64)
        st_via = np.zeros(side + 2, dtype=np.int64)
        mand = np.zeros(max(max_q, 1), dtype=np.int64)

        for r in range(nrows):
            hr = row_height[r]
            sr = row_size[r]
            p = row_child_ptr[r + 1] - row_child_ptr[r]
            for c in range(ncols):
                if col_height[c] < hr or col_size[c] < sr:
                    continue
                if use_conditions != 0:
                    ok_a = (
                        row_cond_a[r] != 0
                        and col_cond_u[c] != 0
                        and row_val_a[r] >= col_val_u[c]
                    )
                    ok_b = (
                        row_cond_b[r] != 0
                        and col_cond_v[c] != 0
                        and row_val_b[r] >= col_val_v[c]
                    )
                    if not (ok_a or ok_b):
                        continue
                if hr == 1:
                    if col_beyond_head[c] == 0:
                        m[r, c] = 1
                    continue
                q = col_child_ptr[c + 1] - col_child_ptr[c]
                if p > q:
                    continue
                nmand = 0
                for j in range(q):
                    if col_cvin[col_child[col_child_ptr[c] + j]] > 0:
                        mand[nmand] = j
                        nmand += 1
                for i in range(p):
                    ri = row_child[row_child_ptr[r] + i]
                    for j in range(q):
                        cj = col_child[col_child_ptr[c] + j]
                        hbuf[i * q + j] = m[ri, cj]
                if not _nb_rows_saturated_impl(
                    hbuf, p, q, match_col, visited, st_row, st_pos, st_via
                ):
                    continue
                if nmand:
                    for a in range(nmand):
                        j = mand[a]
                        for i in range(p):
                            tbuf[a * p + i] = hbuf[i * q + j]
                    if not _nb_rows_saturated_impl(
                        tbuf, nmand, p, match_col, visited, st_row, st_pos, st_via
                    ):
                        continue
                m[r, c] = 1
        return m

    _NUMBA_IMPLS = {
        "exact_square_dense": njit(cache=True)(_py_exact_square_dense),
        "exact_square_digraph_dense": njit(cache=True)(_py_exact_square_digraph_dense),
        "fill_embedding_matrix": _nb_fill_embedding_matrix,
        "fill_coverage_matrix": _nb_fill_coverage_matrix,
        "scan_triangle_free_root": njit(cache=True)(_py_scan_triangle_free_root),
        "scan_collection": njit(cache=True)(_py_scan_collection),
        "scan_bipartite_root": njit(cache=True)(_py_scan_bipartite_root),
        "prufer_scan": njit(cache=True)(_py_prufer_scan),
    }
else:
    _NUMBA_IMPLS = None

_BACKENDS = {"numpy": _NUMPY_IMPLS}
if _NUMBA_IMPLS is not None:
    _BACKENDS["numba"] = _NUMBA_IMPLS


def available_backends():
    return tuple(sorted(_BACKENDS))


def _default_backend():
    env = os.environ.get("EXACTROOT_BACKEND", "").strip().lower()
    if env:
        if env not in _BACKENDS:
            raise ValueError(
                f"EXACTROOT_BACKEND={env!r} is not available; "
                f"choose from {sorted(_BACKENDS)}"
            )
        return env
    return "numba" if "numba" in _BACKENDS else "numpy"


_active_name = _default_backend()
_active = _BACKENDS[_active_name]


def active_backend():
    return _active_name


def set_backend(name):
    """Switch kernel implementations at runtime; returns the previous name."""
    global _active_name, _active
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; choose from {sorted(_BACKENDS)}")
    previous = _active_name
    _active_name = name
    _active = _BACKENDS[name]
    return previous


def exact_square_dense(indptr, indices, n):
    return _active["exact_square_dense"](indptr, indices, n)


def exact_square_digraph_dense(out_indptr, out_indices, n):
    return _active["exact_square_digraph_dense"](out_indptr, out_indices, n)


def fill_embedding_matrix(*args):
    return _active["fill_embedding_matrix"](*args)


def fill_coverage_matrix(*args):
    return _active["fill_coverage_matrix"](*args)


def scan_triangle_free_root(g_bits, n, pair_u, pair_v):
    return _active["scan_triangle_free_root"](g_bits, n, pair_u, pair_v)


def scan_collection(g_bits, n, pair_u, pair_v):
    return _active["scan_collection"](g_bits, n, pair_u, pair_v)


def scan_bipartite_root(g_bits, n, pair_u, pair_v):
    return _active["scan_bipartite_root"](g_bits, n, pair_u, pair_v)


def prufer_scan(n, g_bits, g_edge_count, g_comp_sizes, g_degseq, out_buf):
    return _active["prufer_scan"](n, g_bits, g_edge_count, g_comp_sizes, g_degseq, out_buf)
