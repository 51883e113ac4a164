#!/usr/bin/env python3
"""Compare the numba kernels against the numpy/Python fallback on the hot
paths: exact squares, tree-root recognition, subtree isomorphism and the
brute-force scans.

Usage: python benchmarks/bench_backends.py [--sizes 200,500,1000,2000]
The numpy fallback gets the smaller sizes only (it is a correctness net, not
a performance path)."""

import argparse
import time

import exactroot as xr
from exactroot import _kernels


def bench(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="200,500,1000,2000")
    ap.add_argument("--fallback-cap", type=int, default=500,
                    help="largest size run on the numpy fallback")
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    backends = _kernels.available_backends()
    print(f"backends: {', '.join(backends)} (default {_kernels.active_backend()})")

    # one warm call per backend so jit compilation stays out of the numbers
    for b in backends:
        _kernels.set_backend(b)
        xr.recognize_tree_root(xr.exact_square(xr.random_tree(30, 0)))
        xr.bruteforce_clique_collection(xr.random_tree(5, 0))

    rows = []
    for n in sizes:
        tree = xr.random_tree(n, 42)
        square = xr.exact_square(tree)
        for backend in backends:
            if backend != "numba" and n > args.fallback_cap:
                rows.append((f"exact_square n={n}", backend, None))
                rows.append((f"recognize_tree_root n={n}", backend, None))
                continue
            _kernels.set_backend(backend)
            rows.append((
                f"exact_square n={n}", backend,
                bench(lambda: xr.exact_square(tree)),
            ))
            rows.append((
                f"recognize_tree_root n={n}", backend,
                bench(lambda: xr.recognize_tree_root(square), repeat=1),
            ))

    s = xr.random_tree(60, 7)
    t = xr.random_tree(90, 8)
    g6 = xr.exact_square(xr.random_tree(6, 3))
    for backend in backends:
        _kernels.set_backend(backend)
        rows.append((
            "subtree_isomorphic 60->90", backend,
            bench(lambda: xr.subtree_isomorphic(s, t)),
        ))
        rows.append((
            "bruteforce_tree_roots n=6", backend,
            bench(lambda: xr.bruteforce_tree_roots(g6), repeat=1),
        ))
        rows.append((
            "bruteforce_clique_collection C7", backend,
            bench(
                lambda: xr.bruteforce_clique_collection(
                    xr.Graph(7, [(i, (i + 1) % 7) for i in range(7)])
                ),
                repeat=1,
            ),
        ))

    width = max(len(r[0]) for r in rows) + 2
    print(f"{'case':<{width}}{'backend':<9}{'seconds':>10}")
    for case, backend, seconds in rows:
        shown = "skipped" if seconds is None else f"{seconds:.4f}"
        print(f"{case:<{width}}{backend:<9}{shown:>10}")


if __name__ == "__main__":
    main()
