"""Compare the compiled and pure-Python kernels on the workloads that dominate runtime.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

from __future__ import annotations

import argparse
import timeit

from dissoc._kernels import _pykernels
from dissoc.tree import root_at
from dissoc.treegen import random_subcubic

try:
    from dissoc._kernels import _ckernels
except ImportError:
    _ckernels = None


def _csr(t):
    ptr, idx = [0], []
    for nb in t.adjacency:
        idx.extend(nb)
        ptr.append(len(idx))
    return ptr, idx


def workloads():
    big = root_at(random_subcubic(5000, 1), 0)
    ptr, idx = big.flat_children
    yield "dp_tables n=5000", lambda k: k.dp_tables(big.n, big.postorder, ptr, idx, None), 20

    small = [root_at(random_subcubic(40, s), 0) for s in range(200)]
    flat = [(rt.n, rt.postorder, *rt.flat_children) for rt in small]

    def many_small(k):
        for n, post, p, i in flat:
            k.dp_tables(n, post, p, i, [0] * n)

    yield "dp_tables 200 x n=40 (forced)", many_small, 20

    trees = [random_subcubic(22, s) for s in range(20)]
    args = [(t.n, list(range(t.n)), *_csr(t)) for t in trees]

    def search(k):
        for a in args:
            k.mds_search(*a)

    yield "mds_search 20 x n=22", search, 3


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; timing the Python fallback only")
    print(f"{'workload':<32} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, fn, number in workloads():
        py = min(timeit.repeat(lambda: fn(_pykernels), number=number, repeat=args.repeat)) / number * 1e3
        if _ckernels is None:
            print(f"{name:<32} {py:>10.2f} {'-':>10} {'-':>8}")
            continue
        cy = min(timeit.repeat(lambda: fn(_ckernels), number=number, repeat=args.repeat)) / number * 1e3
        print(f"{name:<32} {py:>10.2f} {cy:>10.2f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
