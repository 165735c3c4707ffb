"""Compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Each case is timed on both backends; the counts must agree.
"""
import argparse
import time

from locconst import kernels
from locconst.groups import cyclic, direct_product, symmetric
from locconst.modules import PModule
from locconst.oracle import _cochain_tables

CASES = [
    ("cocycles Z4, Z4, n=2", cyclic(4), 4, 2),
    ("cocycles V4, Z2, n=2", direct_product(cyclic(2), cyclic(2)), 2, 2),
    ("cocycles Z3, Z3, n=3", cyclic(3), 3, 3),
    ("cocycles Z5, Z2, n=2", cyclic(5), 2, 2),
]


def cocycle_count(backend, P, d, n):
    A = PModule.trivial(P, (d,))
    slots, n_out, nf, fi, fs, actor, act, add, neg, order = _cochain_tables(P, A, n)
    return backend.count_solutions(order, slots, n_out, nf, fi, fs, actor, act, add, neg,
                                   [0] * n_out)


def hom_count(backend, G, n_gens):
    return len(backend.search_homs(G.flat, G.inv, G.order, n_gens, [], 10**8))


def best_of(fn, repeat):
    best = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        dt = time.perf_counter() - t
        best = dt if best is None else min(best, dt)
    return out, best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.COMPILED is None:
        print("compiled extension not built; only the fallback is available")
        return
    rows = [(name, lambda b, P=P, d=d, n=n: cocycle_count(b, P, d, n))
            for name, P, d, n in CASES]
    rows.append(("hom search S3^5", lambda b: hom_count(b, symmetric(3), 5)))
    print(f"{'case':28} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, fn in rows:
        a, tp = best_of(lambda: fn(kernels.PYTHON), args.repeat)
        b, tc = best_of(lambda: fn(kernels.COMPILED), args.repeat)
        assert a == b, (name, a, b)
        print(f"{name:28} {tp:10.4f} {tc:10.4f} {tp / tc:8.1f}x")


if __name__ == "__main__":
    main()
