#!/usr/bin/env python3
"""Benchmark the finite-field scan: numba kernel vs pure-numpy fallback.

Both paths are exact and must return the same members; this script times
them on the same seeded instance and checks agreement.

Usage: python benchmarks/bench_ffenum.py [--p 13] [--n 6] [--repeats 3]
"""

import argparse
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from gammacalc import ffield_enum
from gammacalc.fields import PrimeField
from gammacalc.relations import random_split_relations
from gammacalc.shapes import AlgebraShape


def run_path(use_numba, rels, shape, p, repeats):
    if use_numba:
        os.environ.pop("GAMMACALC_NO_NUMBA", None)
    else:
        os.environ["GAMMACALC_NO_NUMBA"] = "1"
    # warm-up covers jit compilation
    ffield_enum.enumerate_gamma(rels, shape, p, budget=10**9)
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = ffield_enum.enumerate_gamma(rels, shape, p, budget=10**9)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=int, default=13)
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()

    shape = AlgebraShape(2, (3, args.n), args.n)
    splits = random_split_relations(shape, seed=args.seed,
                                    field=PrimeField(args.p))
    rels = list(splits)
    npts = (args.p**shape.r - 1) // (args.p - 1)
    print(f"shape {shape}, p={args.p}, scan size {npts}^{shape.n} "
          f"= {npts**shape.n:,}")

    if not ffield_enum.HAS_NUMBA:
        print("numba not available; benchmarking numpy path only")
        t_np, res_np = run_path(False, rels, shape, args.p, args.repeats)
        print(f"numpy : {t_np:.3f}s  ({len(res_np)} members)")
        return

    t_nb, res_nb = run_path(True, rels, shape, args.p, args.repeats)
    t_np, res_np = run_path(False, rels, shape, args.p, args.repeats)
    key = lambda ts: [tuple(pt.coords for pt in t) for t in ts]
    assert key(res_nb) == key(res_np), "paths disagree"
    print(f"numba : {t_nb:.3f}s  ({len(res_nb)} members)")
    print(f"numpy : {t_np:.3f}s  ({len(res_np)} members)")
    print(f"speedup: {t_np / t_nb:.1f}x")


if __name__ == "__main__":
    main()
