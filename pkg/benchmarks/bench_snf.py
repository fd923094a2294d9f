#!/usr/bin/env python3
"""Benchmark the sparse elimination backends on real boundary matrices.

Builds the projective-space complex for the requested n, extracts its
boundary matrices, and times rank+torsion through the compiled kernel and
the pure-Python backend on identical inputs.

Usage: python benchmarks/bench_snf.py [n] [--repeat K]
"""

import argparse
import sys
import time
from copy import deepcopy

sys.path.insert(0, "src")

from tritoric.assembly import assemble_cpn  # noqa: E402
from tritoric.homology import _classic_snf, boundary_matrices  # noqa: E402


def load_backends():
    backends = {}
    from tritoric import _snf_pure

    backends["pure"] = _snf_pure.eliminate_unit_pivots
    try:
        from tritoric import _snfcore

        backends["compiled"] = _snfcore.eliminate_unit_pivots
    except ImportError:
        print("compiled kernel not built; benchmarking pure only")
    return backends


def run(n: int, repeat: int):
    t0 = time.perf_counter()
    cpn = assemble_cpn(n)
    cc = boundary_matrices(cpn.complex)
    print(f"cpn {n}: built in {time.perf_counter() - t0:.1f}s; "
          f"f-vector {cpn.complex.f_vector()}")

    backends = load_backends()
    results = {}
    for name, eliminate in backends.items():
        best = None
        factors_all = []
        for _ in range(repeat):
            total = 0.0
            factors_all = []
            for d in sorted(cc.boundaries):
                rows = deepcopy(cc.boundaries[d])
                t0 = time.perf_counter()
                ones, residual = eliminate(rows)
                tail = _classic_snf(residual)
                total += time.perf_counter() - t0
                factors_all.append((ones, tuple(sorted(tail))))
            best = total if best is None else min(best, total)
        results[name] = (best, factors_all)
        print(f"{name:>9}: {best:8.2f}s for all boundary matrices")

    if len(results) == 2:
        pure_t = results["pure"][0]
        comp_t = results["compiled"][0]
        agree = results["pure"][1] == results["compiled"][1]
        print(f"speedup: {pure_t / comp_t:5.2f}x   results agree: {agree}")
        if not agree:
            raise SystemExit("backend results disagree")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("n", nargs="?", type=int, default=2)
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args()
    run(args.n, args.repeat)
