"""Compiled versus pure-Python kernels, and gmpy2 versus int for the mu recursion.

    python benchmarks/bench_kernels.py [--loop-order 3] [--mu 801] [--repeat 3]
"""
import argparse
import os
import subprocess
import sys
import timeit

from outfn_euler import _pykernels
from outfn_euler.graphs import enumerate_graphs
from outfn_euler.graphs.canon import _structure, refine_cells

try:
    from outfn_euler import _kernels
except ImportError:
    _kernels = None


def workload(loop_order):
    """Kernel inputs for every connected leafless class up to the loop order."""
    jobs = []
    for n in range(1, loop_order + 1):
        for cls in enumerate_graphs(n, 0):
            g = cls.graph
            size, adj, leaf_count = _structure(g)
            colors = [(g.valences[v], leaf_count[v], adj[v * size + v]) for v in range(size)]
            eu, ev = g.ends_lists()
            jobs.append((size, adj, refine_cells(size, adj, colors), eu, ev))
    return jobs


def time_backend(module, jobs, repeat):
    def canon():
        for size, adj, cells, _, _ in jobs:
            module.canon_search(size, adj, cells)

    def forests():
        for size, _, _, eu, ev in jobs:
            module.signed_forest_sum(size, eu, ev)

    def bridges():
        for size, _, _, eu, ev in jobs:
            module.is_bridgeless(size, eu, ev)

    return {name: min(timeit.repeat(fn, number=1, repeat=repeat))
            for name, fn in (("canon_search", canon), ("signed_forest_sum", forests), ("is_bridgeless", bridges))}


def time_mu(count, pure):
    code = ("import time; from outfn_euler.chi import lambert_mu; t = time.perf_counter(); "
            f"lambert_mu({count}); print(time.perf_counter() - t)")
    env = dict(os.environ, OUTFN_EULER_PURE="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--loop-order", type=int, default=3)
    parser.add_argument("--mu", type=int, default=801, help="mu recursion length (2n+1 for a table to n)")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    jobs = workload(args.loop_order)
    print(f"graph kernels on {len(jobs)} classes up to loop order {args.loop_order} (best of {args.repeat})")
    pure = time_backend(_pykernels, jobs, args.repeat)
    fast = time_backend(_kernels, jobs, args.repeat) if _kernels else None
    print(f"{'kernel':<20}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, t in pure.items():
        if fast:
            print(f"{name:<20}{t:>12.4f}{fast[name]:>12.4f}{t / fast[name]:>9.1f}x")
        else:
            print(f"{name:<20}{t:>12.4f}{'n/a':>12}")

    print(f"\nlambert_mu({args.mu})")
    slow, quick = time_mu(args.mu, True), time_mu(args.mu, False)
    print(f"{'int':<20}{slow:>12.3f} s")
    print(f"{'gmpy2 (if present)':<20}{quick:>12.3f} s   speedup {slow / quick:.1f}x")


if __name__ == "__main__":
    main()
