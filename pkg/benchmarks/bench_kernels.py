"""Time the compiled kernels against their pure-Python twins.

Runs each hot loop on a fixed workload with both implementations and
prints one row per kernel: seconds for pure, seconds for compiled, and
the speedup.  Imports `quadtm._pure` and `quadtm._kernels` directly, so
the TM_PURE switch is irrelevant here.

    python benchmarks/bench_kernels.py [--fuel N] [--scan-len N] [--graph N]
"""

from __future__ import annotations

import argparse
import random
import time
from array import array

from quadtm import _pure

try:
    from quadtm import _kernels
except ImportError:
    _kernels = None


def best_of(fn, repeats: int = 3) -> float:
    out = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        out.append(time.perf_counter() - t0)
    return min(out)


def run_encoded_workload(fuel: int):
    # one state, scanning blank: move right forever (the buffer keeps growing)
    act = bytes([5, 5, 4])
    nxt = array("i", [0, 0, 0])
    return lambda impl: impl.run_encoded(0, act, nxt, b"", fuel)


def reach_workload(n: int, seed: int):
    # sparse random digraph plus an unreachable sink: the middle-first
    # search must then fill its whole threshold table
    rng = random.Random(seed)
    indptr, indices = [0], []
    for v in range(n):
        if v < n - 2:  # the last two nodes stay edge-free
            for _ in range(3):
                indices.append(rng.randrange(n - 2))
        indptr.append(len(indices))
    indptr, indices = array("i", indptr), array("i", indices)
    j0 = max((n - 1).bit_length(), 1)
    return lambda impl: impl.reach_accepts(indptr, indices, 0, n - 1, j0)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--fuel", type=int, default=200_000,
                        help="steps for the interpreter loop")
    parser.add_argument("--scan-len", type=int, default=20,
                        help="code-length bound for the enumeration scan")
    parser.add_argument("--graph", type=int, default=140,
                        help="node count for the reachability graph")
    args = parser.parse_args(argv)

    jobs = [
        ("run_encoded (%d steps)" % args.fuel,
         run_encoded_workload(args.fuel)),
        ("scan_valid_codes (len <= %d)" % args.scan_len,
         lambda impl: impl.scan_valid_codes(args.scan_len)),
        ("reach_accepts (%d nodes)" % args.graph,
         reach_workload(args.graph, seed=5)),
    ]
    print("%-34s %12s %12s %9s" % ("kernel", "pure [s]", "compiled [s]", "speedup"))
    for name, job in jobs:
        t_pure = best_of(lambda: job(_pure))
        if _kernels is None:
            print("%-34s %12.4f %12s %9s" % (name, t_pure, "n/a", "n/a"))
            continue
        t_comp = best_of(lambda: job(_kernels))
        print("%-34s %12.4f %12.4f %8.1fx" % (name, t_pure, t_comp, t_pure / t_comp))
    if _kernels is None:
        print("compiled extension not built; showing pure timings only")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
