"""Benchmark the pure-Python kernels against the compiled extension.

Runs identical workloads through ``chiprank._pykernels`` and (when built)
``chiprank._kernels``, checks that the outputs agree, and prints a table.

    python3 benchmarks/bench_kernels.py
"""

from __future__ import annotations

import random
import time

from chiprank import _pykernels
from chiprank.graphs import MultiGraph

try:
    from chiprank import _kernels
except ImportError:
    _kernels = None


def workload_stabilize(impl, G, configs):
    n, degs, flat = G.flat()
    out = []
    for f in configs:
        cfg = list(f)
        odo = impl.stabilize(n, degs, flat, cfg)
        out.append((tuple(cfg), tuple(odo)))
    return out


def workload_parking(impl, G, configs):
    n, degs, flat = G.flat()
    out = []
    for f in configs:
        cfg = list(f)
        impl.parking_reduce(n, degs, flat, cfg)
        out.append(tuple(cfg))
    return out


def workload_burning(impl, G, configs):
    n, degs, flat = G.flat()
    return [tuple(impl.burning_test(n, degs, flat, list(f))) for f in configs]


def bench(name, fn, G, configs):
    impls = [("pure", _pykernels)] + ([("compiled", _kernels)] if _kernels else [])
    results, times = {}, {}
    for label, impl in impls:
        t0 = time.perf_counter()
        results[label] = fn(impl, G, configs)
        times[label] = time.perf_counter() - t0
    if len(results) == 2:
        assert results["pure"] == results["compiled"], f"{name}: implementations disagree"
    pure_t = times["pure"]
    comp_t = times.get("compiled")
    speedup = f"{pure_t / comp_t:6.1f}x" if comp_t else "     -"
    comp_s = f"{comp_t * 1000:9.1f}" if comp_t else "        -"
    print(f"{name:<34} {pure_t * 1000:9.1f} {comp_s} {speedup}")


def main():
    rng = random.Random(1)
    print(f"compiled extension available: {_kernels is not None}")
    print(f"{'workload':<34} {'pure ms':>9} {'comp ms':>9} {'speedup':>7}")

    G = MultiGraph.complete(30)
    big_pile = [tuple(2000 if i == 0 else 0 for i in range(30)) for _ in range(40)]
    bench("stabilize: 2000 chips on K30 x40", workload_stabilize, G, big_pile)

    W = MultiGraph.wheel(12)
    rand_cfgs = [tuple(rng.randint(-10, 25) for _ in range(W.n)) for _ in range(400)]
    bench("parking: random configs on W12 x400", workload_parking, W, rand_cfgs)

    stable = [tuple(rng.randint(0, d - 1) for d in W.degrees) for _ in range(4000)]
    bench("burning: stable configs on W12 x4000", workload_burning, W, stable)


if __name__ == "__main__":
    main()
