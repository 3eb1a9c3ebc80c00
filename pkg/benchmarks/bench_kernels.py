"""Compare the numba kernels with the pure-Python/numpy fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Compilation happens in an untimed warm-up call, so the numbers are
steady-state.
"""

import argparse
import time

import numpy as np

from cyclemagic import _accel, kernels
from cyclemagic.families import FamilySpec
from cyclemagic.graph import build_graph
from cyclemagic.search import SearchConfig, find_labelings


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def weights_case(rows=200_000, width=6, n_el=5_000, seed=0):
    rng = np.random.default_rng(seed)
    labels = rng.permutation(n_el).astype(np.int64) + 1
    members = rng.integers(0, n_el, size=(rows, width), dtype=np.int64)
    return labels, members


def search_case(spec, cfg, use_numba):
    g = build_graph(spec)

    def run():
        _accel.USE_NUMBA = use_numba
        return find_labelings(g, cfg)

    return run


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if not _accel.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    labels, members = weights_case()
    jit = kernels.jit_kernels()
    loop = kernels.make_kernels(lambda f: f)
    rows = [
        ("cycle weights, numba loop", best_of(lambda: jit.cycle_weights(labels, members), args.repeat)),
        ("cycle weights, numpy gather", best_of(lambda: kernels.PY.cycle_weights(labels, members), args.repeat)),
        ("cycle weights, python loop", best_of(lambda: loop.cycle_weights(labels, members[:20_000]), 1) * 10),
    ]

    searches = [
        ("search F3 exhaustive", FamilySpec.of("fans", m=1, n=3), SearchConfig(3)),
        ("search 2F3 first 50", FamilySpec.of("fans", m=2, n=3), SearchConfig(3, limit=50)),
        ("search W4 first 20", FamilySpec.of("wheels", m=1, n=4), SearchConfig(3, limit=20)),
    ]
    saved = _accel.USE_NUMBA
    try:
        for name, spec, cfg in searches:
            fast = best_of(search_case(spec, cfg, True), args.repeat)
            slow = best_of(search_case(spec, cfg, False), max(1, args.repeat // 2))
            rows.append((f"{name}, numba", fast))
            rows.append((f"{name}, python", slow))
    finally:
        _accel.USE_NUMBA = saved

    width = max(len(name) for name, _ in rows)
    for name, secs in rows:
        print(f"{name:<{width}}  {secs * 1000:10.2f} ms")


if __name__ == "__main__":
    main()
