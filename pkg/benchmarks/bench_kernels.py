"""Compare the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Each row reports the best of ``--repeat`` wall-clock runs per backend and the
speed-up. Results are also checked for equality, node counts included.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from ooctools import _accel
from ooctools.search import _degree_order, _relabel, build_graph, enumerate_orbit_reps


def best_of(fn, repeat):
    times, out = [], None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def correlation_case(v, w, pairs, seed=1):
    rng = random.Random(seed)
    words = [tuple(sorted(rng.sample(range(v), w))) for _ in range(2 * pairs)]

    def run(k):
        return [k.max_cross(words[i], words[i + 1], v) for i in range(0, len(words), 2)]

    return f"max_cross v={v} w={w} x{pairs}", run


def adjacency_case(v, w, la, lc):
    reps = [c.support for c in enumerate_orbit_reps(v, w) if c.period == v]
    reps = [r for r in reps if _accel.pure.max_auto(r, v) <= la]

    def run(k):
        return list(k.adjacency(reps, v, lc))

    return f"adjacency ({v},{w},{la},{lc}) {len(reps)} vertices", run


def clique_case(v, w, la, lc):
    g = build_graph(v, w, la, lc)
    adj = _relabel(list(g.adjacency), _degree_order(list(g.adjacency), g.order))

    def run(k):
        found, nodes, done = k.max_clique(adj, g.order)
        return sorted(found), nodes, done

    return f"max_clique ({v},{w},{la},{lc}) n={g.order}", run


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="small instances only")
    args = ap.parse_args(argv)
    if _accel.compiled is None:
        print("compiled kernels unavailable; rebuild with `pip install -e . --no-build-isolation`")
        return 1

    cases = [
        correlation_case(101, 10, 2000),
        adjacency_case(43, 3, 1, 1),
        clique_case(43, 3, 1, 1),
    ]
    if not args.quick:
        cases += [
            correlation_case(401, 20, 2000),
            adjacency_case(37, 4, 2, 1),
            clique_case(45, 3, 1, 1),
        ]

    print(f"{'case':44s} {'python':>10s} {'cython':>10s} {'speed-up':>9s}")
    for name, run in cases:
        tp, outp = best_of(lambda: run(_accel.pure), args.repeat)
        tc, outc = best_of(lambda: run(_accel.compiled), args.repeat)
        if outp != outc:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        print(f"{name:44s} {tp:10.4f} {tc:10.4f} {tp / max(tc, 1e-9):8.1f}x", flush=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
