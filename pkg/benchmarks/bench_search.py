"""Benchmark the compiled search kernel against the pure-Python twin.

Both backends run identical lattice sweeps, so this measures raw overhead
only.  Run from the repository root after an editable install:

    python benchmarks/bench_search.py
    python benchmarks/bench_search.py --repeats 5

Each workload is a raw backend call (no tiering, no guards), timed
best-of-N.  Missing the compiled extension is not an error; the pure
column still runs.
"""

import argparse
import time

from fourfold import _pure
from fourfold.search import compiled_available

try:
    from fourfold import _kernel
except ImportError:
    _kernel = None


def _flat(rows):
    return [x for row in rows for x in row]

H2 = _flat([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
H3 = _flat(
    [
        [0, 1, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 0],
    ]
)
DIAG2 = _flat([[1, 0], [0, 1]])

# name, function name, args: exhaustive sweeps and a deep no-hit search
WORKLOADS = [
    (
        "exhaust diag(1,1), box 400, no hit",
        "all_hits",
        (DIAG2, [1, 1], 2, 400, 42),
    ),
    (
        "exhaust 2H, box 20, target 8",
        "all_hits",
        (H2, [0, 0, 0, 0], 4, 20, 8),
    ),
    (
        "first hit 3H, box 4, no hit",
        "first_hit",
        (H3, [0] * 6, 6, 4, 4),
    ),
    (
        "shell sweep 2H, shell 24, no hit",
        "first_hit_on_shell",
        (H2, [0, 0, 0, 0], 4, 24, 12),
    ),
]


def best_of(backend, func_name, args, repeats):
    func = getattr(backend, func_name)
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = func(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3, help="best-of-N timing")
    args = parser.parse_args()

    print(f"compiled kernel available: {compiled_available()}")
    header = f"{'workload':<40} {'pure':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, func_name, call_args in WORKLOADS:
        pure_time, pure_result = best_of(_pure, func_name, call_args, args.repeats)
        if _kernel is not None:
            fast_time, fast_result = best_of(_kernel, func_name, call_args, args.repeats)
            same = _normalize(pure_result) == _normalize(fast_result)
            speedup = f"{pure_time / fast_time:7.1f}x" if fast_time else "     n/a"
            line = f"{name:<40} {pure_time * 1e3:8.2f}ms {fast_time * 1e3:8.2f}ms {speedup}"
            if not same:
                line += "  RESULTS DIFFER"
            print(line)
        else:
            print(f"{name:<40} {pure_time * 1e3:8.2f}ms {'-':>10} {'-':>8}")


def _normalize(result):
    if result is None:
        return None
    if result and isinstance(result[0], (list, tuple)):
        return [tuple(int(c) for c in row) for row in result]
    return tuple(int(c) for c in result)


if __name__ == "__main__":
    main()
