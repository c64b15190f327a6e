"""Benchmark the canonical-code kernel: numba @njit vs the numpy fallback.

Usage:
    python benchmarks/bench_canonical.py [--n 7] [--batch 2000] [--repeat 3]

The numba path is what GRAPHQUERY_NO_NUMBA leaves behind when unset; both
paths are timed here directly, so no environment juggling is needed.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from graphquery._canon import HAVE_NUMBA, _codes_numpy, _perm_table


def random_batch(n: int, batch: int, seed: int = 0) -> np.ndarray:
    rng = np.random.default_rng(seed)
    upper = rng.integers(0, 2, size=(batch, n, n), dtype=np.uint8)
    adj = np.triu(upper, 1)
    return (adj + adj.transpose(0, 2, 1)).astype(np.uint8)


def timed(fn, batch, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(batch)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=7)
    parser.add_argument("--batch", type=int, default=2000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    batch = random_batch(args.n, args.batch)
    perms = _perm_table(args.n)
    print(f"n={args.n}  batch={args.batch}  orderings per graph={len(perms)}")

    numpy_time, numpy_codes = timed(_codes_numpy, batch, args.repeat)
    print(f"numpy fallback : {numpy_time:8.3f} s")

    if not HAVE_NUMBA:
        print("numba unavailable (or disabled); fallback is the active backend")
        return 0

    from graphquery._canon import _codes_numba

    _codes_numba(batch[:2])  # compile outside the timed region
    numba_time, numba_codes = timed(_codes_numba, batch, args.repeat)
    print(f"numba kernel   : {numba_time:8.3f} s")
    assert np.array_equal(numpy_codes, numba_codes), "backends disagree"
    print(f"speedup        : {numpy_time / numba_time:8.1f}x  (results identical)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
