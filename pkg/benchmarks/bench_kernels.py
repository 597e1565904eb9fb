"""Compare the compiled and pure-Python mod-p kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Prints the median wall time per call for each available backend and the
speedup of the compiled one. Results of both backends are cross-checked.
"""
import argparse
import statistics
import time

import numpy as np

from localquiver import Quiver
from localquiver import _kernels
from localquiver.oracle import DEFAULT_PRIME, hom_system, oracle_is_simple, path_algebra_dim, random_rep


def _median_time(fn, repeat):
    samples = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def _cases():
    rng = np.random.default_rng(0)
    p = DEFAULT_PRIME
    dense = rng.integers(0, p, size=(60, 60), dtype=np.int64)
    yield "rank_mod_p 60x60", lambda b: _kernels.get(b).rank_mod_p(dense, p), 1

    q = Quiver.from_arrows(3, [(0, 1, 2), (1, 2, 1), (2, 0, 1), (1, 1, 1)])
    m, n = random_rep(q, (3, 3, 3), seed=1), random_rep(q, (3, 3, 3), seed=2)
    system = hom_system(m, n)
    yield f"rank_mod_p hom system {system.shape[0]}x{system.shape[1]}", lambda b: _kernels.get(b).rank_mod_p(system, p), 1

    rep = random_rep(q, (3, 3, 3), seed=3)
    yield "path_algebra_dim dims (3,3,3)", lambda b: path_algebra_dim(rep, b), 1

    grid_q = Quiver(((1, 2, 0), (1, 0, 2), (2, 1, 1)))
    vectors = [(a, b, c) for a in range(1, 4) for b in range(1, 4) for c in range(1, 4)]

    def grid(b):
        return [oracle_is_simple(grid_q, e, trials=3, backend=b) for e in vectors]

    yield f"oracle_is_simple x{len(vectors)}", grid, len(vectors)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=7)
    args = parser.parse_args()

    names = sorted(_kernels.BACKENDS)
    print(f"backends: {', '.join(names)} (default {_kernels.BACKEND})")
    header = f"{'case':44}" + "".join(f"{n:>14}" for n in names)
    if "cython" in names:
        header += f"{'speedup':>10}"
    print(header)
    for label, fn, per in _cases():
        results = {n: fn(n) for n in names}
        if len({repr(r) for r in results.values()}) != 1:
            raise SystemExit(f"backends disagree on {label}: {results}")
        times = {n: _median_time(lambda: fn(n), args.repeat) / per for n in names}
        row = f"{label:44}" + "".join(f"{times[n] * 1e6:>11.1f} us" for n in names)
        if "cython" in names:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
