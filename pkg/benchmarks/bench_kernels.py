"""Benchmark the compiled kernels against the pure-Python fallback.

Times the two hot kernels, the in-place pair gate on a 4^N two-copy vector
and the batched coherent-state overlap, on both backends and reports the
speedup. Run from the repository root:

    python3 benchmarks/bench_kernels.py --n 8 10 --samples 20000
"""

import argparse
import csv
import math
import sys
import time

import numpy as np

from wre import _kernels_py
from wre.qstate import sample_haar_state

try:
    from wre import _kernels_cy
except ImportError:
    _kernels_cy = None


def _time(fn, repeats):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_pair_gate(backend, n, rng, repeats):
    vec = rng.standard_normal(4**n) + 1j * rng.standard_normal(4**n)
    gate = np.ascontiguousarray(np.linalg.qr(
        rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))[0])

    def run():
        for pair in range(n):
            backend.apply_pair_gate(vec, gate, pair, n)

    return _time(run, repeats) / n


def bench_overlap(backend, n, samples, rng, repeats):
    psi = sample_haar_state(n, rng).amplitudes
    spinors = rng.standard_normal((samples, n, 2)) \
        + 1j * rng.standard_normal((samples, n, 2))

    def run():
        backend.overlap_batch(psi, spinors)

    return _time(run, repeats) / samples


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, nargs="+", default=[6, 8, 10],
                        help="qubit counts to benchmark")
    parser.add_argument("--samples", type=int, default=20000,
                        help="overlap batch size")
    parser.add_argument("--repeats", type=int, default=5,
                        help="repetitions per timing, best is kept")
    parser.add_argument("--csv", type=str, default=None,
                        help="optional CSV output path")
    args = parser.parse_args(argv)

    if _kernels_cy is None:
        print("compiled backend unavailable, timing the fallback only",
              file=sys.stderr)
    backends = [("python", _kernels_py)]
    if _kernels_cy is not None:
        backends.append(("compiled", _kernels_cy))

    rows = []
    header = f"{'kernel':<14} {'n':>3} " + "".join(
        f"{name + ' (us)':>16}" for name, _ in backends) + f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    rng = np.random.default_rng(0)
    for kernel, bench in (("pair_gate", bench_pair_gate),
                          ("overlap_batch", bench_overlap)):
        for n in args.n:
            times = {}
            for name, mod in backends:
                if kernel == "pair_gate":
                    times[name] = bench(mod, n, rng, args.repeats)
                else:
                    times[name] = bench(mod, n, args.samples, rng, args.repeats)
            speedup = times["python"] / times["compiled"] \
                if "compiled" in times else float("nan")
            print(f"{kernel:<14} {n:>3} " + "".join(
                f"{times[name] * 1e6:>16.3f}" for name, _ in backends)
                + f"{speedup:>10.2f}")
            rows.append({"kernel": kernel, "n": n, "speedup": speedup,
                         **{f"{name}_s": times[name] for name, _ in backends}})

    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)
        print(f"wrote {len(rows)} rows to {args.csv}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
