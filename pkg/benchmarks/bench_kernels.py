"""Compare the numba and numpy kernels on symmetrizer and derivative workloads.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--n 7]

Both backends must give identical results; the script checks this before
reporting timings.
"""

from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

from higher_specht import kernels
from higher_specht.combinatorics import Partition
from higher_specht.polyring import all_permutations, delta_mu


def orbit_workload(n: int, terms: int = 300):
    """A seeded random integer polynomial summed over all of S_n with signs."""
    rng = np.random.default_rng(0)
    exps = np.unique(rng.integers(0, 3, size=(terms, 2 * n)), axis=0).astype(np.int64)
    coeffs = rng.integers(-5, 6, size=len(exps)).astype(np.int64)
    perms = all_permutations(n)
    inv = np.array([[v - 1 for v in p.inverse().images] for p in perms], dtype=np.int64)
    weights = np.array([p.sign() for p in perms], dtype=np.int64)
    base = kernels.key_base(int(exps.max()), 2 * n)
    return (exps, coeffs, inv, weights, base), f"orbit sum: {len(exps)} terms x {len(perms)} permutations"


def diff_workload(n: int):
    """Every monomial of bidegree (1,1) and (2,0) applied to Delta of a hook."""
    D = delta_mu(Partition.hook(n, max(1, n // 2)))
    ge = np.array(list(D.terms), dtype=np.int64)
    gc = np.array([int(c) for c in D.terms.values()], dtype=np.int64)
    rows = []
    for i in range(n):
        for j in range(n):
            key = [0] * (2 * n)
            key[i] += 1
            key[n + j] += 1
            rows.append(key)
    fe = np.array(rows, dtype=np.int64)
    fc = np.arange(1, len(rows) + 1, dtype=np.int64)
    base = kernels.key_base(int(ge.max()), 2 * n)
    return (fe, fc, ge, gc, base), f"derivative: {len(rows)} operator terms on {len(D.terms)} terms"


def timed(fn, args, backend, repeat):
    fn(*args, backend=backend)  # warm-up (compiles the numba version)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args, backend=backend)
        times.append(time.perf_counter() - t0)
    return out, times


def _canonical(out):
    exps, vals = out
    pairs = sorted((tuple(int(v) for v in e), int(c)) for e, c in zip(exps, vals) if c)
    return pairs


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--n", type=int, default=7)
    args = ap.parse_args(argv)
    if not kernels._HAVE_NUMBA:
        print("numba is not installed; nothing to compare")
        return 1
    print(f"{'workload':58s} {'numpy (ms)':>12s} {'numba (ms)':>12s} {'speedup':>8s}")
    for build, fn in ((orbit_workload, kernels.orbit_sum), (diff_workload, kernels.differentiate)):
        wl, label = build(args.n)
        out_np, t_np = timed(fn, wl, "numpy", args.repeat)
        out_nb, t_nb = timed(fn, wl, "numba", args.repeat)
        if _canonical(out_np) != _canonical(out_nb):
            print(f"{label}: backends disagree")
            return 2
        a, b = statistics.median(t_np) * 1e3, statistics.median(t_nb) * 1e3
        print(f"{label:58s} {a:12.2f} {b:12.2f} {a / b:7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
