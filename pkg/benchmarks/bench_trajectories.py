#!/usr/bin/env python3
"""Benchmark the compiled trajectory kernel against the pure-python fallback.

Runs identical seeded ensembles through both backends and reports wall time
per trajectory plus the speedup.  The two backends follow the same algorithm
and RNG call order, so the workloads are genuinely identical.

Usage: python benchmarks/bench_trajectories.py [--n-traj N] [--t-final T]
"""

import argparse
import time

from triqubit.model import ModelParams, named_state
from triqubit.trajectories import sample_trajectory
from triqubit.trajectories.backend import get_kernel


def time_backend(backend, params, psi0, t_final, n_traj):
    get_kernel(backend)  # fail fast if unavailable
    start = time.perf_counter()
    jumps = 0
    for seed in range(n_traj):
        record = sample_trajectory(params, psi0, t_final, seed=seed,
                                   backend=backend)
        jumps += record.jump_times.size
    elapsed = time.perf_counter() - start
    return elapsed, jumps


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-traj", type=int, default=200)
    parser.add_argument("--t-final", type=float, default=400.0)
    parser.add_argument("--n-bath", type=float, default=0.5)
    args = parser.parse_args()

    params = ModelParams(n_bath=args.n_bath)
    psi0 = named_state("half")

    rows = []
    for backend in ("compiled", "python"):
        try:
            elapsed, jumps = time_backend(backend, params, psi0,
                                          args.t_final, args.n_traj)
        except ValueError:
            print(f"{backend:>9}: not available")
            continue
        rows.append((backend, elapsed, jumps))
        print(f"{backend:>9}: {elapsed:8.3f} s total, "
              f"{1e3 * elapsed / args.n_traj:8.3f} ms/trajectory, "
              f"{jumps} jumps")
    if len(rows) == 2:
        speedup = rows[1][1] / rows[0][1]
        print(f"\nspeedup (python / compiled): {speedup:.1f}x")
        if rows[0][2] != rows[1][2]:
            print("warning: jump counts differ between backends")


if __name__ == "__main__":
    main()
