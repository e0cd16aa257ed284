#!/usr/bin/env python3
"""Power check for the paired adjacent-pressure bias test.

When every pressure cell of a sweep reuses the same per-replicate stream,
the candidate pools are prefixes of each other, so per-replicate bias
differences between adjacent n are paired. This script estimates the
paired one-sided z statistic for adjacent grid points at 200 replicates.
"""
import numpy as np


def paired_stats(sigma=1.0, reps=200, nmax=256, trials=200, seed=7):
    rng = np.random.default_rng(seed)
    grid = [1, 2, 4, 8, 16, 32, 64, 128, 256]
    worst = {g: [] for g in grid[1:]}
    for _ in range(trials):
        g = rng.standard_normal((reps, nmax))
        m = g + sigma * rng.standard_normal((reps, nmax))
        bias = {}
        for n in grid:
            idx = np.argmax(m[:, :n], axis=1)
            rows = np.arange(reps)
            bias[n] = m[rows, idx] - g[rows, idx]
        for lo, hi in zip(grid, grid[1:]):
            d = bias[hi] - bias[lo]
            z = d.mean() / (d.std(ddof=1) / np.sqrt(reps))
            worst[hi].append(z)
    for hi, zs in worst.items():
        zs = np.array(zs)
        print(f"n={hi:>4}: mean z {zs.mean():7.2f}  min z {zs.min():7.2f}  "
              f"frac z>2.326 {np.mean(zs > 2.326):.3f}")


if __name__ == "__main__":
    paired_stats()
