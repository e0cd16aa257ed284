#!/usr/bin/env python3
"""Reference values for best-of-n selection bias on a noisy proxy.

Candidates: goal g ~ N(0,1), metric m = g + N(0, sigma^2). A maximizer
picks the candidate with the highest metric out of n. The selection bias
E[m - g | selected] equals E[noise | m maximal]; this script estimates it
by brute-force sampling, independent of any library code.
"""
import numpy as np


def bias_curve(sigma, grid, reps, seed=1234):
    rng = np.random.default_rng(seed)
    out = {}
    for n in grid:
        g = rng.standard_normal((reps, n))
        m = g + sigma * rng.standard_normal((reps, n))
        idx = np.argmax(m, axis=1)
        rows = np.arange(reps)
        sel_m = m[rows, idx]
        sel_g = g[rows, idx]
        b = sel_m - sel_g
        out[n] = (b.mean(), b.std(ddof=1) / np.sqrt(reps), sel_g.mean(), sel_m.mean())
    return out


if __name__ == "__main__":
    grid = [1, 2, 4, 8, 16, 32, 64, 128, 256]
    curve = bias_curve(1.0, grid, 200_000)
    print("sigma=1 maximizer bias, 2e5 reps")
    print(f"{'n':>5} {'E[m-g|sel]':>12} {'se':>10} {'E[g|sel]':>10} {'E[m|sel]':>10}")
    for n, (b, se, eg, em) in curve.items():
        print(f"{n:>5} {b:12.5f} {se:10.5f} {eg:10.5f} {em:10.5f}")
