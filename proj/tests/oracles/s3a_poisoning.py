#!/usr/bin/env python3
"""Effect size for pool poisoning against an argmax-of-noisy-proxy victim.

Pool of `pool` items with quality x ~ N(0,1) and noise lever y ~ U(0,1).
The victim observes X ~ N(x, (sigma_max * y)^2) and takes the item with
the largest X; its goal is the true x of the chosen item. The adversary
replaces a fraction of the pool with items drawn from the bottom decile
of x and the top decile of y.
"""
import numpy as np

Z10 = -1.2815515655446004  # standard normal 10% quantile


def run(rng, pool, sigma_max, frac, reps):
    out = np.empty(reps)
    for r in range(reps):
        x = rng.standard_normal(pool)
        y = rng.random(pool)
        m = int(round(frac * pool))
        if m:
            adv_x = np.empty(m)
            for i in range(m):
                v = rng.standard_normal()
                while v >= Z10:
                    v = rng.standard_normal()
                adv_x[i] = v
            x[:m] = adv_x
            y[:m] = 0.9 + 0.1 * rng.random(m)
        obs = rng.normal(x, sigma_max * y)
        out[r] = x[np.argmax(obs)]
    return out


if __name__ == "__main__":
    rng = np.random.default_rng(99)
    pool, reps = 1000, 10_000
    honest = run(rng, pool, 3.0, 0.0, reps)
    attacked = run(rng, pool, 3.0, 0.2, reps)
    for name, v in (("honest", honest), ("attacked", attacked)):
        print(f"{name:>9}: mean x_sel {v.mean():+.4f}  se {v.std(ddof=1)/np.sqrt(reps):.4f}")
    d = honest.mean() - attacked.mean()
    se = np.sqrt(honest.var(ddof=1) / reps + attacked.var(ddof=1) / reps)
    print(f"separation: {d:.4f}  ({d/se:.1f} se)")
    noiseless = run(rng, pool, 0.0, 0.2, 2000)
    honest_nl = run(rng, pool, 0.0, 0.0, 2000)
    print(f"sigma_max=0: attacked {noiseless.mean():.4f} vs honest {honest_nl.mean():.4f} "
          f"(argmax of 1000 std normals ~ 3.24)")
