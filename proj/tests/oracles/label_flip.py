#!/usr/bin/env python3
"""Margin-greedy vs random label flipping against a perceptron.

Dataset: two Gaussians in d dims, class c centered at +/-mu with unit
covariance. Training: vanilla perceptron (zero init, per-epoch shuffles,
update on y*(w.x+b) <= 0), fixed epochs. Attack flips k training labels:
either a uniform random subset or the k points with the smallest
distance to the clean-trained boundary.

Checks:
  1. exhaustive n=40, k=4: damage rank of the greedy subset among all
     C(40,4) subsets (want: top decile, i.e. accuracy <= 10th pctile);
  2. n=200, k=20, paired replicates: greedy accuracy below random.
"""
import itertools

import numpy as np
from numba import njit


@njit(cache=True)
def train(X, y, order_seed, epochs):
    n, d = X.shape
    w = np.zeros(d)
    b = 0.0
    state = np.uint64(order_seed)
    idx = np.arange(n)
    for _ in range(epochs):
        # splitmix64-driven Fisher-Yates, matching nothing in particular
        for i in range(n - 1, 0, -1):
            state += np.uint64(0x9E3779B97F4A7C15)
            z = state
            z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
            z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
            z = z ^ (z >> np.uint64(31))
            j = int(z % np.uint64(i + 1))
            idx[i], idx[j] = idx[j], idx[i]
        for t in range(n):
            p = idx[t]
            margin = y[p] * (X[p] @ w + b)
            if margin <= 0.0:
                w += 0.1 * y[p] * X[p]
                b += 0.1 * y[p]
    return w, b


@njit(cache=True)
def accuracy(X, y, w, b):
    hits = 0
    for i in range(X.shape[0]):
        s = X[i] @ w + b
        pred = 1.0 if s > 0.0 else -1.0
        hits += pred == y[i]
    return hits / X.shape[0]


def make_data(rng, n, d=2, mu=1.0):
    half = n // 2
    X = np.vstack([rng.normal(-mu, 1.0, (half, d)), rng.normal(mu, 1.0, (n - half, d))])
    y = np.hstack([-np.ones(half), np.ones(n - half)])
    return X, y


def greedy_subset(X, y, k, w, b):
    dist = np.abs(X @ w + b) / np.linalg.norm(w)
    return np.argsort(dist, kind="stable")[:k]


def exhaustive(seed=2024, n=40, k=4, epochs=20):
    rng = np.random.default_rng(seed)
    X, y = make_data(rng, n)
    Xt, yt = make_data(rng, 1000)
    w, b = train(X, y, 7, epochs)
    clean_acc = accuracy(Xt, yt, w, b)
    g = greedy_subset(X, y, k, w, b)

    accs = []
    for comb in itertools.combinations(range(n), k):
        yy = y.copy()
        yy[list(comb)] *= -1
        wf, bf = train(X, yy, 7, epochs)
        accs.append(accuracy(Xt, yt, wf, bf))
    accs = np.array(accs)

    yy = y.copy()
    yy[g] *= -1
    wg, bg = train(X, yy, 7, epochs)
    gacc = accuracy(Xt, yt, wg, bg)
    pct = np.mean(accs <= gacc)
    q10 = np.quantile(accs, 0.10)
    print(f"seed={seed}: clean acc {clean_acc:.3f}, greedy acc {gacc:.3f}, "
          f"10th pctile {q10:.3f}, greedy rank pctile {pct:.4f} "
          f"({'TOP DECILE' if gacc <= q10 else 'not top decile'})")
    return gacc <= q10


def paired(seed=5, n=200, k=20, reps=200, epochs=20):
    rng = np.random.default_rng(seed)
    diffs = []
    for _ in range(reps):
        X, y = make_data(rng, n)
        Xt, yt = make_data(rng, 2000)
        w, b = train(X, y, 7, epochs)
        g = greedy_subset(X, y, k, w, b)
        r = rng.choice(n, k, replace=False)
        yg, yr = y.copy(), y.copy()
        yg[g] *= -1
        yr[r] *= -1
        wg, bg = train(X, yg, 7, epochs)
        wr, br = train(X, yr, 7, epochs)
        diffs.append(accuracy(Xt, yt, wr, br) - accuracy(Xt, yt, wg, bg))
    d = np.array(diffs)
    z = d.mean() / (d.std(ddof=1) / np.sqrt(reps))
    print(f"paired n={n} k={k}: mean(random - greedy acc) {d.mean():+.4f}  z {z:.2f}")


if __name__ == "__main__":
    for s in (2024, 7, 13, 99):
        exhaustive(seed=s)
    paired()
