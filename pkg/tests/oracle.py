"""Independent brute-force oracles the library output is checked against.

Everything here is deliberately plain: explicit matrices, linear scans over
intervals, pure-Python statistics.  Exactly rounded sums (math.fsum) make
the expected values order-independent and bit-reproducible.
"""

import math

import numpy as np


def dense_analysis_matrix(n, h, g):
    """Dense periodic analysis operator: row k is the k-th analysis window.

    Built directly from approx[k] = sum_n h[n] x[(2k+n) mod N]; wrap-around
    collisions (N < filter length) accumulate.
    """
    W = np.zeros((n, n))
    for k in range(n // 2):
        for j in range(len(h)):
            W[k, (2 * k + j) % n] += h[j]
            W[n // 2 + k, (2 * k + j) % n] += g[j]
    return W


def oracle_stats(values):
    vals = [float(v) for v in values]
    n = len(vals)
    mean = math.fsum(vals) / n
    var = math.fsum((v - mean) ** 2 for v in vals) / n
    return mean, math.sqrt(var)


def oracle_cuts(values, levels):
    """Pure-Python reconstruction of the mu +/- sigma refinement scheme."""
    vals = [float(v) for v in values]
    mean, std = oracle_stats(vals)
    if std == 0.0:
        return []
    lo_edge, hi_edge = mean - std, mean + std
    cuts = [lo_edge, hi_edge]

    def add(candidate, lo, hi):
        if lo < candidate < hi and candidate not in cuts:
            cuts.append(candidate)

    if levels >= 5:
        lower = [v for v in vals if v < lo_edge]
        upper = [v for v in vals if v >= hi_edge]
        if lower:
            add(math.fsum(lower) / len(lower), -math.inf, lo_edge)
        if upper:
            add(math.fsum(upper) / len(upper), hi_edge, math.inf)
        if levels == 7:
            if lower:
                tmean, tstd = oracle_stats(lower)
                if tstd > 0.0:
                    add(tmean - tstd, -math.inf, lo_edge)
            if upper:
                tmean, tstd = oracle_stats(upper)
                if tstd > 0.0:
                    add(tmean + tstd, hi_edge, math.inf)
    return sorted(cuts)


def oracle_threshold(values, levels):
    """Classify by linear scan over blocks, average members directly."""
    vals = [float(v) for v in values]
    cuts = oracle_cuts(vals, levels)
    intervals = []
    edges = [-math.inf] + cuts + [math.inf]
    for lo, hi in zip(edges[:-1], edges[1:]):
        intervals.append((lo, hi))

    def classify(v):
        for i, (lo, hi) in enumerate(intervals):
            if lo <= v < hi:
                return i
        raise AssertionError(f"{v} not classified")

    members = {}
    for v in vals:
        members.setdefault(classify(v), []).append(v)
    centroid = {i: math.fsum(vs) / len(vs) for i, vs in members.items()}
    return [centroid[classify(v)] for v in vals]
