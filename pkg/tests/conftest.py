"""Shared independent oracles for the test suite.

These deliberately avoid the library's computation paths: the tuple oracle
iterates all n^s ordered draws, and the subset oracle scans combinations.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from halfmult.graphs import Graph


def oracle_independence_prob(g: Graph, s: int) -> Fraction:
    """Exact probability by scanning every ordered s-tuple of vertices."""
    n = g.n
    if n**s > 2_000_000:
        raise ValueError("oracle too slow for this size")
    grids = np.meshgrid(*([np.arange(n)] * s), indexing="ij")
    tuples = np.stack([a.reshape(-1) for a in grids], axis=1)
    dense = np.zeros((n, n), dtype=bool)
    for v in range(n):
        for u in range(n):
            dense[v, u] = bool((g.adj[v] >> u) & 1)
    bad = np.zeros(len(tuples), dtype=bool)
    for i in range(s):
        for j in range(i + 1, s):
            bad |= dense[tuples[:, i], tuples[:, j]]
    good = int((~bad).sum())
    return Fraction(good, n**s)


def oracle_max_clique(g: Graph) -> int:
    """Max clique by scanning all vertex subsets, largest first."""
    for k in range(g.n, 1, -1):
        for combo in itertools.combinations(range(g.n), k):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
                return k
    return 1 if g.n else 0


def oracle_independent_subset_counts(g: Graph, kmax: int) -> list[int]:
    """Independent k-subset counts by scanning all combinations."""
    counts = [0] * (kmax + 1)
    counts[0] = 1
    for k in range(1, kmax + 1):
        for combo in itertools.combinations(range(g.n), k):
            if all(not g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
                counts[k] += 1
    return counts
