"""Independence probability for s uniform vertex draws, exact and Monte Carlo.

Vertices are sampled independently with replacement, and the question is
whether the resulting *set* is independent; duplicates are allowed and only
distinct pairs are tested. The exact path is big-integer rational from end
to end, so results like 1/4 are exact, not approximations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BudgetError
from .graphs import EXACT_COUNT_BUDGET, Graph, independence_profile
from .rng import make_rng

_STIRLING_ROWS: list[list[int]] = [[1]]


def stirling2(s: int, k: int) -> int:
    """Stirling number of the second kind: partitions of an s-set into k blocks.

    Rows are cached; S(s,k) = k*S(s-1,k) + S(s-1,k-1).
    """
    if s < 0 or k < 0:
        raise ValueError("stirling2 arguments must be nonnegative")
    if k > s:
        return 0
    while len(_STIRLING_ROWS) <= s:
        prev = _STIRLING_ROWS[-1]
        m = len(_STIRLING_ROWS)
        row = [0] * (m + 1)
        for j in range(1, m + 1):
            row[j] = j * (prev[j] if j < len(prev) else 0) + prev[j - 1]
        _STIRLING_ROWS.append(row)
    return _STIRLING_ROWS[s][k]


def exact_independence_prob(g: Graph, s: int, *, budget: int = EXACT_COUNT_BUDGET) -> Fraction:
    """P(s iid uniform vertices of g form an independent set), exact.

    Decomposes by the number k of distinct sampled vertices:
    sum_k I_k * k! * S(s,k) / n^s, with I_k the independent k-subset counts.
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    if g.n > budget:
        raise BudgetError(
            f"exact computation is limited to n <= {budget} (got n={g.n}); "
            "use mc_independence_prob instead"
        )
    profile = independence_profile(g, min(s, g.n), budget=budget)
    total = 0
    for k in range(1, profile.s_max + 1):
        total += profile[k] * math.factorial(k) * stirling2(s, k)
    return Fraction(total, g.n**s)


@dataclass(frozen=True)
class McEstimate:
    """Monte Carlo estimate with binomial standard error."""

    estimate: float
    trials: int
    std_error: float
    seed: int


def mc_independence_prob(g: Graph, s: int, trials: int, seed: int) -> McEstimate:
    """Monte Carlo estimate of the s-draw independence probability.

    Stream discipline: trial i consumes draws i*s .. i*s+s-1 of the seeded
    stream (s uniform vertex indices per trial, with replacement); a trial
    succeeds iff no two distinct sampled vertices are adjacent. Chunking is
    an implementation detail and does not change the draw order.
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    # Bit-packed adjacency lookup table: row v, byte u>>3, bit u&7.
    width = (g.n + 7) // 8
    packed = np.frombuffer(
        b"".join(row.to_bytes(width, "little") for row in g.adj), dtype=np.uint8
    ).reshape(g.n, width)
    rng = make_rng(seed)
    hits = 0
    chunk = 1 << 16
    done = 0
    while done < trials:
        m = min(chunk, trials - done)
        samples = rng.integers(0, g.n, size=(m, s))
        bad = np.zeros(m, dtype=bool)
        for i in range(s):
            for j in range(i + 1, s):
                u = samples[:, i]
                v = samples[:, j]
                bad |= ((packed[u, v >> 3] >> (v & 7).astype(np.uint8)) & 1).astype(bool)
        hits += int(bad.sum())
        done += m
    p_hat = (trials - hits) / trials
    std_error = math.sqrt(p_hat * (1.0 - p_hat) / trials)
    return McEstimate(estimate=p_hat, trials=trials, std_error=std_error, seed=seed)
