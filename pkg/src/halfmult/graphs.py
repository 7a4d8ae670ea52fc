"""Compact undirected graphs with int-bitset adjacency.

Vertices are 0..n-1; row v is a Python int whose bit u is set iff {u,v} is
an edge. This is the substrate for clique search, independence counting,
and graph6 interchange.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BudgetError
from .rng import make_rng

EXACT_COUNT_BUDGET = 64


@dataclass(frozen=True)
class Graph:
    """Immutable undirected graph; adjacency as one bitmask per vertex."""

    n: int
    adj: tuple[int, ...]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def validate(self) -> None:
        """Check symmetry and absence of self-loops; raises ValueError."""
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits beyond vertex range")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if ((self.adj[u] >> v) & 1) != ((self.adj[v] >> u) & 1):
                    raise ValueError(f"asymmetric adjacency at ({u},{v})")


def from_edges(n: int, edges) -> Graph:
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def edgeless(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complement(g: Graph) -> Graph:
    """Edge iff non-edge in g; involution."""
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ row) & ~(1 << v) for v, row in enumerate(g.adj)))


def sample_er_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n,p), reproducible for fixed (n, p, seed).

    Stream discipline: exactly one uniform draw per unordered pair, in
    lexicographic order (0,1), (0,2), ..., (n-2,n-1); the pair is an edge
    iff its draw is < p. This makes samples independent of chunking,
    threading, and platform.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0,1], got {p}")
    rng = make_rng(seed)
    adj = [0] * n
    for u in range(n - 1):
        draws = rng.random(n - 1 - u)
        for off in np.nonzero(draws < p)[0]:
            v = u + 1 + int(off)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# Clique search: branch and bound with greedy-coloring upper bounds.
# ---------------------------------------------------------------------------


def _color_sort(adj: tuple[int, ...], cand: int) -> tuple[list[int], list[int]]:
    """Greedy-color candidates; returns vertices with nondecreasing bounds."""
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~adj[v]
            avail ^= low  # no self-loops, so v survived the mask above
            rest ^= low
            order.append(v)
            bounds.append(color)
    return order, bounds


def _expand(adj: tuple[int, ...], cand: int, current: list[int], best: list, stop_at: int | None) -> None:
    order, bounds = _color_sort(adj, cand)
    for i in range(len(order) - 1, -1, -1):
        if stop_at is not None and best[0] >= stop_at:
            return
        if len(current) + bounds[i] <= best[0]:
            return
        v = order[i]
        current.append(v)
        sub = cand & adj[v]
        if sub:
            _expand(adj, sub, current, best, stop_at)
        elif len(current) > best[0]:
            best[0] = len(current)
            best[1] = tuple(sorted(current))
        current.pop()
        cand &= ~(1 << v)


def _search_clique(g: Graph, lower: int, stop_at: int | None) -> tuple[int, tuple[int, ...] | None]:
    if g.n == 0:
        return 0, None
    # Root vertices in descending-degree order: strong branches first.
    by_degree = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    perm = {v: i for i, v in enumerate(by_degree)}
    adj = tuple(
        sum(1 << perm[u] for u in _bits(g.adj[v])) for v in by_degree
    )
    best: list = [lower, None]
    _expand(adj, (1 << g.n) - 1, [], best, stop_at)
    if best[1] is None:
        return best[0], None
    witness = tuple(sorted(by_degree[i] for i in best[1]))
    return best[0], witness


def _bits(mask: int):
    while mask:
        low = mask & -mask
        mask ^= low
        yield low.bit_length() - 1


def max_clique_size(g: Graph) -> int:
    """Clique number, by branch and bound with coloring bounds."""
    if g.n == 0:
        return 0
    size, _ = _search_clique(g, 0, None)
    return size


def find_clique(g: Graph, t: int) -> tuple[int, ...] | None:
    """A clique of size exactly t if one exists, else None.

    The returned witness is re-verified pairwise before being returned.
    """
    if t < 1:
        raise ValueError("clique size must be at least 1")
    if t == 1:
        return (0,) if g.n >= 1 else None
    if t > g.n:
        return None
    _, witness = _search_clique(g, t - 1, t)
    if witness is None:
        return None
    witness = witness[:t]
    for i in range(t):
        for j in range(i + 1, t):
            if not g.has_edge(witness[i], witness[j]):
                raise AssertionError("clique search produced an invalid witness")
    return witness


def has_clique(g: Graph, t: int) -> bool:
    """True iff g contains t pairwise-adjacent vertices."""
    return find_clique(g, t) is not None


# ---------------------------------------------------------------------------
# Independence counting.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IndependenceProfile:
    """counts[k] = number of independent k-subsets, k = 0..s_max, exact."""

    counts: tuple[int, ...]

    @property
    def s_max(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, k: int) -> int:
        return self.counts[k]


def _count_cliques_by_size(adj: tuple[int, ...], full: int, kmax: int) -> list[int]:
    counts = [0] * (kmax + 1)
    counts[0] = 1

    def rec(cand: int, size: int) -> None:
        nxt = size + 1
        c = cand
        while c:
            low = c & -c
            c ^= low
            v = low.bit_length() - 1
            counts[nxt] += 1
            if nxt < kmax:
                sub = c & adj[v]
                if sub:
                    rec(sub, nxt)

    if kmax >= 1 and full:
        rec(full, 0)
    return counts


def independence_profile(g: Graph, s_max: int, *, budget: int = EXACT_COUNT_BUDGET) -> IndependenceProfile:
    """Exact counts of independent k-subsets for k <= s_max.

    Computed as clique counts of the complement. Graphs beyond the budget
    raise BudgetError; use mc_independence_prob for estimates there.
    """
    if s_max < 0:
        raise ValueError("s_max must be nonnegative")
    if g.n > budget:
        raise BudgetError(
            f"exact independence counting is limited to n <= {budget} (got n={g.n}); "
            "use mc_independence_prob instead"
        )
    co = complement(g)
    counts = _count_cliques_by_size(co.adj, (1 << g.n) - 1, s_max)
    return IndependenceProfile(tuple(counts))


# ---------------------------------------------------------------------------
# graph6 interchange (format of McKay's nauty tools).
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_size_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise ValueError("graph6 encoding supported for n <= 258047")


def to_graph6(g: Graph) -> str:
    """Encode as a graph6 line (no header, no newline)."""
    bits = []
    for v in range(1, g.n):
        row = g.adj[v]
        for u in range(v):
            bits.append((row >> u) & 1)
    data = bytearray(_g6_size_bytes(g.n))
    for i in range(0, len(bits), 6):
        group = bits[i : i + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = (val << 1) | b
        data.append(val + 63)
    return data.decode("ascii")


def from_graph6(text: str) -> Graph:
    """Decode a graph6 line (optional >>graph6<< header tolerated)."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
    if not s:
        raise ValueError("empty graph6 string")
    raw = s.encode("ascii")
    if raw[0] == 126:
        if len(raw) < 4:
            raise ValueError("truncated graph6 size field")
        n = ((raw[1] - 63) << 12) | ((raw[2] - 63) << 6) | (raw[3] - 63)
        body = raw[4:]
    else:
        n = raw[0] - 63
        body = raw[1:]
    if n < 0:
        raise ValueError("invalid graph6 size field")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = []
    for byte in body:
        val = byte - 63
        if not 0 <= val < 64:
            raise ValueError("graph6 byte out of range")
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    adj = [0] * n
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            i += 1
    return Graph(n, tuple(adj))


def write_graph6_file(path, graphs) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")


def read_graph6_file(path) -> list[Graph]:
    out = []
    with open(path, encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(from_graph6(line))
    return out
