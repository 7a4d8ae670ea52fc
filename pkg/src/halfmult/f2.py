"""Linear algebra over F2 and the symplectic (Conlon-Ferber) graph.

Vectors are Python ints: bit i is coordinate i. The canonical symplectic
form pairs coordinates (0,1), (2,3), ...: form(u,v) = sum over blocks of
u_{2i} v_{2i+1} + u_{2i+1} v_{2i} mod 2. All nondegenerate alternating
forms over F2 are equivalent to this one, so fixing it keeps every output
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BudgetError
from .graphs import Graph

GRAPH_VERTEX_BUDGET = 1 << 14
ENUMERATION_T_BUDGET = 10

_PARITY16: np.ndarray | None = None


def _parity16_table() -> np.ndarray:
    global _PARITY16
    if _PARITY16 is None:
        bits = np.unpackbits(np.arange(1 << 16, dtype=np.uint16).view(np.uint8))
        _PARITY16 = bits.reshape(-1, 16).sum(axis=1).astype(np.uint8) & 1
    return _PARITY16


def pack_bits(bits) -> int:
    """(b0, b1, ...) -> int with bit i = b_i (LSB = coordinate 0)."""
    value = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError("bits must be 0 or 1")
        value |= b << i
    return value


def unpack_bits(value: int, dim: int) -> tuple[int, ...]:
    return tuple((value >> i) & 1 for i in range(dim))


def _swap_pairs(v: int, dim: int) -> int:
    """Exchange coordinates 2i and 2i+1; helper for the standard form."""
    even = sum(1 << i for i in range(0, dim, 2))
    return ((v & even) << 1) | ((v >> 1) & even)


@dataclass(frozen=True)
class SymplecticSpace:
    """F2^dim with the standard alternating form, dim even."""

    dim: int

    def __post_init__(self):
        if self.dim < 2 or self.dim % 2:
            raise ValueError(f"dimension must be even and >= 2, got {self.dim}")

    @property
    def size(self) -> int:
        return 1 << self.dim

    def check_vector(self, v: int) -> None:
        if not 0 <= v < self.size:
            raise ValueError(f"vector {v} not in F2^{self.dim}")

    def form(self, u: int, v: int) -> int:
        self.check_vector(u)
        self.check_vector(v)
        return (_swap_pairs(u, self.dim) & v).bit_count() & 1


def symplectic_form(u: int, v: int, space: SymplecticSpace) -> int:
    """Standard symplectic pairing of u and v; symmetric and bilinear over F2."""
    return space.form(u, v)


def f2_rank(vectors: list[int]) -> int:
    """Rank of the span over F2, by Gaussian elimination on int bitsets."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


def f2_span(basis) -> list[int]:
    """All 2^k combinations of the basis vectors, sorted."""
    span = [0]
    for b in basis:
        span += [x ^ b for x in span]
    return sorted(set(span))


def build_cf_graph(t: int, *, budget: int = GRAPH_VERTEX_BUDGET) -> Graph:
    """Graph on all vectors of F2^(t-2): edge iff the symplectic form is 1.

    For even t this graph has no clique of size t, which is what makes it
    useful as an explicit half-multiplicity construction.
    """
    if t % 2 or t < 4:
        raise ValueError(f"t must be even and >= 4, got {t}")
    dim = t - 2
    n = 1 << dim
    if n > budget:
        raise ValueError(f"2^(t-2) = {n} exceeds the vertex budget {budget}")
    vectors = np.arange(n, dtype=np.int64)
    parity16 = _parity16_table()
    adj = []
    for u in range(n):
        masked = vectors & _swap_pairs(u, dim)
        bits = parity16[masked & 0xFFFF] ^ parity16[masked >> 16]
        row = int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")
        adj.append(row)
    return Graph(n, tuple(adj))


def count_isotropic_subspaces(t: int, k: int) -> int:
    """Number of k-dimensional isotropic subspaces of F2^(t-2), exact.

    Closed form prod_{i<k} (2^(t-2-2i) - 1) / prod_{i<k} (2^(k-i) - 1);
    the division is exact in the integers.
    """
    if t % 2 or t < 2:
        raise ValueError(f"t must be even and >= 2, got {t}")
    if not 0 <= k <= t // 2 - 1:
        raise ValueError(
            f"no isotropic subspace of dimension {k} in F2^{t - 2}; need 0 <= k <= {t // 2 - 1}"
        )
    num = 1
    den = 1
    for i in range(k):
        num *= (1 << (t - 2 - 2 * i)) - 1
        den *= (1 << (k - i)) - 1
    if num % den:
        raise AssertionError("isotropic subspace count is not an integer")
    return num // den


def enumerate_isotropic_subspaces(t: int, k: int, *, budget: int = ENUMERATION_T_BUDGET) -> list[tuple[int, ...]]:
    """Every k-dimensional isotropic subspace, as canonical basis tuples.

    The canonical basis of a subspace V is g_1 < g_2 < ... with
    g_i = min(V minus span of earlier g's); equivalently each g_i has zeros
    in all earlier pivot positions. Output is sorted by basis encoding, so
    the order is reproducible.
    """
    if t % 2 or t < 2:
        raise ValueError(f"t must be even and >= 2, got {t}")
    if not 0 <= k <= t // 2 - 1:
        raise ValueError(
            f"no isotropic subspace of dimension {k} in F2^{t - 2}; need 0 <= k <= {t // 2 - 1}"
        )
    if t > budget:
        raise BudgetError(f"exhaustive subspace enumeration is limited to t <= {budget} (got t={t})")
    dim = t - 2
    size = 1 << dim
    results: list[tuple[int, ...]] = []

    def rec(basis: list[int], swapped: list[int], pivots: int, start: int) -> None:
        if len(basis) == k:
            results.append(tuple(basis))
            return
        for w in range(start, size):
            if w & pivots:
                continue  # not the minimum of its coset
            if any((sw & w).bit_count() & 1 for sw in swapped):
                continue  # not orthogonal to the current span
            basis.append(w)
            swapped.append(_swap_pairs(w, dim))
            rec(basis, swapped, pivots | (1 << (w.bit_length() - 1)), w + 1)
            swapped.pop()
            basis.pop()

    rec([], [], 0, 1)
    return results
