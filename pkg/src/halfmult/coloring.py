"""Random-homomorphism multicolor colorings and their certificates.

The construction colors the edges of K_n with ell colors: ell-2 random maps
into a clique-free base graph assign the first colors (minimal index whose
map sends the pair to an edge), and pairs missed by every map get one of the
last two colors by a fair coin. A certificate records the full coloring and
is verified from the color array alone; the verifier never trusts the seed
or the base graph.

Certificate file layout (ASCII, one field per line, then the array):

    halfmult-certificate v1
    n: <int>
    ell: <int>
    t: <int>
    base_graph: <graph6 string | cf:<t> | none>
    seed: <int>
    attempts_used: <int>
    colors: c1,c2,...   (n(n-1)/2 ints in 1..ell, upper-triangular row-major)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import CertificateFormatError
from .graphs import Graph, find_clique, from_edges, has_clique
from .rng import make_rng

_MAGIC = "halfmult-certificate v1"


def pair_index(u: int, v: int, n: int) -> int:
    """Index of pair {u,v}, u < v, in upper-triangular row-major order."""
    if not 0 <= u < v < n:
        raise ValueError(f"need 0 <= u < v < n, got ({u},{v}) with n={n}")
    return u * n - u * (u + 1) // 2 + (v - u - 1)


@dataclass(frozen=True)
class ColoringCertificate:
    """An explicit ell-coloring of K_n with provenance."""

    n: int
    ell: int
    t: int
    colors: tuple[int, ...]
    base_graph: str
    seed: int
    attempts_used: int

    def color_of(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self.colors[pair_index(u, v, self.n)]

    def color_class(self, c: int) -> Graph:
        """The graph formed by edges of color c."""
        edges = []
        i = 0
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.colors[i] == c:
                    edges.append((u, v))
                i += 1
        return from_edges(self.n, edges)

    def to_text(self) -> str:
        return (
            f"{_MAGIC}\n"
            f"n: {self.n}\n"
            f"ell: {self.ell}\n"
            f"t: {self.t}\n"
            f"base_graph: {self.base_graph}\n"
            f"seed: {self.seed}\n"
            f"attempts_used: {self.attempts_used}\n"
            f"colors: {','.join(str(c) for c in self.colors)}\n"
        )


def certificate_from_text(text: str) -> ColoringCertificate:
    """Strict parse of the certificate layout; malformation raises
    CertificateFormatError."""
    lines = text.splitlines()
    if not lines or lines[0].strip() != _MAGIC:
        raise CertificateFormatError(f"missing '{_MAGIC}' header")
    fields: dict[str, str] = {}
    for line in lines[1:]:
        if not line.strip():
            continue
        if ":" not in line:
            raise CertificateFormatError(f"malformed line: {line!r}")
        key, _, value = line.partition(":")
        fields[key.strip()] = value.strip()
    required = ("n", "ell", "t", "base_graph", "seed", "attempts_used", "colors")
    for key in required:
        if key not in fields:
            raise CertificateFormatError(f"missing field '{key}'")
    try:
        n = int(fields["n"])
        ell = int(fields["ell"])
        t = int(fields["t"])
        seed = int(fields["seed"])
        attempts_used = int(fields["attempts_used"])
        colors = tuple(int(c) for c in fields["colors"].split(",")) if fields["colors"] else ()
    except ValueError as exc:
        raise CertificateFormatError(f"non-integer field: {exc}") from None
    cert = ColoringCertificate(n, ell, t, colors, fields["base_graph"], seed, attempts_used)
    _check_shape(cert)
    return cert


def _check_shape(cert: ColoringCertificate) -> None:
    if cert.n < 1 or cert.ell < 2 or cert.t < 2:
        raise CertificateFormatError(
            f"need n >= 1, ell >= 2, t >= 2; got n={cert.n}, ell={cert.ell}, t={cert.t}"
        )
    expected = cert.n * (cert.n - 1) // 2
    if len(cert.colors) != expected:
        raise CertificateFormatError(
            f"color array has {len(cert.colors)} entries, expected {expected}"
        )
    for c in cert.colors:
        if not 1 <= c <= cert.ell:
            raise CertificateFormatError(f"color {c} outside 1..{cert.ell}")


@dataclass(frozen=True)
class VerifyResult:
    valid: bool
    violating_color: int | None = None
    witness: tuple[int, ...] | None = None


def verify_certificate(cert: ColoringCertificate) -> VerifyResult:
    """Check every color class for a K_t, independently of how the
    certificate was produced. Returns the first violating color and a
    clique witness on failure."""
    _check_shape(cert)
    for c in range(1, cert.ell + 1):
        witness = find_clique(cert.color_class(c), cert.t)
        if witness is not None:
            return VerifyResult(valid=False, violating_color=c, witness=witness)
    return VerifyResult(valid=True)


@dataclass(frozen=True)
class ConstructionFailure:
    """Every attempt produced a monochromatic K_t; keeps per-attempt stats."""

    n: int
    ell: int
    t: int
    seed: int
    attempts: int
    violations: tuple[tuple[int, int, tuple[int, ...]], ...]  # (attempt, color, witness)

    @property
    def by_color(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for _, color, _ in self.violations:
            out[color] = out.get(color, 0) + 1
        return out


def construct_coloring(
    g: Graph,
    ell: int,
    t: int,
    n: int,
    seed: int,
    max_attempts: int = 1000,
    base_label: str | None = None,
) -> ColoringCertificate | ConstructionFailure:
    """Sample colorings until one verifies, or give up after max_attempts.

    Attempt a uses the stream (seed, a): first (ell-2)*n uniform vertex
    draws defining the maps f_1..f_{ell-2} (map-major order), then one fair
    bit per pair left uncolored, in lexicographic pair order. The first ell-2
    classes are edge pullbacks of g, hence K_t-free whenever g is; the
    verifier still checks all ell classes.
    """
    if ell < 2:
        raise ValueError(f"ell must be at least 2, got {ell}")
    if t <= 2:
        raise ValueError(f"t must exceed 2, got {t}")
    if n < t:
        raise ValueError(f"need n >= t, got n={n}, t={t}")
    if max_attempts < 1:
        raise ValueError("max_attempts must be at least 1")
    if has_clique(g, t):
        raise ValueError(
            f"base graph contains a clique of size {t}; the pullback classes would be unsafe"
        )
    if base_label is None:
        from .graphs import to_graph6

        base_label = to_graph6(g)

    m = n * (n - 1) // 2
    x_idx, y_idx = np.triu_indices(n, 1)  # row-major order matches pair_index
    dense = np.zeros((g.n, g.n), dtype=bool)
    for v, row in enumerate(g.adj):
        for u in range(g.n):
            if (row >> u) & 1:
                dense[v, u] = True

    violations: list[tuple[int, int, tuple[int, ...]]] = []
    for attempt in range(max_attempts):
        rng = make_rng(seed, attempt)
        colors = np.zeros(m, dtype=np.int64)
        remaining = np.ones(m, dtype=bool)
        if ell > 2:
            maps = rng.integers(0, g.n, size=(ell - 2, n))
            for i in range(ell - 2):
                f = maps[i]
                hit = dense[f[x_idx], f[y_idx]] & remaining
                colors[hit] = i + 1
                remaining &= ~hit
        tail = int(remaining.sum())
        bits = rng.integers(0, 2, size=tail)
        colors[remaining] = (ell - 1) + bits
        cert = ColoringCertificate(
            n=n,
            ell=ell,
            t=t,
            colors=tuple(int(c) for c in colors),
            base_graph=base_label,
            seed=seed,
            attempts_used=attempt + 1,
        )
        result = verify_certificate(cert)
        if result.valid:
            return cert
        violations.append((attempt, result.violating_color, result.witness))
    return ConstructionFailure(
        n=n, ell=ell, t=t, seed=seed, attempts=max_attempts, violations=tuple(violations)
    )


def sizing_log2(t: int, ell: int, p_value) -> float:
    """log2 of the target vertex count p_value^(-(ell-2)/t) * 2^((t-1)/2)."""
    from .bounds import multicolor_lower

    return multicolor_lower(t, ell, p_value)


def sizing(t: int, ell: int, p_value) -> int:
    """floor(p_value^(-(ell-2)/t) * 2^((t-1)/2)).

    For exact Fraction input the floor is certified by integer arithmetic:
    N <= bound iff N^t * num^(ell-2) <= den^(ell-2) * 2^(t(t-1)/2). For
    float input a guard of a few ulps protects boundary cases where the
    true value is an exact integer that floating point lands just under.
    Values beyond 2^63 raise OverflowError naming the log2 instead.
    """
    log2n = sizing_log2(t, ell, p_value)
    if log2n > 63:
        raise OverflowError(f"N exceeds 2^63; log2(N) = {log2n:.6f}")
    x = 2.0**log2n
    n = int(x)
    if isinstance(p_value, (Fraction, int)):
        frac = Fraction(p_value)
        num = frac.numerator
        den = frac.denominator
        e = ell - 2
        rhs_const = den**e * 2 ** (t * (t - 1) // 2)

        def fits(candidate: int) -> bool:
            return candidate**t * num**e <= rhs_const

        while fits(n + 1):
            n += 1
        while n > 0 and not fits(n):
            n -= 1
        return n
    if (n + 1) - x <= x * 2.0**-48:
        n += 1
    return n
