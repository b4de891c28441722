"""Relabeling-invariant graph fingerprints built from exact walk counts.

Three invariants, each with a canonical byte encoding so that structural
equality is exactly byte equality:

* walk signature: per vertex pair, the tuple of walk counts for lengths
  1..m, canonicalized by sorting tuples within each vertex row and sorting
  the rows;
* determinant profile: the magnitude-ordered determinants of the adjacency
  matrices of all n local complements;
* local-complement walk signature: the sorted multiset of walk signatures of
  the n local complements, each at its own eigenvalue-count horizon.

The horizon m defaults to the number of distinct adjacency eigenvalues;
walks longer than that carry no further information.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .graph import Graph, local_complement
from .linalg import adjacency_matrix, determinant, distinct_eigenvalue_count, mat_mul


def _encode_uint(x: int) -> bytes:
    return x.to_bytes(4, "big")


def _encode_int(x: int) -> bytes:
    # minimal big-endian two's complement, length-prefixed
    length = ((x if x >= 0 else ~x).bit_length() // 8) + 1
    return length.to_bytes(4, "big") + x.to_bytes(length, "big", signed=True)


@dataclass(frozen=True, slots=True)
class WalkSignature:
    """Canonical multiset-of-multisets of length-m walk-count tuples.

    ``rows[i][j]`` is a tuple (w_1, ..., w_m) of exact walk counts; tuples
    are sorted within each row and rows are sorted, so two structurally equal
    signatures have byte-identical encodings regardless of vertex labels.
    """

    m: int
    rows: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def encode(self) -> bytes:
        out = [b"WS1", _encode_uint(self.n), _encode_uint(self.m)]
        for row in self.rows:
            for tup in row:
                for x in tup:
                    out.append(_encode_int(x))
        return b"".join(out)

    def digest(self) -> str:
        return hashlib.sha256(self.encode()).hexdigest()


@dataclass(frozen=True, slots=True)
class DetProfile:
    """Ordered sequence of the n local-complement adjacency determinants.

    Ordering is ascending by absolute value, ties broken negative-first.
    Any total order would partition identically; this one is fixed so the
    encoding is deterministic.
    """

    values: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def encode(self) -> bytes:
        out = [b"DP1", _encode_uint(self.n)]
        for v in self.values:
            out.append(_encode_int(v))
        return b"".join(out)

    def digest(self) -> str:
        return hashlib.sha256(self.encode()).hexdigest()


@dataclass(frozen=True, slots=True)
class LcWalkSignature:
    """Sorted multiset of the walk signatures of all n local complements."""

    parts: tuple[WalkSignature, ...]

    @property
    def n(self) -> int:
        return len(self.parts)

    def encode(self) -> bytes:
        out = [b"LW1", _encode_uint(self.n)]
        for part in self.parts:
            enc = part.encode()
            out.append(_encode_uint(len(enc)))
            out.append(enc)
        return b"".join(out)

    def digest(self) -> str:
        return hashlib.sha256(self.encode()).hexdigest()


def walk_signature(G: Graph, m: int) -> WalkSignature:
    """Exact walk-count signature of G for walk lengths 1..m."""
    if m < 1:
        raise ValueError(f"walk horizon must be >= 1, got {m}")
    A = adjacency_matrix(G)
    powers = [A]
    for _ in range(m - 1):
        powers.append(mat_mul(powers[-1], A))
    n = G.n
    rows = []
    for i in range(n):
        power_rows = [P.rows[i] for P in powers]
        row = sorted(tuple(pr[j] for pr in power_rows) for j in range(n))
        rows.append(tuple(row))
    rows.sort()
    return WalkSignature(m=m, rows=tuple(rows))


def default_m(G: Graph) -> int:
    """Walk horizon for G: the number of distinct adjacency eigenvalues."""
    return distinct_eigenvalue_count(adjacency_matrix(G))


def _profile_order(v: int) -> tuple[int, bool, int]:
    return (abs(v), v >= 0, v)


def lc_determinant_profile(G: Graph) -> DetProfile:
    """Determinants of the adjacency matrices of all n local complements."""
    values = [determinant(adjacency_matrix(local_complement(G, u))) for u in range(G.n)]
    values.sort(key=_profile_order)
    return DetProfile(values=tuple(values))


def lc_walk_signature(G: Graph) -> LcWalkSignature:
    """Walk signatures of all n local complements, canonically sorted.

    Each complement gets its own horizon m_u = default_m of that complement,
    keeping the invariant a property of G alone (cacheable, pair-independent).
    """
    parts = []
    for u in range(G.n):
        L = local_complement(G, u)
        parts.append(walk_signature(L, default_m(L)))
    parts.sort(key=WalkSignature.encode)
    return LcWalkSignature(parts=tuple(parts))
