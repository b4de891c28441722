"""Exact integer matrix arithmetic on arbitrary-precision integers.

Everything here is overflow-proof by construction: entries are plain Python
ints, so matrix powers and determinants that break fixed-width machine
arithmetic (negative "walk counts", nonsense float determinants) come out
exact.  There is deliberately no fast fixed-width path.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .graph import Graph


@dataclass(frozen=True, slots=True)
class IntMatrix:
    """Dense square matrix of arbitrary-precision signed integers."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if n == 0:
            raise ValueError("empty matrix")
        for row in rows:
            if len(row) != n:
                raise ValueError(f"matrix is not square: {n} rows, row of length {len(row)}")
            for v in row:
                if not isinstance(v, int):
                    raise ValueError(f"non-integer entry {v!r}")

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def ones(cls, n: int) -> IntMatrix:
        """All-ones matrix J."""
        return cls(tuple(tuple(1 for _ in range(n)) for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def transpose(self) -> IntMatrix:
        return IntMatrix(tuple(zip(*self.rows)))

    def is_symmetric(self) -> bool:
        rows = self.rows
        return all(rows[i][j] == rows[j][i] for i in range(self.n) for j in range(i + 1, self.n))

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_dim(other)
        return IntMatrix(tuple(tuple(a + b for a, b in zip(ra, rb))
                               for ra, rb in zip(self.rows, other.rows)))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_dim(other)
        return IntMatrix(tuple(tuple(a - b for a, b in zip(ra, rb))
                               for ra, rb in zip(self.rows, other.rows)))

    def __rmul__(self, scalar: int) -> IntMatrix:
        if not isinstance(scalar, int):
            return NotImplemented
        return IntMatrix(tuple(tuple(scalar * v for v in row) for row in self.rows))

    def _check_same_dim(self, other: IntMatrix) -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")


def adjacency_matrix(G: Graph) -> IntMatrix:
    """Symmetric 0/1 matrix with zero diagonal mirroring G's adjacency."""
    n = G.n
    return IntMatrix(tuple(tuple((row >> j) & 1 for j in range(n)) for row in G.rows))


def mat_mul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    """Exact matrix product."""
    A._check_same_dim(B)
    cols = tuple(zip(*B.rows))
    return IntMatrix(tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                           for row in A.rows))


def mat_pow(A: IntMatrix, k: int) -> IntMatrix:
    """Exact k-th power, k >= 1.

    Entry (i, j) of adjacency_matrix(G)**k counts the walks of length k from
    vertex i to vertex j.  Iterated multiplication: the exponents this
    pipeline needs are tiny, so clarity beats squaring tricks.
    """
    if k < 1:
        raise ValueError(f"exponent must be >= 1, got {k}")
    P = A
    for _ in range(k - 1):
        P = mat_mul(P, A)
    return P


def determinant(A: IntMatrix) -> int:
    """Exact integer determinant via Bareiss fraction-free elimination.

    Every division is an exact integer division and intermediate entries are
    minors of the input, so their sizes stay polynomially bounded.  Pivots
    are chosen by a full search of the eliminating column (smallest nonzero
    magnitude); row swaps flip the tracked sign.
    """
    n = A.n
    M = [list(row) for row in A.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot_row = -1
        pivot_abs = 0
        for i in range(k, n):
            v = M[i][k]
            if v and (pivot_row < 0 or abs(v) < pivot_abs):
                pivot_row = i
                pivot_abs = abs(v)
        if pivot_row < 0:
            return 0
        if pivot_row != k:
            M[k], M[pivot_row] = M[pivot_row], M[k]
            sign = -sign
        Mk = M[k]
        pk = Mk[k]
        for i in range(k + 1, n):
            Mi = M[i]
            mik = Mi[k]
            if mik:
                for j in range(k + 1, n):
                    Mi[j] = (pk * Mi[j] - mik * Mk[j]) // prev
                Mi[k] = 0
            elif pk != prev:
                for j in range(k + 1, n):
                    Mi[j] = (pk * Mi[j]) // prev
        prev = pk
    return sign * M[n - 1][n - 1]


def distinct_eigenvalue_count(A: IntMatrix) -> int:
    """Number of distinct eigenvalues of a symmetric integer matrix.

    Equals the degree of the minimal polynomial over the rationals, found as
    the least k such that I, A, ..., A^k are linearly dependent when each
    power is flattened to an n^2-vector.  The rank test is exact: vectors are
    reduced against an integer echelon basis by cross-multiplication, with
    content GCDs stripped to keep entries small.
    """
    if not A.is_symmetric():
        raise ValueError("matrix is not symmetric")
    n = A.n
    basis: list[tuple[int, list[int]]] = []  # (leading index, primitive vector)

    def try_insert(vec: Sequence[int]) -> bool:
        """Reduce vec against the basis; insert if independent.

        Returns True when vec is linearly dependent on the basis.
        """
        v = list(vec)
        for lead, b in basis:
            c = v[lead]
            if c:
                p = b[lead]
                v = [p * x - c * y for x, y in zip(v, b)]
        for lead, x in enumerate(v):
            if x:
                v = _primitive(v)
                if v[lead] < 0:
                    v = [-y for y in v]
                basis.append((lead, v))
                basis.sort(key=lambda item: item[0])
                return False
        return True

    try_insert([1 if i == j else 0 for i in range(n) for j in range(n)])
    P = A
    for k in range(1, n + 1):
        if try_insert([x for row in P.rows for x in row]):
            return k
        if k < n:
            P = mat_mul(P, A)
    raise AssertionError("powers up to n stayed independent; impossible for a square matrix")


def _primitive(v: Iterable[int]) -> list[int]:
    v = list(v)
    g = 0
    for x in v:
        if x:
            g = gcd(g, x)
            if g == 1:
                return v
    if g > 1:
        v = [x // g for x in v]
    return v
