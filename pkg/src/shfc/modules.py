"""Graded free modules, graded maps, and exact strand linear algebra.

A free module is recorded by its generator degrees: degrees (a_1..a_r) means
S(-a_1) + .. + S(-a_r), so generator j lives in degree a_j. The degree-d
strand of a map is a finite dense matrix over the coefficient field; ranks
are exact (int64 Gaussian elimination mod p, Fraction elimination over Q).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .rings import AlgebraError, Polynomial, RingMismatchError, monomials_of_degree


def binom(m, k):
    """Binomial coefficient with the vanishing convention: 0 unless 0 <= k <= m."""
    if k < 0 or m < 0 or m < k:
        return 0
    return math.comb(m, k)


@dataclass(frozen=True)
class GradedFreeModule:
    ring: object
    degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(a) for a in self.degrees))

    @property
    def rank(self):
        return len(self.degrees)

    def strand_dimension(self, d):
        n = self.ring.dim
        return sum(binom(n + d - a, n) for a in self.degrees)

    def strand_basis(self, d):
        """Basis of the degree-d strand: (generator index, monomial), generator
        index first, monomials in descending lexicographic order."""
        out = []
        for j, a in enumerate(self.degrees):
            for mono in monomials_of_degree(self.ring.num_vars, d - a):
                out.append((j, mono))
        return out

    def dual(self):
        return GradedFreeModule(self.ring, tuple(-a for a in self.degrees))

    def shifted(self, e):
        """Degrees of the twist by e: generator degrees drop by e."""
        return GradedFreeModule(self.ring, tuple(a - e for a in self.degrees))


@dataclass
class GradedMap:
    """A degree-0 map of graded free modules, stored as a target.rank x
    source.rank matrix of homogeneous polynomials (column j = image of
    source generator j; entry (i,j) homogeneous of degree
    source.degrees[j] - target.degrees[i])."""

    source: GradedFreeModule
    target: GradedFreeModule
    matrix: tuple

    def __post_init__(self):
        self.matrix = tuple(tuple(row) for row in self.matrix)
        if len(self.matrix) != self.target.rank:
            raise AlgebraError(f"matrix has {len(self.matrix)} rows, target rank {self.target.rank}")
        for row in self.matrix:
            if len(row) != self.source.rank:
                raise AlgebraError(f"matrix row width {len(row)}, source rank {self.source.rank}")

    @classmethod
    def zero(cls, source, target):
        z = Polynomial.zero(target.ring)
        return cls(source, target, tuple(tuple(z for _ in range(source.rank)) for _ in range(target.rank)))

    @classmethod
    def from_columns(cls, source, target, columns):
        rows = tuple(tuple(columns[j][i] for j in range(len(columns))) for i in range(target.rank))
        return cls(source, target, rows)

    @property
    def ring(self):
        return self.target.ring

    def validate(self):
        """Check ring agreement and entry-wise homogeneity of the right degrees."""
        if self.source.ring != self.target.ring:
            raise RingMismatchError("source and target rings differ")
        for i, row in enumerate(self.matrix):
            for j, p in enumerate(row):
                if p.ring != self.ring:
                    raise RingMismatchError(f"entry ({i},{j}) lives in a different ring")
                d = p.homogeneous_degree()
                want = self.source.degrees[j] - self.target.degrees[i]
                if d is not None and d != want:
                    raise AlgebraError(
                        f"entry ({i},{j}) has degree {d}, expected {want}"
                    )
        return self

    def column(self, j):
        return [self.matrix[i][j] for i in range(self.target.rank)]

    def columns(self):
        return [self.column(j) for j in range(self.source.rank)]

    def is_zero(self):
        return all(p.is_zero() for row in self.matrix for p in row)

    def compose(self, other):
        """self o other (apply other first)."""
        if other.target != self.source:
            raise AlgebraError("maps are not composable")
        ring = self.ring
        rows = []
        for i in range(self.target.rank):
            row = []
            for j in range(other.source.rank):
                acc = Polynomial.zero(ring)
                for k in range(self.source.rank):
                    a = self.matrix[i][k]
                    b = other.matrix[k][j]
                    if a.is_zero() or b.is_zero():
                        continue
                    acc = acc + a * b
                row.append(acc)
            rows.append(tuple(row))
        return GradedMap(other.source, self.target, tuple(rows))

    def dual(self):
        """Transpose the matrix, negate all degrees."""
        rows = tuple(
            tuple(self.matrix[i][j] for i in range(self.target.rank))
            for j in range(self.source.rank)
        )
        return GradedMap(self.target.dual(), self.source.dual(), rows)

    def twisted(self, e):
        return GradedMap(self.source.shifted(e), self.target.shifted(e), self.matrix)

    def strand_matrix(self, d):
        """Dense matrix of the degree-d strand; entry at (row m*e_i, col m'*e_j)
        is the coefficient of m in entry(i,j) * m'."""
        rows = self.target.strand_basis(d)
        cols = self.source.strand_basis(d)
        ring = self.ring
        zero = ring.czero()
        row_index = {b: r for r, b in enumerate(rows)}
        entries = [[zero] * len(cols) for _ in rows]
        for cj, (j, mono_src) in enumerate(cols):
            for i in range(self.target.rank):
                p = self.matrix[i][j]
                if p.is_zero():
                    continue
                for mono, c in p.terms.items():
                    key = (i, tuple(a + b for a, b in zip(mono, mono_src)))
                    entries[row_index[key]][cj] = c
        return StrandMatrix(ring=ring, degree=d, row_basis=rows, col_basis=cols, entries=entries)


@dataclass
class StrandMatrix:
    ring: object
    degree: int
    row_basis: list
    col_basis: list
    entries: list = field(repr=False)

    @property
    def shape(self):
        return (len(self.row_basis), len(self.col_basis))

    def rank(self):
        return matrix_rank(self.entries, self.ring)


def _rank_modp(rows, p):
    a = np.array(rows, dtype=np.int64) % p
    m, n = a.shape
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if a[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        block = a[r + 1 :]
        if block.size:
            a[r + 1 :] = (block - np.outer(block[:, c], a[r])) % p
        r += 1
        if r == m:
            break
    return r


def _rank_rational(rows):
    work = [list(row) for row in rows]
    m = len(work)
    n = len(work[0]) if m else 0
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        for i in range(r + 1, m):
            if work[i][c]:
                f = work[i][c] / prow[c]
                work[i] = [a - f * b for a, b in zip(work[i], prow)]
        r += 1
        if r == m:
            break
    return r


def matrix_rank(entries, ring):
    """Exact rank of a dense matrix over the coefficient field of ring."""
    if not entries or not entries[0]:
        return 0
    if ring.characteristic:
        return _rank_modp(entries, ring.characteristic)
    return _rank_rational(entries)
