"""Exact decision procedures for diffusion-matrix properties.

is_mds implements the submatrix definition directly: a square matrix
is MDS iff every square submatrix (all orders) is nonsingular.  The
enumeration ascends by submatrix size in lexicographic index order, so
a failing report always carries the smallest, first witness.

is_nmds takes the rectangular full-rank characterisation as the
operational definition: a non-MDS matrix of order n is NMDS iff for
every 1 <= g <= n-1 each g x (g+1) and (g+1) x g submatrix has rank g
(equivalently, contains a nonsingular g x g submatrix).  The
code-theoretic definition via [I | M] generating a near-MDS code is
discussed in the README.  Internally the rank checks run cheapest
submatrix shapes first; the verdict is a pure conjunction, so the
evaluation order only affects which witness a failure reports (fixed
and deterministic for a given order).

fast_hadamard4_mds / fast_circulant4_mds are the factored first-row
tests used in census inner loops: a 4x4 Hadamard or circulant matrix
is MDS iff every member of a small factor set of its minors is
nonzero.  Both are equivalence-tested against is_mds.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from typing import Sequence

from .field import GF2r
from .matrix import MatrixGF

__all__ = [
    "PredicateReport",
    "SubmatrixWitness",
    "fast_circulant4_mds",
    "fast_hadamard4_mds",
    "hadamard_mds_distinctness",
    "is_involutory",
    "is_mds",
    "is_nmds",
    "is_orthogonal",
]


@dataclasses.dataclass(frozen=True)
class SubmatrixWitness:
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def to_json(self) -> dict:
        return {"rows": list(self.rows), "cols": list(self.cols)}


@dataclasses.dataclass(frozen=True)
class PredicateReport:
    """Outcome of a property test, with a falsifying witness when it fails."""

    property: str
    holds: bool
    witness: SubmatrixWitness | None = None

    def to_json(self) -> dict:
        return {
            "property": self.property,
            "holds": self.holds,
            "witness": self.witness.to_json() if self.witness else None,
        }


def _sub_det(f: GF2r, data, rsel, csel) -> int:
    from .matrix import _det_rows

    return _det_rows(f, [[data[i][j] for j in csel] for i in rsel])


def _sub_rank(f: GF2r, data, rsel, csel) -> int:
    from .matrix import _rank_rows

    return _rank_rows(f, [[data[i][j] for j in csel] for i in rsel])


def is_mds(m: MatrixGF) -> PredicateReport:
    """Every square submatrix nonsingular; first singular witness otherwise."""
    if not m.square:
        raise ValueError("MDS test requires a square matrix")
    n = m.nrows
    data = m.rows
    for i in range(n):
        for j in range(n):
            if data[i][j] == 0:
                return PredicateReport("mds", False, SubmatrixWitness((i,), (j,)))
    idx = range(n)
    for size in range(2, n + 1):
        for rsel in itertools.combinations(idx, size):
            for csel in itertools.combinations(idx, size):
                if _sub_det(m.field, data, rsel, csel) == 0:
                    return PredicateReport("mds", False, SubmatrixWitness(rsel, csel))
    return PredicateReport("mds", True)


def _is_mds_quick(m: MatrixGF) -> bool:
    """MDS verdict only, cheapest obstructions first (zero entries, then det)."""
    n = m.nrows
    data = m.rows
    for row in data:
        if 0 in row:
            return False
    if _sub_det(m.field, data, range(n), range(n)) == 0:
        return False
    idx = range(n)
    for size in range(2, n):
        for rsel in itertools.combinations(idx, size):
            for csel in itertools.combinations(idx, size):
                if _sub_det(m.field, data, rsel, csel) == 0:
                    return False
    return True


def _rank_check_order(n: int) -> list[int]:
    # cheapest g x (g+1) families first; deterministic for fixed n
    return sorted(range(1, n), key=lambda g: (math.comb(n, g) * math.comb(n, g + 1), g))


def is_nmds(m: MatrixGF) -> PredicateReport:
    """Non-MDS with every g x (g+1) and (g+1) x g submatrix of full rank g.

    When the matrix turns out to be MDS, the report fails with the full
    index sets as witness; otherwise a failing report names a
    rectangular submatrix whose rank falls short.
    """
    if not m.square:
        raise ValueError("NMDS test requires a square matrix")
    n = m.nrows
    if n < 2:
        raise ValueError("NMDS test requires order >= 2")
    if _is_mds_quick(m):
        full = tuple(range(n))
        return PredicateReport("nmds", False, SubmatrixWitness(full, full))
    data = m.rows
    f = m.field
    idx = range(n)
    for g in _rank_check_order(n):
        for rsel in itertools.combinations(idx, g):
            for csel in itertools.combinations(idx, g + 1):
                if _sub_rank(f, data, rsel, csel) < g:
                    return PredicateReport("nmds", False, SubmatrixWitness(rsel, csel))
        for rsel in itertools.combinations(idx, g + 1):
            for csel in itertools.combinations(idx, g):
                if _sub_rank(f, data, rsel, csel) < g:
                    return PredicateReport("nmds", False, SubmatrixWitness(rsel, csel))
    return PredicateReport("nmds", True)


def is_involutory(m: MatrixGF) -> bool:
    """True iff m @ m is the identity."""
    if not m.square:
        raise ValueError("involutory test requires a square matrix")
    from .matrix import matmul

    prod = matmul(m, m)
    return all(
        v == (1 if i == j else 0) for i, row in enumerate(prod.rows) for j, v in enumerate(row)
    )


def is_orthogonal(m: MatrixGF) -> bool:
    """True iff m @ m^T is the identity."""
    if not m.square:
        raise ValueError("orthogonality test requires a square matrix")
    from .matrix import matmul, transpose

    prod = matmul(m, transpose(m))
    return all(
        v == (1 if i == j else 0) for i, row in enumerate(prod.rows) for j, v in enumerate(row)
    )


def fast_hadamard4_mds(field: GF2r, a: int, b: int, c: int, d: int) -> bool:
    """First-row MDS test for 4x4 Hadamard matrices.

    True iff every member of the factor set
      {a, b, c, d, a+b, c+d, a+c, b+d, a+d, b+c, a+b+c+d,
       bc+ad, ac+bd, ab+cd}
    is nonzero; agrees with is_mds(build_hadamard(field, (a, b, c, d))).
    Linear factors are checked before the quadratic ones.
    """
    if a == 0 or b == 0 or c == 0 or d == 0:
        return False
    if a == b or c == d or a == c or b == d or a == d or b == c:
        return False
    if a ^ b ^ c ^ d == 0:
        return False
    mul = field.mul
    if mul(b, c) == mul(a, d):
        return False
    if mul(a, c) == mul(b, d):
        return False
    if mul(a, b) == mul(c, d):
        return False
    return True


def fast_circulant4_mds(field: GF2r, a: int, b: int, c: int, d: int) -> bool:
    """First-row MDS test for 4x4 circulant matrices.

    True iff every member of the factor set
      {a, b, c, d, a+c, b+d, a+b+c+d, ab+cd, bc+ad, b^2+ac, c^2+bd,
       a^2+bd, ac+d^2, a^2 b+b c^2+b^2 d+d^3, a^3+b^2 c+a c^2+c d^2,
       a b^2+a^2 c+c^3+a d^2, b^3+a^2 d+c^2 d+b d^2}
    is nonzero; agrees with is_mds(build_circulant(field, (a, b, c, d))).
    Linear factors first, then quadratic, then cubic.
    """
    if a == 0 or b == 0 or c == 0 or d == 0:
        return False
    if a == c or b == d:
        return False
    if a ^ b ^ c ^ d == 0:
        return False
    mul = field.mul
    if mul(a, b) == mul(c, d):
        return False
    if mul(b, c) == mul(a, d):
        return False
    a2, b2, c2, d2 = mul(a, a), mul(b, b), mul(c, c), mul(d, d)
    if b2 == mul(a, c) or c2 == mul(b, d):
        return False
    if a2 == mul(b, d) or mul(a, c) == d2:
        return False
    if mul(a2, b) ^ mul(b, c2) ^ mul(b2, d) ^ mul(d2, d) == 0:
        return False
    if mul(a2, a) ^ mul(b2, c) ^ mul(a, c2) ^ mul(c, d2) == 0:
        return False
    if mul(a, b2) ^ mul(a2, c) ^ mul(c2, c) ^ mul(a, d2) == 0:
        return False
    if mul(b2, b) ^ mul(a2, d) ^ mul(c2, d) ^ mul(b, d2) == 0:
        return False
    return True


def hadamard_mds_distinctness(first_row: Sequence[int]) -> bool:
    """Pairwise-distinct first row: necessary for a Hadamard matrix to be MDS."""
    n = len(first_row)
    if n == 0 or n & (n - 1):
        raise ValueError(f"Hadamard first row length must be a power of two, got {n}")
    return len(set(first_row)) == n
