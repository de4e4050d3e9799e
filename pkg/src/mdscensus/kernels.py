"""numpy kernels for batch evaluation of 4x4 matrix predicates.

The census engines decide MDS/NMDS for millions of structured 4x4
matrices; these kernels evaluate whole batches through field lookup
tables (r <= 8).  A matrix batch is a 4x4 nest E where entry E[i][j]
is a uint8 array (or a plain int broadcast against the arrays); entry
(i, j) of candidate k is E[i][j][k].

Every mask computed here mirrors a scalar routine in
mdscensus.predicates -- mds_mask the all-minors definition, nmds_mask
the rectangular-rank characterisation, the fast masks the factored
first-row tests -- and the test suite pins the equivalences down both
exhaustively (small fields) and on large random samples.
"""

from __future__ import annotations

import functools
import itertools
from typing import NamedTuple

import numpy as np

from .field import GF2r

PAIRS = tuple(itertools.combinations(range(4), 2))
TRIPLES = tuple(itertools.combinations(range(4), 3))
_R123 = (1, 2, 3)


class Tables(NamedTuple):
    mul: np.ndarray  # (q, q)
    inv: np.ndarray  # (q,), [0] = 0 sentinel
    sqr: np.ndarray  # (q,)
    q: int
    r: int


@functools.lru_cache(maxsize=None)
def tables(field: GF2r) -> Tables:
    return Tables(field.mul_table, field.inv_table, field.sqr_table, field.order, field.r)


def pair_grid(q: int) -> tuple[np.ndarray, np.ndarray]:
    """Row-major enumeration of the full q x q square as two flat arrays."""
    c = np.repeat(np.arange(q, dtype=np.uint8), q)
    d = np.tile(np.arange(q, dtype=np.uint8), q)
    return c, d


def nonzero_pair_grid(q: int) -> tuple[np.ndarray, np.ndarray]:
    """Row-major enumeration of (nonzero x nonzero) as two flat arrays."""
    nz = np.arange(1, q, dtype=np.uint8)
    v = np.repeat(nz, q - 1)
    w = np.tile(nz, q - 1)
    return v, w


def hadamard_entries(first_row):
    """E[i][j] = first_row[i ^ j]."""
    return [[first_row[i ^ j] for j in range(4)] for i in range(4)]


def circulant_entries(first_row):
    """E[i][j] = first_row[(j - i) mod 4]."""
    return [[first_row[(j - i) % 4] for j in range(4)] for i in range(4)]


def type1_entries(a, a1, a2):
    """4x4 bordered-circulant pattern [[a,1,1,1],[1,1,a1,a2],[1,a2,1,a1],[1,a1,a2,1]]."""
    return [[a, 1, 1, 1], [1, 1, a1, a2], [1, a2, 1, a1], [1, a1, a2, 1]]


class Minors4(NamedTuple):
    """All minors of a 4x4 batch: entries, 2x2 and 3x3 by index sets, and det."""

    entries: list
    m2: dict
    m3: dict
    det: np.ndarray


def compute_minors4(t: Tables, entries) -> Minors4:
    mul = t.mul
    e = entries
    m2 = {}
    for ri, rj in PAIRS:
        for ck, cl in PAIRS:
            m2[ri, rj, ck, cl] = mul[e[ri][ck], e[rj][cl]] ^ mul[e[ri][cl], e[rj][ck]]
    m3 = {}
    for rows in TRIPLES:
        i, j, k = rows
        for cols in TRIPLES:
            ca, cb, cc = cols
            m3[rows, cols] = (
                mul[e[i][ca], m2[j, k, cb, cc]]
                ^ mul[e[i][cb], m2[j, k, ca, cc]]
                ^ mul[e[i][cc], m2[j, k, ca, cb]]
            )
    det = (
        mul[e[0][0], m3[_R123, (1, 2, 3)]]
        ^ mul[e[0][1], m3[_R123, (0, 2, 3)]]
        ^ mul[e[0][2], m3[_R123, (0, 1, 3)]]
        ^ mul[e[0][3], m3[_R123, (0, 1, 2)]]
    )
    return Minors4(e, m2, m3, det)


def mds_mask(mn: Minors4):
    """Every square submatrix nonsingular (the generic MDS definition)."""
    ok = np.True_
    for row in mn.entries:
        for v in row:
            ok = ok & np.not_equal(v, 0)
    for v in mn.m2.values():
        ok = ok & np.not_equal(v, 0)
    for v in mn.m3.values():
        ok = ok & np.not_equal(v, 0)
    return ok & np.not_equal(mn.det, 0)


def nmds_mask(mn: Minors4, mds=None):
    """Non-MDS and every g x (g+1) / (g+1) x g submatrix of full rank g."""
    e = mn.entries
    z = [[np.equal(e[i][j], 0) for j in range(4)] for i in range(4)]
    ok = np.True_
    # g = 1: at most one zero per row and per column
    for i in range(4):
        for k, l in PAIRS:
            ok = ok & ~(z[i][k] & z[i][l])
            ok = ok & ~(z[k][i] & z[l][i])
    # g = 2: every 2x3 / 3x2 contains a nonsingular 2x2
    for rp in PAIRS:
        for ca, cb, cc in TRIPLES:
            ok = ok & (
                np.not_equal(mn.m2[rp + (ca, cb)], 0)
                | np.not_equal(mn.m2[rp + (ca, cc)], 0)
                | np.not_equal(mn.m2[rp + (cb, cc)], 0)
            )
    for cp in PAIRS:
        for i, j, k in TRIPLES:
            ok = ok & (
                np.not_equal(mn.m2[(i, j) + cp], 0)
                | np.not_equal(mn.m2[(i, k) + cp], 0)
                | np.not_equal(mn.m2[(j, k) + cp], 0)
            )
    # g = 3: every 3x4 / 4x3 contains a nonsingular 3x3
    for rt in TRIPLES:
        acc = np.False_
        for ct in TRIPLES:
            acc = acc | np.not_equal(mn.m3[rt, ct], 0)
        ok = ok & acc
    for ct in TRIPLES:
        acc = np.False_
        for rt in TRIPLES:
            acc = acc | np.not_equal(mn.m3[rt, ct], 0)
        ok = ok & acc
    m = mds_mask(mn) if mds is None else mds
    return ok & ~m


def involutory_mask(t: Tables, entries):
    """M @ M == I, evaluated entrywise."""
    mul = t.mul
    e = entries
    ok = np.True_
    for i in range(4):
        for j in range(4):
            s = (
                mul[e[i][0], e[0][j]]
                ^ mul[e[i][1], e[1][j]]
                ^ mul[e[i][2], e[2][j]]
                ^ mul[e[i][3], e[3][j]]
            )
            ok = ok & np.equal(s, 1 if i == j else 0)
    return ok


def orthogonal_mask(t: Tables, entries):
    """M @ M^T == I, evaluated entrywise (upper triangle suffices by symmetry)."""
    mul = t.mul
    e = entries
    ok = np.True_
    for i in range(4):
        for j in range(i, 4):
            s = (
                mul[e[i][0], e[j][0]]
                ^ mul[e[i][1], e[j][1]]
                ^ mul[e[i][2], e[j][2]]
                ^ mul[e[i][3], e[j][3]]
            )
            ok = ok & np.equal(s, 1 if i == j else 0)
    return ok


def hadamard4_fast_mask(t: Tables, a, b, c, d):
    """Vector form of predicates.fast_hadamard4_mds; operands may be ints or arrays."""
    mul = t.mul
    ok = (a != 0) & (b != 0) & (a != b)
    ok = ok & (c != 0) & (d != 0)
    ok = ok & (c != a) & (c != b) & (d != a) & (d != b) & (c != d)
    ok = ok & ((a ^ b ^ c ^ d) != 0)
    ok = ok & ((mul[b, c] ^ mul[a, d]) != 0)
    ok = ok & ((mul[a, c] ^ mul[b, d]) != 0)
    ok = ok & np.not_equal(mul[a, b] ^ mul[c, d], 0)
    return ok


def circulant4_fast_mask(t: Tables, a, b, c, d):
    """Vector form of predicates.fast_circulant4_mds; operands may be ints or arrays."""
    mul, sqr = t.mul, t.sqr
    a2 = sqr[a]
    b2 = sqr[b]
    c2 = sqr[c]
    d2 = sqr[d]
    ok = (a != 0) & (b != 0)
    ok = ok & (c != 0) & (d != 0)
    ok = ok & (c != a) & (d != b)
    ok = ok & ((a ^ b ^ c ^ d) != 0)
    ok = ok & np.not_equal(mul[a, b] ^ mul[c, d], 0)
    ok = ok & ((mul[b, c] ^ mul[a, d]) != 0)
    ok = ok & ((b2 ^ mul[a, c]) != 0)
    ok = ok & ((c2 ^ mul[b, d]) != 0)
    ok = ok & ((a2 ^ mul[b, d]) != 0)
    ok = ok & ((mul[a, c] ^ d2) != 0)
    ok = ok & ((mul[a2, b] ^ mul[b, c2] ^ mul[b2, d] ^ mul[d2, d]) != 0)
    ok = ok & ((mul[a2, a] ^ mul[b2, c] ^ mul[a, c2] ^ mul[c, d2]) != 0)
    ok = ok & ((mul[a, b2] ^ mul[a2, c] ^ mul[c2, c] ^ mul[a, d2]) != 0)
    ok = ok & ((mul[b2, b] ^ mul[a2, d] ^ mul[c2, d] ^ mul[b, d2]) != 0)
    return ok
