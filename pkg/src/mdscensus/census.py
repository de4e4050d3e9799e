"""Exhaustive enumeration engines and closed-form count evaluators.

Each census counts ordered first-row tuples (equivalently matrices;
the structured families are in bijection with their parameters) of one
matrix class over one field:

  hadamard4_mds              4x4 Hadamard MDS
  hadamard4_inv_mds          ... involutory subset (first-row sum 1)
  hadamard4_noninv_mds       ... complement
  circulant4_mds             4x4 circulant MDS (no closed formula)
  mds_2x2 / inv_mds_2x2      2x2 MDS and involutory MDS
  inv_mds_4x4                all 4x4 involutory MDS via the block
                             structure enumeration
  hadamard4_nmds_1zero       4x4 Hadamard NMDS, exactly one zero entry
                             per row (and the involutory variant)
  circulant4_nmds_1zero      circulant analogue (and the singular
                             subset)

Brute-force engines partition the outermost loop variable into
contiguous ranges; workers count independently over immutable field
tables and results merge by integer addition, so counts are identical
for any worker count or partition granularity.  The default budget
admits up to 2^24 candidates; allow_long raises that to 2^32 (the 4x4
first-row space at r = 8); anything larger is refused.

Closed formulas (q = 2^r):
  hadamard4_mds              (q-1)(q-2)(q-4)(q-7)
  hadamard4_inv_mds          (q-2)(q-4)(q-7)
  hadamard4_noninv_mds       (q-2)^2 (q-4)(q-7)
  mds_2x2                    (q-1)^3 (q-2)
  inv_mds_2x2                (q-1)(q-2)
  hadamard4_nmds_1zero       4(q-1)(q^2 - 3q + 3)
  hadamard4_inv_nmds_1zero   4(q^2 - 3q + 3)
  circulant4_nmds_1zero      4(q-1)^3

The 2x2 MDS count is sometimes quoted as (q-1)^3 (q-3); brute force
confirms (q-1)^3 (q-2) (see the README note and the regression test),
and only that form is evaluated here.
"""

from __future__ import annotations

import dataclasses
import functools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence

import numpy as np

from . import kernels
from .field import GF2r, make_field
from .matrix import MatrixGF

__all__ = [
    "BudgetExceededError",
    "CENSUS_CLASSES",
    "CensusResult",
    "census_2x2",
    "census_circulant4_mds",
    "census_circulant4_nmds_1zero",
    "census_hadamard4_involutory_mds",
    "census_hadamard4_mds",
    "census_hadamard4_nmds_1zero",
    "census_involutory4_mds",
    "emit_tables",
    "enumerate_involutory4_mds",
    "formula_count",
    "resolve_jobs",
    "run_census",
    "upper_bound_involutory4",
]

DEFAULT_BUDGET = 1 << 24
LONG_BUDGET = 1 << 32

CENSUS_CLASSES = (
    "hadamard4_mds",
    "hadamard4_inv_mds",
    "hadamard4_noninv_mds",
    "circulant4_mds",
    "mds_2x2",
    "inv_mds_2x2",
    "inv_mds_4x4",
    "hadamard4_nmds_1zero",
    "hadamard4_inv_nmds_1zero",
    "circulant4_nmds_1zero",
    "circulant4_nmds_1zero_singular",
)


class BudgetExceededError(RuntimeError):
    """A brute-force request exceeds the configured enumeration budget."""


@dataclasses.dataclass(frozen=True)
class CensusResult:
    """One enumeration campaign: class, field, method, exact count."""

    class_id: str
    r: int
    poly: int
    method: str
    count: int
    elapsed_ms: float
    partitions: int
    extra: dict = dataclasses.field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "class_id": self.class_id,
            "r": self.r,
            "poly": f"0x{self.poly:X}",
            "method": self.method,
            "count": self.count,
            "elapsed_ms": self.elapsed_ms,
            "partitions": self.partitions,
        }
        if self.extra:
            out["extra"] = dict(self.extra)
        return out


# -- closed formulas ---------------------------------------------------------


def upper_bound_involutory4(r: int) -> int:
    """Upper bound on the number of 4x4 involutory MDS matrices over GF(2^r)."""
    if r < 2:
        raise ValueError("r must be >= 2")
    q = 1 << r
    return q * (q - 1) ** 3 * (q - 2) ** 2 * (q - 3) * (q - 4)


def formula_count(class_id: str, r: int) -> int:
    """Evaluate the closed-form count for a class, exact integer arithmetic."""
    q = 1 << r
    if class_id == "hadamard4_mds":
        return (q - 1) * (q - 2) * (q - 4) * (q - 7)
    if class_id == "hadamard4_inv_mds":
        return (q - 2) * (q - 4) * (q - 7)
    if class_id == "hadamard4_noninv_mds":
        return (q - 2) ** 2 * (q - 4) * (q - 7)
    if class_id == "mds_2x2":
        return (q - 1) ** 3 * (q - 2)
    if class_id == "inv_mds_2x2":
        return (q - 1) * (q - 2)
    if class_id == "hadamard4_nmds_1zero":
        return 4 * (q - 1) * (q * q - 3 * q + 3)
    if class_id == "hadamard4_inv_nmds_1zero":
        return 4 * (q * q - 3 * q + 3)
    if class_id == "circulant4_nmds_1zero":
        return 4 * (q - 1) ** 3
    raise ValueError(f"no closed formula for class {class_id!r}")


# -- parallel partition plumbing ---------------------------------------------


def resolve_jobs(jobs: int | None) -> int:
    """None -> MDSCENSUS_JOBS env or 1; 0 -> cpu count; negative is an error."""
    if jobs is None:
        env = os.environ.get("MDSCENSUS_JOBS", "")
        jobs = int(env) if env else 1
    if jobs < 0:
        raise ValueError("jobs must be >= 0")
    if jobs == 0:
        return os.cpu_count() or 1
    return jobs


@functools.lru_cache(maxsize=None)
def _worker_field(r: int, poly: int) -> GF2r:
    return make_field(r, poly)


def _census_worker(task):
    kind, r, poly, values = task
    field = _worker_field(r, poly)
    return _COUNTERS[kind](field, values)


def _chunks(values: Sequence[int], n: int) -> list[tuple[int, ...]]:
    n = max(1, min(n, len(values)))
    size, rem = divmod(len(values), n)
    out = []
    start = 0
    for i in range(n):
        stop = start + size + (1 if i < rem else 0)
        out.append(tuple(values[start:stop]))
        start = stop
    return out


def _run_partitions(kind: str, field: GF2r, values: Sequence[int], jobs, partitions):
    jobs = resolve_jobs(jobs)
    nparts = partitions if partitions else (1 if jobs <= 1 else jobs * 2)
    parts = _chunks(values, nparts)
    tasks = [(kind, field.r, field.poly, chunk) for chunk in parts]
    if jobs <= 1 or len(tasks) == 1:
        outs = [_census_worker(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
            outs = list(pool.map(_census_worker, tasks))
    agg = tuple(int(sum(col)) for col in zip(*outs))
    return agg, len(parts)


def _check_budget(candidates: int, allow_long: bool, what: str) -> None:
    if candidates <= DEFAULT_BUDGET:
        return
    if candidates <= LONG_BUDGET:
        if allow_long:
            return
        raise BudgetExceededError(
            f"{what}: {candidates} candidates exceed the default budget 2^24;"
            " rerun with allow_long (--allow-long)"
        )
    raise BudgetExceededError(
        f"{what}: {candidates} candidates exceed the supported brute-force scale 2^32"
    )


# -- per-partition counters (run inside workers) -------------------------------


def _count_hadamard4(field: GF2r, a_values) -> tuple[int, int]:
    """(MDS tuples, involutory MDS tuples) with first entry in a_values."""
    t = kernels.tables(field)
    q = field.order
    c, d = kernels.pair_grid(q)
    total = 0
    inv = 0
    for a in a_values:
        if a == 0:
            continue
        for b in range(1, q):
            if b == a:
                continue
            ok = kernels.hadamard4_fast_mask(t, a, b, c, d)
            total += int(np.count_nonzero(ok))
            inv += int(np.count_nonzero(ok & (d == (a ^ b ^ 1 ^ c))))
    return total, inv


def _count_circulant4(field: GF2r, a_values) -> tuple[int]:
    t = kernels.tables(field)
    q = field.order
    c, d = kernels.pair_grid(q)
    total = 0
    for a in a_values:
        if a == 0:
            continue
        for b in range(1, q):
            ok = kernels.circulant4_fast_mask(t, a, b, c, d)
            total += int(np.count_nonzero(ok))
    return (total,)


def _count_mds2(field: GF2r, a_values) -> tuple[int, int]:
    """(MDS, involutory MDS) counts of [[a, b], [c, d]] with a in a_values."""
    t = kernels.tables(field)
    q = field.order
    c, d = kernels.pair_grid(q)
    mul, sqr = t.mul, t.sqr
    total = 0
    inv = 0
    for a in a_values:
        if a == 0:
            continue
        for b in range(1, q):
            ok = (c != 0) & (d != 0) & ((mul[a, d] ^ mul[b, c]) != 0)
            total += int(np.count_nonzero(ok))
            trace = a ^ d
            ok = (
                ok
                & (mul[b, trace] == 0)
                & (mul[c, trace] == 0)
                & ((sqr[a] ^ mul[b, c]) == 1)
                & ((sqr[d] ^ mul[b, c]) == 1)
            )
            inv += int(np.count_nonzero(ok))
    return total, inv


def _one_zero_rows(q: int, zero_pos: int, u: int):
    """First rows with exactly one zero (at zero_pos), leading nonzero entry u."""
    v, w = kernels.nonzero_pair_grid(q)
    row = []
    rest = [u, v, w]
    for p in range(4):
        row.append(0 if p == zero_pos else rest.pop(0))
    return row, v, w


def _count_had_nmds1z(field: GF2r, u_values) -> tuple[int, int]:
    """(NMDS, involutory NMDS) counts of one-zero 4x4 Hadamard first rows."""
    t = kernels.tables(field)
    q = field.order
    total = 0
    inv = 0
    for u in u_values:
        if u == 0:
            continue
        for p in range(4):
            row, v, w = _one_zero_rows(q, p, u)
            mn = kernels.compute_minors4(t, kernels.hadamard_entries(row))
            nm = kernels.nmds_mask(mn)
            total += int(np.count_nonzero(nm))
            inv += int(np.count_nonzero(nm & ((u ^ v ^ w) == 1)))
    return total, inv


def _count_circ_nmds1z(field: GF2r, u_values) -> tuple[int, int]:
    """(NMDS, singular NMDS) counts of one-zero 4x4 circulant first rows."""
    t = kernels.tables(field)
    q = field.order
    total = 0
    singular = 0
    for u in u_values:
        if u == 0:
            continue
        for p in range(4):
            row, _, _ = _one_zero_rows(q, p, u)
            mn = kernels.compute_minors4(t, kernels.circulant_entries(row))
            nm = kernels.nmds_mask(mn)
            total += int(np.count_nonzero(nm))
            singular += int(np.count_nonzero(nm & (mn.det == 0)))
    return total, singular


# -- 4x4 involutory MDS via the block structure --------------------------------
#
# Every 2n x 2n involutory MDS matrix [[A1, A2], [A3, A4]] satisfies
# A2 = (I + A1^2) A3^-1 and A4 = A3 A1 A3^-1, with A1 a non-involutory
# MDS block and each row of A3 independent of each row of A1.  For
# n = 2 the candidate set built from exactly those constraints has
# upper_bound_involutory4(r) members and contains all 4x4 involutory
# MDS matrices, so filtering it by the MDS test yields the exact count.


@functools.lru_cache(maxsize=None)
def _mds2_noninv_tuples(field: GF2r):
    """All 2x2 MDS, non-involutory (a, b, c, d) in lexicographic order."""
    t = kernels.tables(field)
    q = field.order
    idx = np.arange(q**4, dtype=np.int64)
    a = (idx >> (3 * field.r)).astype(np.uint8)
    b = ((idx >> (2 * field.r)) & (q - 1)).astype(np.uint8)
    c = ((idx >> field.r) & (q - 1)).astype(np.uint8)
    d = (idx & (q - 1)).astype(np.uint8)
    mul, sqr = t.mul, t.sqr
    mds = (a != 0) & (b != 0) & (c != 0) & (d != 0) & ((mul[a, d] ^ mul[b, c]) != 0)
    trace = a ^ d
    inv = (
        (mul[b, trace] == 0)
        & (mul[c, trace] == 0)
        & ((sqr[a] ^ mul[b, c]) == 1)
        & ((sqr[d] ^ mul[b, c]) == 1)
    )
    keep = mds & ~inv
    return a[keep], b[keep], c[keep], d[keep]


_INV4_BATCH = 1 << 21


def _inv4_scan(field: GF2r, idx_values, collect: bool = False):
    """Count (and optionally collect) 4x4 involutory MDS matrices.

    idx_values selects positions in the lexicographic list of A1
    candidates; returns (mds_count, candidates, collected_rows).
    """
    t = kernels.tables(field)
    mul, invt, sqr = t.mul, t.inv, t.sqr
    q = field.order
    a1s = _mds2_noninv_tuples(field)
    u0, v0 = kernels.nonzero_pair_grid(q)

    count = 0
    candidates = 0
    collected: list[tuple[int, ...]] = []

    batch: list[tuple[np.ndarray, ...]] = []
    batch_scalars: list[tuple[int, ...]] = []
    batch_sizes: list[int] = []
    batch_total = 0

    def flush():
        nonlocal count, batch, batch_scalars, batch_sizes, batch_total
        if not batch:
            return
        e3 = np.concatenate([b[0] for b in batch])
        f3 = np.concatenate([b[1] for b in batch])
        g3 = np.concatenate([b[2] for b in batch])
        h3 = np.concatenate([b[3] for b in batch])
        sizes = np.asarray(batch_sizes)
        scal = [
            np.repeat(np.asarray([s[k] for s in batch_scalars], dtype=np.uint8), sizes)
            for k in range(8)
        ]
        a1, b1, c1, d1, k00, k01, k10, k11 = scal
        # A3^-1 = det^-1 * [[h, f], [g, e]]
        idet = invt[mul[e3, h3] ^ mul[f3, g3]]
        i00 = mul[idet, h3]
        i01 = mul[idet, f3]
        i10 = mul[idet, g3]
        i11 = mul[idet, e3]
        # A2 = (I + A1^2) A3^-1
        a2_00 = mul[k00, i00] ^ mul[k01, i10]
        a2_01 = mul[k00, i01] ^ mul[k01, i11]
        a2_10 = mul[k10, i00] ^ mul[k11, i10]
        a2_11 = mul[k10, i01] ^ mul[k11, i11]
        # A4 = A3 A1 A3^-1
        t00 = mul[e3, a1] ^ mul[f3, c1]
        t01 = mul[e3, b1] ^ mul[f3, d1]
        t10 = mul[g3, a1] ^ mul[h3, c1]
        t11 = mul[g3, b1] ^ mul[h3, d1]
        a4_00 = mul[t00, i00] ^ mul[t01, i10]
        a4_01 = mul[t00, i01] ^ mul[t01, i11]
        a4_10 = mul[t10, i00] ^ mul[t11, i10]
        a4_11 = mul[t10, i01] ^ mul[t11, i11]
        entries = [
            [a1, b1, a2_00, a2_01],
            [c1, d1, a2_10, a2_11],
            [e3, f3, a4_00, a4_01],
            [g3, h3, a4_10, a4_11],
        ]
        mn = kernels.compute_minors4(t, entries)
        ok = kernels.mds_mask(mn) & kernels.involutory_mask(t, entries)
        count += int(np.count_nonzero(ok))
        if collect:
            for pos in np.flatnonzero(ok):
                collected.append(tuple(int(entries[i][j][pos]) for i in range(4) for j in range(4)))
        batch, batch_scalars, batch_sizes, batch_total = [], [], [], 0

    for idx in idx_values:
        a1 = int(a1s[0][idx])
        b1 = int(a1s[1][idx])
        c1 = int(a1s[2][idx])
        d1 = int(a1s[3][idx])
        # rows (u, v) with nonzero entries, independent of both rows of A1
        fm = ((mul[u0, b1] ^ mul[v0, a1]) != 0) & ((mul[u0, d1] ^ mul[v0, c1]) != 0)
        fu, fv = u0[fm], v0[fm]
        nf = fu.shape[0]
        e3 = np.repeat(fu, nf)
        f3 = np.repeat(fv, nf)
        g3 = np.tile(fu, nf)
        h3 = np.tile(fv, nf)
        pm = (mul[e3, h3] ^ mul[f3, g3]) != 0
        e3, f3, g3, h3 = e3[pm], f3[pm], g3[pm], h3[pm]
        npairs = e3.shape[0]
        candidates += npairs
        tr = a1 ^ d1
        k00 = sqr[a1] ^ mul[b1, c1] ^ 1
        k11 = sqr[d1] ^ mul[b1, c1] ^ 1
        k01 = mul[b1, tr]
        k10 = mul[c1, tr]
        batch.append((e3, f3, g3, h3))
        batch_scalars.append((a1, b1, c1, d1, int(k00), int(k01), int(k10), int(k11)))
        batch_sizes.append(npairs)
        batch_total += npairs
        if batch_total >= _INV4_BATCH:
            flush()
    flush()
    return count, candidates, collected


def _count_inv4(field: GF2r, idx_values) -> tuple[int, int]:
    count, candidates, _ = _inv4_scan(field, idx_values)
    return count, candidates


_COUNTERS: dict[str, Callable] = {
    "hadamard4": _count_hadamard4,
    "circulant4": _count_circulant4,
    "mds2": _count_mds2,
    "had_nmds1z": _count_had_nmds1z,
    "circ_nmds1z": _count_circ_nmds1z,
    "inv4": _count_inv4,
}


# -- census entry points --------------------------------------------------------


def _validate_method(method: str, allowed: tuple[str, ...], class_id: str) -> None:
    if method not in allowed:
        raise ValueError(f"method {method!r} not supported for {class_id}; allowed: {allowed}")


def _result(class_id, field, method, count, start, partitions, extra=None) -> CensusResult:
    elapsed = (time.perf_counter() - start) * 1000.0
    return CensusResult(
        class_id, field.r, field.poly, method, count, elapsed, partitions, extra or {}
    )


def census_hadamard4_mds(
    field: GF2r,
    method: str = "brute",
    jobs: int | None = None,
    partitions: int | None = None,
    allow_long: bool = False,
) -> CensusResult:
    """Count 4x4 Hadamard MDS matrices."""
    _validate_method(method, ("brute", "formula"), "hadamard4_mds")
    start = time.perf_counter()
    if method == "formula":
        return _result("hadamard4_mds", field, method, formula_count("hadamard4_mds", field.r), start, 0)
    _check_budget(field.order**4, allow_long, "hadamard4_mds brute")
    (total, _inv), parts = _run_partitions(
        "hadamard4", field, range(1, field.order), jobs, partitions
    )
    return _result("hadamard4_mds", field, method, total, start, parts)


def census_hadamard4_involutory_mds(
    field: GF2r,
    method: str = "brute",
    jobs: int | None = None,
    partitions: int | None = None,
    allow_long: bool = False,
) -> CensusResult:
    """Count involutory (first-row sum 1) 4x4 Hadamard MDS matrices.

    extra carries the non-involutory complement and the MDS total.
    """
    _validate_method(method, ("brute", "formula"), "hadamard4_inv_mds")
    start = time.perf_counter()
    if method == "formula":
        inv = formula_count("hadamard4_inv_mds", field.r)
        extra = {
            "non_involutory": formula_count("hadamard4_noninv_mds", field.r),
            "hadamard_mds_total": formula_count("hadamard4_mds", field.r),
        }
        return _result("hadamard4_inv_mds", field, method, inv, start, 0, extra)
    _check_budget(field.order**4, allow_long, "hadamard4_inv_mds brute")
    (total, inv), parts = _run_partitions(
        "hadamard4", field, range(1, field.order), jobs, partitions
    )
    extra = {"non_involutory": total - inv, "hadamard_mds_total": total}
    return _result("hadamard4_inv_mds", field, method, inv, start, parts, extra)


def census_circulant4_mds(
    field: GF2r,
    method: str = "brute",
    jobs: int | None = None,
    partitions: int | None = None,
    allow_long: bool = False,
) -> CensusResult:
    """Count 4x4 circulant MDS matrices (brute force only)."""
    _validate_method(method, ("brute",), "circulant4_mds")
    start = time.perf_counter()
    _check_budget(field.order**4, allow_long, "circulant4_mds brute")
    (total,), parts = _run_partitions(
        "circulant4", field, range(1, field.order), jobs, partitions
    )
    return _result("circulant4_mds", field, method, total, start, parts)


def census_2x2(
    field: GF2r,
    involutory_only: bool = False,
    method: str = "brute",
    jobs: int | None = None,
    partitions: int | None = None,
    allow_long: bool = False,
) -> CensusResult:
    """Count 2x2 MDS matrices (all entries nonzero, nonzero determinant)."""
    class_id = "inv_mds_2x2" if involutory_only else "mds_2x2"
    _validate_method(method, ("brute", "formula"), class_id)
    start = time.perf_counter()
    if method == "formula":
        return _result(class_id, field, method, formula_count(class_id, field.r), start, 0)
    _check_budget(field.order**4, allow_long, f"{class_id} brute")
    (total, inv), parts = _run_partitions("mds2", field, range(1, field.order), jobs, partitions)
    count, other = (inv, total) if involutory_only else (total, inv)
    extra = {"mds_total": total, "involutory": inv}
    return _result(class_id, field, method, count, start, parts, extra)


def census_involutory4_mds(
    field: GF2r,
    jobs: int | None = None,
    partitions: int | None = None,
    allow_long: bool = False,
) -> CensusResult:
    """Count all 4x4 involutory MDS matrices via the block-structure enumeration."""
    start = time.perf_counter()
    bound = upper_bound_involutory4(field.r)
    _check_budget(bound, allow_long, "inv_mds_4x4 structure enumeration")
    n_a1 = len(_mds2_noninv_tuples(field)[0])
    (count, candidates), parts = _run_partitions("inv4", field, range(n_a1), jobs, partitions)
    extra = {"candidates": candidates, "upper_bound": bound}
    return _result("inv_mds_4x4", field, "brute", count, start, parts, extra)


def enumerate_involutory4_mds(field: GF2r, allow_long: bool = False) -> list[MatrixGF]:
    """Materialise every 4x4 involutory MDS matrix over the field (single process)."""
    bound = upper_bound_involutory4(field.r)
    _check_budget(bound, allow_long, "inv_mds_4x4 enumeration")
    n_a1 = len(_mds2_noninv_tuples(field)[0])
    _, _, rows = _inv4_scan(field, range(n_a1), collect=True)
    out = []
    for flat in rows:
        out.append(MatrixGF(field, tuple(tuple(flat[4 * i : 4 * i + 4]) for i in range(4))))
    return out


def census_hadamard4_nmds_1zero(
    field: GF2r,
    involutory_only: bool = False,
    method: str = "brute",
    jobs: int | None = None,
    partitions: int | None = None,
    allow_long: bool = False,
) -> CensusResult:
    """Count 4x4 Hadamard NMDS matrices whose first row has exactly one zero."""
    class_id = "hadamard4_inv_nmds_1zero" if involutory_only else "hadamard4_nmds_1zero"
    _validate_method(method, ("brute", "formula"), class_id)
    start = time.perf_counter()
    if method == "formula":
        return _result(class_id, field, method, formula_count(class_id, field.r), start, 0)
    _check_budget(4 * (field.order - 1) ** 3, allow_long, f"{class_id} brute")
    (total, inv), parts = _run_partitions(
        "had_nmds1z", field, range(1, field.order), jobs, partitions
    )
    count = inv if involutory_only else total
    extra = {"nmds_total": total, "involutory": inv}
    return _result(class_id, field, method, count, start, parts, extra)


def census_circulant4_nmds_1zero(
    field: GF2r,
    singular_only: bool = False,
    method: str = "brute",
    jobs: int | None = None,
    partitions: int | None = None,
    allow_long: bool = False,
) -> CensusResult:
    """Count 4x4 circulant NMDS matrices whose first row has exactly one zero."""
    class_id = "circulant4_nmds_1zero_singular" if singular_only else "circulant4_nmds_1zero"
    if singular_only:
        _validate_method(method, ("brute",), class_id)
    else:
        _validate_method(method, ("brute", "formula"), class_id)
    start = time.perf_counter()
    if method == "formula":
        return _result(class_id, field, method, formula_count(class_id, field.r), start, 0)
    _check_budget(4 * (field.order - 1) ** 3, allow_long, f"{class_id} brute")
    (total, singular), parts = _run_partitions(
        "circ_nmds1z", field, range(1, field.order), jobs, partitions
    )
    count = singular if singular_only else total
    extra = {"nmds_total": total, "singular": singular}
    return _result(class_id, field, method, count, start, parts, extra)


def run_census(
    class_id: str,
    field: GF2r,
    method: str = "brute",
    jobs: int | None = None,
    partitions: int | None = None,
    allow_long: bool = False,
) -> CensusResult:
    """Dispatch a census by class id (the CLI entry point)."""
    kw = dict(jobs=jobs, partitions=partitions, allow_long=allow_long)
    if class_id == "hadamard4_mds":
        return census_hadamard4_mds(field, method, **kw)
    if class_id == "hadamard4_inv_mds":
        return census_hadamard4_involutory_mds(field, method, **kw)
    if class_id == "hadamard4_noninv_mds":
        base = census_hadamard4_involutory_mds(field, method, **kw)
        count = base.extra["non_involutory"]
        extra = {"involutory": base.count, "hadamard_mds_total": base.extra["hadamard_mds_total"]}
        return CensusResult(
            "hadamard4_noninv_mds", base.r, base.poly, method, count,
            base.elapsed_ms, base.partitions, extra,
        )
    if class_id == "circulant4_mds":
        return census_circulant4_mds(field, method, **kw)
    if class_id == "mds_2x2":
        return census_2x2(field, involutory_only=False, method=method, **kw)
    if class_id == "inv_mds_2x2":
        return census_2x2(field, involutory_only=True, method=method, **kw)
    if class_id == "inv_mds_4x4":
        if method != "brute":
            raise ValueError("inv_mds_4x4 census is brute-force only")
        return census_involutory4_mds(field, **kw)
    if class_id == "hadamard4_nmds_1zero":
        return census_hadamard4_nmds_1zero(field, involutory_only=False, method=method, **kw)
    if class_id == "hadamard4_inv_nmds_1zero":
        return census_hadamard4_nmds_1zero(field, involutory_only=True, method=method, **kw)
    if class_id == "circulant4_nmds_1zero":
        return census_circulant4_nmds_1zero(field, singular_only=False, method=method, **kw)
    if class_id == "circulant4_nmds_1zero_singular":
        return census_circulant4_nmds_1zero(field, singular_only=True, method=method, **kw)
    raise ValueError(f"unknown census class {class_id!r}; known: {CENSUS_CLASSES}")


# -- count tables ---------------------------------------------------------------

TABLE1_COLUMNS = ("hadamard_mds", "involutory_hadamard_mds", "non_involutory_hadamard_mds")
TABLE2_COLUMNS = TABLE1_COLUMNS + ("circulant_mds",)
_COLUMN_CLASS = {
    "hadamard_mds": "hadamard4_mds",
    "involutory_hadamard_mds": "hadamard4_inv_mds",
    "non_involutory_hadamard_mds": "hadamard4_noninv_mds",
}


@dataclasses.dataclass(frozen=True)
class TableDocument:
    table: int
    columns: tuple[str, ...]
    rows: list[dict]
    text: str
    any_skipped: bool


def emit_tables(
    table: int,
    r_min: int,
    r_max: int,
    fmt: str = "markdown",
    jobs: int | None = None,
    allow_long: bool = False,
    poly_by_r: dict[int, int] | None = None,
) -> TableDocument:
    """Render the 4x4 Hadamard/circulant MDS count tables for a degree range.

    Hadamard columns use the closed formulas; the circulant column of
    table 2 is brute-forced and emitted as "skipped" when it exceeds
    the enumeration budget.  Cells carry their method annotation in the
    markdown/text/json formats; csv stays purely numeric.
    """
    if table not in (1, 2):
        raise ValueError("table must be 1 or 2")
    if not 3 <= r_min <= r_max <= 8:
        raise ValueError("need 3 <= r_min <= r_max <= 8")
    columns = TABLE1_COLUMNS if table == 1 else TABLE2_COLUMNS
    rows = []
    any_skipped = False
    for r in range(r_min, r_max + 1):
        poly = (poly_by_r or {}).get(r)
        field = make_field(r, poly)
        cells = {}
        for col in TABLE1_COLUMNS:
            cells[col] = {"count": formula_count(_COLUMN_CLASS[col], r), "method": "formula"}
        if table == 2:
            try:
                res = census_circulant4_mds(field, jobs=jobs, allow_long=allow_long)
                cells["circulant_mds"] = {"count": res.count, "method": "brute"}
            except BudgetExceededError:
                cells["circulant_mds"] = {"count": None, "method": "skipped"}
                any_skipped = True
        rows.append({"r": r, "poly": f"0x{field.poly:X}", "cells": cells})
    text = _render_table(columns, rows, fmt)
    return TableDocument(table, columns, rows, text, any_skipped)


def _cell_text(cell: dict, annotate: bool) -> str:
    if cell["method"] == "skipped":
        return "skipped"
    if annotate:
        return f"{cell['count']} ({cell['method']})"
    return str(cell["count"])


def _render_table(columns, rows, fmt: str) -> str:
    import json as _json

    if fmt == "json":
        return _json.dumps({"columns": list(columns), "rows": rows}, indent=2, sort_keys=True)
    if fmt == "csv":
        lines = ["r," + ",".join(columns)]
        for row in rows:
            lines.append(
                str(row["r"]) + "," + ",".join(_cell_text(row["cells"][c], False) for c in columns)
            )
        return "\n".join(lines)
    if fmt in ("markdown", "md"):
        head = "| field | " + " | ".join(columns) + " |"
        sep = "|" + "---|" * (len(columns) + 1)
        lines = [head, sep]
        for row in rows:
            cells = " | ".join(_cell_text(row["cells"][c], True) for c in columns)
            lines.append(f"| GF(2^{row['r']}) | {cells} |")
        return "\n".join(lines)
    if fmt == "text":
        lines = []
        for row in rows:
            cells = ", ".join(f"{c}={_cell_text(row['cells'][c], True)}" for c in columns)
            lines.append(f"r={row['r']} poly={row['poly']}: {cells}")
        return "\n".join(lines)
    raise ValueError(f"unknown table format {fmt!r}")
