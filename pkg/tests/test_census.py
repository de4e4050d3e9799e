import itertools
import math
import os

import numpy as np
import pytest

from mdscensus import (
    BudgetExceededError,
    CENSUS_CLASSES,
    build_circulant,
    build_hadamard,
    census_2x2,
    census_circulant4_mds,
    census_circulant4_nmds_1zero,
    census_hadamard4_involutory_mds,
    census_hadamard4_mds,
    census_hadamard4_nmds_1zero,
    census_involutory4_mds,
    emit_tables,
    enumerate_involutory4_mds,
    fast_hadamard4_mds,
    formula_count,
    is_involutory,
    is_mds,
    is_nmds,
    make_field,
    run_census,
    upper_bound_involutory4,
)
from mdscensus import kernels
from mdscensus.census import resolve_jobs

# (hadamard MDS, involutory, non-involutory, circulant MDS) for r = 3..8
COUNT_TABLE = {
    3: (168, 24, 144, 0),
    4: (22680, 1512, 21168, 16560),
    5: (651000, 21000, 630000, 580320),
    6: (13358520, 212040, 13146480, 12685680),
    7: (240094008, 1890504, 238203504, 234269280),
    8: (4064187960, 15937992, 4048249968, 4015735920),
}


def test_formula_count_table():
    for r, (had, inv, noninv, _) in COUNT_TABLE.items():
        assert formula_count("hadamard4_mds", r) == had
        assert formula_count("hadamard4_inv_mds", r) == inv
        assert formula_count("hadamard4_noninv_mds", r) == noninv
    with pytest.raises(ValueError):
        formula_count("circulant4_mds", 4)
    with pytest.raises(ValueError):
        formula_count("inv_mds_4x4", 3)


def test_upper_bound():
    assert upper_bound_involutory4(3) == 1975680
    assert upper_bound_involutory4(2) == 0
    # big-integer cross-check with a second evaluation order
    q = 16
    factors = [q, q - 1, q - 1, q - 1, q - 2, q - 2, q - 3, q - 4]
    alt = 1
    for v in reversed(factors):
        alt *= v
    assert upper_bound_involutory4(4) == alt == math.prod(factors)
    with pytest.raises(ValueError):
        upper_bound_involutory4(1)


def test_hadamard_census_matches_scalar_fast_count(f3):
    # the brute engine counts exactly the tuples accepted by the scalar fast test
    expect = sum(fast_hadamard4_mds(f3, *t) for t in itertools.product(range(8), repeat=4))
    assert census_hadamard4_mds(f3).count == expect == 168


def test_hadamard_census_small_fields(f2, f3):
    assert census_hadamard4_mds(f2).count == 0  # needs 4 distinct nonzero elements
    res = census_hadamard4_involutory_mds(f3)
    assert res.count == 24
    assert res.extra["non_involutory"] == 144
    assert res.extra["hadamard_mds_total"] == 168


def test_noninv_class_dispatch(f3):
    res = run_census("hadamard4_noninv_mds", f3, "brute")
    assert res.count == 144
    assert res.class_id == "hadamard4_noninv_mds"
    res = run_census("hadamard4_noninv_mds", f3, "formula")
    assert res.count == 144


def test_circulant_census(f3, f4):
    assert census_circulant4_mds(f3).count == 0
    assert census_circulant4_mds(f4).count == 16560
    with pytest.raises(ValueError):
        census_circulant4_mds(f4, method="formula")


def test_2x2_census_and_typo_regression():
    for r in (2, 3, 4):
        f = make_field(r)
        q = f.order
        res = census_2x2(f)
        assert res.count == (q - 1) ** 3 * (q - 2) == formula_count("mds_2x2", r)
        # the (q-3) variant sometimes quoted does not match brute force
        assert res.count != (q - 1) ** 3 * (q - 3)
        inv = census_2x2(f, involutory_only=True)
        assert inv.count == (q - 1) * (q - 2)
        assert inv.extra["mds_total"] == res.count
    assert census_2x2(make_field(3)).count == 2058
    assert census_2x2(make_field(3), involutory_only=True).count == 42
    assert census_2x2(make_field(2)).count == 54


def test_2x2_brute_matches_direct_scan(f2):
    # independent scan straight from the definitions
    q = f2.order
    total = inv = 0
    for t in itertools.product(range(q), repeat=4):
        m_rows = [[t[0], t[1]], [t[2], t[3]]]
        from mdscensus import matrix_from_rows

        m = matrix_from_rows(f2, m_rows)
        if is_mds(m).holds:
            total += 1
            if is_involutory(m):
                inv += 1
    assert census_2x2(f2).count == total
    assert census_2x2(f2, involutory_only=True).count == inv


def test_involutory4_census(f3, f2, inv4_gf8):
    res = census_involutory4_mds(f3)
    assert res.count == 16464
    assert res.extra["candidates"] == 1975680
    assert res.extra["candidates"] <= res.extra["upper_bound"] == 1975680
    assert census_involutory4_mds(f2).count == 0  # regression constant for GF(4)
    assert len(inv4_gf8) == 16464
    for m in inv4_gf8[::1000]:
        assert is_involutory(m)
        assert is_mds(m).holds


def test_nmds_one_zero_censuses():
    for r in (2, 3, 4):
        f = make_field(r)
        q = f.order
        assert census_hadamard4_nmds_1zero(f).count == 4 * (q - 1) * (q * q - 3 * q + 3)
        assert census_hadamard4_nmds_1zero(f, involutory_only=True).count == 4 * (
            q * q - 3 * q + 3
        )
        assert census_circulant4_nmds_1zero(f).count == 4 * (q - 1) ** 3
    assert census_circulant4_nmds_1zero(make_field(4), singular_only=True).count == 840
    with pytest.raises(ValueError):
        census_circulant4_nmds_1zero(make_field(3), singular_only=True, method="formula")


def test_nmds_census_matches_scalar_is_nmds(f2):
    # engine semantics = is_nmds over one-zero first rows, checked directly
    q = f2.order
    had = circ = had_inv = circ_sing = 0
    from mdscensus import det

    for pos in range(4):
        for vals in itertools.product(range(1, q), repeat=3):
            row = list(vals)
            row.insert(pos, 0)
            hm = build_hadamard(f2, row)
            cm = build_circulant(f2, row)
            if is_nmds(hm).holds:
                had += 1
                if row[0] ^ row[1] ^ row[2] ^ row[3] == 1:
                    had_inv += 1
            if is_nmds(cm).holds:
                circ += 1
                if det(cm) == 0:
                    circ_sing += 1
    assert census_hadamard4_nmds_1zero(f2).count == had
    assert census_hadamard4_nmds_1zero(f2, involutory_only=True).count == had_inv
    assert census_circulant4_nmds_1zero(f2).count == circ
    assert census_circulant4_nmds_1zero(f2, singular_only=True).count == circ_sing


def test_method_both_agreement(f3, f4):
    for f in (f3, f4):
        for cls in (
            "hadamard4_mds",
            "hadamard4_inv_mds",
            "mds_2x2",
            "inv_mds_2x2",
            "hadamard4_nmds_1zero",
            "hadamard4_inv_nmds_1zero",
            "circulant4_nmds_1zero",
        ):
            assert run_census(cls, f, "brute").count == run_census(cls, f, "formula").count


def test_budget_policy(f3):
    f7 = make_field(7)
    with pytest.raises(BudgetExceededError, match="allow-long"):
        census_hadamard4_mds(f7)
    with pytest.raises(BudgetExceededError):
        census_hadamard4_mds(make_field(9), allow_long=True)  # beyond 2^32 outright
    f4 = make_field(4)
    with pytest.raises(BudgetExceededError):
        census_involutory4_mds(f4)  # needs allow_long
    with pytest.raises(BudgetExceededError):
        census_involutory4_mds(make_field(5), allow_long=True)  # beyond 2^32, always refused


def test_resolve_jobs(monkeypatch):
    monkeypatch.delenv("MDSCENSUS_JOBS", raising=False)
    assert resolve_jobs(None) == 1
    assert resolve_jobs(3) == 3
    assert resolve_jobs(0) == (os.cpu_count() or 1)
    monkeypatch.setenv("MDSCENSUS_JOBS", "5")
    assert resolve_jobs(None) == 5
    with pytest.raises(ValueError):
        resolve_jobs(-1)


def test_worker_determinism(f3):
    base = census_hadamard4_mds(f3, jobs=1, partitions=1)
    for jobs, parts in ((1, 5), (2, 3), (0, 16)):
        res = census_hadamard4_mds(f3, jobs=jobs, partitions=parts)
        assert res.count == base.count == 168
        assert res.partitions == min(parts, 7)
    for jobs in (1, 2):
        assert census_circulant4_mds(make_field(4), jobs=jobs).count == 16560


def test_polynomial_invariance_small():
    # all counts identical under a different irreducible polynomial
    for r, polys in ((3, (0xB, 0xD)), (4, (0x13, 0x19, 0x1F))):
        results = []
        for poly in polys:
            f = make_field(r, poly)
            results.append(
                (
                    census_hadamard4_mds(f).count,
                    census_hadamard4_involutory_mds(f).count,
                    census_circulant4_mds(f).count,
                    census_2x2(f).count,
                    census_2x2(f, involutory_only=True).count,
                    census_hadamard4_nmds_1zero(f).count,
                    census_circulant4_nmds_1zero(f).count,
                    census_circulant4_nmds_1zero(f, singular_only=True).count,
                )
            )
        assert len(set(results)) == 1


def test_scaling_bijection_rowsum_classes():
    # Hadamard-MDS tuples split evenly across nonzero first-row sums
    for r in (2, 3, 4, 5):
        f = make_field(r)
        t = kernels.tables(f)
        q = f.order
        c, d = kernels.pair_grid(q)
        counts = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            for b in range(1, q):
                if a == b:
                    continue
                ok = kernels.hadamard4_fast_mask(t, a, b, c, d)
                s = (a ^ b) ^ c ^ d
                counts += np.bincount(s[ok], minlength=q)
        assert counts[0] == 0
        assert len(set(counts[1:].tolist())) == 1
        assert counts[1] * (q - 1) == formula_count("hadamard4_mds", r)


def test_monotone_sanity():
    for r in (3, 4, 5):
        f = make_field(r)
        res = census_hadamard4_involutory_mds(f)
        assert res.count * (f.order - 1) == res.extra["hadamard_mds_total"]


def test_inv4_within_bound(f3):
    res = census_involutory4_mds(f3)
    assert res.count <= upper_bound_involutory4(3)


def test_census_result_serialization(f3):
    res = census_hadamard4_mds(f3, method="formula")
    obj = res.to_json()
    assert obj["class_id"] == "hadamard4_mds"
    assert obj["r"] == 3
    assert obj["poly"] == "0xB"
    assert obj["method"] == "formula"
    assert obj["count"] == 168
    assert "elapsed_ms" in obj


def test_run_census_unknown(f3):
    with pytest.raises(ValueError, match="unknown census class"):
        run_census("octonion_mds", f3)
    assert len(CENSUS_CLASSES) == 11


def test_emit_tables(f3):
    doc = emit_tables(1, 3, 8, fmt="markdown")
    assert not doc.any_skipped
    for r, (had, inv, noninv, _) in COUNT_TABLE.items():
        row = next(x for x in doc.rows if x["r"] == r)
        assert row["cells"]["hadamard_mds"]["count"] == had
        assert row["cells"]["involutory_hadamard_mds"]["count"] == inv
        assert row["cells"]["non_involutory_hadamard_mds"]["count"] == noninv
    assert "| GF(2^3) | 168 (formula) |" in doc.text

    doc2 = emit_tables(2, 3, 5, fmt="csv")
    lines = doc2.text.splitlines()
    assert lines[0] == "r,hadamard_mds,involutory_hadamard_mds,non_involutory_hadamard_mds,circulant_mds"
    assert lines[1] == "3,168,24,144,0"
    assert lines[3] == "5,651000,21000,630000,580320"

    doc3 = emit_tables(2, 8, 8, fmt="json")
    assert doc3.any_skipped
    assert doc3.rows[0]["cells"]["circulant_mds"]["method"] == "skipped"

    with pytest.raises(ValueError):
        emit_tables(3, 3, 4)
    with pytest.raises(ValueError):
        emit_tables(1, 2, 4)
    with pytest.raises(ValueError):
        emit_tables(1, 5, 4)
