import itertools
import random

import numpy as np

from mdscensus import (
    MatrixGF,
    build_circulant,
    build_hadamard,
    fast_circulant4_mds,
    fast_hadamard4_mds,
    is_involutory,
    is_mds,
    is_nmds,
    is_orthogonal,
    make_field,
)
from mdscensus import kernels


def batch_to_matrix(f, ent, i):
    return MatrixGF(f, tuple(tuple(int(ent[a][b][i]) for b in range(4)) for a in range(4)))


def test_kernel_masks_match_scalar_exhaustive():
    for r in (2, 3):
        f = make_field(r)
        t = kernels.tables(f)
        q = f.order
        rows = list(itertools.product(range(q), repeat=4))
        arrs = [np.array([row[k] for row in rows], dtype=np.uint8) for k in range(4)]
        for build, entries in (
            (build_hadamard, kernels.hadamard_entries),
            (build_circulant, kernels.circulant_entries),
        ):
            mn = kernels.compute_minors4(t, entries(arrs))
            mds = kernels.mds_mask(mn)
            nmds = kernels.nmds_mask(mn, mds)
            for idx, row in enumerate(rows):
                m = build(f, row)
                assert bool(mds[idx]) == is_mds(m).holds
                assert bool(nmds[idx]) == is_nmds(m).holds


def test_kernel_masks_match_scalar_random_generic():
    rng = np.random.default_rng(101)
    for r in (4, 5, 8):
        f = make_field(r)
        t = kernels.tables(f)
        n = 1500
        ent = [[rng.integers(0, f.order, n, dtype=np.uint8) for _ in range(4)] for _ in range(4)]
        mn = kernels.compute_minors4(t, ent)
        mds = kernels.mds_mask(mn)
        nmds = kernels.nmds_mask(mn, mds)
        inv = kernels.involutory_mask(t, ent)
        orth = kernels.orthogonal_mask(t, ent)
        for i in range(n):
            m = batch_to_matrix(f, ent, i)
            assert bool(mds[i]) == is_mds(m).holds
            assert bool(nmds[i]) == is_nmds(m).holds
            assert bool(inv[i]) == is_involutory(m)
            assert bool(orth[i]) == is_orthogonal(m)


def test_fast_masks_match_scalar_fast():
    f = make_field(3)
    t = kernels.tables(f)
    c, d = kernels.pair_grid(8)
    for a in range(8):
        for b in range(8):
            hm = kernels.hadamard4_fast_mask(t, a, b, c, d)
            cm = kernels.circulant4_fast_mask(t, a, b, c, d)
            hm = np.broadcast_to(hm, c.shape)
            cm = np.broadcast_to(cm, c.shape)
            for i in range(0, 64, 7):
                assert bool(hm[i]) == fast_hadamard4_mds(f, a, b, int(c[i]), int(d[i]))
                assert bool(cm[i]) == fast_circulant4_mds(f, a, b, int(c[i]), int(d[i]))


def test_fast_masks_equal_generic_minors_exhaustive_r4():
    f = make_field(4)
    t = kernels.tables(f)
    q = f.order
    idx = np.arange(q**4, dtype=np.int64)
    a = (idx >> 12).astype(np.uint8)
    b = ((idx >> 8) & 15).astype(np.uint8)
    c = ((idx >> 4) & 15).astype(np.uint8)
    d = (idx & 15).astype(np.uint8)
    had_fast = kernels.hadamard4_fast_mask(t, a, b, c, d)
    had_generic = kernels.mds_mask(kernels.compute_minors4(t, kernels.hadamard_entries([a, b, c, d])))
    assert np.array_equal(had_fast, had_generic)
    circ_fast = kernels.circulant4_fast_mask(t, a, b, c, d)
    circ_generic = kernels.mds_mask(
        kernels.compute_minors4(t, kernels.circulant_entries([a, b, c, d]))
    )
    assert np.array_equal(circ_fast, circ_generic)


def test_kernel_det_equals_scalar_det():
    from mdscensus import det, matrix_from_rows

    rng = np.random.default_rng(3)
    f = make_field(5)
    t = kernels.tables(f)
    n = 4000
    ent = [[rng.integers(0, 32, n, dtype=np.uint8) for _ in range(4)] for _ in range(4)]
    kd = kernels.compute_minors4(t, ent).det
    rs = random.Random(3)
    for _ in range(200):
        i = rs.randrange(n)
        m = matrix_from_rows(f, [[int(ent[a][b][i]) for b in range(4)] for a in range(4)])
        assert det(m) == int(kd[i])
