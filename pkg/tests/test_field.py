import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mdscensus import GF2r, ReduciblePolynomialError, default_poly, make_field
from mdscensus.field import irreducible_factor_degree


# independent oracle: schoolbook carry-less multiply + long division
def clmul(a, b):
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def polymod(a, m):
    while a.bit_length() >= m.bit_length():
        a ^= m << (a.bit_length() - m.bit_length())
    return a


def test_default_poly_table():
    assert default_poly(2) == 0x7
    assert default_poly(3) == 0xB
    assert default_poly(4) == 0x13  # x^4 + x + 1
    assert default_poly(8) == 0x11B  # the AES polynomial
    for r in range(2, 17):
        p = default_poly(r)
        assert p.bit_length() - 1 == r
        assert irreducible_factor_degree(p) is None
        # nothing smaller of the same degree is irreducible
        for cand in range((1 << r) + 1, p, 2):
            assert irreducible_factor_degree(cand) is not None


def test_make_field_validation():
    f = make_field(4)
    assert f.poly == 0x13
    assert make_field(4, 0x13).poly == 0x13
    with pytest.raises(ReduciblePolynomialError, match="degree 1"):
        make_field(4, 0x18)  # x^4 + x^3 = x^3 (x + 1)
    with pytest.raises(ValueError, match="degree"):
        make_field(4, 0x2B)  # degree 5 encoding for r = 4
    with pytest.raises(ValueError):
        make_field(1)
    with pytest.raises(ValueError):
        make_field(17)


def test_same_parameters_same_arithmetic():
    a = GF2r(5)
    b = GF2r(5)
    assert a == b
    assert a.generator == b.generator
    assert a._exp == b._exp
    assert a._log == b._log


def test_add(f4):
    assert f4.add(0x5, 0x3) == 0x6
    assert f4.add(0x9, 0x0) == 0x9
    assert f4.add(0x9, 0x9) == 0x0


def test_mul_against_longdivision_oracle(f4):
    assert f4.mul(0x2, 0x8) == polymod(clmul(0x2, 0x8), 0x13) == 0x3
    assert f4.mul(0x7, 0x1) == 0x7
    assert f4.mul(0x7, 0x0) == 0x0
    for x in f4.elements():
        for y in f4.elements():
            assert f4.mul(x, y) == polymod(clmul(x, y), 0x13)


def test_inv(f4):
    assert f4.inv(0x1) == 0x1
    # exhaustive-search oracle
    expect = [y for y in f4.nonzero_elements() if f4.mul(0x2, y) == 1]
    assert expect == [0x9]
    assert f4.inv(0x2) == 0x9
    with pytest.raises(ZeroDivisionError):
        f4.inv(0)
    for x in f4.nonzero_elements():
        assert f4.mul(x, f4.inv(x)) == 1


def test_sqrt(f4):
    assert f4.sqrt(0x0) == 0x0
    assert f4.sqrt(0x1) == 0x1
    y = f4.sqrt(0x3)
    assert f4.mul(y, y) == 0x3
    # uniqueness by exhaustive scan
    assert [z for z in f4.elements() if f4.mul(z, z) == 0x3] == [y] == [0x4]


def test_cube_roots_of_unity(f2, f3, f5):
    assert f5.cube_roots_of_unity() == {0x1}
    assert f2.cube_roots_of_unity() == {0x1, 0x2, 0x3}
    assert f3.cube_roots_of_unity() == {0x1}


def test_cube_root_cardinality_by_parity():
    for r in range(2, 13):
        roots = make_field(r).cube_roots_of_unity()
        assert len(roots) == (3 if r % 2 == 0 else 1)


def test_pow(f4):
    assert f4.pow(0x7, 1) == 0x7
    assert f4.pow(0x0, 0) == 1  # documented convention
    assert f4.pow(0x0, 3) == 0
    # repeated-mul oracle
    acc = 1
    for _ in range(4):
        acc = f4.mul(acc, 0x2)
    assert f4.pow(0x2, 4) == acc == 0x3
    for x in f4.nonzero_elements():
        assert f4.pow(x, f4.order - 1) == 1
    with pytest.raises(ValueError):
        f4.pow(0x2, -1)


def test_generator_spans_group():
    for r in (2, 3, 5, 8):
        f = make_field(r)
        assert sorted(f._exp[: f.order - 1]) == list(f.nonzero_elements())


def test_field_axioms_exhaustive_small():
    # all pairs/triples via table broadcasting, r <= 6
    for r in range(2, 7):
        f = make_field(r)
        q = f.order
        m = f.mul_table.astype(np.int64)
        assert (m == m.T).all()  # commutativity
        left = m[m[:, :, None], np.arange(q)[None, None, :]]
        right = m[np.arange(q)[:, None, None], m[None, :, :]]
        assert (left == right).all()  # associativity
        x = np.arange(q)
        ypz = x[:, None] ^ x[None, :]
        dist = m[x[:, None, None], ypz[None, :, :]]
        parts = m[x[:, None, None], x[None, :, None]] ^ m[x[:, None, None], x[None, None, :]]
        assert (dist == parts).all()  # distributivity
        for row in m[1:, 1:]:
            assert sorted(row) == list(range(1, q))  # unique products/inverses


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=0, max_value=(1 << 12) - 1), st.integers(min_value=0, max_value=(1 << 12) - 1))
def test_axioms_random_large_field(x, y):
    f = _F12
    assert f.mul(x, y) == f.mul(y, x)
    assert f.add(x, x) == 0
    if x and y:
        assert f.inv(f.mul(x, y)) == f.mul(f.inv(x), f.inv(y))


_F12 = make_field(12)


def test_axioms_random_r16():
    f = make_field(16)
    rng = random.Random(0)
    for _ in range(500):
        x, y, z = (rng.randrange(f.order) for _ in range(3))
        assert f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z))
        assert f.mul(x, y ^ z) == f.mul(x, y) ^ f.mul(x, z)
        if x:
            assert f.mul(x, f.inv(x)) == 1


def test_frobenius_is_bijective():
    for r in range(2, 9):
        f = make_field(r)
        assert sorted(f.mul(x, x) for x in f.elements()) == list(f.elements())


def test_inv_of_product_exhaustive():
    for r in range(2, 7):
        f = make_field(r)
        for x in f.nonzero_elements():
            for y in f.nonzero_elements():
                assert f.inv(f.mul(x, y)) == f.mul(f.inv(x), f.inv(y))


def test_numpy_tables_match_scalar(f3):
    m = f3.mul_table
    for x in f3.elements():
        for y in f3.elements():
            assert int(m[x, y]) == f3.mul(x, y)
    for x in f3.nonzero_elements():
        assert int(f3.inv_table[x]) == f3.inv(x)
        assert int(f3.sqr_table[x]) == f3.mul(x, x)
    assert int(f3.inv_table[0]) == 0  # sentinel


def test_numpy_tables_degree_limit():
    f = make_field(9)
    with pytest.raises(ValueError, match="r <= 8"):
        f.mul_table
