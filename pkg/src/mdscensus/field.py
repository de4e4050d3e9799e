"""Exact arithmetic in the binary fields GF(2^r) for 2 <= r <= 16.

Field elements are plain ints in [0, 2^r); bit k holds the coefficient
of x^k, so addition is xor and 0/1 are the additive and multiplicative
identities.  A GF2r instance fixes the reduction polynomial, finds a
generator of the multiplicative group and precomputes exp/log tables,
making mul/inv/pow O(1) lookups.  Instances are immutable after
construction and safe to share across threads and worker processes;
all operations are pure functions of their inputs.

Reduction polynomials are encoded as ints with bit r set, e.g. 0x13
for x^4 + x + 1 and 0x11B for the AES field.  When no polynomial is
given, the lexicographically smallest irreducible one of degree r is
used (the table is printed in the README); every count produced by the
census engines is invariant under this choice, and the test suite
checks that invariance.
"""

from __future__ import annotations

import functools

import numpy as np

__all__ = [
    "GF2r",
    "ReduciblePolynomialError",
    "default_poly",
    "irreducible_factor_degree",
    "make_field",
]

MIN_DEGREE = 2
MAX_DEGREE = 16
# Dense numpy lookup tables (q x q) are only built for small fields;
# they back the vectorised census kernels, which never go past r = 8.
TABLE_DEGREE_LIMIT = 8


class ReduciblePolynomialError(ValueError):
    """The requested reduction polynomial has a nontrivial factor over GF(2)."""


def _degree(p: int) -> int:
    return p.bit_length() - 1


def _poly_mod(a: int, m: int) -> int:
    """Remainder of carry-less division of a by m over GF(2)."""
    dm = _degree(m)
    while _degree(a) >= dm:
        a ^= m << (_degree(a) - dm)
    return a


def irreducible_factor_degree(poly: int) -> int | None:
    """Degree of a smallest nontrivial factor of poly, or None if irreducible.

    Trial division by every polynomial of degree 1..deg(poly)//2.
    """
    half = _degree(poly) // 2
    for d in range(2, 1 << (half + 1)):
        if _poly_mod(poly, d) == 0:
            return _degree(d)
    return None


@functools.lru_cache(maxsize=None)
def default_poly(r: int) -> int:
    """Lexicographically smallest irreducible polynomial of degree r."""
    if not MIN_DEGREE <= r <= MAX_DEGREE:
        raise ValueError(f"extension degree must be in [{MIN_DEGREE}, {MAX_DEGREE}], got {r}")
    # The constant term must be 1, otherwise x divides; skip even encodings.
    for poly in range((1 << r) | 1, 1 << (r + 1), 2):
        if irreducible_factor_degree(poly) is None:
            return poly
    raise AssertionError(f"no irreducible polynomial of degree {r}")  # pragma: no cover


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


class GF2r:
    """The field GF(2^r) under a fixed irreducible reduction polynomial.

    Two instances built from the same (r, poly) produce identical
    arithmetic for every operand pair: the generator search and table
    construction are deterministic.
    """

    def __init__(self, r: int, poly: int | None = None):
        if not MIN_DEGREE <= r <= MAX_DEGREE:
            raise ValueError(f"extension degree must be in [{MIN_DEGREE}, {MAX_DEGREE}], got {r}")
        if poly is None:
            poly = default_poly(r)
        if _degree(poly) != r:
            raise ValueError(
                f"polynomial 0x{poly:X} has degree {_degree(poly)}, expected {r}"
                " (bit r must be the leading 1)"
            )
        factor = irreducible_factor_degree(poly)
        if factor is not None:
            raise ReduciblePolynomialError(
                f"polynomial 0x{poly:X} is reducible over GF(2): it has a factor of degree {factor}"
            )
        self.r = r
        self.poly = poly
        self.order = 1 << r
        self.generator = self._find_generator()
        self._build_tables()

    # -- construction helpers (no tables available yet) ------------------

    def _mul_raw(self, a: int, b: int) -> int:
        p = 0
        top = self.order
        poly = self.poly
        while b:
            if b & 1:
                p ^= a
            a <<= 1
            if a & top:
                a ^= poly
            b >>= 1
        return p

    def _pow_raw(self, a: int, e: int) -> int:
        acc = 1
        while e:
            if e & 1:
                acc = self._mul_raw(acc, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return acc

    def _find_generator(self) -> int:
        n = self.order - 1
        primes = _prime_factors(n)
        for g in range(2, self.order):
            if all(self._pow_raw(g, n // p) != 1 for p in primes):
                return g
        raise AssertionError("multiplicative group has no generator")  # pragma: no cover

    def _build_tables(self) -> None:
        q = self.order
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        v = 1
        for i in range(q - 1):
            exp[i] = v
            exp[i + q - 1] = v
            log[v] = i
            v = self._mul_raw(v, self.generator)
        self._exp = exp
        self._log = log

    # -- element operations ----------------------------------------------

    def add(self, x: int, y: int) -> int:
        """Sum of two elements: xor of coefficient vectors."""
        return x ^ y

    def mul(self, x: int, y: int) -> int:
        """Product modulo the reduction polynomial."""
        if x == 0 or y == 0:
            return 0
        return self._exp[self._log[x] + self._log[y]]

    def inv(self, x: int) -> int:
        """Multiplicative inverse of a nonzero element."""
        if x == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self._exp[self.order - 1 - self._log[x]]

    def pow(self, x: int, e: int) -> int:
        """x raised to a non-negative integer power; pow(0, 0) == 1 by convention."""
        if e < 0:
            raise ValueError("exponent must be non-negative")
        if x == 0:
            return 1 if e == 0 else 0
        return self._exp[(self._log[x] * e) % (self.order - 1)]

    def sqrt(self, x: int) -> int:
        """The unique y with y*y == x (squaring is a bijection in characteristic 2)."""
        return self.pow(x, 1 << (self.r - 1))

    def cube_roots_of_unity(self) -> set[int]:
        """All x with x**3 == 1: three of them when 3 | 2^r - 1 (r even), else {1}."""
        return {x for x in range(1, self.order) if self.pow(x, 3) == 1}

    def elements(self) -> range:
        return range(self.order)

    def nonzero_elements(self) -> range:
        return range(1, self.order)

    # -- numpy lookup tables for the batch kernels ------------------------

    def _require_tables(self) -> None:
        if self.r > TABLE_DEGREE_LIMIT:
            raise ValueError(
                f"dense numpy tables are limited to r <= {TABLE_DEGREE_LIMIT}, got r={self.r}"
            )

    @functools.cached_property
    def mul_table(self) -> np.ndarray:
        """(q, q) uint8 multiplication table; read-only."""
        self._require_tables()
        q = self.order
        exp = np.asarray(self._exp[: q - 1], dtype=np.uint8)
        logs = np.zeros(q, dtype=np.int64)
        logs[1:] = [self._log[x] for x in range(1, q)]
        t = exp[(logs[:, None] + logs[None, :]) % (q - 1)]
        t[0, :] = 0
        t[:, 0] = 0
        t.setflags(write=False)
        return t

    @functools.cached_property
    def inv_table(self) -> np.ndarray:
        """(q,) uint8 inverse table with the convention table[0] == 0; read-only."""
        self._require_tables()
        t = np.zeros(self.order, dtype=np.uint8)
        for x in range(1, self.order):
            t[x] = self.inv(x)
        t.setflags(write=False)
        return t

    @functools.cached_property
    def sqr_table(self) -> np.ndarray:
        """(q,) uint8 squaring table; read-only."""
        self._require_tables()
        q = self.order
        t = self.mul_table[np.arange(q), np.arange(q)].copy()
        t.setflags(write=False)
        return t

    # -- plumbing ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, GF2r) and (self.r, self.poly) == (other.r, other.poly)

    def __hash__(self) -> int:
        return hash((self.r, self.poly))

    def __repr__(self) -> str:
        return f"GF2r(r={self.r}, poly=0x{self.poly:X})"


def make_field(r: int, poly: int | None = None) -> GF2r:
    """Construct GF(2^r); poly defaults to the documented per-degree polynomial."""
    return GF2r(r, poly)
