"""Dense matrices over GF(2^r) and exact linear algebra.

A MatrixGF is an immutable, row-major grid of field elements tied to a
GF2r instance.  Builders cover the structured families that the census
engines enumerate: circulant, finite-field Hadamard (entry (i, j) =
first_row[i ^ j]), bordered Type-I and 2x2-block Type-II circulant-like
matrices, and diagonals.  Elimination-based det/rank/inverse pivot on
the first nonzero entry in column order, so results (and the witnesses
derived from them) are reproducible; in characteristic 2 row swaps do
not change the determinant.

Matrices serialize to JSON as
    {"r": 4, "poly": "0x13", "rows": [["0x1", "0x2"], ...]}
with a structured shorthand
    {"r": .., "poly": .., "kind": "hadamard"|"circulant"|"diagonal"|
     "type1"|"type2", "row": [...], "a": "0x.." (type1 only)}.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Sequence

from .field import GF2r, make_field

__all__ = [
    "MatrixGF",
    "SingularMatrixError",
    "build_circulant",
    "build_diagonal",
    "build_hadamard",
    "build_structured",
    "build_type1",
    "build_type2",
    "det",
    "identity",
    "inverse",
    "mat_add",
    "matmul",
    "matrix_from_json",
    "matrix_from_rows",
    "matrix_to_json",
    "rank",
    "submatrix",
    "transpose",
]


class SingularMatrixError(ValueError):
    """A matrix that must be invertible is singular."""


@dataclasses.dataclass(frozen=True)
class MatrixGF:
    """Immutable matrix over one GF2r; rows is a tuple of row tuples."""

    field: GF2r
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(rows[0])
        q = self.field.order
        for row in rows:
            if len(row) != width:
                raise ValueError("all rows must have the same length")
            for v in row:
                if not 0 <= v < q:
                    raise ValueError(f"entry {v} is outside GF(2^{self.field.r})")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def square(self) -> bool:
        return self.nrows == self.ncols


def matrix_from_rows(field: GF2r, rows: Iterable[Iterable[int]]) -> MatrixGF:
    return MatrixGF(field, tuple(tuple(r) for r in rows))


def identity(field: GF2r, n: int) -> MatrixGF:
    return MatrixGF(field, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))


def build_diagonal(field: GF2r, entries: Sequence[int]) -> MatrixGF:
    n = len(entries)
    if n == 0:
        raise ValueError("diagonal needs at least one entry")
    return MatrixGF(
        field, tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n))
    )


def build_circulant(field: GF2r, first_row: Sequence[int]) -> MatrixGF:
    """Circulant matrix: row i is the right rotation of row i-1."""
    n = len(first_row)
    if n == 0:
        raise ValueError("circulant first row must be nonempty")
    return MatrixGF(field, tuple(tuple(first_row[(j - i) % n] for j in range(n)) for i in range(n)))


def build_hadamard(field: GF2r, first_row: Sequence[int]) -> MatrixGF:
    """Finite-field Hadamard matrix: entry (i, j) = first_row[i ^ j].

    Equivalent to the recursive [[U, V], [V, U]] block form; the result
    is symmetric and determined by its first row.
    """
    n = len(first_row)
    if n == 0 or n & (n - 1):
        raise ValueError(f"Hadamard first row length must be a power of two, got {n}")
    return MatrixGF(field, tuple(tuple(first_row[i ^ j] for j in range(n)) for i in range(n)))


def build_type1(field: GF2r, a: int, inner_row: Sequence[int], relaxed: bool = False) -> MatrixGF:
    """Bordered circulant: first row/column (a, 1, .., 1), trailing block Circ(inner_row).

    The classical definition restricts a and the inner entries to
    values outside {0, 1}; pass relaxed=True to lift that (the
    orthogonality scan needs a = 0).
    """
    inner = tuple(inner_row)
    if not inner:
        raise ValueError("inner circulant row must be nonempty")
    if inner[0] != 1:
        raise ValueError("inner circulant row must start with 1")
    if not relaxed:
        if a in (0, 1) or any(v in (0, 1) for v in inner[1:]):
            raise ValueError(
                "strict Type-I domain requires a and the inner entries outside {0, 1};"
                " pass relaxed=True to lift"
            )
    block = build_circulant(field, inner)
    n = len(inner) + 1
    rows = [(a,) + (1,) * (n - 1)]
    for i in range(n - 1):
        rows.append((1,) + block.rows[i])
    return MatrixGF(field, tuple(rows))


def build_type2(field: GF2r, inner_row: Sequence[int]) -> MatrixGF:
    """Block matrix [[A, A^-1], [A^3 + A, A]] with A = Circ(inner_row).

    Involutory by construction in characteristic 2; requires A
    nonsingular.
    """
    a_mat = build_circulant(field, inner_row)
    try:
        a_inv = inverse(a_mat)
    except SingularMatrixError:
        raise SingularMatrixError("Type-II generator circulant is singular") from None
    a_cub = matmul(a_mat, matmul(a_mat, a_mat))
    low = mat_add(a_cub, a_mat)
    return _block2x2(a_mat, a_inv, low, a_mat)


def _block2x2(tl: MatrixGF, tr: MatrixGF, bl: MatrixGF, br: MatrixGF) -> MatrixGF:
    rows = [tl.rows[i] + tr.rows[i] for i in range(tl.nrows)]
    rows += [bl.rows[i] + br.rows[i] for i in range(bl.nrows)]
    return MatrixGF(tl.field, tuple(rows))


STRUCTURED_KINDS = ("generic", "hadamard", "circulant", "diagonal", "type1", "type2")


def build_structured(
    field: GF2r,
    kind: str,
    row: Sequence[int] | None = None,
    a: int | None = None,
    rows: Iterable[Iterable[int]] | None = None,
    relaxed: bool = False,
) -> MatrixGF:
    """Dispatch on the structured-matrix shorthand kinds."""
    if kind == "generic":
        if rows is None:
            raise ValueError("generic matrices need explicit rows")
        return matrix_from_rows(field, rows)
    if row is None:
        raise ValueError(f"kind {kind!r} needs a first row")
    if kind == "hadamard":
        return build_hadamard(field, row)
    if kind == "circulant":
        return build_circulant(field, row)
    if kind == "diagonal":
        return build_diagonal(field, row)
    if kind == "type1":
        if a is None:
            raise ValueError("type1 needs the border element a")
        return build_type1(field, a, row, relaxed=relaxed)
    if kind == "type2":
        return build_type2(field, row)
    raise ValueError(f"unknown structured kind {kind!r}; expected one of {STRUCTURED_KINDS}")


# -- exact linear algebra --------------------------------------------------


def transpose(m: MatrixGF) -> MatrixGF:
    return MatrixGF(m.field, tuple(zip(*m.rows)))


def mat_add(a: MatrixGF, b: MatrixGF) -> MatrixGF:
    _check_same_field(a, b)
    if (a.nrows, a.ncols) != (b.nrows, b.ncols):
        raise ValueError("dimension mismatch in matrix addition")
    return MatrixGF(a.field, tuple(tuple(x ^ y for x, y in zip(ra, rb)) for ra, rb in zip(a.rows, b.rows)))


def matmul(a: MatrixGF, b: MatrixGF) -> MatrixGF:
    _check_same_field(a, b)
    if a.ncols != b.nrows:
        raise ValueError(f"dimension mismatch: {a.nrows}x{a.ncols} times {b.nrows}x{b.ncols}")
    f = a.field
    exp, log = f._exp, f._log
    bt = tuple(zip(*b.rows))
    out = []
    for ra in a.rows:
        row = []
        for cb in bt:
            acc = 0
            for x, y in zip(ra, cb):
                if x and y:
                    acc ^= exp[log[x] + log[y]]
            row.append(acc)
        out.append(tuple(row))
    return MatrixGF(f, tuple(out))


def det(m: MatrixGF) -> int:
    """Exact determinant by Gaussian elimination; 0 iff m is singular."""
    if not m.square:
        raise ValueError("determinant requires a square matrix")
    return _det_rows(m.field, [list(r) for r in m.rows])


def _det_rows(f: GF2r, a: list[list[int]]) -> int:
    """Eliminate in place and return the determinant of a square list-of-lists."""
    n = len(a)
    exp, log = f._exp, f._log
    q1 = f.order - 1
    d = 1
    for col in range(n):
        piv = None
        for i in range(col, n):
            if a[i][col]:
                piv = i
                break
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
        prow = a[col]
        pval = prow[col]
        d = exp[log[d] + log[pval]]
        ilog = q1 - log[pval]
        for i in range(col + 1, n):
            lead = a[i][col]
            if lead:
                flog = (log[lead] + ilog) % q1
                row = a[i]
                for j in range(col, n):
                    pj = prow[j]
                    if pj:
                        row[j] ^= exp[log[pj] + flog]
    return d


def rank(m: MatrixGF) -> int:
    """Row rank over the field by Gaussian elimination."""
    return _rank_rows(m.field, [list(r) for r in m.rows])


def _rank_rows(f: GF2r, a: list[list[int]]) -> int:
    nr = len(a)
    nc = len(a[0]) if a else 0
    exp, log = f._exp, f._log
    q1 = f.order - 1
    rk = 0
    for col in range(nc):
        piv = None
        for i in range(rk, nr):
            if a[i][col]:
                piv = i
                break
        if piv is None:
            continue
        if piv != rk:
            a[rk], a[piv] = a[piv], a[rk]
        prow = a[rk]
        ilog = q1 - log[prow[col]]
        for i in range(rk + 1, nr):
            lead = a[i][col]
            if lead:
                flog = (log[lead] + ilog) % q1
                row = a[i]
                for j in range(col, nc):
                    pj = prow[j]
                    if pj:
                        row[j] ^= exp[log[pj] + flog]
        rk += 1
        if rk == nr:
            break
    return rk


def inverse(m: MatrixGF) -> MatrixGF:
    """Inverse of a nonsingular square matrix."""
    if not m.square:
        raise ValueError("inverse requires a square matrix")
    f = m.field
    n = m.nrows
    exp, log = f._exp, f._log
    q1 = f.order - 1
    a = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(m.rows)]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if a[i][col]:
                piv = i
                break
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
        prow = a[col]
        ilog = q1 - log[prow[col]]
        for j in range(col, 2 * n):
            pj = prow[j]
            if pj:
                prow[j] = exp[(log[pj] + ilog) % q1]
        for i in range(n):
            if i == col:
                continue
            lead = a[i][col]
            if lead:
                flog = log[lead]
                row = a[i]
                for j in range(col, 2 * n):
                    pj = prow[j]
                    if pj:
                        row[j] ^= exp[log[pj] + flog]
    return MatrixGF(f, tuple(tuple(row[n:]) for row in a))


def submatrix(m: MatrixGF, rows: Sequence[int], cols: Sequence[int]) -> MatrixGF:
    """Select rows and columns; index sets must be strictly increasing."""
    rows = tuple(rows)
    cols = tuple(cols)
    if not rows or not cols:
        raise ValueError("index sets must be nonempty")
    for sel, bound, what in ((rows, m.nrows, "row"), (cols, m.ncols, "column")):
        prev = -1
        for v in sel:
            if not 0 <= v < bound:
                raise ValueError(f"{what} index {v} out of range")
            if v == prev:
                raise ValueError(f"duplicate {what} index {v}")
            if v < prev:
                raise ValueError(f"{what} indices must be strictly increasing")
            prev = v
    return MatrixGF(m.field, tuple(tuple(m.rows[i][j] for j in cols) for i in rows))


def _check_same_field(a: MatrixGF, b: MatrixGF) -> None:
    if a.field != b.field:
        raise ValueError("field mismatch between operands")


# -- JSON interchange -------------------------------------------------------


def _parse_element(v) -> int:
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        return int(v, 0)
    raise ValueError(f"cannot parse field element from {v!r}")


def matrix_to_json(m: MatrixGF) -> dict:
    return {
        "r": m.field.r,
        "poly": f"0x{m.field.poly:X}",
        "rows": [[f"0x{v:X}" for v in row] for row in m.rows],
    }


def matrix_from_json(obj: dict, field: GF2r | None = None) -> MatrixGF:
    """Build a matrix from the JSON format, explicit rows or structured shorthand."""
    if not isinstance(obj, dict):
        raise ValueError("matrix JSON must be an object")
    if field is None:
        if "r" not in obj:
            raise ValueError("matrix JSON needs 'r' (or an explicit field)")
        poly = _parse_element(obj["poly"]) if "poly" in obj else None
        field = make_field(int(obj["r"]), poly)
    kind = obj.get("kind", "generic")
    if kind == "generic":
        if "rows" not in obj:
            raise ValueError("matrix JSON needs 'rows' or a structured 'kind'")
        rows = [[_parse_element(v) for v in row] for row in obj["rows"]]
        return matrix_from_rows(field, rows)
    row = [_parse_element(v) for v in obj.get("row", [])]
    a = _parse_element(obj["a"]) if "a" in obj else None
    return build_structured(field, kind, row=row, a=a, relaxed=bool(obj.get("relaxed", False)))
