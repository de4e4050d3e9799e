"""Finite-field matrix library and census toolkit.

Builds Hadamard, circulant and circulant-like matrices over GF(2^r),
decides MDS/NMDS/involutory/orthogonal properties exactly, and counts
whole structured families by exhaustive enumeration cross-checked
against closed formulas.
"""

from .census import (
    BudgetExceededError,
    CENSUS_CLASSES,
    CensusResult,
    census_2x2,
    census_circulant4_mds,
    census_circulant4_nmds_1zero,
    census_hadamard4_involutory_mds,
    census_hadamard4_mds,
    census_hadamard4_nmds_1zero,
    census_involutory4_mds,
    emit_tables,
    enumerate_involutory4_mds,
    formula_count,
    run_census,
    upper_bound_involutory4,
)
from .field import GF2r, ReduciblePolynomialError, default_poly, make_field
from .matrix import (
    MatrixGF,
    SingularMatrixError,
    build_circulant,
    build_diagonal,
    build_hadamard,
    build_structured,
    build_type1,
    build_type2,
    det,
    identity,
    inverse,
    mat_add,
    matmul,
    matrix_from_json,
    matrix_from_rows,
    matrix_to_json,
    rank,
    submatrix,
    transpose,
)
from .predicates import (
    PredicateReport,
    SubmatrixWitness,
    fast_circulant4_mds,
    fast_hadamard4_mds,
    hadamard_mds_distinctness,
    is_involutory,
    is_mds,
    is_nmds,
    is_orthogonal,
)
from .theorems import (
    CLAIMS,
    InvolutoryDecomposition,
    TSetAudit,
    VerificationReport,
    decompose_involutory_mds,
    find_orthogonal_type1_nmds4,
    hadamard_adjugate_check,
    run_claim,
    t_set_audit,
    verify_singular_hadamard_not_nmds,
    verify_type2_even_not_nmds,
)

__version__ = "0.1.0"
