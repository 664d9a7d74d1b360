"""Exact q-Fibonacci and q-Lucas bicomplex quaternions."""
from .bicomplex import (
    IJ,
    ONE,
    Bicomplex,
    ConjKind,
    I,
    J,
    bc_add,
    bc_conjugate,
    bc_euclid_sq,
    bc_from_vec,
    bc_matrix,
    bc_mul,
    bc_norm_product,
    bc_scalar_part,
    bc_scale,
    bc_vec,
    bc_vector_part,
    norm_value,
)
from .identities import (
    IdentityName,
    IdentityReport,
    Verdict,
    cassini_lhs,
    cassini_rhs,
    catalan_lhs,
    catalan_rhs,
    check_identity,
    docagne_lhs,
    docagne_rhs,
    honsberger_lhs,
    honsberger_rhs,
    verify_grid,
)
from .qcalc import QParams, q_index_add_check, q_integer, q_integer_sum, q_lucas_ratio
from .scalars import (
    BigFloat,
    QuadExt,
    format_scalar,
    parse_scalar,
    scalar_add,
    scalar_inv,
    scalar_mul,
    scalar_neg,
    to_bigfloat,
)
from .sequences import (
    BinetConstants,
    SequenceKind,
    SequenceTerm,
    bf,
    bf_binet,
    binet_constants,
    bl,
    bl_binet,
    classical_params,
    egf_closed,
    egf_partial,
)

__version__ = "0.1.0"
