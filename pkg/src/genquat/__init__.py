"""Exponential and logarithm of generalized quaternions H(alpha, beta)."""
from .algebra import (
    AlgebraParams,
    GQuat,
    add,
    basis,
    cayley_table,
    imaginary_form,
    make,
    mul,
    norm_form,
    one,
    rep_matrix,
    right_rep_matrix,
    scale,
    zero,
)
from .closed_form import (
    Branch,
    ExpFactors,
    branch_of,
    exp_factors,
    exp_gq,
    log_gq,
    log_with_branch,
    mbar,
    quat_exp_reference,
)
from .errors import (
    DomainError,
    GenQuatError,
    NoPrincipalLog,
    NonFiniteInput,
    NullOrNegativeNorm,
    OutOfDomain,
    ParamsMismatch,
    RangeError,
)

__version__ = "0.1.0"
