"""Binary matrices with prescribed determinants.

Construct, for a size n and any integer a up to an exactly computed
k-step-Fibonacci prefix bound, an n x n 0/1 matrix whose determinant is a,
certified by an independent exact determinant; plus brute-force oracles
that compute the true determinant spectrum of small binary matrices.
"""

from .construction import (
    ConstructionCertificate,
    ConstructionParams,
    binarizing_transform,
    binary_rows,
    construct_matrix,
    greedy_subset,
    orthogonal_vector,
    seed_matrix,
    verify_certificate,
)
from .errors import (
    DependentRowsError,
    EnumerationCapError,
    InternalInvariantError,
    TargetOutOfRangeError,
)
from .exact import IntMatrix, cofactor_vector, det_exact, dot, is_orthogonal_to_all
from .fibk import (
    BoundTable,
    alpha_k,
    best_k,
    bound_table,
    corollary_bound,
    fib_closed_form,
    fib_k,
    fib_lower_bound_check,
    fib_prefix,
    theorem_bound,
)
from .oracle import (
    ConstructionCheckReport,
    SpectrumReport,
    smallest_missing_natural,
    spectrum_exhaustive,
    spectrum_family,
    verify_construction,
    verify_laplace_identity,
)

__version__ = "0.1.0"

__all__ = [
    "BoundTable",
    "ConstructionCertificate",
    "ConstructionCheckReport",
    "ConstructionParams",
    "DependentRowsError",
    "EnumerationCapError",
    "IntMatrix",
    "InternalInvariantError",
    "SpectrumReport",
    "TargetOutOfRangeError",
    "alpha_k",
    "best_k",
    "binarizing_transform",
    "binary_rows",
    "bound_table",
    "cofactor_vector",
    "construct_matrix",
    "corollary_bound",
    "det_exact",
    "dot",
    "fib_closed_form",
    "fib_k",
    "fib_lower_bound_check",
    "fib_prefix",
    "greedy_subset",
    "is_orthogonal_to_all",
    "orthogonal_vector",
    "seed_matrix",
    "smallest_missing_natural",
    "spectrum_exhaustive",
    "spectrum_family",
    "theorem_bound",
    "verify_certificate",
    "verify_construction",
    "verify_laplace_identity",
]
