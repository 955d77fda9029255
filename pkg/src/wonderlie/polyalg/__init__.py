"""Exact polynomial arithmetic and linear algebra over the rationals."""
from ._kernels import BACKEND
from .linalg import (
    GradedLinearSystem,
    InfeasibilityCertificate,
    LinearSolution,
    certificate_holds,
    inverse,
    matmul,
    matvec,
    nullspace,
    nullspace_sparse,
    rank,
    rank_mod_p,
    residual,
    solve_or_certify,
    transpose,
)
from .polymatrix import (
    PolyMatrix,
    RankCertificate,
    RankNotCertified,
    bareiss_rank,
    generic_rank,
    graded_kernel_basis,
)
from .polynomial import (
    Polynomial,
    Rational,
    add,
    as_rational,
    compose_linear,
    monomials,
    mul,
    partial_derivative,
    scale,
    variables,
)

__all__ = [
    "BACKEND",
    "GradedLinearSystem",
    "InfeasibilityCertificate",
    "LinearSolution",
    "PolyMatrix",
    "Polynomial",
    "RankCertificate",
    "RankNotCertified",
    "Rational",
    "add",
    "as_rational",
    "bareiss_rank",
    "certificate_holds",
    "compose_linear",
    "generic_rank",
    "graded_kernel_basis",
    "inverse",
    "matmul",
    "matvec",
    "monomials",
    "mul",
    "nullspace",
    "nullspace_sparse",
    "partial_derivative",
    "rank",
    "rank_mod_p",
    "residual",
    "scale",
    "solve_or_certify",
    "transpose",
    "variables",
]
