"""Eigenvalue inclusion regions for matrix polynomials in generalized bases."""

from .bases import (
    GeneralizedBasis,
    basis_gamma,
    basis_zeros,
    convert_quadratic,
    convert_to_basis,
    verify_basis_condition,
)
from .cauchy import CauchyResult, cauchy_radius
from .estimator import InclusionRegionEstimator
from .linalg import dense_eigenvalues, inf_norm, inverse_norm, one_norm, polyeig_oracle
from .polynomial import BasisCoefficients, MatrixPolynomial
from .problems import (
    acoustic,
    general_nodes,
    mass_spring,
    mass_spring_nodes,
    midpoint_minimax,
    string_galerkin,
)
from .regions import (
    Disk,
    InclusionRegion,
    VerificationReport,
    components,
    inclusion_region,
    reversal_exclusion,
    verify_containment,
)

__version__ = "0.1.0"
