"""scikit-learn style front end.

``fit`` takes a power-basis matrix polynomial and builds its inclusion region;
``predict`` labels points in the complex plane by region component.

>>> from polyregions.problems import mass_spring
>>> est = InclusionRegionEstimator(basis="quadratic-general").fit(mass_spring(50, 1.0, 8.0))
>>> est.region_.predicted_counts
[0, 50, 50]
"""

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ._validation import check_norm, check_points
from .bases import GeneralizedBasis, InvalidBasisError, convert_to_basis
from .polynomial import MatrixPolynomial
from .problems import RecipeError, general_nodes
from .regions import cauchy_disk, inclusion_region, reversal_exclusion, verify_containment

BASIS_CHOICES = ("power", "newton", "quadratic-general", "generic")


def resolve_basis(basis, P, nodes=None, norm="one"):
    """Turn a basis name plus optional nodes into a :class:`GeneralizedBasis` for ``P``."""
    if isinstance(basis, GeneralizedBasis):
        return basis
    name = str(basis).replace("_", "-")
    if name == "power":
        return GeneralizedBasis.power(P.degree)
    if name == "newton":
        if nodes is None:
            if P.degree != 2:
                raise RecipeError("Newton nodes are only derived automatically for quadratics")
            M = P if P.is_monic() else P.monicize()
            return general_nodes(M.coefficients[1], M.coefficients[0], norm).newton_basis()
        return GeneralizedBasis.newton(nodes)
    if name == "quadratic-general":
        if nodes is None:
            raise RecipeError("quadratic-general needs explicit nodes (a, b, c) for this problem")
        if len(nodes) != 3:
            raise InvalidBasisError(f"quadratic-general takes 3 nodes, got {len(nodes)}")
        return GeneralizedBasis.quadratic_general(*nodes)
    if name == "generic":
        if not isinstance(nodes, dict):
            raise InvalidBasisError("generic basis needs {'zeros', 'alphas', 'gamma'}")
        return GeneralizedBasis.from_dict({"variant": "generic", **nodes})
    raise InvalidBasisError(f"unknown basis {basis!r}; expected one of {BASIS_CHOICES}")


def check_polynomial(X):
    """Accept a MatrixPolynomial or a sequence ``A_0, ..., A_n``; return the power form."""
    P = X if isinstance(X, MatrixPolynomial) else MatrixPolynomial(list(X))
    return P.to_power()


class InclusionRegionEstimator(BaseEstimator):
    """Eigenvalue inclusion region of a matrix polynomial in a chosen basis.

    Parameters
    ----------
    basis : {"power", "newton", "quadratic-general", "generic"} or GeneralizedBasis
    nodes : sequence of complex, dict or None
        Explicit basis nodes. ``None`` uses the minimax node recipe (Newton, quadratics only).
    norm : {"one", "inf"}
    """

    def __init__(self, basis="newton", nodes=None, norm="one"):
        self.basis = basis
        self.nodes = nodes
        self.norm = norm

    def fit(self, X, y=None):
        check_norm(self.norm)
        P = check_polynomial(X)
        self.polynomial_ = P
        self.basis_ = resolve_basis(self.basis, P, self.nodes, self.norm)
        self.coefficients_ = convert_to_basis(P, self.basis_)
        self.region_ = inclusion_region(self.coefficients_, self.norm)
        self.cauchy_radius_ = cauchy_disk(P, self.norm).rho
        self.n_components_ = self.region_.n_components
        return self

    def decision_function(self, Z):
        """Region radius minus distance to the nearest disk center (>= 0 inside)."""
        check_is_fitted(self, "region_")
        return -self.region_.margins(Z)

    def predict(self, Z):
        """Component index of each point, ``-1`` outside the region."""
        check_is_fitted(self, "region_")
        Z = check_points(Z)
        labels = self.region_.nearest_component(Z)
        return np.where(self.region_.contains(Z), labels, -1)

    def verify(self, eigenvalues=None):
        """Compare the fitted region against oracle eigenvalues."""
        check_is_fitted(self, "region_")
        return verify_containment(self.polynomial_, self.region_, eigenvalues=eigenvalues)

    def exclusion_radius(self):
        check_is_fitted(self, "region_")
        return reversal_exclusion(self.polynomial_, self.norm)
