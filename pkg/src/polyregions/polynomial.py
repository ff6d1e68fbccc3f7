from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ._validation import DimensionError, check_coefficients, check_points
from .bases import GeneralizedBasis
from .linalg import lu_factor_checked


@dataclass(frozen=True, eq=False)
class MatrixPolynomial:
    """``P(z) = sum_j C_j q_j(z)`` with square ``m x m`` coefficients ``C_0..C_n``.

    ``basis`` defaults to the power basis, in which case ``C_j = A_j``.
    """

    coefficients: tuple
    basis: GeneralizedBasis = None

    def __post_init__(self):
        mats = tuple(check_coefficients(self.coefficients))
        object.__setattr__(self, "coefficients", mats)
        basis = self.basis
        if basis is None:
            basis = GeneralizedBasis.power(len(mats) - 1)
            object.__setattr__(self, "basis", basis)
        if basis.degree != len(mats) - 1:
            raise DimensionError(
                f"basis degree {basis.degree} does not match {len(mats)} coefficients"
            )

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def size(self):
        return self.coefficients[0].shape[0]

    @property
    def leading(self):
        return self.coefficients[-1]

    def __call__(self, z):
        """Evaluate at a scalar point; returns an ``m x m`` matrix."""
        z = complex(z)
        out = np.zeros_like(self.coefficients[0])
        for j, C in enumerate(self.coefficients):
            out = out + complex(self.basis.evaluate(j, z)) * C
        return out

    def evaluate_many(self, z):
        """Stack of ``P(z_k)`` for an array of points, shape ``(k, m, m)``."""
        z = check_points(z)
        q = np.stack([self.basis.evaluate(j, z) for j in range(self.degree + 1)])
        return np.einsum("jk,jab->kab", q, np.stack(self.coefficients))

    def to_power(self):
        """Re-expand into the power basis."""
        if self.basis.variant == "power":
            return self
        T = self.basis.change_of_basis()
        C = np.stack(self.coefficients)
        A = np.einsum("kj,jab->kab", T, C)
        return MatrixPolynomial(list(A))

    def monicize(self):
        """``A_n^{-1} P``; the leading coefficient becomes exactly ``I``."""
        lu_piv = lu_factor_checked(self.leading)
        mats = [scipy.linalg.lu_solve(lu_piv, C, check_finite=False) for C in self.coefficients[:-1]]
        mats.append(np.eye(self.size, dtype=complex))
        return MatrixPolynomial(mats, self.basis)

    def reverse(self):
        """``z^n P(1/z)`` for a power-basis polynomial."""
        if self.basis.variant != "power":
            raise ValueError("reverse() needs the power basis")
        return MatrixPolynomial(list(self.coefficients[::-1]))

    def is_monic(self):
        return np.array_equal(self.leading, np.eye(self.size))

    def to_dict(self):
        d = {"coefficients": [matrix_to_json(C) for C in self.coefficients]}
        if self.basis.variant != "power":
            d["basis"] = self.basis.to_dict()
        return d

    @classmethod
    def from_dict(cls, d):
        mats = [matrix_from_json(M) for M in d["coefficients"]]
        basis = GeneralizedBasis.from_dict(d["basis"]) if "basis" in d else None
        return cls(mats, basis)


# BasisCoefficients in the sense of "coefficients of P in a given basis"
BasisCoefficients = MatrixPolynomial


def matrix_to_json(M):
    """Dense nested list of ``[re, im]`` pairs, row-major."""
    M = np.asarray(M, dtype=complex)
    return [[[float(x.real), float(x.imag)] for x in row] for row in M]


def matrix_from_json(rows):
    arr = np.asarray(rows, dtype=float)
    if arr.ndim == 3 and arr.shape[-1] == 2:
        return arr[..., 0] + 1j * arr[..., 1]
    if arr.ndim == 2:
        return arr.astype(complex)
    raise DimensionError(f"cannot read matrix with array shape {arr.shape}")
