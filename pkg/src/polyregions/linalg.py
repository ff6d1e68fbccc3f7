"""Dense complex linear algebra: subordinate norms, inverse norms and the
eigenvalue oracle used to check inclusion regions."""

import warnings

import numpy as np
import scipy.linalg

from ._validation import SingularMatrixError, check_coefficients, check_matrix, check_norm

# pivot modulus below this fraction of the largest column norm means singular
SINGULAR_RTOL = 1e-13


class EigenvalueConvergenceError(np.linalg.LinAlgError):
    """The dense eigensolver did not converge.

    ``partial`` holds whatever eigenvalues were available (possibly empty).
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = np.array([] if partial is None else partial, dtype=complex)


def one_norm(M):
    """Maximum absolute column sum."""
    M = check_matrix(M, square=False)
    return float(np.abs(M).sum(axis=0).max())


def inf_norm(M):
    """Maximum absolute row sum."""
    M = check_matrix(M, square=False)
    return float(np.abs(M).sum(axis=1).max())


def matrix_norm(M, norm="one"):
    check_norm(norm)
    return one_norm(M) if norm == "one" else inf_norm(M)


def lu_factor_checked(M):
    """Partial-pivoting LU of ``M``; raises ``SingularMatrixError`` on a tiny pivot."""
    M = check_matrix(M)
    scale = float(np.linalg.norm(M, axis=0).max())
    if scale == 0.0:
        raise SingularMatrixError("matrix is zero")
    with warnings.catch_warnings():
        # an exactly zero pivot is reported below as SingularMatrixError
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(M, check_finite=False)
    pivots = np.abs(np.diag(lu))
    if pivots.min() < SINGULAR_RTOL * scale:
        raise SingularMatrixError(
            f"matrix is numerically singular (min pivot {pivots.min():.3e}, "
            f"column scale {scale:.3e})"
        )
    return lu, piv


def solve(M, B):
    """Solve ``M X = B`` with the singularity check of ``lu_factor_checked``."""
    lu_piv = lu_factor_checked(M)
    return scipy.linalg.lu_solve(lu_piv, np.asarray(B, dtype=complex), check_finite=False)


def inverse_norm(M, norm="one"):
    """Norm of ``M^{-1}``, from an LU factorization and one solve per column."""
    check_norm(norm)
    M = check_matrix(M)
    lu_piv = lu_factor_checked(M)
    inv = scipy.linalg.lu_solve(lu_piv, np.eye(M.shape[0], dtype=complex), check_finite=False)
    return matrix_norm(inv, norm)


def determinant(M):
    """Determinant via the LU factors (no singularity check)."""
    M = check_matrix(M)
    lu, piv = scipy.linalg.lu_factor(M, check_finite=False)
    swaps = np.count_nonzero(piv != np.arange(len(piv)))
    return (-1) ** swaps * np.prod(np.diag(lu))


def dense_eigenvalues(M):
    """All eigenvalues of a dense square matrix, with multiplicity.

    LAPACK ``geev``: Hessenberg reduction followed by shifted QR.
    """
    M = check_matrix(M)
    try:
        return scipy.linalg.eigvals(M, check_finite=False)
    except np.linalg.LinAlgError as exc:
        raise EigenvalueConvergenceError(f"QR iteration failed: {exc}") from exc


def block_companion(coefficients):
    """First-block-row companion matrix of ``sum_j A_j z^j`` after monicizing.

    Rows of the first block are ``[-B_{n-1}, ..., -B_0]`` with
    ``B_j = A_n^{-1} A_j``; identity blocks sit on the block subdiagonal.
    """
    mats = check_coefficients(coefficients)
    n = len(mats) - 1
    m = mats[0].shape[0]
    lu_piv = lu_factor_checked(mats[-1])
    lower = np.hstack(mats[-2::-1])
    top = -scipy.linalg.lu_solve(lu_piv, lower, check_finite=False)
    C = np.zeros((n * m, n * m), dtype=complex)
    C[:m, :] = top
    C[m:, :-m] = np.eye((n - 1) * m)
    return C


def polyeig_oracle(P):
    """All ``n*m`` finite eigenvalues of a matrix polynomial in the power basis.

    ``P`` is a :class:`~polyregions.MatrixPolynomial` or a sequence of
    coefficients ``A_0, ..., A_n``.
    """
    basis = getattr(P, "basis", None)
    if basis is not None and basis.variant != "power":
        raise ValueError("polyeig_oracle needs the power basis; call to_power() first")
    coefficients = getattr(P, "coefficients", P)
    return dense_eigenvalues(block_companion(coefficients))


def match_spectra(a, b):
    """Greedy nearest pairing of two eigenvalue lists; returns the pairing distances."""
    a = np.asarray(a, dtype=complex).ravel()
    b = list(np.asarray(b, dtype=complex).ravel())
    if len(a) != len(b):
        raise ValueError(f"spectra differ in length: {len(a)} vs {len(b)}")
    dists = []
    # largest-modulus first so clustered small values do not steal partners
    for z in a[np.argsort(-np.abs(a), kind="stable")]:
        k = int(np.argmin(np.abs(np.asarray(b) - z)))
        dists.append(abs(b.pop(k) - z))
    return np.array(dists)
