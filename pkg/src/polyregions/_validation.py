"""Input validation helpers, in the spirit of ``sklearn.utils.check_array``."""

from numbers import Integral, Real

import numpy as np


class DimensionError(ValueError):
    """Matrix shape is empty, non-square or inconsistent."""


class SingularMatrixError(np.linalg.LinAlgError):
    """A matrix that must be invertible is numerically singular."""


def check_matrix(M, square=True, name="matrix"):
    """Return ``M`` as a 2-D complex array, raising ``DimensionError`` on bad shape."""
    arr = np.asarray(M, dtype=complex)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    if arr.ndim != 2:
        raise DimensionError(f"{name} must be 2-D, got ndim={arr.ndim}")
    if arr.size == 0:
        raise DimensionError(f"{name} is empty")
    if square and arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"{name} must be square, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def check_coefficients(coefficients, name="coefficients"):
    """Validate a list of equally sized square matrices (degree >= 1)."""
    mats = [check_matrix(c, name=f"{name}[{k}]") for k, c in enumerate(coefficients)]
    if len(mats) < 2:
        raise DimensionError(f"{name} needs at least two matrices (degree >= 1)")
    m = mats[0].shape[0]
    for k, c in enumerate(mats):
        if c.shape != (m, m):
            raise DimensionError(
                f"{name}[{k}] has shape {c.shape}, expected {(m, m)}"
            )
    return mats


def check_norm(norm):
    if norm not in ("one", "inf"):
        raise ValueError(f"norm must be 'one' or 'inf', got {norm!r}")
    return norm


def check_points(z):
    """Return ``z`` as a 1-D complex array."""
    arr = np.atleast_1d(np.asarray(z, dtype=complex)).ravel()
    return arr


def check_scalar(x, name, target_type=Real, min_val=None, include_min=True):
    if not isinstance(x, target_type) or isinstance(x, bool):
        raise TypeError(f"{name} must be {target_type.__name__}, got {type(x).__name__}")
    if min_val is not None:
        if (include_min and x < min_val) or (not include_min and x <= min_val):
            op = ">=" if include_min else ">"
            raise ValueError(f"{name} must be {op} {min_val}, got {x}")
    return x


def check_int(x, name, min_val=None):
    if isinstance(x, np.integer):
        x = int(x)
    return check_scalar(x, name, Integral, min_val)
