"""Cauchy radius of a matrix polynomial.

The radius is the unique positive root of

    x**n / ||A_n^{-1}||  -  sum_{j<n} ||A_j|| x**j

and bounds the modulus of every eigenvalue.
"""

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class CauchyResult:
    rho: float
    residual: float
    iterations: int
    bracket: tuple


def _majorant(c, b, x):
    """Value and derivative of ``c x^n - sum b_j x^j``, summed with ``fsum``."""
    n = len(b)
    terms = [c * x**n] + [-bj * x**j for j, bj in enumerate(b)]
    dterms = [n * c * x ** (n - 1)] + [-j * bj * x ** (j - 1) for j, bj in enumerate(b) if j]
    return math.fsum(terms), math.fsum(dterms)


def cauchy_radius(inv_leading_norm, lower_norms, newton_steps=3):
    """Unique positive root of ``x^n / inv_leading_norm - sum_j lower_norms[j] x^j``.

    ``lower_norms`` lists ``||A_0||, ..., ||A_{n-1}||``. Returns ``rho = 0`` when
    every entry is zero.
    """
    inv_leading_norm = float(inv_leading_norm)
    if not (math.isfinite(inv_leading_norm) and inv_leading_norm > 0):
        raise ValueError(f"inv_leading_norm must be finite and positive, got {inv_leading_norm}")
    b = [float(x) for x in lower_norms]
    if not b:
        raise ValueError("lower_norms must have n >= 1 entries")
    if any(not math.isfinite(x) or x < 0 for x in b):
        raise ValueError(f"lower_norms must be finite and nonnegative, got {b}")
    if all(x == 0 for x in b):
        return CauchyResult(0.0, 0.0, 0, (0.0, 0.0))

    c = 1.0 / inv_leading_norm
    f = lambda x: _majorant(c, b, x)[0]
    iterations = 0

    # f < 0 just right of 0 and f -> +inf: expand upward, then shrink downward
    hi = 1.0
    while f(hi) <= 0:
        hi *= 2.0
        iterations += 1
    lo = hi / 2.0
    while lo > 0 and f(lo) > 0:
        hi = lo
        lo /= 2.0
        iterations += 1
    bracket = (lo, hi)

    while hi - lo > 1e-14 * hi:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if f(mid) > 0:
            hi = mid
        else:
            lo = mid
        iterations += 1

    x = hi
    fx = f(x)
    for _ in range(newton_steps):
        val, der = _majorant(c, b, x)
        if der <= 0:
            break
        cand = x - val / der
        if not (lo <= cand <= hi):
            break
        fc = f(cand)
        iterations += 1
        if abs(fc) > abs(fx):
            break
        x, fx = cand, fc
    return CauchyResult(float(x), float(fx), iterations, bracket)


def cauchy_radius_of(coefficients, norm="one"):
    """Cauchy radius of ``sum_j A_j z^j`` read as a power-basis polynomial."""
    from .linalg import inverse_norm, matrix_norm

    mats = list(coefficients)
    return cauchy_radius(
        inverse_norm(mats[-1], norm), [matrix_norm(A, norm) for A in mats[:-1]]
    )


def majorant_value(inv_leading_norm, lower_norms, x):
    """``f(x)`` for the Cauchy equation; exposed for tests and diagnostics."""
    return _majorant(1.0 / inv_leading_norm, [float(v) for v in lower_norms], float(x))[0]


def sign_changes(inv_leading_norm, lower_norms, rho, samples=100):
    """Number of sign changes of ``f`` at log-spaced points in ``(0, 2 rho]``."""
    xs = np.logspace(np.log10(rho) - 6, np.log10(2 * rho), samples)
    signs = np.sign([majorant_value(inv_leading_norm, lower_norms, x) for x in xs])
    signs = signs[signs != 0]
    return int(np.count_nonzero(np.diff(signs)))
