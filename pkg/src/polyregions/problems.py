"""Benchmark quadratic eigenvalue problems and node-selection recipes."""

import cmath
from dataclasses import dataclass, field

import numpy as np

from ._validation import DimensionError, check_int, check_matrix, check_norm
from .bases import GeneralizedBasis
from .linalg import matrix_norm
from .polynomial import MatrixPolynomial

FAMILIES = ("mass_spring", "acoustic", "string")


class RecipeError(ValueError):
    """A node-selection recipe is undefined for the given parameters."""


def tridiag(m, lower, diag, upper):
    return (
        np.diag(np.full(m - 1, lower), -1)
        + np.diag(np.full(m, diag))
        + np.diag(np.full(m - 1, upper), 1)
    ).astype(complex)


def mass_spring(m, tau, kappa):
    """Damped mass-spring chain: ``I z^2 + tau K z + kappa K`` with ``K = tridiag(-1, 3, -1)``."""
    m = check_int(m, "m", 2)
    K = tridiag(m, -1.0, 3.0, -1.0)
    return MatrixPolynomial([kappa * K, tau * K, np.eye(m, dtype=complex)])


@dataclass(frozen=True)
class NodeSelection:
    newton_nodes: tuple
    general_nodes: tuple = None
    diagnostics: dict = field(default_factory=dict)

    def newton_basis(self):
        return GeneralizedBasis.newton(self.newton_nodes)

    def general_basis(self):
        if self.general_nodes is None:
            raise RecipeError(self.diagnostics.get("general_error", "no three-node recipe available"))
        return GeneralizedBasis.quadratic_general(*self.general_nodes)


def quadratic_roots(p, q):
    """Both roots of ``x^2 + p x + q`` without cancellation."""
    p, q = complex(p), complex(q)
    s = cmath.sqrt(p * p - 4 * q)
    # pick the sign that avoids cancellation in -(p + s)
    if abs(p + s) < abs(p - s):
        s = -s
    big = -(p + s) / 2
    if big == 0:
        return 0j, 0j
    return big, q / big


def _ties(u, v):
    return abs(u - v) <= 1e-12 * max(1.0, abs(u), abs(v))


def _pick(roots, criterion):
    """Root with the smaller criterion; ties go to Im >= 0, then smaller Re."""
    (r1, c1), (r2, c2) = [(r, criterion(r)) for r in roots]
    if not _ties(c1, c2):
        return (r1, r2, c1, c2) if c1 < c2 else (r2, r1, c2, c1)
    key = lambda r: (0 if r.imag >= 0 else 1, r.real)
    return (r1, r2, c1, c2) if key(r1) <= key(r2) else (r2, r1, c2, c1)


def mass_spring_nodes(tau, kappa):
    """Nodes zeroing the coefficient diagonals for the mass-spring problem.

    Newton: ``a, b`` are the roots of ``x^2 + 3 tau x + 3 kappa`` with ``a``
    minimizing ``|a tau + kappa|``. Three-node basis: ``(-kappa/tau, a, b)``.
    """
    tau, kappa = float(tau), float(kappa)
    roots = quadratic_roots(3 * tau, 3 * kappa)
    a, b, ca, cb = _pick(roots, lambda r: abs(r * tau + kappa))
    diagnostics = {"criterion_chosen": ca, "criterion_other": cb}
    general = None
    if tau == 0:
        diagnostics["general_error"] = "three-node recipe needs tau != 0 (a = -kappa/tau)"
    else:
        general = (complex(-kappa / tau), a, b)
    return NodeSelection((a, b), general, diagnostics)


def midpoint_minimax(values):
    """Center minimizing the max distance, taken separately in Re and Im."""
    v = np.asarray(values, dtype=complex).ravel()
    if v.size == 0:
        raise ValueError("midpoint_minimax needs at least one value")
    re = 0.5 * (v.real.min() + v.real.max())
    im = 0.5 * (v.imag.min() + v.imag.max())
    return complex(re, im)


def general_nodes(B1, B0, norm="one"):
    """Newton nodes for a monic quadratic ``I z^2 + B1 z + B0`` with varying diagonals."""
    check_norm(norm)
    B1 = check_matrix(B1, name="B1")
    B0 = check_matrix(B0, name="B0")
    if B1.shape != B0.shape:
        raise DimensionError(f"B1 {B1.shape} and B0 {B0.shape} differ in shape")
    mu1 = midpoint_minimax(np.diag(B1))
    mu0 = midpoint_minimax(np.diag(B0))
    I = np.eye(B1.shape[0])
    crit = lambda a: matrix_norm(a * B1 + B0 + a * a * I, norm)
    a, _, ca, cb = _pick(quadratic_roots(mu1, mu0), crit)
    return NodeSelection(
        (a, -mu1 - a),
        None,
        {"mu1": mu1, "mu0": mu0, "criterion_chosen": ca, "criterion_other": cb},
    )


def acoustic(ell, zeta):
    """Finite-element acoustic wave problem on the unit square, ``m = ell (ell - 1)``.

    Returns the raw ``A_2 z^2 + A_1 z + A_0``; use ``.monicize()`` for ``I z^2 + B_1 z + B_0``.
    """
    ell = check_int(ell, "ell", 2)
    zeta = complex(zeta)
    if zeta == 0:
        raise ValueError("impedance zeta must be nonzero")
    S = tridiag(ell, -1.0, 4.0, -1.0)
    S[-1, -1] = 2.0
    T = tridiag(ell - 1, -1.0, 0.0, -1.0) if ell > 2 else np.zeros((1, 1), dtype=complex)
    E = np.zeros((ell, ell), dtype=complex)
    E[-1, -1] = 1.0
    I_l, I_k = np.eye(ell), np.eye(ell - 1)
    A0 = np.kron(I_k, S) + np.kron(T, -I_l + 0.5 * E)
    A1 = (2 * np.pi / (ell * zeta)) * np.kron(I_k, E)
    A2 = -(4 * np.pi**2 / ell**2) * np.kron(I_k, I_l - 0.5 * E)
    return MatrixPolynomial([A0, A1, A2])


def _simpson_weights(panels):
    w = np.ones(panels + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return w * (np.pi / panels) / 3.0


def _string_damping(n, eps, delta, panels, chunk=1 << 16):
    """Composite Simpson approximation of the damping matrix with ``panels`` panels."""
    x = np.linspace(0.0, np.pi, panels + 1)
    w = _simpson_weights(panels) * (x**2 * (np.pi - x) ** 2 - delta)
    k = np.arange(1, n + 1)[:, None]
    out = np.zeros((n, n))
    for s in range(0, panels + 1, chunk):
        S = np.sin(k * x[None, s : s + chunk])
        out += (S * w[s : s + chunk]) @ S.T
    out = 2.0 * eps * out
    return 0.5 * (out + out.T)


def string_damping(n, eps, delta, tol=1e-12, max_panels=1 << 22):
    """Damping matrix ``2 eps int_0^pi (x^2 (pi - x)^2 - delta) sin(kx) sin(lx) dx``.

    Panels are doubled until no entry moves by ``tol`` or more.
    """
    # resolve the highest frequency sin(kx) sin(lx) before trusting differences
    panels = max(64, 16 * n)
    prev = _string_damping(n, eps, delta, panels)
    while panels < max_panels:
        panels *= 2
        cur = _string_damping(n, eps, delta, panels)
        if np.abs(cur - prev).max() < tol:
            return cur
        prev = cur
    raise RuntimeError(f"quadrature did not reach tol={tol} with {max_panels} panels")


def string_galerkin(n_basis, eps, delta):
    """Galerkin model of a damped inhomogeneous string: ``I z^2 + A_1 z + pi diag(j^2)``."""
    n = check_int(n_basis, "n_basis", 1)
    if not (eps > 0 and delta > 0):
        raise ValueError("eps and delta must be positive")
    A0 = np.pi * np.diag(np.arange(1, n + 1, dtype=float) ** 2)
    A1 = string_damping(n, float(eps), float(delta))
    return MatrixPolynomial([A0.astype(complex), A1.astype(complex), np.eye(n, dtype=complex)])


def build_problem(descriptor):
    """Construct a problem from ``{"family": ..., parameters...}``.

    Acoustic problems come back monicized.
    """
    family = descriptor.get("family", "").replace("-", "_")
    if family == "mass_spring":
        return mass_spring(int(descriptor["m"]), float(descriptor["tau"]), float(descriptor["kappa"]))
    if family == "acoustic":
        z = descriptor["zeta"]
        zeta = complex(*z) if isinstance(z, (list, tuple)) else complex(z)
        return acoustic(int(descriptor["ell"]), zeta).monicize()
    if family == "string":
        return string_galerkin(
            int(descriptor["n_basis"]), float(descriptor["eps"]), float(descriptor["delta"])
        )
    raise ValueError(f"unknown problem family {descriptor.get('family')!r}; expected {FAMILIES}")


def recipe_nodes(descriptor, P, norm="one"):
    """Node selection matching the problem family."""
    family = descriptor.get("family", "").replace("-", "_")
    if family == "mass_spring":
        return mass_spring_nodes(float(descriptor["tau"]), float(descriptor["kappa"]))
    if P.degree != 2:
        raise RecipeError(f"no node recipe for degree {P.degree}; pass explicit nodes")
    M = P.monicize() if not P.is_monic() else P
    return general_nodes(M.coefficients[1], M.coefficients[0], norm)
