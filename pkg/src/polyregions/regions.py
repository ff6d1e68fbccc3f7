"""Eigenvalue inclusion regions for matrix polynomials in a generalized basis.

All eigenvalues of ``P = sum_j C_j q_j`` lie in the union of closed disks of
radius ``gamma * rho`` centred at the zeros of q_1..q_n, where ``rho`` is the
Cauchy radius of ``sum_j C_j z^j``. A connected component of that union which
is disjoint from the rest holds ``m`` eigenvalues per zero of q_n inside it.
"""

from dataclasses import dataclass, field

import numpy as np

from ._validation import DimensionError, check_norm, check_points
from .bases import basis_gamma, basis_zeros
from .cauchy import cauchy_radius
from .linalg import inverse_norm, matrix_norm, polyeig_oracle
from .polynomial import MatrixPolynomial


@dataclass(frozen=True)
class Disk:
    center: complex
    radius: float
    source_degrees: frozenset = frozenset()
    qn_multiplicity: int = 0


def link_tolerance(radius, centers):
    return 1e-9 * (1.0 + radius + max((abs(c) for c in centers), default=0.0))


def boundary_tolerance(radius):
    return 1e-7 * (1.0 + radius)


def components(disks, m):
    """Union-find over the disk intersection graph.

    Returns ``(partition, predicted_counts)``; each part is a sorted list of disk
    indices and its count is ``m`` times the q_n zeros it contains.
    """
    if not disks:
        return [], []
    radius = disks[0].radius
    if any(d.radius != radius for d in disks):
        raise ValueError("all disks of a region must share one radius")
    centers = np.array([d.center for d in disks], dtype=complex)
    reach = 2 * radius + link_tolerance(radius, centers)
    parent = list(range(len(disks)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(disks)):
        for k in range(i + 1, len(disks)):
            if abs(centers[i] - centers[k]) <= reach:
                ri, rk = find(i), find(k)
                if ri != rk:
                    parent[max(ri, rk)] = min(ri, rk)

    groups = {}
    for i in range(len(disks)):
        groups.setdefault(find(i), []).append(i)
    partition = [groups[r] for r in sorted(groups)]
    counts = [m * sum(disks[i].qn_multiplicity for i in part) for part in partition]
    return partition, counts


@dataclass
class InclusionRegion:
    disks: list
    gamma: float
    rho: float
    components: list
    predicted_counts: list
    m: int = None
    n: int = None
    norm: str = "one"

    @property
    def radius(self):
        return self.gamma * self.rho

    @property
    def centers(self):
        return np.array([d.center for d in self.disks], dtype=complex)

    @property
    def n_components(self):
        return len(self.components)

    def separation(self):
        """Smallest gap ``|c_i - c_k| - 2 radius`` between disks of different components."""
        if len(self.components) < 2:
            return np.inf
        label = self.disk_labels()
        c = self.centers
        gap = np.abs(c[:, None] - c[None, :]) - 2 * self.radius
        mask = label[:, None] != label[None, :]
        return float(gap[mask].min())

    def disk_labels(self):
        label = np.empty(len(self.disks), dtype=int)
        for k, part in enumerate(self.components):
            label[part] = k
        return label

    def margins(self, z):
        """Distance from each point to the nearest center, minus the radius."""
        z = check_points(z)
        return np.abs(z[:, None] - self.centers[None, :]).min(axis=1) - self.radius

    def contains(self, z, tol=0.0):
        return self.margins(z) <= tol

    def nearest_component(self, z):
        z = check_points(z)
        nearest = np.abs(z[:, None] - self.centers[None, :]).argmin(axis=1)
        return self.disk_labels()[nearest]

    def to_dict(self):
        pair = lambda z: [float(z.real), float(z.imag)]
        return {
            "gamma": float(self.gamma),
            "rho": float(self.rho),
            "radius": float(self.radius),
            "disks": [
                {
                    "center": pair(d.center),
                    "radius": float(d.radius),
                    "qn_mult": int(d.qn_multiplicity),
                    "degrees": sorted(d.source_degrees),
                }
                for d in self.disks
            ],
            "components": [list(map(int, part)) for part in self.components],
            "predicted_counts": [int(c) for c in self.predicted_counts],
        }

    @classmethod
    def from_dict(cls, d):
        disks = [
            Disk(
                complex(*e["center"]),
                float(e["radius"]),
                frozenset(e.get("degrees", ())),
                int(e["qn_mult"]),
            )
            for e in d["disks"]
        ]
        return cls(
            disks,
            float(d["gamma"]),
            float(d["rho"]),
            [list(p) for p in d["components"]],
            list(d["predicted_counts"]),
        )


def inclusion_region(C, norm="one", m=None):
    """Inclusion region of a matrix polynomial given by its basis coefficients.

    ``C`` is a :class:`MatrixPolynomial` whose ``basis`` describes q_0..q_n.
    """
    check_norm(norm)
    if not isinstance(C, MatrixPolynomial):
        raise TypeError("expected a MatrixPolynomial with basis coefficients")
    if m is not None and m != C.size:
        raise DimensionError(f"matrix size {m} does not match coefficients of size {C.size}")
    n, m = C.degree, C.size
    cres = cauchy_radius(
        inverse_norm(C.leading, norm), [matrix_norm(A, norm) for A in C.coefficients[:-1]]
    )
    gamma = basis_gamma(C.basis)
    radius = gamma * cres.rho
    disks = [
        Disk(bz.center, radius, bz.degrees, bz.qn_multiplicity) for bz in basis_zeros(C.basis, n)
    ]
    partition, counts = components(disks, m)
    return InclusionRegion(disks, gamma, cres.rho, partition, counts, m=m, n=n, norm=norm)


def cauchy_disk(P, norm="one"):
    """The single origin-centred disk obtained in the power basis."""
    if P.basis.variant != "power":
        P = P.to_power()
    return inclusion_region(P, norm)


def reversal_exclusion(P, norm="one"):
    """Radius ``r_min`` with ``|z| >= r_min`` for every eigenvalue ``z`` of ``P``.

    ``r_min = 1 / rho_rev`` where ``rho_rev`` is the Cauchy radius of the
    reversed polynomial. Raises ``SingularMatrixError`` when ``A_0`` is singular.
    """
    if P.basis.variant != "power":
        P = P.to_power()
    R = P.reverse()
    res = cauchy_radius(
        inverse_norm(R.leading, norm), [matrix_norm(A, norm) for A in R.coefficients[:-1]]
    )
    return np.inf if res.rho == 0 else 1.0 / res.rho


@dataclass
class VerificationReport:
    eigenvalues: np.ndarray
    contained: bool
    worst_margin: float
    tolerance: float
    component_counts_observed: list = None
    counts_match: bool = None
    separation: float = np.inf
    boundary: list = field(default_factory=list)

    def to_dict(self):
        return {
            "contained": bool(self.contained),
            "worst_margin": float(self.worst_margin),
            "tolerance": float(self.tolerance),
            "observed_counts": self.component_counts_observed,
            "counts_match": self.counts_match,
            "separation": None if np.isinf(self.separation) else float(self.separation),
            "boundary_eigenvalues": len(self.boundary),
            "n_eigenvalues": int(len(self.eigenvalues)),
        }


def verify_containment(P, region, tol=None, eigenvalues=None, separation_tol=None):
    """Check ``region`` against oracle eigenvalues of the power-basis polynomial ``P``.

    Component counts are compared only when the components are separated by
    more than ``separation_tol`` (default: the link tolerance). Eigenvalues
    within the boundary tolerance of their component's edge are flagged; a
    count mismatch involving them gives ``counts_match = None``.
    """
    if P.basis.variant != "power":
        P = P.to_power()
    if region.n is not None and region.m is not None:
        if (P.degree, P.size) != (region.n, region.m):
            raise DimensionError(
                f"polynomial (n={P.degree}, m={P.size}) does not match region "
                f"(n={region.n}, m={region.m})"
            )
    ev = polyeig_oracle(P) if eigenvalues is None else np.asarray(eigenvalues, dtype=complex)
    radius = region.radius
    centers = region.centers
    if tol is None:
        tol = 1e-8 * (1.0 + radius + float(np.abs(centers).max()))
    margins = region.margins(ev)
    worst = float(margins.max())
    contained = worst <= tol

    if separation_tol is None:
        separation_tol = link_tolerance(radius, centers)
    sep = region.separation()
    observed, match = None, None
    boundary = [int(k) for k in np.flatnonzero(np.abs(margins) <= boundary_tolerance(radius))]
    if sep > separation_tol:
        labels = region.nearest_component(ev)
        observed = [int(np.count_nonzero(labels == k)) for k in range(region.n_components)]
        match = observed == [int(c) for c in region.predicted_counts]
        if not match and (boundary or not contained):
            match = None
    return VerificationReport(ev, contained, worst, tol, observed, match, sep, boundary)

