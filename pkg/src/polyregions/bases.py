"""Generalized scalar polynomial bases q_0, ..., q_n with deg q_j = j.

Every basis polynomial is monic, so ``q_j(z) = prod_i (z - r_ij)`` and a basis
is fully described by the zeros of each q_j. Besides the zeros, each basis
carries the weights ``alpha_i^(j)`` and the constant ``gamma`` for which

    |q_{j-1}(z) / q_j(z)| <= sum_i alpha_i^(j) / |z - r_ij|,   sum_i alpha_i^(j) <= gamma.
"""

from dataclasses import dataclass, field

import numpy as np

from ._validation import DimensionError, check_int, check_matrix

VARIANTS = ("power", "newton", "quadratic_general", "generic")


class InvalidBasisError(ValueError):
    pass


def merge_tolerance(points):
    """Two zeros coincide when closer than this."""
    scale = max((abs(p) for p in points), default=0.0)
    return 1e-10 * (1.0 + scale)


@dataclass(frozen=True)
class GeneralizedBasis:
    """Descriptor of a monic polynomial basis.

    Build instances with :meth:`power`, :meth:`newton`,
    :meth:`quadratic_general` or :meth:`generic` rather than directly.
    """

    variant: str
    degree: int
    nodes: tuple = ()
    a: complex = None
    b: complex = None
    c: complex = None
    zeros: tuple = ()
    alphas: tuple = ()
    gamma_value: float = None
    _zero_table: tuple = field(default=(), repr=False, compare=False)

    @classmethod
    def power(cls, n):
        n = check_int(n, "n", 1)
        return cls("power", n, _zero_table=tuple((0j,) * j for j in range(1, n + 1)))

    @classmethod
    def newton(cls, nodes):
        nodes = tuple(complex(x) for x in nodes)
        if not nodes:
            raise InvalidBasisError("Newton basis needs at least one node")
        table = tuple(nodes[:j] for j in range(1, len(nodes) + 1))
        return cls("newton", len(nodes), nodes=nodes, _zero_table=table)

    @classmethod
    def quadratic_general(cls, a, b, c):
        """Basis {1, z - a, (z - b)(z - c)}; collapses to Newton(b, b) when b == c."""
        a, b, c = complex(a), complex(b), complex(c)
        if abs(b - c) <= merge_tolerance((a, b, c)):
            return cls.newton((b, b))
        return cls("quadratic_general", 2, a=a, b=b, c=c, _zero_table=((a,), (b, c)))

    @classmethod
    def generic(cls, zeros, alphas, gamma):
        zeros = tuple(tuple(complex(r) for r in zj) for zj in zeros)
        alphas = tuple(tuple(float(x) for x in aj) for aj in alphas)
        gamma = float(gamma)
        n = len(zeros)
        if n == 0:
            raise InvalidBasisError("generic basis needs zeros for q_1..q_n")
        if len(alphas) != n:
            raise InvalidBasisError(f"expected {n} alpha lists, got {len(alphas)}")
        if not gamma > 0:
            raise InvalidBasisError(f"gamma must be positive, got {gamma}")
        for j, (zj, aj) in enumerate(zip(zeros, alphas), start=1):
            if len(zj) != j or len(aj) != j:
                raise InvalidBasisError(
                    f"q_{j} needs exactly {j} zeros and {j} alphas, got {len(zj)} and {len(aj)}"
                )
            if any(x < 0 for x in aj):
                raise InvalidBasisError(f"alphas for q_{j} must be nonnegative")
            if sum(aj) > gamma * (1 + 1e-12):
                raise InvalidBasisError(f"alphas for q_{j} sum to {sum(aj)} > gamma={gamma}")
        return cls("generic", n, zeros=zeros, alphas=alphas, gamma_value=gamma, _zero_table=zeros)

    def zeros_of(self, j):
        """Zeros of q_j in their canonical order (empty for j = 0)."""
        if not 0 <= j <= self.degree:
            raise DimensionError(f"basis has degree {self.degree}, no q_{j}")
        return self._zero_table[j - 1] if j else ()

    def alphas_of(self, j):
        if not 1 <= j <= self.degree:
            raise DimensionError(f"basis has degree {self.degree}, no q_{j}")
        if self.variant in ("power", "newton"):
            return (0.0,) * (j - 1) + (1.0,)
        if self.variant == "quadratic_general":
            if j == 1:
                return (1.0,)
            d = abs(self.c - self.b)
            return (abs(self.a - self.b) / d, abs(self.a - self.c) / d)
        return self.alphas[j - 1]

    @property
    def gamma(self):
        return basis_gamma(self)

    def evaluate(self, j, z):
        """``q_j(z)`` for scalar or array ``z``."""
        z = np.asarray(z, dtype=complex)
        out = np.ones_like(z)
        for r in self.zeros_of(j):
            out = out * (z - r)
        return out

    def power_coefficients(self, j):
        """Ascending power-basis coefficients of q_j (length j + 1, last entry 1)."""
        coef = np.array([1.0 + 0j])
        for r in self.zeros_of(j):
            nxt = np.zeros(len(coef) + 1, dtype=complex)
            nxt[1:] += coef
            nxt[:-1] -= r * coef
            coef = nxt
        return coef

    def change_of_basis(self):
        """Unit upper-triangular ``T`` with ``T[k, j]`` = coefficient of z^k in q_j."""
        n = self.degree
        T = np.zeros((n + 1, n + 1), dtype=complex)
        for j in range(n + 1):
            T[: j + 1, j] = self.power_coefficients(j)
        return T

    def truncate(self, n):
        """The same basis restricted to q_0..q_n."""
        n = check_int(n, "n", 1)
        if n > self.degree:
            raise DimensionError(f"cannot extend a degree-{self.degree} basis to {n}")
        if n == self.degree:
            return self
        if self.variant == "power":
            return GeneralizedBasis.power(n)
        if self.variant == "newton":
            return GeneralizedBasis.newton(self.nodes[:n])
        if self.variant == "quadratic_general":
            return GeneralizedBasis.newton((self.a,))
        return GeneralizedBasis.generic(self.zeros[:n], self.alphas[:n], self.gamma_value)

    def to_dict(self):
        pair = lambda z: [float(z.real), float(z.imag)]
        d = {"variant": self.variant}
        if self.variant == "power":
            d["degree"] = self.degree
        elif self.variant == "newton":
            d["nodes"] = [pair(x) for x in self.nodes]
        elif self.variant == "quadratic_general":
            d.update(a=pair(self.a), b=pair(self.b), c=pair(self.c))
        else:
            d["zeros"] = [[pair(r) for r in zj] for zj in self.zeros]
            d["alphas"] = [list(aj) for aj in self.alphas]
            d["gamma"] = self.gamma_value
        return d

    @classmethod
    def from_dict(cls, d):
        variant = d.get("variant")
        if variant == "power":
            return cls.power(int(d["degree"]))
        if variant == "newton":
            return cls.newton([_parse_complex(x) for x in d["nodes"]])
        if variant == "quadratic_general":
            return cls.quadratic_general(*(_parse_complex(d[k]) for k in "abc"))
        if variant == "generic":
            zeros = [[_parse_complex(r) for r in zj] for zj in d["zeros"]]
            return cls.generic(zeros, d["alphas"], d["gamma"])
        raise InvalidBasisError(f"unknown basis variant {variant!r}; expected one of {VARIANTS}")


def _parse_complex(x):
    if isinstance(x, (list, tuple)):
        if len(x) != 2:
            raise InvalidBasisError(f"complex numbers are [re, im] pairs, got {x!r}")
        return complex(float(x[0]), float(x[1]))
    return complex(x)


def basis_gamma(basis):
    if basis.variant in ("power", "newton"):
        return 1.0
    if basis.variant == "quadratic_general":
        d = abs(basis.c - basis.b)
        if d == 0:
            raise InvalidBasisError("quadratic_general basis with b == c must be normalized to Newton")
        return (abs(basis.a - basis.b) + abs(basis.a - basis.c)) / d
    return basis.gamma_value


@dataclass(frozen=True)
class BasisZero:
    center: complex
    degrees: frozenset
    qn_multiplicity: int


def basis_zeros(basis, n=None):
    """Distinct zeros of q_1..q_n, each with the degrees j for which q_j vanishes there.

    ``qn_multiplicity`` is the multiplicity of the center as a zero of q_n.
    """
    n = basis.degree if n is None else check_int(n, "n", 1)
    if n > basis.degree:
        raise DimensionError(f"basis has degree {basis.degree} < {n}")
    allz = [r for j in range(1, n + 1) for r in basis.zeros_of(j)]
    tol = merge_tolerance(allz)
    centers, degrees, mult = [], [], []
    for j in range(1, n + 1):
        for r in basis.zeros_of(j):
            for k, cen in enumerate(centers):
                if abs(r - cen) <= tol:
                    break
            else:
                centers.append(r)
                degrees.append(set())
                mult.append(0)
                k = len(centers) - 1
            degrees[k].add(j)
            if j == n:
                mult[k] += 1
    return [BasisZero(c, frozenset(d), m) for c, d, m in zip(centers, degrees, mult)]


def convert_quadratic(A1, A0, basis):
    """Coefficients of ``I z^2 + A1 z + A0`` in a degree-2 basis, in closed form."""
    from .polynomial import MatrixPolynomial

    A1 = check_matrix(A1, name="A1")
    A0 = check_matrix(A0, name="A0")
    if A1.shape != A0.shape:
        raise DimensionError(f"A1 {A1.shape} and A0 {A0.shape} differ in shape")
    if basis.degree != 2:
        raise DimensionError(f"quadratic conversion needs a degree-2 basis, got {basis.degree}")
    I = np.eye(A1.shape[0], dtype=complex)
    if basis.variant == "power":
        C = (A0, A1, I)
    elif basis.variant == "newton":
        a, b = basis.nodes
        C = (a * A1 + A0 + a * a * I, A1 + (a + b) * I, I)
    elif basis.variant == "quadratic_general":
        a, b, c = basis.a, basis.b, basis.c
        C = (a * A1 + A0 + (a * (b + c) - b * c) * I, A1 + (b + c) * I, I)
    else:
        return convert_to_basis(MatrixPolynomial([A0, A1, I]), basis)
    return MatrixPolynomial(list(C), basis)


def convert_to_basis(P, basis):
    """Re-express a power-basis matrix polynomial in ``basis`` by back substitution."""
    from .polynomial import MatrixPolynomial

    if P.basis.variant != "power":
        P = P.to_power()
    if basis.degree != P.degree:
        raise DimensionError(f"basis degree {basis.degree} != polynomial degree {P.degree}")
    if basis.variant == "power":
        return MatrixPolynomial(list(P.coefficients), basis)
    T = basis.change_of_basis()
    n = P.degree
    C = [None] * (n + 1)
    for j in range(n, -1, -1):
        acc = P.coefficients[j].copy()
        for i in range(j + 1, n + 1):
            acc -= T[j, i] * C[i]
        C[j] = acc
    return MatrixPolynomial(C, basis)


@dataclass(frozen=True)
class ConditionReport:
    holds: bool
    worst_slack: float
    witness: complex = None
    witness_degree: int = None
    n_points: int = 0


def sample_points(basis, n, samples, seed):
    """Deterministic sample points on rings and random annuli around the basis zeros."""
    rng = np.random.default_rng(seed)
    centers = [bz.center for bz in basis_zeros(basis, n)]
    pts = []
    for r in centers:
        scale = 1.0 + abs(r)
        phase = rng.uniform(0, 2 * np.pi)
        angles = phase + 2 * np.pi * np.arange(36) / 36
        for rad in (0.1, 1.0, 10.0):
            pts.append(r + rad * scale * np.exp(1j * angles))
        if samples:
            rad = scale * 10.0 ** rng.uniform(-1, 1, samples)
            pts.append(r + rad * np.exp(1j * rng.uniform(0, 2 * np.pi, samples)))
    z = np.concatenate(pts)
    allz = np.array([r for j in range(1, n + 1) for r in basis.zeros_of(j)])
    far = np.abs(z[:, None] - allz[None, :]).min(axis=1) > 1e-6
    return z[far]


def verify_basis_condition(basis, n=None, samples=64, seed=0, alphas=None, atol=1e-10):
    """Check ``|q_{j-1}/q_j| <= sum_i alpha_i^(j) / |z - r_ij|`` for j = 1..n at sample points.

    ``alphas`` overrides the basis weights (one list per degree). A violation
    is reported, not raised.
    """
    n = basis.degree if n is None else n
    z = sample_points(basis, n, samples, seed)
    worst, witness, witness_j = np.inf, None, None
    for j in range(1, n + 1):
        w = np.asarray(alphas[j - 1] if alphas is not None else basis.alphas_of(j), dtype=float)
        rj = np.asarray(basis.zeros_of(j))
        lhs = np.abs(basis.evaluate(j - 1, z) / basis.evaluate(j, z))
        rhs = (w[None, :] / np.abs(z[:, None] - rj[None, :])).sum(axis=1)
        slack = rhs - lhs
        k = int(np.argmin(slack))
        if slack[k] < worst:
            worst, witness, witness_j = float(slack[k]), complex(z[k]), j
    holds = worst >= -atol
    return ConditionReport(
        holds,
        worst,
        None if holds else witness,
        None if holds else witness_j,
        len(z),
    )
