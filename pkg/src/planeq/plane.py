"""States, observables and density matrices on the real plane.

Pure states are unit vectors |phi> = (cos phi, sin phi).  Observables are
real symmetric 2x2 matrices written in the basis {I, sigma3, sigma1}, and
density matrices are stored in polar form (r, phi) with phi in [0, pi).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * np.pi

IDENTITY = np.eye(2)
SIGMA1 = np.array([[0.0, 1.0], [1.0, 0.0]])
SIGMA3 = np.array([[1.0, 0.0], [0.0, -1.0]])
SIGMA2 = np.array([[0.0, -1.0j], [1.0j, 0.0]])
# real antisymmetric generator of plane rotations, tau2 = -i sigma2
TAU2 = np.array([[0.0, -1.0], [1.0, 0.0]])

AB_TOLERANCE = 1e-12


def _wrap(x, period):
    y = np.mod(x, period)
    # np.mod can round up to exactly ``period`` for tiny negative inputs
    y = np.where(y >= period, 0.0, y)
    return float(y) if y.ndim == 0 else y


def normalize_angle(x):
    """Map an angle to [0, 2 pi)."""
    return _wrap(x, TWO_PI)


def ray_angle(x):
    """Map an angle to [0, pi), identifying opposite unit vectors."""
    return _wrap(x, np.pi)


def rotation(phi: float) -> np.ndarray:
    c, s = np.cos(phi), np.sin(phi)
    return np.array([[c, -s], [s, c]])


def pure_state(phi: float) -> np.ndarray:
    return np.array([np.cos(phi), np.sin(phi)])


def overlap(eta, phi):
    """<eta|phi> = cos(phi - eta)."""
    c = np.cos(np.subtract(phi, eta))
    return float(c) if c.ndim == 0 else c


def projector(phi: float) -> np.ndarray:
    v = pure_state(phi)
    return np.outer(v, v)


@dataclass(frozen=True)
class SymObservable:
    """Real symmetric matrix alpha*I + delta*sigma3 + beta*sigma1."""

    alpha: float
    delta: float
    beta: float

    @classmethod
    def from_matrix(cls, m, atol: float = 1e-12) -> "SymObservable":
        m = np.asarray(m, dtype=float)
        if m.shape != (2, 2):
            raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
        if abs(m[0, 1] - m[1, 0]) > atol * max(1.0, np.abs(m).max()):
            raise ValueError("matrix is not symmetric")
        return cls(
            0.5 * (m[0, 0] + m[1, 1]),
            0.5 * (m[0, 0] - m[1, 1]),
            0.5 * (m[0, 1] + m[1, 0]),
        )

    @classmethod
    def identity(cls, c: float = 1.0) -> "SymObservable":
        return cls(c, 0.0, 0.0)

    @property
    def matrix(self) -> np.ndarray:
        a, d, b = self.alpha, self.delta, self.beta
        return np.array([[a + d, b], [b, a - d]])

    @property
    def components(self) -> np.ndarray:
        return np.array([self.alpha, self.delta, self.beta])

    @property
    def trace(self) -> float:
        return 2.0 * self.alpha

    @property
    def radius(self) -> float:
        return float(np.hypot(self.delta, self.beta))

    @property
    def eigenvalues(self) -> tuple[float, float]:
        """(largest, smallest) = alpha +/- sqrt(delta^2 + beta^2)."""
        rho = self.radius
        return self.alpha + rho, self.alpha - rho

    def expectation(self, state) -> float:
        v = np.asarray(state, dtype=float)
        return float(v @ self.matrix @ v)

    def jordan(self, other: "SymObservable") -> "SymObservable":
        return jordan_product(self, other)

    def __add__(self, other: "SymObservable") -> "SymObservable":
        return SymObservable(self.alpha + other.alpha, self.delta + other.delta,
                             self.beta + other.beta)

    def __sub__(self, other: "SymObservable") -> "SymObservable":
        return self + (-1.0) * other

    def __mul__(self, c: float) -> "SymObservable":
        return SymObservable(c * self.alpha, c * self.delta, c * self.beta)

    __rmul__ = __mul__


def sigma_phi(phi: float) -> SymObservable:
    """cos(phi) sigma3 + sin(phi) sigma1, the orientation observable."""
    return SymObservable(0.0, float(np.cos(phi)), float(np.sin(phi)))


def jordan_product(A: SymObservable, B: SymObservable) -> SymObservable:
    """(AB + BA)/2, computed on the (alpha, delta, beta) components."""
    return SymObservable(
        A.alpha * B.alpha + A.delta * B.delta + A.beta * B.beta,
        A.alpha * B.delta + B.alpha * A.delta,
        A.alpha * B.beta + B.alpha * A.beta,
    )


def spectral_decompose(A: SymObservable) -> tuple[float, float, float, float]:
    """Eigen-decomposition A = l1 P_{phi1} + l2 P_{phi2}.

    Returns ``(l1, phi1, l2, phi2)`` with ``l1 >= l2`` and both angles in
    [0, pi).  A degenerate matrix (delta = beta = 0) gets ``phi1 = 0``.
    """
    l1, l2 = A.eigenvalues
    if A.delta == 0.0 and A.beta == 0.0:
        phi1 = 0.0
    else:
        # A - alpha I = radius * sigma_psi, whose +1 eigenvector is |psi/2>
        phi1 = ray_angle(0.5 * np.arctan2(A.beta, A.delta))
    return l1, phi1, l2, ray_angle(phi1 + 0.5 * np.pi)


@dataclass(frozen=True)
class DensityMatrix:
    """Real density matrix (I + r sigma_{2 phi}) / 2.

    ``r`` is the mixing radius in [0, 1] and ``phi`` the polar angle of the
    dominant eigenvector, stored in [0, pi).
    """

    r: float
    phi: float = 0.0

    def __post_init__(self):
        r = float(self.r)
        if not (0.0 <= r <= 1.0):
            raise ValueError(f"mixing radius r={r} outside [0, 1]")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "phi", ray_angle(float(self.phi)))

    @classmethod
    def from_ab(cls, a: float, b: float) -> "DensityMatrix":
        """Build from the entries of [[a, b], [b, 1 - a]]."""
        if not (-AB_TOLERANCE <= a <= 1.0 + AB_TOLERANCE):
            raise ValueError(f"a={a} outside [0, 1]")
        disc = a * (1.0 - a) - b * b
        if disc < -AB_TOLERANCE:
            raise ValueError(f"negative determinant {disc}: not a physical state")
        r = min(np.hypot(2.0 * a - 1.0, 2.0 * b), 1.0)
        phi = 0.5 * np.arctan2(2.0 * b, 2.0 * a - 1.0) if r > 0.0 else 0.0
        return cls(r, phi)

    @classmethod
    def from_matrix(cls, m, atol: float = 1e-10) -> "DensityMatrix":
        m = np.asarray(m)
        if np.iscomplexobj(m):
            if np.abs(m.imag).max() > atol:
                raise ValueError("density matrix has imaginary entries")
            m = m.real
        if abs(np.trace(m) - 1.0) > atol:
            raise ValueError(f"trace {np.trace(m)} differs from 1")
        A = SymObservable.from_matrix(m, atol=atol)
        r = 2.0 * A.radius
        if r > 1.0 + atol:
            raise ValueError("matrix has a negative eigenvalue")
        return cls(min(r, 1.0), 0.5 * np.arctan2(A.beta, A.delta) if r > 0.0 else 0.0)

    @property
    def matrix(self) -> np.ndarray:
        c, s = np.cos(2.0 * self.phi), np.sin(2.0 * self.phi)
        h = 0.5 * self.r
        return np.array([[0.5 + h * c, h * s], [h * s, 0.5 - h * c]])

    @property
    def observable(self) -> SymObservable:
        return SymObservable(0.5, 0.5 * self.r * np.cos(2.0 * self.phi),
                             0.5 * self.r * np.sin(2.0 * self.phi))

    @property
    def ab(self) -> tuple[float, float]:
        m = self.matrix
        return float(m[0, 0]), float(m[0, 1])

    @property
    def eigenvalues(self) -> tuple[float, float]:
        return 0.5 * (1.0 + self.r), 0.5 * (1.0 - self.r)

    @property
    def determinant(self) -> float:
        return 0.25 * (1.0 - self.r * self.r)

    @property
    def entropy(self) -> float:
        return von_neumann_entropy(self)

    def rotated(self, omega: float) -> "DensityMatrix":
        """R(omega) rho R(-omega)."""
        return DensityMatrix(self.r, self.phi + omega)

    def probability(self, phi: float) -> float:
        """<phi|rho|phi> = (1 + r cos 2(phi - self.phi)) / 2."""
        return 0.5 * (1.0 + self.r * np.cos(2.0 * (phi - self.phi)))


def density(r: float, phi: float) -> DensityMatrix:
    return DensityMatrix(r, phi)


def density_from_ab(a: float, b: float) -> DensityMatrix:
    return DensityMatrix.from_ab(a, b)


def rotate_density(rho: DensityMatrix, omega: float) -> DensityMatrix:
    return rho.rotated(omega)


def _xlogx(p):
    p = np.asarray(p, dtype=float)
    safe = np.where(p > 0.0, p, 1.0)
    return np.where(p > 0.0, p * np.log(safe), 0.0)


def von_neumann_entropy(rho) -> float:
    """Entropy in nats of a density matrix, or of the mixing radius ``r``.

    Accepts a :class:`DensityMatrix` or a plain radius (scalar or array).
    Uses the convention 0 ln 0 = 0.
    """
    r = rho.r if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=float)
    # adding 0.0 turns the -0.0 of a pure state into +0.0
    s = 0.0 - _xlogx(0.5 * (1.0 + r)) - _xlogx(0.5 * (1.0 - r))
    return float(s) if np.ndim(s) == 0 else s
