"""Integral quantization of functions on the 2-sphere and the spin-1/2
magnetic Hamiltonian.

The family of density matrices is

    rho_r(theta, phi) = 1/2 [[1 + r cos(theta),          r sin(theta) e^{-i phi}],
                             [r sin(theta) e^{i phi},    1 - r cos(theta)]]

and a function f is sent to (1/2pi) int f rho_r sin(theta) dtheta dphi.
Integrals use Gauss-Legendre nodes in u = cos(theta) and a uniform periodic
rule in phi.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

import numpy as np

from .dynamics import EnergyProfile
from .plane import SIGMA1, SIGMA2, SIGMA3
from .quaternions import unit_vector, xi_for_direction

N_THETA = 32
N_PHI = 64
PAULI = np.array([SIGMA1, SIGMA2, SIGMA3], dtype=complex)


def _check_r(r: float) -> None:
    if not (0.0 <= r <= 1.0):
        raise ValueError(f"r={r} outside [0, 1]")


def rho_s2(r: float, theta, phi) -> np.ndarray:
    """Density matrix of the family at (theta, phi); broadcasts to (..., 2, 2)."""
    _check_r(r)
    theta, phi = np.broadcast_arrays(np.asarray(theta, dtype=float),
                                     np.asarray(phi, dtype=float))
    c = r * np.cos(theta)
    off = r * np.sin(theta) * np.exp(-1j * phi)
    out = np.empty(theta.shape + (2, 2), dtype=complex)
    out[..., 0, 0] = 0.5 * (1.0 + c)
    out[..., 1, 1] = 0.5 * (1.0 - c)
    out[..., 0, 1] = 0.5 * off
    out[..., 1, 0] = 0.5 * np.conj(off)
    return out


def density_from_vector(x) -> np.ndarray:
    """1/2 [[1 + x3, x1 + i x2], [x1 - i x2, 1 - x3]] for a Bloch-type vector x."""
    x1, x2, x3 = np.asarray(x, dtype=float)
    if x1 * x1 + x2 * x2 + x3 * x3 > 1.0 + 1e-12:
        raise ValueError("vector lies outside the unit ball")
    return 0.5 * np.array([[1.0 + x3, x1 + 1j * x2], [x1 - 1j * x2, 1.0 - x3]])


def transported_density(x, theta: float, phi: float) -> np.ndarray:
    """M rho_x M^dagger with M the matrix view of xi_{n(theta, -phi)}.

    For x = r k this reproduces :func:`rho_s2`.
    """
    M = xi_for_direction(theta, -phi).matrix()
    return M @ density_from_vector(x) @ M.conj().T


class SphereGrid(NamedTuple):
    theta: np.ndarray
    phi: np.ndarray
    weight: np.ndarray  # sums to 4 pi


def sphere_grid(n_theta: int = N_THETA, n_phi: int = N_PHI) -> SphereGrid:
    if n_theta < 8 or n_phi < 8:
        raise ValueError("grid sizes must be at least 8")
    u, wu = np.polynomial.legendre.leggauss(n_theta)
    phi = (np.arange(n_phi) + 0.5) * (2.0 * np.pi / n_phi)
    T, P = np.meshgrid(np.arccos(u), phi, indexing="ij")
    W = np.outer(wu, np.full(n_phi, 2.0 * np.pi / n_phi))
    return SphereGrid(T, P, W)


def resolution_matrix(r: float, n_theta: int = N_THETA, n_phi: int = N_PHI) -> np.ndarray:
    """(1/2pi) int rho_r(theta, phi) sin(theta) dtheta dphi."""
    g = sphere_grid(n_theta, n_phi)
    return np.einsum("ij,ijkl->kl", g.weight, rho_s2(r, g.theta, g.phi)) / (2.0 * np.pi)


def resolution_residual_s2(r: float, n_theta: int = N_THETA, n_phi: int = N_PHI) -> float:
    """Max-entry deviation of the sphere average of rho_r from the identity."""
    return float(np.abs(resolution_matrix(r, n_theta, n_phi) - np.eye(2)).max())


def transported_resolution(x, n_theta: int = N_THETA, n_phi: int = N_PHI) -> np.ndarray:
    """Sphere average of the transported rho_x for a general vector x.

    Only x along k gives the identity; otherwise the result is
    [[1, (x1 + i x2)/2], [(x1 - i x2)/2, 1]].
    """
    g = sphere_grid(n_theta, n_phi)
    total = np.zeros((2, 2), dtype=complex)
    for t, p, w in zip(g.theta.ravel(), g.phi.ravel(), g.weight.ravel()):
        total += w * transported_density(x, t, p)
    return total / (2.0 * np.pi)


class SphereCoefficients(NamedTuple):
    mean: complex
    cc: complex
    cs: complex


@dataclass(frozen=True)
class SphereFunction:
    """Function f(theta, phi) on the sphere, optionally with known coefficients."""

    evaluator: Callable
    exact: Optional[SphereCoefficients] = None

    def __call__(self, theta, phi):
        return self.evaluator(theta, phi)


def direction_component(i: int) -> SphereFunction:
    """The i-th Cartesian component of n(theta, phi)."""
    exact = [SphereCoefficients(0.0, 0.0, 1.0 / 3.0),
             SphereCoefficients(0.0, 0.0, -1j / 3.0),
             SphereCoefficients(0.0, 1.0 / 3.0, 0.0)][i]
    return SphereFunction(lambda t, p: unit_vector(t, p)[i], exact)


def sphere_coeffs(f: SphereFunction, n_theta: int = N_THETA,
                  n_phi: int = N_PHI) -> SphereCoefficients:
    """<f>, Cc and Cs, each (1/4pi) int (...) sin(theta) dtheta dphi.

    The integrands are f, f cos(theta) and f e^{-i phi} sin(theta).
    """
    g = sphere_grid(n_theta, n_phi)
    v = np.asarray(f(g.theta, g.phi)) * g.weight / (4.0 * np.pi)
    mean = v.sum()
    cc = (v * np.cos(g.theta)).sum()
    cs = (v * np.exp(-1j * g.phi) * np.sin(g.theta)).sum()
    return SphereCoefficients(*(x.real if np.isrealobj(x) else complex(x)
                                for x in (mean, cc, cs)))


def quantize_s2(f: SphereFunction, r: float, n_theta: int = N_THETA, n_phi: int = N_PHI,
                method: str = "quadrature") -> np.ndarray:
    """[[<f> + r Cc, r Cs], [r conj(Cs), <f> - r Cc]] for real f.

    ``method="exact"`` uses the analytic coefficients attached to ``f``.
    """
    _check_r(r)
    if method == "exact":
        if f.exact is None:
            raise ValueError("function has no analytic coefficients")
        c = f.exact
    else:
        c = sphere_coeffs(f, n_theta, n_phi)
    return np.array([[c.mean + r * c.cc, r * c.cs],
                     [r * np.conj(c.cs), c.mean - r * c.cc]], dtype=complex)


@dataclass(frozen=True)
class MagneticConfig:
    gamma: float
    J: float
    B: tuple = (0.0, 0.0, 0.0)
    r: float = 1.0

    def __post_init__(self):
        if self.J < 0.0:
            raise ValueError("J must be non-negative")
        _check_r(self.r)
        b = np.asarray(self.B, dtype=float)
        if b.shape != (3,) or not np.all(np.isfinite(b)):
            raise ValueError("B must be a finite 3-vector")
        object.__setattr__(self, "B", tuple(float(x) for x in b))


def classical_energy(cfg: MagneticConfig) -> SphereFunction:
    """h(theta, phi) = -gamma J B . n(theta, phi)."""
    B = np.asarray(cfg.B)
    k = -cfg.gamma * cfg.J
    return SphereFunction(
        lambda t, p: k * np.tensordot(B, unit_vector(t, p), axes=1),
        SphereCoefficients(0.0, k * B[2] / 3.0, k * (B[0] - 1j * B[1]) / 3.0),
    )


def magnetic_hamiltonian(cfg: MagneticConfig) -> np.ndarray:
    """-(r/3) gamma J B . sigma."""
    return -(cfg.r / 3.0) * cfg.gamma * cfg.J * np.tensordot(np.asarray(cfg.B), PAULI, axes=1)


def energy_along_j(cfg: MagneticConfig) -> float:
    """E with H = E sigma2 when B points along j."""
    bx, by, bz = cfg.B
    if bx != 0.0 or bz != 0.0:
        raise ValueError("B must point along j")
    return -(cfg.r / 3.0) * cfg.gamma * cfg.J * by


def energy_profile(cfg: MagneticConfig, hbar: float = 1.0) -> EnergyProfile:
    """Constant profile for the real pseudo-Hamiltonian E tau2 (B along j)."""
    return EnergyProfile.constant(energy_along_j(cfg), hbar)


def electron_spin_magnitude(hbar: float = 1.0) -> float:
    """sqrt(s (s + 1)) hbar with s = 1/2."""
    return np.sqrt(0.75) * hbar


def prob_dist_s2(r: float, n0, n1) -> float:
    """tr(rho(n0) rho(n1)) = (1 + r^2 n0 . n1) / 2."""
    _check_r(r)
    return 0.5 * (1.0 + r * r * float(np.dot(n0, n1)))
