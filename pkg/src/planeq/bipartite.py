"""Two real qubits: tensor products, Bell states, the three-angle Bell
inequality, partial traces and the identification of R^4 with C^2.

Vectors of R^2 (x) R^2 are stored in the fixed basis order::

    |0>|0>,  |pi/2>|pi/2>,  |0>|pi/2>,  |pi/2>|0>

which is *not* the usual Kronecker order.  :func:`tensor` and :func:`kron`
take care of the permutation.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .plane import DensityMatrix, sigma_phi
from .quaternions import Quaternion, flip

# position in our ordering of each Kronecker index (00, 01, 10, 11)
_KRON_TO_BASIS = np.array([0, 2, 3, 1])
BASIS_LABELS = ("|0>|0>", "|pi/2>|pi/2>", "|0>|pi/2>", "|pi/2>|0>")

# columns: images in C^2 of the four basis vectors, as (x1, x2, y1, y2) with z = x + i y
_R4_TO_C2 = np.array([
    [1.0, 0.0, 0.0, 0.0],
    [0.0, -1.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, 1.0],
    [0.0, 0.0, 1.0, 0.0],
])

VIOLATION_TOLERANCE = 1e-12


def _perm() -> np.ndarray:
    P = np.zeros((4, 4))
    P[_KRON_TO_BASIS, np.arange(4)] = 1.0
    return P


_P = _perm()


def tensor(a, b) -> np.ndarray:
    """a (x) b in the fixed basis order."""
    return _P @ np.kron(np.asarray(a, dtype=float), np.asarray(b, dtype=float))


def kron(A, B) -> np.ndarray:
    """A (x) B as a 4x4 matrix in the fixed basis order."""
    return _P @ np.kron(np.asarray(A), np.asarray(B)) @ _P.T


def to_kronecker(v) -> np.ndarray:
    """Reorder a vector (or matrix) from the fixed basis to Kronecker order."""
    v = np.asarray(v)
    return _P.T @ v if v.ndim == 1 else _P.T @ v @ _P


def bell_states() -> dict:
    """Phi+, Phi-, Psi+, Psi- in the fixed basis order."""
    s = 1.0 / np.sqrt(2.0)
    return {
        "phi+": s * np.array([1.0, 1.0, 0.0, 0.0]),
        "phi-": s * np.array([1.0, -1.0, 0.0, 0.0]),
        "psi+": s * np.array([0.0, 0.0, 1.0, 1.0]),
        "psi-": s * np.array([0.0, 0.0, 1.0, -1.0]),
    }


def correlation(state, phi_a: float, phi_b: float) -> float:
    """<state| sigma_{phi_a} (x) sigma_{phi_b} |state>."""
    v = np.asarray(state, dtype=float)
    return float(v @ kron(sigma_phi(phi_a).matrix, sigma_phi(phi_b).matrix) @ v)


class BellTest(NamedTuple):
    lhs: float
    rhs: float
    violated: bool


def bell_inequality(phi_a: float, phi_b: float, phi_c: float) -> BellTest:
    """|P(a,b) - P(a,c)| <= 1 + P(b,c) with P = -cos, the singlet correlation."""
    lhs = abs(np.cos(phi_b - phi_a) - np.cos(phi_c - phi_a))
    rhs = 1.0 - np.cos(phi_b - phi_c)
    return BellTest(float(lhs), float(rhs), bool(lhs > rhs + VIOLATION_TOLERANCE))


def bell_inequality_sin(zeta, eta):
    """|sin^2 zeta - sin^2(eta + zeta)| <= sin^2 eta, vectorised.

    Here zeta = (phi_b - phi_a)/2 and eta = (phi_c - phi_b)/2; both sides are
    half those of :func:`bell_inequality`.
    """
    zeta = np.asarray(zeta, dtype=float)
    eta = np.asarray(eta, dtype=float)
    lhs = np.abs(np.sin(zeta) ** 2 - np.sin(eta + zeta) ** 2)
    rhs = np.sin(eta) ** 2
    return lhs, rhs, lhs > rhs + VIOLATION_TOLERANCE


class ViolationScan(NamedTuple):
    zeta: np.ndarray
    eta: np.ndarray
    lhs: np.ndarray
    rhs: np.ndarray
    violated: np.ndarray


def violation_scan(grid_n: int) -> ViolationScan:
    """Evaluate the inequality on a grid_n x grid_n grid of [-pi/2, pi/2]^2.

    Arrays are indexed ``[i_zeta, j_eta]``.
    """
    if grid_n < 8:
        raise ValueError("grid_n must be at least 8")
    axis = np.linspace(-0.5 * np.pi, 0.5 * np.pi, grid_n)
    Z, E = np.meshgrid(axis, axis, indexing="ij")
    lhs, rhs, bad = bell_inequality_sin(Z, E)
    return ViolationScan(Z, E, lhs, rhs, bad)


def diagonal_violations(grid_n: int):
    """Violation flags along eta = zeta; returns (eta, violated)."""
    eta = np.linspace(-0.5 * np.pi, 0.5 * np.pi, grid_n)
    return eta, bell_inequality_sin(eta, eta)[2]


def density_from_vector(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    return np.outer(v, v)


def partial_trace(rho4, keep: str = "A") -> DensityMatrix:
    """Reduce a 4x4 density matrix (fixed basis order) to subsystem A or B."""
    rho4 = np.asarray(rho4, dtype=float)
    if rho4.shape != (4, 4):
        raise ValueError("expected a 4x4 matrix")
    if abs(np.trace(rho4) - 1.0) > 1e-10:
        raise ValueError(f"trace {np.trace(rho4)} differs from 1")
    t = to_kronecker(rho4).reshape(2, 2, 2, 2)
    if keep == "A":
        red = np.einsum("ijkj->ik", t)
    elif keep == "B":
        red = np.einsum("ijil->jl", t)
    else:
        raise ValueError("keep must be 'A' or 'B'")
    return DensityMatrix.from_matrix(red)


def iso_r4_to_c2(v) -> np.ndarray:
    """R^2 (x) R^2 -> C^2; the four basis vectors go to e1, -e2, i e2, i e1."""
    x1, x2, y1, y2 = _R4_TO_C2 @ np.asarray(v, dtype=float)
    return np.array([x1 + 1j * y1, x2 + 1j * y2])


def iso_c2_to_r4(z) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    return _R4_TO_C2.T @ np.array([z[0].real, z[1].real, z[0].imag, z[1].imag])


def iso_c2_to_quaternion(z) -> Quaternion:
    """Inverse of Z_q = (q0 + i q3, q2 + i q1)."""
    return Quaternion.from_c2(z)


def cat_operator(z) -> np.ndarray:
    """(I + F) z / sqrt 2, with F the antilinear flip."""
    z = np.asarray(z, dtype=complex)
    return (z + flip(z)) / np.sqrt(2.0)


def bell_components() -> np.ndarray:
    """4x4 matrix whose columns are the (x1, x2, y1, y2) images of the Bell states."""
    b = bell_states()
    cols = []
    for name in ("phi+", "phi-", "psi+", "psi-"):
        z = iso_r4_to_c2(b[name])
        cols.append([z[0].real, z[1].real, z[0].imag, z[1].imag])
    return np.array(cols).T
