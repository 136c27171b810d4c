"""Closed rotations and the open-system (Lindblad) evolution of a real qubit.

The pseudo-Hamiltonian is E(t) tau2, so closed evolution is a plane rotation
by (1/hbar) int E dt.  With dissipation the density matrix stays of the form
rho_{r, phi} and obeys a two-dimensional ODE in (r, phi)::

    dphi/dt = (h1 - h3)/2 sin 4phi - E/hbar
    dr/dt   = r [(h3 - h1) cos 4phi - (h1 + h3)]
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.integrate import cumulative_simpson, simpson

from .plane import (SIGMA1, SIGMA3, TAU2, DensityMatrix, SymObservable, pure_state, rotation,
                    von_neumann_entropy)

R_TOLERANCE = 1e-9


@dataclass(frozen=True)
class EnergyProfile:
    """Time-dependent energy E(t) with its hbar."""

    evaluator: Callable
    hbar: float = 1.0

    def __post_init__(self):
        if not self.hbar > 0.0:
            raise ValueError("hbar must be positive")

    @classmethod
    def constant(cls, energy: float, hbar: float = 1.0) -> "EnergyProfile":
        return cls(lambda t: np.full_like(np.asarray(t, dtype=float), energy), hbar)

    def __call__(self, t):
        return self.evaluator(t)

    def rate(self, t):
        """E(t) / hbar."""
        return self.evaluator(t) / self.hbar


def rotation_angle(profile: EnergyProfile, t0: float, t: float, n: int = 1024) -> float:
    """(1/hbar) int_{t0}^{t} E dt' by composite Simpson on n intervals."""
    if t < t0:
        raise ValueError("need t >= t0")
    if t == t0:
        return 0.0
    n += n % 2
    ts = np.linspace(t0, t, n + 1)
    return float(simpson(profile.rate(ts), x=ts))


def evolution_rotation(profile: EnergyProfile, t0: float, t: float,
                       n: int = 1024) -> np.ndarray:
    """U(t, t0) = R((1/hbar) int E)."""
    return rotation(rotation_angle(profile, t0, t, n))


def propagate_state(phi: float, profile: EnergyProfile, t0: float, t: float,
                    n: int = 1024) -> float:
    """Angle of U(t, t0)|phi>."""
    return phi + rotation_angle(profile, t0, t, n)


def propagate_density(rho: DensityMatrix, profile: EnergyProfile, t0: float, t: float,
                      n: int = 1024) -> DensityMatrix:
    return rho.rotated(rotation_angle(profile, t0, t, n))


def heisenberg_propagate(A: SymObservable, profile: EnergyProfile, t0: float, t: float,
                         n: int = 1024) -> SymObservable:
    """U^T A U, so that <U psi|A|U psi> = <psi|A_H|psi>."""
    U = evolution_rotation(profile, t0, t, n)
    return SymObservable.from_matrix(U.T @ A.matrix @ U)


@dataclass(frozen=True)
class LindbladParams:
    h1: float = 0.0
    h2: float = 0.0
    h3: float = 0.0
    energy: EnergyProfile = field(default_factory=lambda: EnergyProfile.constant(0.0))

    def __post_init__(self):
        if min(self.h1, self.h2, self.h3) < 0.0:
            raise ValueError("Lindblad rates must be non-negative")


def _require_closure(params: LindbladParams) -> None:
    if params.h2 != 0.0:
        raise ValueError("h2 must vanish for the density matrix to stay real in (r, phi) form")


def lindblad_rhs(r: float, phi: float, params: LindbladParams, t: float = 0.0):
    """(dr/dt, dphi/dt)."""
    _require_closure(params)
    h1, h3 = params.h1, params.h3
    dphi = 0.5 * (h1 - h3) * np.sin(4.0 * phi) - params.energy.rate(t)
    dr = r * ((h3 - h1) * np.cos(4.0 * phi) - (h1 + h3))
    return float(dr), float(dphi)


def lindblad_generator(rho: np.ndarray, params: LindbladParams, t: float = 0.0) -> np.ndarray:
    """Matrix form of d rho/dt, including an h2 channel along tau2."""
    H = params.energy(t) * TAU2
    comm = (rho @ H - H @ rho) / params.energy.hbar
    return (comm
            + params.h1 * (SIGMA1 @ rho @ SIGMA1 - rho)
            + params.h2 * (-TAU2 @ rho @ TAU2 - rho)
            + params.h3 * (SIGMA3 @ rho @ SIGMA3 - rho))


@dataclass(frozen=True)
class Trajectory:
    t: np.ndarray
    r: np.ndarray
    phi: np.ndarray

    @property
    def entropy(self) -> np.ndarray:
        return von_neumann_entropy(self.r)

    def density(self, k: int) -> DensityMatrix:
        return DensityMatrix(self.r[k], self.phi[k])


def _rk4_step(f, t, y, dt):
    k1 = f(t, y)
    k2 = f(t + 0.5 * dt, y + 0.5 * dt * k1)
    k3 = f(t + 0.5 * dt, y + 0.5 * dt * k2)
    k4 = f(t + dt, y + dt * k3)
    return y + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def lindblad_integrate(r0: float, phi0: float, params: LindbladParams, t0: float, t1: float,
                       dt: float = 1e-3) -> Trajectory:
    """Fixed-step RK4 on (r, phi).

    The angle is left unwrapped so that phi(t) is continuous.  The final step
    is shortened if (t1 - t0) is not a multiple of dt.
    """
    _require_closure(params)
    if not dt > 0.0:
        raise ValueError("dt must be positive")
    if t1 < t0:
        raise ValueError("need t1 >= t0")
    if not (0.0 <= r0 <= 1.0):
        raise ValueError(f"r0={r0} outside [0, 1]")

    def f(t, y):
        return np.array(lindblad_rhs(y[0], y[1], params, t))

    n = int(np.ceil((t1 - t0) / dt - 1e-9))
    ts = t0 + dt * np.arange(n + 1)
    ts[-1] = t1
    ys = np.empty((n + 1, 2))
    ys[0] = r0, phi0
    for k in range(n):
        y = _rk4_step(f, ts[k], ys[k], ts[k + 1] - ts[k])
        if not (-R_TOLERANCE <= y[0] <= 1.0 + R_TOLERANCE):
            raise FloatingPointError(f"r={y[0]} left [0, 1] at t={ts[k + 1]}")
        y[0] = min(max(y[0], 0.0), 1.0)
        ys[k + 1] = y
    return Trajectory(ts, ys[:, 0], ys[:, 1])


def r_from_phi_path(traj: Trajectory, params: LindbladParams) -> np.ndarray:
    """r(t) = r0 exp[-(h1 + h3)(t - t0) + (h3 - h1) int cos 4phi dt'] along traj."""
    h1, h3 = params.h1, params.h3
    t = traj.t
    integral = cumulative_simpson(np.cos(4.0 * traj.phi), x=t, initial=0.0)
    return traj.r[0] * np.exp(-(h1 + h3) * (t - t[0]) + (h3 - h1) * integral)


def analytic_equal_rates(r0: float, phi0: float, h: float, energy: float, t,
                         hbar: float = 1.0):
    """Exact (r, phi) for h1 = h3 = h and constant energy."""
    t = np.asarray(t, dtype=float)
    return r0 * np.exp(-2.0 * h * t), phi0 - energy * t / hbar


def semiclassical_residual(r: float, phi: float, theta: float, params: LindbladParams,
                           t: float = 0.0) -> float:
    """Gap between d/dt <theta|rho|theta> from the ODE and its classical form."""
    dr, dphi = lindblad_rhs(r, phi, params, t)
    # <theta|rho|theta> = (1 + r cos 2(phi - theta)) / 2
    c, s = np.cos(2.0 * (phi - theta)), np.sin(2.0 * (phi - theta))
    chain = 0.5 * dr * c - r * s * dphi
    classical = (r * params.energy.rate(t) * s
                 - r * params.h1 * np.cos(2.0 * phi) * np.cos(2.0 * theta)
                 - r * params.h3 * np.sin(2.0 * phi) * np.sin(2.0 * theta))
    return float(abs(chain - classical))


def expectation_rate(rho: np.ndarray, theta: float, params: LindbladParams,
                     t: float = 0.0) -> float:
    """d/dt <theta|rho|theta> from the matrix generator."""
    v = pure_state(theta)
    return float(v @ lindblad_generator(rho, params, t) @ v)


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def sl2r_commutator_check() -> dict:
    """Residuals of the sl(2, R) relations, in integer arithmetic."""
    s1 = SIGMA1.astype(int)
    s3 = SIGMA3.astype(int)
    t2 = TAU2.astype(int)
    return {
        "[s1,t2]-2s3": commutator(s1, t2) - 2 * s3,
        "[t2,s3]-2s1": commutator(t2, s3) - 2 * s1,
        "[s3,s1]+2t2": commutator(s3, s1) + 2 * t2,
    }
