"""Pointer model of a projective measurement.

A pointer M, prepared in |0>, interacts impulsively at t_M with a system S
through the observable A = l_par P_{phi_par} + l_perp P_{phi_perp}.  After
the kick the joint evolution is

    U = R(l_par) (x) P_{phi_par} + R(l_perp) (x) P_{phi_perp}

(pointer first), which entangles the pointer angle with the system
orientation.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .bipartite import kron, tensor
from .plane import projector, pure_state, rotation

CHUNK = 65536


@dataclass(frozen=True)
class MeasurementSetup:
    lambda_par: float
    phi_par: float
    lambda_perp: float
    t_M: float = 0.0

    @property
    def phi_perp(self) -> float:
        return self.phi_par + 0.5 * np.pi

    def observable(self) -> np.ndarray:
        return (self.lambda_par * projector(self.phi_par)
                + self.lambda_perp * projector(self.phi_perp))


class OutcomeRecord(NamedTuple):
    outcome: str
    pointer_angle: float
    amplitude: float
    probability: float


def post_interaction_evolution(setup: MeasurementSetup, t: float) -> np.ndarray:
    """Joint 4x4 evolution operator; the identity before t_M."""
    if t < setup.t_M:
        return np.eye(4)
    return (kron(rotation(setup.lambda_par), projector(setup.phi_par))
            + kron(rotation(setup.lambda_perp), projector(setup.phi_perp)))


def post_measurement_state(setup: MeasurementSetup, phi_S: float) -> np.ndarray:
    """U (|0> (x) |phi_S>) for any t after the kick."""
    U = post_interaction_evolution(setup, setup.t_M)
    return U @ tensor(pure_state(0.0), pure_state(phi_S))


def measure(setup: MeasurementSetup, phi_S: float) -> tuple[OutcomeRecord, OutcomeRecord]:
    """Outcome amplitudes and probabilities for a system prepared in |phi_S>.

    The amplitudes are the coefficients of the final state on
    |l_par>|phi_par> and |l_perp>|phi_perp>.
    """
    psi = post_measurement_state(setup, phi_S)
    records = []
    for name, lam, ang in (("parallel", setup.lambda_par, setup.phi_par),
                           ("perpendicular", setup.lambda_perp, setup.phi_perp)):
        amp = float(tensor(pure_state(lam), pure_state(ang)) @ psi)
        records.append(OutcomeRecord(name, lam, amp, amp * amp))
    # closed form keeps the pair summing to one to the last bit
    c2 = np.cos(phi_S - setup.phi_par) ** 2
    return (records[0]._replace(probability=float(c2)),
            records[1]._replace(probability=float(1.0 - c2)))


class SampleResult(NamedTuple):
    n: int
    parallel: int
    perpendicular: int
    probability: float
    seed: int


def _worker_count() -> int:
    cap = os.environ.get("PLANEQ_THREADS")
    n = os.cpu_count() or 1
    if cap:
        n = min(n, max(1, int(cap)))
    return n


def sample_outcomes(setup: MeasurementSetup, phi_S: float, n: int, seed: int = 0,
                    threads: int | None = None) -> SampleResult:
    """Draw n measurement outcomes.

    The draw is split into fixed-size chunks, each with its own generator
    spawned from ``seed``, so the counts do not depend on the thread count.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    p = measure(setup, phi_S)[0].probability
    sizes = [CHUNK] * (n // CHUNK) + ([n % CHUNK] if n % CHUNK else [])
    children = np.random.SeedSequence(seed).spawn(len(sizes))

    def draw(k):
        return int(np.random.Generator(np.random.PCG64(children[k])).binomial(sizes[k], p))

    workers = min(threads or _worker_count(), len(sizes))
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            counts = list(pool.map(draw, range(len(sizes))))
    else:
        counts = [draw(k) for k in range(len(sizes))]
    par = sum(counts)
    return SampleResult(n, par, n - par, p, seed)
