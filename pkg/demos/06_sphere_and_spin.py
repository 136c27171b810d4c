"""
Quantization on the sphere and a spin in a magnetic field
=========================================================

Averaging functions on the sphere against spin density matrices sends the
direction components to the Pauli matrices, scaled by r/3.  The classical
magnetic energy -gamma J B.n becomes the spin Hamiltonian.
"""
import numpy as np

from planeq.sphere import (MagneticConfig, classical_energy, direction_component,
                           electron_spin_magnitude, energy_along_j, magnetic_hamiltonian,
                           prob_dist_s2, quantize_s2, resolution_residual_s2)

r = 0.6
for i, name in enumerate("xyz"):
    print(f"n_{name} ->\n", quantize_s2(direction_component(i), r).round(12))
print("resolution of identity residual:", resolution_residual_s2(r))

# A field along y gives a purely imaginary Hamiltonian E sigma_2, which is
# the real rotation generator used by the dynamics module.
cfg = MagneticConfig(gamma=2.0, J=electron_spin_magnitude(), B=(0.0, 1.5, 0.0), r=1.0)
print("H =\n", magnetic_hamiltonian(cfg))
print("quantized energy matches:", np.allclose(quantize_s2(classical_energy(cfg), 1.0),
                                               magnetic_hamiltonian(cfg)))
print("E =", energy_along_j(cfg))

# Overlap of two states on the sphere.
n0, n1 = np.array([0, 0, 1.0]), np.array([1.0, 0, 0])
print("prob(n0, n1) at r = 1:", prob_dist_s2(1.0, n0, n1))
