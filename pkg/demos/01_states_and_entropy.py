"""
Real qubit states and their entropy
===================================

A state of the real qubit is a point of the unit disk: a mixing radius r
and an orientation phi.  Pure states sit on the rim.
"""
import numpy as np

from planeq import DensityMatrix, density_from_ab, sigma_phi, spectral_decompose
from planeq import von_neumann_entropy

# The pure state pointing at 30 degrees, and a half-mixed state along it.
pure = DensityMatrix(1.0, np.pi / 6)
mixed = DensityMatrix(0.5, np.pi / 6)
print("pure state:\n", pure.matrix.round(4))
print("eigenvalues of the mixed state:", mixed.eigenvalues)

# The same matrix can be written from its diagonal entry a and off-diagonal b.
a, b = mixed.ab
print(f"a = {a:.4f}, b = {b:.4f}, rebuilt r = {density_from_ab(a, b).r:.4f}")

# sigma_phi is the reflection observable; its eigenvectors are the
# orientations phi/2 and phi/2 + pi/2.
l1, p1, l2, p2 = spectral_decompose(sigma_phi(1.0))
print(f"sigma_1.0: eigenvalue {l1:+.0f} at {p1:.3f}, {l2:+.0f} at {p2:.3f}")

# Entropy falls from ln 2 at the centre to 0 on the rim.
for r in np.linspace(0, 1, 6):
    print(f"r = {r:.1f}  S = {von_neumann_entropy(r):.4f}")
