"""
Quaternions, rotations and spin coherent states
===============================================

Unit quaternions rotate 3-vectors by conjugation, with xi and -xi giving
the same rotation.  Their 2x2 matrix view is SU(2), and its action on the
up state produces the spin coherent states.
"""
import numpy as np

from planeq.quaternions import (I, J, K, Quaternion, d_half, flip, rotate_vector, spin_coherent_state,
                                unit_vector, xi_for_direction)

print("j k =", J * K, "  i^2 =", I * I)

xi = Quaternion.axis_angle(np.pi / 2, [0, 0, 1])
print("quarter turn about z sends x to", rotate_vector(xi, [1, 0, 0]).round(12))
print("and so does -xi:", rotate_vector(-xi, [1, 0, 0]).round(12))

# xi_n rotates the north pole onto the direction n(theta, phi).
theta, phi = 1.0, 2.0
print("n      :", unit_vector(theta, phi).round(6))
print("xi_n k :", rotate_vector(xi_for_direction(theta, phi), [0, 0, 1]).round(6))

# The coherent state is the first column of the SU(2) matrix; the second
# column is its flip.
D = d_half(xi_for_direction(theta, phi).conjugate())
z = spin_coherent_state(theta, phi)
print("first column matches:", np.allclose(D[:, 0], z))
print("second column is the flip:", np.allclose(D[:, 1], flip(z)))
