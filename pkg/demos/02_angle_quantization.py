"""
Quantizing functions on the circle
==================================

Averaging a function f(phi) against the family of mixed states
rho_{r, phi} turns it into a 2x2 symmetric matrix.  The angle function
phi itself becomes an operator whose spectrum is pi +/- r/2.
"""
import numpy as np

from planeq import (BorelUnion, QuantizerConfig, angle_function, berezin_lieb_check,
                    geometric_probability, lower_symbol, povm_element, quantize)

cfg = QuantizerConfig(r=1.0)
A = quantize(angle_function(), cfg)
print("angle operator:\n", A.matrix)
print("eigenvalues:", A.eigenvalues)

# Cross-check the analytic coefficients with piecewise Gauss-Legendre.
print("quadrature gap:", np.abs(quantize(angle_function(), cfg, "gauss").matrix - A.matrix).max())

# Reading the operator back as a function gives a smooth portrait of the
# sawtooth: pi - (r^2 / 2) sin 2phi.
phi = np.linspace(0, np.pi, 5)
print("lower symbol:", lower_symbol(A, cfg)(phi).round(4))

# For convex g the trace of g(A) sits between two averages.
print("Berezin-Lieb for x^2:", berezin_lieb_check(A, np.square))

# Integrating the pure states over an arc gives a POVM element; its
# expectation is the probability of finding the orientation in the arc.
quarter = BorelUnion(((0.0, np.pi / 2),))
print("a([0, pi/2)):\n", povm_element(quarter).matrix.round(4))
print("probability for eta = 0:", geometric_probability(0.0, quarter))
