"""
Closed and open evolution
=========================

Without an environment a state simply rotates.  Coupling to an environment
through the Lindblad channels sigma_1 and sigma_3 shrinks the mixing
radius and drives the entropy toward ln 2.
"""
import numpy as np

from planeq.dynamics import (EnergyProfile, LindbladParams, analytic_equal_rates, lindblad_integrate,
                             propagate_state, r_from_phi_path)

prof = EnergyProfile.constant(1.0)
print("closed: phi = 0.3 after t = 2 ->", propagate_state(0.3, prof, 0.0, 2.0))

# Equal rates have a closed-form solution: r = exp(-2 h t), phi = phi0 - E t.
params = LindbladParams(h1=0.5, h3=0.5, energy=prof)
traj = lindblad_integrate(1.0, 0.3, params, 0.0, 5.0, dt=1e-3)
r_a, phi_a = analytic_equal_rates(1.0, 0.3, 0.5, 1.0, traj.t)
print("max |r - exact| :", np.abs(traj.r - r_a).max())
print("max |phi - exact|:", np.abs(traj.phi - phi_a).max())

# Unequal rates: r is still an exponential of an integral along the path.
params = LindbladParams(h1=0.2, h3=0.7, energy=prof)
traj = lindblad_integrate(0.9, 0.1, params, 0.0, 3.0, dt=1e-3)
print("path-formula residual:", np.abs(r_from_phi_path(traj, params) - traj.r).max())
for k in range(0, len(traj.t), 750):
    print(f"t = {traj.t[k]:.2f}  r = {traj.r[k]:.4f}  S = {traj.entropy[k]:.4f}")
