"""
Measuring an orientation with a pointer
=======================================

A pointer prepared at angle 0 receives a kick that rotates it by
lambda_par or lambda_perp depending on the system orientation.  Reading
the pointer then reveals the orientation with probability cos^2.
"""
import numpy as np

from planeq.measurement import (MeasurementSetup, measure, post_interaction_evolution,
                                sample_outcomes)

setup = MeasurementSetup(lambda_par=1.0, phi_par=0.0, lambda_perp=-1.0)
U = post_interaction_evolution(setup, 0.0)
print("U is orthogonal:", np.allclose(U.T @ U, np.eye(4)))

for d in (0.0, np.pi / 6, np.pi / 4, np.pi / 3):
    par, perp = measure(setup, d)
    res = sample_outcomes(setup, d, 100_000, seed=1)
    print(f"phi_S = {d:.4f}: P = ({par.probability:.4f}, {perp.probability:.4f}),"
          f" sampled fraction {res.parallel / res.n:.4f}")

# Same seed, same counts, whatever the number of worker threads.
print(sample_outcomes(setup, 0.7, 500_000, seed=3, threads=1)
      == sample_outcomes(setup, 0.7, 500_000, seed=3, threads=4))
