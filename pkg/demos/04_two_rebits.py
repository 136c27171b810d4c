"""
Two real qubits: entanglement and Bell's inequality
===================================================

The singlet of two real qubits already has correlations -cos(a - b), which
break Bell's inequality for a band of analyser angles.
"""
import numpy as np

from planeq.bipartite import (bell_inequality, bell_states, correlation, density_from_vector,
                              diagonal_violations, iso_r4_to_c2, partial_trace)

psi = bell_states()["psi-"]
for a, b in [(0, 0), (0, np.pi / 3), (0, np.pi / 2)]:
    print(f"P({a:.2f}, {b:.2f}) = {correlation(psi, a, b):+.4f}")

t = bell_inequality(0.0, np.pi / 4, np.pi / 2)
print(f"|P(a,b) - P(a,c)| = {t.lhs:.4f} > 1 + P(b,c) = {t.rhs:.4f}: {t.violated}")

# Along the diagonal zeta = eta the violation occurs for 0 < |eta| < pi/4.
eta, bad = diagonal_violations(721)
print("violated eta range:", eta[bad].min().round(4), "to", eta[bad].max().round(4))

# Each Bell state looks maximally mixed from either side.
for name, v in bell_states().items():
    red = partial_trace(density_from_vector(v), "A")
    print(f"{name}: reduced r = {red.r:.1e}, entropy = {red.entropy:.4f}")

# Two real qubits carry exactly the data of one complex qubit.
print("Phi+ as a complex 2-vector:", iso_r4_to_c2(bell_states()["phi+"]))
