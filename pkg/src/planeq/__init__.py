"""Quantum mechanics of a real two-level system: states on the plane,
integral quantization of the circle and sphere, Lindblad dynamics, two-qubit
Bell analysis, quaternions and a pointer measurement model."""

__version__ = "0.1.0"

from .plane import (DensityMatrix, SymObservable, density, density_from_ab, jordan_product,
                    overlap, pure_state, rotate_density, rotation, sigma_phi,
                    spectral_decompose, von_neumann_entropy)
from .circle import (BorelUnion, CircleFunction, QuantizerConfig, angle_function,
                     berezin_lieb_check, fourier_coeffs, geometric_probability, lower_symbol,
                     povm_element, quantize, upper_symbol)
from .dynamics import (EnergyProfile, LindbladParams, evolution_rotation, lindblad_integrate,
                       lindblad_rhs)
from .bipartite import bell_states, correlation, bell_inequality, partial_trace
from .quaternions import Quaternion, d_half, rotate_vector, spin_coherent_state
from .sphere import MagneticConfig, magnetic_hamiltonian, quantize_s2, rho_s2
from .measurement import MeasurementSetup, measure, sample_outcomes
