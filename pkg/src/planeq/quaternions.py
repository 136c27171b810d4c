"""Quaternions, their SU(2) matrix views, and spin-1/2 coherent states.

Two 2x2 complex views of a quaternion q = q0 + q1 i + q2 j + q3 k are kept
apart on purpose because they use different basis orderings:

* :meth:`Quaternion.matrix` sends i, j, k to i*sigma1, -i*sigma2, i*sigma3::

      [[q0 + i q3, -q2 + i q1],
       [q2 + i q1,  q0 - i q3]]

* :func:`d_half` is the spin-1/2 representation in the (up, down) basis::

      [[q0 - i q3,  q2 + i q1],
       [-q2 + i q1, q0 + i q3]]

The second is the first conjugated by the up/down swap.  Both are algebra
homomorphisms.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

UNIT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class Quaternion:
    q0: float
    q1: float = 0.0
    q2: float = 0.0
    q3: float = 0.0

    @classmethod
    def from_scalar_vector(cls, s: float, v) -> "Quaternion":
        v = np.asarray(v, dtype=float)
        return cls(float(s), float(v[0]), float(v[1]), float(v[2]))

    @classmethod
    def from_array(cls, a) -> "Quaternion":
        return cls(*(float(x) for x in a))

    @classmethod
    def axis_angle(cls, omega: float, axis) -> "Quaternion":
        """Unit quaternion (cos w/2, sin w/2 n) for a rotation by ``omega`` about ``axis``."""
        n = np.asarray(axis, dtype=float)
        n = n / np.linalg.norm(n)
        return cls.from_scalar_vector(np.cos(0.5 * omega), np.sin(0.5 * omega) * n)

    @property
    def scalar(self) -> float:
        return self.q0

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.q1, self.q2, self.q3])

    def as_array(self) -> np.ndarray:
        return np.array([self.q0, self.q1, self.q2, self.q3])

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.q0, -self.q1, -self.q2, -self.q3)

    def norm2(self) -> float:
        return float(self.as_array() @ self.as_array())

    def norm(self) -> float:
        return float(np.sqrt(self.norm2()))

    def inverse(self) -> "Quaternion":
        n2 = self.norm2()
        if n2 == 0.0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        return (1.0 / n2) * self.conjugate()

    def matrix(self) -> np.ndarray:
        """Canonical 2x2 complex view (i, j, k -> i sigma1, -i sigma2, i sigma3)."""
        q0, q1, q2, q3 = self.as_array()
        return np.array([[q0 + 1j * q3, -q2 + 1j * q1],
                         [q2 + 1j * q1, q0 - 1j * q3]])

    def to_c2(self) -> np.ndarray:
        """First column of :meth:`matrix`, Z_q = (q0 + i q3, q2 + i q1)."""
        return np.array([self.q0 + 1j * self.q3, self.q2 + 1j * self.q1])

    @classmethod
    def from_c2(cls, z) -> "Quaternion":
        z1, z2 = complex(z[0]), complex(z[1])
        return cls(z1.real, z2.imag, z2.real, z1.imag)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return multiply(self, other)
        return Quaternion(*(other * self.as_array()))

    def __rmul__(self, c):
        return Quaternion(*(c * self.as_array()))

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(*(self.as_array() + other.as_array()))

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(*(self.as_array() - other.as_array()))

    def __neg__(self) -> "Quaternion":
        return Quaternion(*(-self.as_array()))


ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def multiply(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product in scalar-vector form."""
    pv, qv = p.vector, q.vector
    return Quaternion.from_scalar_vector(
        p.q0 * q.q0 - pv @ qv,
        q.q0 * pv + p.q0 * qv + np.cross(pv, qv),
    )


def unit_vector(theta: float, phi: float) -> np.ndarray:
    """Point of the unit sphere with polar angle ``theta`` and azimuth ``phi``."""
    st = np.sin(theta)
    return np.array([st * np.cos(phi), st * np.sin(phi), np.cos(theta)])


def rotate_vector(xi: Quaternion, v) -> np.ndarray:
    """Rotate a 3-vector by the unit quaternion ``xi`` via xi (0, v) conj(xi)."""
    if abs(xi.norm() - 1.0) > UNIT_TOLERANCE:
        raise ValueError(f"rotation quaternion must have unit norm, got {xi.norm()}")
    w = multiply(multiply(xi, Quaternion.from_scalar_vector(0.0, v)), xi.conjugate())
    return w.vector


def rodrigues(omega: float, axis, v) -> np.ndarray:
    """Axis-angle rotation of ``v`` written out with dot and cross products."""
    n = np.asarray(axis, dtype=float)
    n = n / np.linalg.norm(n)
    v = np.asarray(v, dtype=float)
    return ((v @ n) * n + np.cos(omega) * np.cross(n, np.cross(v, n))
            + np.sin(omega) * np.cross(n, v))


def xi_for_direction(theta: float, phi: float) -> Quaternion:
    """Unit quaternion of the rotation taking the north pole k to n(theta, phi).

    The rotation is by ``theta`` about u_phi = (-sin phi, cos phi, 0).
    """
    u = np.array([-np.sin(phi), np.cos(phi), 0.0])
    return Quaternion.from_scalar_vector(np.cos(0.5 * theta), np.sin(0.5 * theta) * u)


def d_half(q: Quaternion) -> np.ndarray:
    """Spin-1/2 matrix D^{1/2}(q) in the (up, down) basis."""
    q0, q1, q2, q3 = q.as_array()
    return np.array([[q0 - 1j * q3, q2 + 1j * q1],
                     [-q2 + 1j * q1, q0 + 1j * q3]])


def flip(z) -> np.ndarray:
    """Antilinear flip (z1, z2) -> (-conj z2, conj z1)."""
    z = np.asarray(z, dtype=complex)
    return np.array([-np.conj(z[1]), np.conj(z[0])])


def spin_coherent_state(theta: float, phi: float) -> np.ndarray:
    """|theta, phi> = (cos theta/2, e^{i phi} sin theta/2)."""
    return np.array([np.cos(0.5 * theta), np.exp(1j * phi) * np.sin(0.5 * theta)])
