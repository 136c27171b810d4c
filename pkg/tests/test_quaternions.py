import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from planeq.plane import SIGMA1, SIGMA2, SIGMA3
from planeq.quaternions import (I, J, K, ONE, Quaternion, d_half, flip, multiply, rodrigues,
                                rotate_vector, spin_coherent_state, unit_vector,
                                xi_for_direction)

comp = st.floats(-3.0, 3.0)
quats = st.tuples(comp, comp, comp, comp).map(Quaternion.from_array)


def random_unit(rng):
    q = rng.normal(size=4)
    return Quaternion.from_array(q / np.linalg.norm(q))


def hamilton(p, q):
    """Component-wise Hamilton product, written out independently."""
    a1, b1, c1, d1 = p.as_array()
    a2, b2, c2, d2 = q.as_array()
    return Quaternion(a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                      a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                      a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                      a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def test_multiplication_examples():
    assert J * K == I
    assert K * I == J and I * J == K
    assert I * I == -ONE
    q = Quaternion(1.0, -2.0, 0.5, 3.0)
    assert q * q.conjugate() == Quaternion(q.norm2())


@given(quats, quats)
def test_multiply_matches_componentwise(p, q):
    np.testing.assert_allclose(multiply(p, q).as_array(), hamilton(p, q).as_array(), atol=1e-12)


@given(quats, quats, quats)
def test_algebra_laws(p, q, s):
    np.testing.assert_allclose(((p * q) * s).as_array(), (p * (q * s)).as_array(), atol=1e-9)
    assert (p * q).norm() == pytest.approx(p.norm() * q.norm(), rel=1e-12, abs=1e-12)
    np.testing.assert_allclose((p * q).conjugate().as_array(),
                               (q.conjugate() * p.conjugate()).as_array(), atol=1e-12)


def test_basis_matrices():
    assert np.array_equal(I.matrix(), 1j * SIGMA1)
    assert np.array_equal(J.matrix(), -1j * SIGMA2)
    assert np.array_equal(K.matrix(), 1j * SIGMA3)
    assert np.array_equal(ONE.matrix(), np.eye(2))


@given(quats, quats)
def test_matrix_view_is_homomorphism(p, q):
    np.testing.assert_allclose((p * q).matrix(), p.matrix() @ q.matrix(), atol=1e-11)


def test_inverse():
    rng = np.random.default_rng(4)
    for _ in range(50):
        q = Quaternion.from_array(rng.normal(size=4))
        np.testing.assert_allclose((q * q.inverse()).as_array(), [1, 0, 0, 0], atol=1e-14)
    with pytest.raises(ZeroDivisionError):
        Quaternion(0.0).inverse()
    xi = random_unit(rng)
    np.testing.assert_allclose(xi.conjugate().matrix(), np.linalg.inv(xi.matrix()), atol=1e-14)


def test_rotate_vector_examples():
    n = unit_vector(1.1, 2.3)
    np.testing.assert_allclose(rotate_vector(xi_for_direction(1.1, 2.3), [0, 0, 1]), n,
                               atol=1e-12)
    v = np.array([0.3, -1.0, 2.0])
    np.testing.assert_array_equal(rotate_vector(Quaternion.axis_angle(0.0, [1, 1, 0]), v), v)
    np.testing.assert_allclose(rotate_vector(Quaternion.axis_angle(np.pi / 2, [0, 0, 1]),
                                             [1, 0, 0]), [0, 1, 0], atol=1e-15)
    with pytest.raises(ValueError):
        rotate_vector(Quaternion(1.0, 1e-3), v)


def test_rotation_matches_rodrigues_and_double_cover():
    rng = np.random.default_rng(6)
    for _ in range(100):
        omega = rng.uniform(-np.pi, np.pi)
        axis = rng.normal(size=3)
        v = rng.normal(size=3)
        xi = Quaternion.axis_angle(omega, axis)
        w = rotate_vector(xi, v)
        np.testing.assert_allclose(w, rodrigues(omega, axis, v), atol=1e-12)
        np.testing.assert_allclose(w, rotate_vector(-xi, v), atol=1e-12)
        assert np.linalg.norm(w) == pytest.approx(np.linalg.norm(v), rel=1e-13)


def test_xi_for_direction():
    assert xi_for_direction(0.0, 1.7) == ONE
    xi = xi_for_direction(np.pi / 2, 0.0)
    np.testing.assert_allclose(xi.as_array(), [np.cos(np.pi / 4), 0, np.sin(np.pi / 4), 0],
                               atol=1e-16)
    np.testing.assert_allclose(rotate_vector(xi, [0, 0, 1]), [1, 0, 0], atol=1e-15)
    theta, phi = 0.8, 2.1
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    M = xi_for_direction(theta, phi).matrix()
    np.testing.assert_allclose(M, [[c, -s * np.exp(1j * phi)], [s * np.exp(-1j * phi), c]],
                               atol=1e-15)


def test_pure_quaternion_of_direction():
    theta, phi = 0.8, 2.1
    n = Quaternion.from_scalar_vector(0.0, unit_vector(theta, phi))
    expected = 1j * np.array([[np.cos(theta), np.sin(theta) * np.exp(1j * phi)],
                              [np.sin(theta) * np.exp(-1j * phi), -np.cos(theta)]])
    np.testing.assert_allclose(n.matrix(), expected, atol=1e-15)


def test_d_half_examples():
    assert np.array_equal(d_half(ONE), np.eye(2))
    theta, phi = 1.3, 0.4
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    D = d_half(xi_for_direction(theta, phi))
    np.testing.assert_allclose(D, [[c, s * np.exp(-1j * phi)], [-s * np.exp(1j * phi), c]],
                               atol=1e-15)


def test_d_half_is_swapped_matrix_view():
    swap = np.array([[0, 1], [1, 0]])
    rng = np.random.default_rng(12)
    for _ in range(10):
        q = Quaternion.from_array(rng.normal(size=4))
        np.testing.assert_allclose(d_half(q), swap @ q.matrix() @ swap, atol=1e-15)


def test_d_half_homomorphism_and_adjoint():
    rng = np.random.default_rng(13)
    for _ in range(100):
        p, q = random_unit(rng), random_unit(rng)
        np.testing.assert_allclose(d_half(p * q), d_half(p) @ d_half(q), atol=1e-12)
        np.testing.assert_allclose(d_half(q.conjugate()), d_half(q).conj().T, atol=1e-15)
        assert np.linalg.det(d_half(q)) == pytest.approx(1.0, abs=1e-12)


def test_c2_round_trip():
    q = Quaternion(0.1, -0.2, 0.3, 0.4)
    assert Quaternion.from_c2(q.to_c2()) == q
    np.testing.assert_array_equal(q.matrix()[:, 0], q.to_c2())
    np.testing.assert_allclose(q.matrix()[:, 1], flip(q.to_c2()), atol=1e-16)


def test_spin_coherent_examples():
    np.testing.assert_array_equal(spin_coherent_state(0.0, 1.0), [1, 0])
    z = spin_coherent_state(np.pi, 0.7)
    np.testing.assert_allclose(z, [0, np.exp(0.7j)], atol=1e-16)
    np.testing.assert_allclose(spin_coherent_state(np.pi / 2, 0.0), [1 / np.sqrt(2)] * 2,
                               atol=1e-16)


@given(st.floats(0, np.pi), st.floats(0, 2 * np.pi))
def test_spin_coherent_columns(theta, phi):
    D = d_half(xi_for_direction(theta, phi).conjugate())
    z = spin_coherent_state(theta, phi)
    assert np.linalg.norm(z) == pytest.approx(1.0, abs=1e-15)
    np.testing.assert_allclose(D[:, 0], z, atol=1e-12)
    np.testing.assert_allclose(D[:, 1], flip(z), atol=1e-12)


def test_coherent_overlap():
    rng = np.random.default_rng(14)
    for _ in range(100):
        t1, t2 = rng.uniform(0, np.pi, 2)
        p1, p2 = rng.uniform(0, 2 * np.pi, 2)
        ov = abs(np.vdot(spin_coherent_state(t1, p1), spin_coherent_state(t2, p2))) ** 2
        assert ov == pytest.approx(0.5 * (1 + unit_vector(t1, p1) @ unit_vector(t2, p2)),
                                   abs=1e-12)


def test_flip_squares_to_minus_identity():
    z = np.array([0.3 + 0.1j, -0.7j])
    np.testing.assert_allclose(flip(flip(z)), -z, atol=1e-16)
    np.testing.assert_array_equal(flip([1, 0]), [0, 1])
    np.testing.assert_array_equal(flip([0, 1]), [-1, 0])
