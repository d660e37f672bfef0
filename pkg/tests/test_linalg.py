import numpy as np
import pytest

from orthodist.errors import NonSquare, NotNormal
from orthodist.linalg import cluster_eigenvalues, eig_normal, haar_orthogonal, qr, singular_values
from orthodist.skewsym import random_skew

from conftest import rot_z


def test_qr_identity():
    Q, R = qr(np.eye(3))
    np.testing.assert_array_equal(Q, np.eye(3))
    np.testing.assert_array_equal(R, np.eye(3))


def test_qr_already_triangular():
    Q, R = qr(np.diag([2.0, 3.0]))
    np.testing.assert_allclose(Q, np.eye(2), atol=1e-15)
    np.testing.assert_allclose(R, np.diag([2.0, 3.0]), atol=1e-15)


def test_qr_seed7_reconstruction():
    M = np.random.default_rng(7).standard_normal((4, 4))
    Q, R = qr(M)
    assert np.linalg.norm(Q @ R - M) <= 1e-12 * np.linalg.norm(M)
    assert np.allclose(np.tril(R, -1), 0)


def test_qr_rejects_rectangular():
    with pytest.raises(NonSquare):
        qr(np.ones((2, 3)))


def test_qr_batch():
    rng = np.random.default_rng(0)
    for k in range(100):
        n = 1 + k % 8
        M = rng.standard_normal((n, n))
        Q, R = qr(M)
        assert np.linalg.norm(Q.T @ Q - np.eye(n)) <= 1e-11
        assert np.linalg.norm(Q @ R - M) <= 1e-11 * (1 + np.linalg.norm(M))
        assert np.all(np.diag(R) >= 0)


def _sorted(v):
    v = np.asarray(v)
    return v[np.lexsort((v.real, v.imag))]


def test_eig_normal_skew_block():
    values, V = eig_normal([[0.0, 1.0], [-1.0, 0.0]])
    np.testing.assert_allclose(_sorted(values), [-1j, 1j], atol=1e-14)


def test_eig_normal_diagonal():
    values, V = eig_normal(np.diag([5.0, -2.0]))
    np.testing.assert_allclose(sorted(values.real), [-2.0, 5.0])


def test_eig_normal_rotation_about_z():
    # characteristic polynomial (x - 1)(x^2 - 2 cos(pi/3) x + 1)
    values, V = eig_normal(rot_z(np.pi / 3))
    expected = [np.exp(-1j * np.pi / 3), 1.0, np.exp(1j * np.pi / 3)]
    np.testing.assert_allclose(_sorted(values), _sorted(expected), atol=1e-14)


@pytest.mark.parametrize("kind", ["skew", "orthogonal", "diagonal"])
def test_eig_normal_reconstruction(kind):
    rng = np.random.default_rng(3)
    for k in range(20):
        n = 2 + k % 7
        if kind == "skew":
            M = random_skew(n, 2.0, k)
        elif kind == "orthogonal":
            M = haar_orthogonal(n, rng)
        else:
            M = np.diag(rng.standard_normal(n))
        values, V = eig_normal(M)
        assert np.linalg.norm(V @ np.diag(values) @ V.conj().T - M) <= 1e-9 * np.linalg.norm(M)
        assert np.linalg.norm(V.conj().T @ V - np.eye(n)) <= 1e-10


def test_eig_normal_repeated_minus_one():
    U = haar_orthogonal(4, np.random.default_rng(1))
    M = U @ np.diag([-1.0, -1.0, 1.0, 1.0]) @ U.T
    values, V = eig_normal(M)
    assert np.linalg.norm(V @ np.diag(values) @ V.conj().T - M) <= 1e-12
    assert np.linalg.norm(V.conj().T @ V - np.eye(4)) <= 1e-12


def test_eig_normal_rejects_non_normal():
    with pytest.raises(NotNormal):
        eig_normal([[1.0, 1.0], [0.0, 1.0]])


def test_singular_values_examples():
    np.testing.assert_allclose(singular_values(np.diag([3.0, -2.0])), [3.0, 2.0])
    np.testing.assert_allclose(singular_values([[0, np.pi], [-np.pi, 0]]), [np.pi, np.pi])


def test_singular_values_of_k3_element():
    # eigenvalues +-1.7i, 0
    U = haar_orthogonal(3, np.random.default_rng(5))
    X = U @ np.array([[0, 1.7, 0], [-1.7, 0, 0], [0, 0, 0]]) @ U.T
    np.testing.assert_allclose(singular_values(X), [1.7, 1.7, 0.0], atol=1e-14)


def test_singular_values_orthogonal_invariance():
    rng = np.random.default_rng(11)
    for _ in range(30):
        n = int(rng.integers(2, 7))
        M = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        U, V = haar_orthogonal(n, rng), haar_orthogonal(n, rng)
        np.testing.assert_allclose(singular_values(U @ M @ V), singular_values(M), atol=1e-10)


def test_cluster_eigenvalues_groups_close_values():
    groups = cluster_eigenvalues(np.array([1.0, 1.0 + 1e-12, 2.0, -1.0]), 1.0)
    assert groups == [[0, 1], [2], [3]]
