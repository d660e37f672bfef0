import numpy as np
import pytest

from orthodist.errors import BadDimension, NegativeDeterminant, NotOrthogonal
from orthodist.rotation import assert_so, exp_skew, log_so, one_param, random_so, rotation_angles
from orthodist.skewsym import random_skew, youla

from conftest import power_series_exp, rot_z, z_generator


class TestAssertSO:
    def test_identity(self):
        assert_so(np.eye(3))

    def test_reflection(self):
        with pytest.raises(NegativeDeterminant):
            assert_so(np.diag([1.0, 1.0, -1.0]))

    def test_scaled(self):
        with pytest.raises(NotOrthogonal):
            assert_so(2 * np.eye(3))


class TestExp:
    def test_zero(self):
        np.testing.assert_array_equal(exp_skew(np.zeros((4, 4))), np.eye(4))

    def test_quarter_turn(self):
        expected = [[0, 1, 0], [-1, 0, 0], [0, 0, 1]]
        np.testing.assert_allclose(exp_skew(z_generator(np.pi / 2)), expected, atol=1e-15)

    def test_half_turn(self):
        np.testing.assert_allclose(exp_skew(z_generator(np.pi)), np.diag([-1.0, -1.0, 1.0]), atol=1e-15)

    def test_matches_power_series(self):
        for seed in range(40):
            X = random_skew(2 + seed % 6, 1.0, seed)
            assert np.linalg.norm(exp_skew(X) - power_series_exp(X)) <= 1e-10

    def test_inverse_pair_and_group_membership(self):
        for seed in range(40):
            X = random_skew(2 + seed % 7, 2.0, seed)
            R = exp_skew(X)
            assert np.linalg.norm(R @ exp_skew(-X) - np.eye(R.shape[0])) <= 1e-10
            assert_so(R)
            assert np.linalg.det(R) > 0.5


class TestLog:
    def test_identity(self):
        np.testing.assert_array_equal(log_so(np.eye(3)), np.zeros((3, 3)))

    def test_quarter_turn(self):
        A = np.array([[0.0, 1, 0], [-1, 0, 0], [0, 0, 1]])
        np.testing.assert_allclose(log_so(A), z_generator(np.pi / 2), atol=1e-15)

    def test_half_turn_canonical_choice(self):
        expected = [[0, np.pi, 0], [-np.pi, 0, 0], [0, 0, 0]]
        np.testing.assert_allclose(log_so(np.diag([-1.0, -1.0, 1.0])), expected, atol=1e-15)

    def test_half_turns_in_general_position(self):
        for seed in range(20):
            U = random_so(4, seed)
            signs = [-1.0, -1.0, -1.0, -1.0] if seed % 2 else [-1.0, -1.0, 1.0, 1.0]
            A = U @ np.diag(signs) @ U.T
            X = log_so(A)
            assert np.linalg.norm(exp_skew(X) - A) <= 1e-9
            assert youla(X).lambdas.max() <= np.pi + 1e-12

    def test_round_trip(self):
        checked = 0
        for seed in range(300):
            X = random_skew(2 + seed % 7, 1.0, seed)
            if youla(X).lambdas.max() > 3.0:
                continue
            checked += 1
            assert np.linalg.norm(log_so(exp_skew(X)) - X) <= 1e-9 * (1 + np.linalg.norm(X))
        assert checked > 100

    def test_angles(self):
        np.testing.assert_allclose(rotation_angles(rot_z(0.4, 4)), [0.4, 0.0], atol=1e-15)
        np.testing.assert_allclose(rotation_angles(np.diag([-1.0, -1.0, 1.0])), [np.pi])


class TestOneParam:
    def test_endpoints(self):
        X = random_skew(4, 1.0, 0)
        np.testing.assert_allclose(one_param(X, 0.0), np.eye(4), atol=1e-15)
        np.testing.assert_allclose(one_param(X, 1.0), exp_skew(X), atol=1e-15)

    def test_group_law(self):
        X = random_skew(4, 1.0, 9)
        grid = np.linspace(-2, 2, 9)
        for s in grid:
            for t in grid:
                lhs = one_param(X, s + t)
                assert np.linalg.norm(lhs - one_param(X, s) @ one_param(X, t)) <= 1e-10


class TestRandomSO:
    def test_deterministic(self):
        np.testing.assert_array_equal(random_so(3, 5), random_so(3, 5))

    def test_valid(self):
        for seed in range(50):
            assert_so(random_so(2 + seed % 6, seed), 1e-9)

    def test_bad_dimension(self):
        with pytest.raises(BadDimension):
            random_so(1, 0)

    def test_haar_trace_mean(self):
        # the trace has mean zero under Haar measure on SO(3)
        traces = [np.trace(random_so(3, seed)) for seed in range(500)]
        assert abs(np.mean(traces)) <= 0.2
