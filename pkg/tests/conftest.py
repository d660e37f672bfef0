import numpy as np
import pytest

ACCEPTANCE_LINES = []


def rot_z(theta, n=3):
    """Rotation by `theta` in the (1,2) plane, ``exp`` of the z-generator."""
    R = np.eye(n)
    c, s = np.cos(theta), np.sin(theta)
    R[:2, :2] = [[c, s], [-s, c]]
    return R


def z_generator(lam, n=3):
    X = np.zeros((n, n))
    X[0, 1], X[1, 0] = lam, -lam
    return X


def power_series_exp(X, terms=80):
    """Truncated sum of X^k / k!, used as an independent oracle."""
    out = np.eye(X.shape[0])
    term = np.eye(X.shape[0])
    for k in range(1, terms):
        term = term @ X / k
        out = out + term
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
