import numpy as np
import pytest

from orthodist.errors import DegenerateRange, OutOfDomain
from orthodist.scalarfun import (
    PRINCIPAL_LOG,
    Z_MINUS_1,
    check_axioms,
    custom,
    doubling_constant,
    evaluate,
    symbol_by_name,
    wrap_angle,
)


def test_log_at_minus_one():
    assert evaluate(PRINCIPAL_LOG, np.pi) == 1j * np.pi


def test_z_minus_1_values():
    assert evaluate(Z_MINUS_1, 0.0) == 0
    assert evaluate(Z_MINUS_1, np.pi / 2) == pytest.approx(-1 + 1j, abs=1e-15)


def test_domain():
    with pytest.raises(OutOfDomain):
        evaluate(PRINCIPAL_LOG, -np.pi)
    with pytest.raises(OutOfDomain):
        evaluate(Z_MINUS_1, 3.5)


def test_vectorised():
    t = np.array([0.1, -0.2, np.pi])
    np.testing.assert_allclose(evaluate(PRINCIPAL_LOG, t), 1j * t)


def test_wrap_angle():
    np.testing.assert_allclose(wrap_angle([np.pi, -np.pi, 0.0, 3 * np.pi, -3.5]), [np.pi, np.pi, 0.0, np.pi, 2 * np.pi - 3.5])


def test_custom_must_vanish_at_one():
    with pytest.raises(ValueError):
        custom(lambda t: t + 1.0)


def test_lookup():
    assert symbol_by_name("zminus1") is Z_MINUS_1
    assert symbol_by_name("log") is PRINCIPAL_LOG
    with pytest.raises(ValueError):
        symbol_by_name("sin")


@pytest.mark.parametrize("f", [Z_MINUS_1, PRINCIPAL_LOG])
@pytest.mark.parametrize("grid", [64, 100, 256, 1024])
def test_builtins_satisfy_axioms(f, grid):
    report = check_axioms(f, grid)
    assert report.all_passed, report.passed


def test_log_right_limit_at_minus_pi():
    report = check_axioms(PRINCIPAL_LOG, 64)
    assert report.details["f5_modulus"] == pytest.approx(np.pi, abs=1e-8)


def test_sign_blind_symbol_is_not_conformal():
    report = check_axioms(custom(lambda t: t**2), 64)
    assert not report.passed["f2"]
    assert report.passed["f1"]


def test_jump_is_detected():
    report = check_axioms(custom(lambda t: np.where(t > 1.0, 2.0 + 0 * t, t)), 64)
    assert not report.passed["f3"]


def test_missing_left_limit_is_detected():
    # value at -1 differs from the limit t -> pi
    report = check_axioms(custom(lambda t: np.where(t == np.pi, 0.5j, 1j * t)), 64)
    assert not report.passed["f4"]


def test_vanishing_right_limit_is_detected():
    report = check_axioms(custom(lambda t: 1j * t * (t + np.pi)), 64)
    assert not report.passed["f5"]


def test_doubling_log():
    # log z^2 = 2 log z while |t| < pi/2, and the wrap at t = +-pi/2 still gives 2
    assert doubling_constant(PRINCIPAL_LOG, np.pi / 2) == pytest.approx(2.0, abs=1e-9)


@pytest.mark.parametrize("t_max", [np.pi / 2, np.pi / 3, 0.3])
def test_doubling_z_minus_1(t_max):
    # |z^2 - 1| / |z - 1| = |z + 1| = 2 cos(t / 2)
    assert doubling_constant(Z_MINUS_1, t_max) == pytest.approx(2 * np.cos(t_max / 2), abs=1e-9)


def test_doubling_monotone():
    ts = np.linspace(0.05, np.pi / 2, 12)
    for f in (Z_MINUS_1, PRINCIPAL_LOG):
        vals = [doubling_constant(f, t) for t in ts]
        assert np.all(np.diff(vals) <= 1e-12)


def test_doubling_range():
    with pytest.raises(DegenerateRange):
        doubling_constant(Z_MINUS_1, 2.0)
    with pytest.raises(DegenerateRange):
        doubling_constant(Z_MINUS_1, 0.0)


def test_log_conjugate_symmetry():
    t = np.linspace(-3.1, 3.1, 41)
    np.testing.assert_allclose(evaluate(PRINCIPAL_LOG, -t), np.conj(evaluate(PRINCIPAL_LOG, t)))
