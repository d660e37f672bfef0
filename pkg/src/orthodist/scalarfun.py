"""Scalar symbols f on the unit circle, parametrised by the arc angle.

A symbol is evaluated at ``t`` in ``(-pi, pi]`` and stands for ``f(exp(i t))``.
Keeping the angle rather than the point lets the two sides of -1 be told apart:
``t = pi`` is the value at -1 itself, ``t -> -pi`` is the limit from below.
"""
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import DegenerateRange, OutOfDomain

__all__ = [
    "ScalarSymbol",
    "Z_MINUS_1",
    "PRINCIPAL_LOG",
    "custom",
    "symbol_by_name",
    "wrap_angle",
    "evaluate",
    "AxiomReport",
    "check_axioms",
    "doubling_constant",
]


def wrap_angle(t):
    """Map angles onto ``(-pi, pi]``."""
    t = np.asarray(t, dtype=float)
    inside = (t > -np.pi) & (t <= np.pi)
    return np.where(inside, t, np.pi - np.mod(np.pi - t, 2 * np.pi))


@dataclass(frozen=True)
class ScalarSymbol:
    """A bounded function on the unit circle.

    Parameters
    ----------
    kind : {"z_minus_1", "principal_log", "custom"}
    rule : callable
        Vectorised map from arc angles to complex values.
    bound : float, optional
        Claimed bound on ``|f|``.
    name : str
    """

    kind: str
    rule: Callable = field(repr=False, compare=False)
    bound: Optional[float] = None
    name: str = ""

    def __post_init__(self):
        if self.kind not in ("z_minus_1", "principal_log", "custom"):
            raise ValueError(f"unknown symbol kind {self.kind!r}")
        if complex(self.rule(np.zeros(1))[0]) != 0:
            raise ValueError("symbol must vanish at t = 0")

    def __call__(self, t):
        return evaluate(self, t)


Z_MINUS_1 = ScalarSymbol(
    "z_minus_1", lambda t: np.exp(1j * np.asarray(t, dtype=float)) - 1.0, bound=2.0, name="zminus1"
)
PRINCIPAL_LOG = ScalarSymbol(
    "principal_log", lambda t: 1j * np.asarray(t, dtype=float), bound=np.pi, name="log"
)


def custom(rule, bound=None, name="custom"):
    """Wrap an angle-parametrised rule as a symbol."""
    return ScalarSymbol("custom", lambda t: np.asarray(rule(np.asarray(t, dtype=float)), dtype=complex), bound, name)


def symbol_by_name(name):
    """Look up a built-in symbol by its CLI name (``zminus1`` or ``log``)."""
    table = {"zminus1": Z_MINUS_1, "z_minus_1": Z_MINUS_1, "log": PRINCIPAL_LOG, "principal_log": PRINCIPAL_LOG}
    try:
        return table[name]
    except KeyError:
        raise ValueError(f"unknown symbol {name!r}; expected 'zminus1' or 'log'") from None


def evaluate(f, t):
    """Value of `f` at arc angle(s) `t` in ``(-pi, pi]``."""
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr <= -np.pi) or np.any(t_arr > np.pi) or not np.all(np.isfinite(t_arr)):
        raise OutOfDomain("angle must lie in (-pi, pi]")
    out = np.asarray(f.rule(np.atleast_1d(t_arr)), dtype=complex)
    return out.reshape(t_arr.shape) if t_arr.ndim else complex(out[0])


@dataclass
class AxiomReport:
    passed: dict
    details: dict

    @property
    def all_passed(self):
        return all(self.passed.values())


def _jumps(f, grid_size, edge):
    t = np.linspace(-np.pi + edge, np.pi - edge, grid_size)
    return np.abs(np.diff(evaluate(f, t))).max()


def check_axioms(f, grid_size=256):
    """Numerical check of the five admissibility conditions on `f`.

    The conditions are: (f1) the only zero is at ``t = 0``; (f2) a finite,
    nonzero and stable difference quotient at 1; (f3) continuity away from -1,
    judged by the largest jump between neighbouring grid points shrinking under
    refinement; (f4) the value at -1 equals the limit from ``t -> pi``;
    (f5) the limit from ``t -> -pi`` is nonzero.
    """
    if grid_size < 16:
        raise ValueError("grid_size must be at least 16")
    passed, details = {}, {}

    k = np.arange(1, grid_size + 1)
    t = -np.pi + 2 * np.pi * k[2 * k != grid_size] / grid_size
    vals = np.abs(evaluate(f, t))
    details["f1_min_modulus"] = float(vals.min())
    passed["f1"] = bool(evaluate(f, 0.0) == 0 and vals.min() > 1e-12)

    steps = np.array([1e-3, -1e-3, 1e-4, -1e-4])
    q = (evaluate(f, steps) - evaluate(f, 0.0)) / (np.exp(1j * steps) - 1.0)
    spread = np.abs(q[:, None] - q[None, :]).max()
    ref = np.abs(q).mean()
    details["f2_quotients"] = [complex(v) for v in q]
    passed["f2"] = bool(np.all(np.isfinite(q)) and ref > 1e-6 and spread <= 0.1 * ref)

    edge = 2 * np.pi / grid_size
    coarse = _jumps(f, grid_size, edge)
    fine = _jumps(f, 4 * grid_size, edge)
    details["f3_jumps"] = (float(coarse), float(fine))
    passed["f3"] = bool(fine <= 0.5 * coarse + 1e-12)

    gap = abs(evaluate(f, np.pi) - evaluate(f, np.pi - 1e-9))
    details["f4_gap"] = float(gap)
    passed["f4"] = bool(gap <= 1e-6)

    lim = abs(evaluate(f, -np.pi + 1e-9))
    details["f5_modulus"] = float(lim)
    passed["f5"] = bool(lim >= 1e-6)
    return AxiomReport(passed, details)


def doubling_constant(f, t_max, points=10_000):
    """Smallest ratio ``|f(z^2)| / |f(z)|`` for ``z = exp(i t)``, ``0 < |t| <= t_max``.

    Evaluated on a symmetric grid of `points` angles that includes both
    endpoints; angles where ``|f| < 1e-12`` are skipped.
    """
    if not 0 < t_max <= np.pi / 2:
        raise DegenerateRange("t_max must lie in (0, pi/2]")
    half = np.linspace(t_max / (points // 2), t_max, points // 2)
    t = np.concatenate([-half[::-1], half])
    base = np.abs(evaluate(f, t))
    doubled = np.abs(evaluate(f, wrap_angle(2 * t)))
    keep = base >= 1e-12
    if not np.any(keep):
        raise DegenerateRange("symbol vanishes on the whole range")
    return float((doubled[keep] / base[keep]).min())
