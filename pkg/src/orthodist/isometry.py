"""Isometry shapes on SO(n) and the numerical harness that checks them.

The four shapes, with ``P0 = phi(I)`` and ``Q`` orthogonal:

* ``a``: ``A -> P0 Q A Q^T``
* ``b``: ``A -> P0 Q A^-1 Q^T``
* ``c``: ``A -> P0 Q exp(tilde(log A)) Q^T`` (n = 4 only)
* ``d``: ``A -> P0 Q exp(-tilde(log A)) Q^T`` (n = 4 only)

Shapes ``c`` and ``d`` depend on a choice of logarithm when ``A`` has a
rotation angle of pi, so they refuse such inputs.

All sweeps draw sample ``i`` from a generator seeded with ``(seed, i)``, which
makes every reduction independent of evaluation order.
"""
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import least_squares

from .distance import dist, spectral_angles
from .errors import AnglePi, DimensionMismatch, InsufficientSamples, NotOrthogonal, WrongDimension
from .linalg import as_square, eig_normal, haar_orthogonal
from .rotation import assert_so, exp_skew, log_so, random_so, rotation_angles
from .scalarfun import doubling_constant
from .skewsym import bch_numeric, tilde
from .tolerances import TOL

__all__ = [
    "IsometryForm",
    "MapTable",
    "apply_form",
    "random_form",
    "triple",
    "max_deviation",
    "lemma8_residual",
    "MuReport",
    "check_mu_conditions",
    "homomorphism_pairs",
    "homomorphism_residual",
    "jordan_residual",
    "power_residual",
    "sample_guarded_so",
]

TAGS = ("a", "b", "c", "d")


@dataclass(frozen=True)
class IsometryForm:
    tag: str
    Q: np.ndarray
    P0: np.ndarray

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown form tag {self.tag!r}")
        Q = as_square(self.Q)
        P0 = assert_so(self.P0)
        if Q.shape != P0.shape:
            raise DimensionMismatch(f"Q is {Q.shape}, P0 is {P0.shape}")
        if np.linalg.norm(Q.T @ Q - np.eye(Q.shape[0])) > TOL.orthogonal * Q.shape[0]:
            raise NotOrthogonal("Q is not orthogonal")
        if self.tag in ("c", "d") and Q.shape[0] != 4:
            raise WrongDimension("forms c and d exist only on SO(4)")
        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "P0", P0)

    @property
    def n(self):
        return self.Q.shape[0]

    def __call__(self, A):
        return apply_form(self, A)


@dataclass(frozen=True)
class MapTable:
    """A map given by its values on finitely many rotations."""

    pairs: Tuple[Tuple[np.ndarray, np.ndarray], ...]

    def __post_init__(self):
        if not self.pairs:
            raise ValueError("a map table needs at least one pair")
        shape = np.shape(self.pairs[0][0])
        for a, b in self.pairs:
            if np.shape(a) != shape or np.shape(b) != shape:
                raise DimensionMismatch("all matrices in a map table must share one shape")
        object.__setattr__(self, "pairs", tuple((np.asarray(a, float), np.asarray(b, float)) for a, b in self.pairs))

    @property
    def n(self):
        return self.pairs[0][0].shape[0]

    @classmethod
    def from_map(cls, phi, inputs):
        return cls(tuple((A, phi(A)) for A in inputs))


def apply_form(form, A, *, guard=TOL.angle_pi_guard):
    """Evaluate the isometry shape `form` at the rotation `A`."""
    A = as_square(A)
    if A.shape != form.Q.shape:
        raise DimensionMismatch(f"form acts on {form.Q.shape}, got {A.shape}")
    Q = form.Q
    if form.tag == "a":
        core = A
    elif form.tag == "b":
        core = A.T
    else:
        if rotation_angles(A).max() > np.pi - guard:
            raise AnglePi("forms c and d are not single-valued at rotation angle pi")
        X = tilde(log_so(A))
        core = exp_skew(X if form.tag == "c" else -X)
    return assert_so(form.P0 @ Q @ core @ Q.T)


def random_form(tag, n, seed):
    """Form with Haar-random ``Q`` in O(n) and ``P0`` in SO(n)."""
    rng = np.random.default_rng(seed)
    Q = haar_orthogonal(n, rng)
    P0 = random_so(n, rng)
    return IsometryForm(tag, Q, P0)


def triple(A, B, inverted=False):
    """Jordan triple product ``ABA``, or ``AB^-1A`` when `inverted`."""
    A = as_square(A)
    B = as_square(B)
    if A.shape != B.shape:
        raise DimensionMismatch(f"{A.shape} vs {B.shape}")
    return A @ (B.T if inverted else B) @ A


def sample_guarded_so(n, rng, cap=TOL.sample_angle_cap):
    """Haar rotation redrawn until every rotation angle is at most ``cap * pi``."""
    while True:
        A = random_so(n, rng)
        if rotation_angles(A).max() <= cap * np.pi:
            return A


def _needs_guard(phi):
    return isinstance(phi, IsometryForm) and phi.tag in ("c", "d")


def _draw(phi, n, rng):
    return sample_guarded_so(n, rng) if _needs_guard(phi) else random_so(n, rng)


def max_deviation(phi, spec, samples=100, seed=0):
    """Largest ``|d(phi A, phi B) - d(A, B)|`` over sampled pairs.

    For an :class:`IsometryForm` the pairs are seeded Haar draws. For a
    :class:`MapTable` every ordered pair of distinct entries is used when there
    are at most `samples` of them, otherwise a seeded subset of size `samples`.
    """
    if samples < 2:
        raise InsufficientSamples("need at least 2 samples")
    if isinstance(phi, MapTable):
        m = len(phi.pairs)
        if m < 2:
            raise InsufficientSamples("map table needs at least 2 entries")
        index = [(i, j) for i in range(m) for j in range(m) if i != j]
        if len(index) > samples:
            rng = np.random.default_rng(seed)
            pick = rng.choice(len(index), size=samples, replace=False)
            index = [index[k] for k in sorted(pick)]
        worst = 0.0
        for i, j in index:
            (A, FA), (B, FB) = phi.pairs[i], phi.pairs[j]
            worst = max(worst, abs(dist(spec, FA, FB) - dist(spec, A, B)))
        return worst

    worst = 0.0
    for i in range(samples):
        rng = np.random.default_rng([seed, i])
        A = _draw(phi, phi.n, rng)
        B = _draw(phi, phi.n, rng)
        worst = max(worst, abs(dist(spec, phi(A), phi(B)) - dist(spec, A, B)))
    return worst


def _sorted_spectrum(Z):
    values, _ = eig_normal(Z)
    order = np.lexsort((np.abs(values), values.real, values.imag))
    return values[order]


def lemma8_residual(X, Y):
    """Distance between the spectra of ``BCH(X, Y)`` and ``BCH(tilde X, tilde Y)``.

    Both spectra are sorted by imaginary part, then real part, then modulus,
    and compared entrywise in the max norm.
    """
    Z1 = bch_numeric(X, Y)
    Z2 = bch_numeric(tilde(X), tilde(Y))
    return float(np.abs(_sorted_spectrum(Z1) - _sorted_spectrum(Z2)).max())


@dataclass
class MuReport:
    """Empirical check of the Mazur-Ulam type conditions (c1)-(c4)."""

    c1_residual: float
    c2_sup: float
    c2_finite: bool
    c3_min_ratio: Optional[float]
    c3_max_angle: Optional[float]
    c3_doubling: Optional[float]
    c4_residual: float
    members: int
    slack: float
    passed: dict = field(default_factory=dict)


def _skew_from_coords(theta, n):
    X = np.zeros((n, n))
    X[np.triu_indices(n, 1)] = theta
    return X - X.T


def _near_members(spec, A, B, samples, rng, slack):
    """Points of ``{x : d(A,x) = d(x, B A^-1 B) = d(A,B)}`` found by least squares.

    Candidates ``x = B exp(Z)`` start from random ``Z`` on the scale of
    ``log(A^-1 B)`` and are kept when both defining equations hold to `slack`.
    `B` itself always belongs to the set.
    """
    n = A.shape[0]
    target = dist(spec, A, B)
    far = B @ A.T @ B
    scale = max(rotation_angles(A.T @ B).max(), 1e-3)
    members = [B]

    def residual(theta):
        x = B @ exp_skew(_skew_from_coords(theta, n))
        return [dist(spec, A, x) - target, dist(spec, x, far) - target]

    m = n * (n - 1) // 2
    for _ in range(samples):
        theta0 = rng.uniform(-scale, scale, size=m)
        sol = least_squares(residual, theta0, xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=200 * m)
        if np.max(np.abs(sol.fun)) <= slack:
            members.append(B @ exp_skew(_skew_from_coords(sol.x, n)))
    return members


def check_mu_conditions(spec, A, B, samples=10, seed=0, *, slack=TOL.lab_slack, searches=None):
    """Sample conditions (c1)-(c4) for the distance `spec` at the points `A`, `B`.

    `samples` seeded draws feed the (c1) and (c4) identities; `searches`
    least-squares runs (default `samples`) look for members of ``L_{A,B}``,
    which feed (c2) and (c3).
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    A = assert_so(A)
    B = assert_so(B)
    n = A.shape[0]

    c1 = 0.0
    c4 = 0.0
    for i in range(samples):
        rng = np.random.default_rng([seed, i])
        X, Xp = random_so(n, rng), random_so(n, rng)
        lhs = dist(spec, B @ X.T @ B, B @ Xp.T @ B)
        c1 = max(c1, abs(lhs - dist(spec, Xp, X)))
        Y, Yp, C, Cp = (random_so(n, rng) for _ in range(4))
        lhs = dist(spec, C @ Y.T @ Cp, C @ Yp.T @ Cp)
        c4 = max(c4, abs(lhs - dist(spec, Yp, Y)))

    searches = samples if searches is None else searches
    members = _near_members(spec, A, B, searches, np.random.default_rng([seed, samples]), slack)
    to_b = np.array([dist(spec, x, B) for x in members])
    sup = float(to_b.max())

    ratios, angles = [], []
    for x, d_xb in zip(members, to_b):
        if d_xb > 1e-9:
            ratios.append(dist(spec, x, B @ x.T @ B) / d_xb)
            angles.append(np.abs(spectral_angles(x.T @ B)[0]).max())
    if ratios:
        min_ratio = float(min(ratios))
        max_angle = float(max(angles))
        K = doubling_constant(spec.symbol, max_angle) if 0 < max_angle <= np.pi / 2 else None
    else:
        min_ratio = max_angle = K = None

    passed = {
        "c1": c1 <= 1e-10,
        "c2": bool(np.isfinite(sup)),
        "c3": min_ratio is None or min_ratio > 1.0,
        "c4": c4 <= 1e-10,
    }
    return MuReport(c1, sup, bool(np.isfinite(sup)), min_ratio, max_angle, K, c4, len(members), slack, passed)


def _check_unital(form):
    if np.linalg.norm(form.P0 - np.eye(form.n)) > 1e-12:
        raise ValueError("homomorphism checks need a unital form (P0 = I)")


def _guarded_pair(form, rng, products):
    """Pair of inputs such that every product in `products` stays off the pi locus."""
    while True:
        A1 = _draw(form, form.n, rng)
        A2 = _draw(form, form.n, rng)
        if not _needs_guard(form):
            return A1, A2
        if all(rotation_angles(P(A1, A2)).max() <= TOL.sample_angle_cap * np.pi for P in products):
            return A1, A2


def homomorphism_pairs(form, samples=50, seed=0):
    """Per-pair ``(||phi(A1 A2) - phi(A1) phi(A2)||_F, ||phi(A1 A2) - phi(A2) phi(A1)||_F)``."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    _check_unital(form)
    out = np.empty((samples, 2))
    for i in range(samples):
        rng = np.random.default_rng([seed, i])
        A1, A2 = _guarded_pair(form, rng, [lambda a, b: a @ b])
        F12 = form(A1 @ A2)
        F1, F2 = form(A1), form(A2)
        out[i] = np.linalg.norm(F12 - F1 @ F2), np.linalg.norm(F12 - F2 @ F1)
    return out


def homomorphism_residual(form, samples=50, seed=0):
    """Largest multiplicative and anti-multiplicative defects of a unital form."""
    r = homomorphism_pairs(form, samples, seed)
    return float(r[:, 0].max()), float(r[:, 1].max())


def jordan_residual(form, samples=100, seed=0, inverted=False):
    """Largest ``||phi(A B A) - phi(A) phi(B) phi(A)||_F`` (or the inverted product)."""
    _check_unital(form)
    worst = 0.0
    for i in range(samples):
        rng = np.random.default_rng([seed, i])
        A, B = _guarded_pair(form, rng, [lambda a, b: triple(a, b, inverted)])
        lhs = form(triple(A, B, inverted))
        rhs = triple(form(A), form(B), inverted)
        worst = max(worst, np.linalg.norm(lhs - rhs))
    return float(worst)


def power_residual(form, ks: Sequence[int] = (2, 3, -1), samples=100, seed=0):
    """Largest ``||phi(A^k) - phi(A)^k||_F`` over the exponents `ks`."""
    _check_unital(form)
    worst = 0.0
    for i in range(samples):
        rng = np.random.default_rng([seed, i])
        A = _draw(form, form.n, rng)
        FA = form(A)
        for k in ks:
            Ak = np.linalg.matrix_power(A.T, -k) if k < 0 else np.linalg.matrix_power(A, k)
            Fk = np.linalg.matrix_power(FA.T, -k) if k < 0 else np.linalg.matrix_power(FA, k)
            if _needs_guard(form) and rotation_angles(Ak).max() > TOL.sample_angle_cap * np.pi:
                continue
            worst = max(worst, np.linalg.norm(form(Ak) - Fk))
    return float(worst)
