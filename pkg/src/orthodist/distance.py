"""Spectral calculus on rotations and the distances ``N(f(A^-1 B))``."""
from dataclasses import dataclass

import numpy as np

from . import norms
from .errors import DimensionMismatch
from .linalg import as_square, cluster_eigenvalues, eig_normal
from .norms import NormSpec
from .scalarfun import PRINCIPAL_LOG, Z_MINUS_1, ScalarSymbol, evaluate as eval_symbol
from .tolerances import TOL

__all__ = [
    "DistanceSpec",
    "spectral_angles",
    "borel_apply",
    "dist",
    "norm_distance",
    "geodesic_distance",
]


@dataclass(frozen=True)
class DistanceSpec:
    norm: NormSpec
    symbol: ScalarSymbol

    def __call__(self, A, B):
        return dist(self, A, B)

    def __str__(self):
        return f"{self.norm}+{self.symbol.name}"


def spectral_angles(A, *, snap=TOL.angle_pi_snap, cluster_tol=TOL.eig_cluster):
    """Unitary eigenbasis of a rotation and the arc angles of its eigenvalues.

    Eigenvalues closer than the clustering threshold share the angle of their
    mean, and angles within `snap` of -pi are moved to +pi so that the
    eigenvalue -1 is always read at ``t = pi``.
    """
    values, V = eig_normal(A)
    t = np.empty(len(values))
    for group in cluster_eigenvalues(values, 1.0, tol=cluster_tol):
        t[group] = np.angle(values[group].mean())
    t = np.where(t <= -np.pi + snap, np.pi, t)
    return t, V


def borel_apply(f, A):
    """``f(A)`` through the spectral decomposition of the rotation `A`."""
    t, V = spectral_angles(as_square(A))
    return (V * eval_symbol(f, t)) @ V.conj().T


def _pair(A, B):
    A = as_square(A)
    B = as_square(B)
    if A.shape != B.shape:
        raise DimensionMismatch(f"{A.shape} vs {B.shape}")
    return A, B


def dist(spec, A, B):
    """Generalised distance ``N(f(A^-1 B))``; `A` and `B` are rotations."""
    A, B = _pair(A, B)
    return norms.evaluate(spec.norm, borel_apply(spec.symbol, A.T @ B))


def norm_distance(N, A, B):
    """``N(A - B)``, the distance for the symbol ``z - 1``."""
    A, B = _pair(A, B)
    return norms.evaluate(N, A - B)


def geodesic_distance(A, B):
    """Frobenius norm of the principal logarithm of ``A^-1 B``."""
    A, B = _pair(A, B)
    return norms.evaluate(NormSpec.frobenius(), borel_apply(PRINCIPAL_LOG, A.T @ B))


# convenient named specs
NORM_DISTANCE_FRO = DistanceSpec(NormSpec.frobenius(), Z_MINUS_1)
GEODESIC = DistanceSpec(NormSpec.frobenius(), PRINCIPAL_LOG)
