"""Dense matrix kernel: QR, eigendecomposition of normal matrices, singular values.

The heavy lifting is delegated to LAPACK through numpy/scipy; this module adds
the input contracts, sign conventions and error translation the rest of the
package relies on.
"""
import numpy as np
import scipy.linalg

from .errors import NoConvergence, NonSquare, NotNormal
from .tolerances import TOL

__all__ = [
    "as_square",
    "qr",
    "eig_normal",
    "singular_values",
    "cluster_eigenvalues",
    "haar_orthogonal",
]


def as_square(M, dtype=float):
    """Return `M` as a finite square 2-D array, raising ``NonSquare`` otherwise."""
    M = np.asarray(M, dtype=dtype)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] < 1:
        raise NonSquare(f"expected a non-empty square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    return M


def qr(M):
    """QR factorisation of a square real matrix with ``diag(R) >= 0``.

    Returns
    -------
    Q : (n, n) ndarray
        Orthogonal factor.
    R : (n, n) ndarray
        Upper triangular factor whose diagonal is non-negative.
    """
    M = as_square(M)
    try:
        Q, R = np.linalg.qr(M)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    s = np.where(np.diag(R) < 0, -1.0, 1.0)
    return Q * s, s[:, None] * R


def eig_normal(M, *, tol=TOL.normal_commutator):
    """Unitary eigendecomposition ``M = V diag(values) V^*`` of a normal matrix.

    The complex Schur form of a normal matrix is diagonal, so the Schur vectors
    are an orthonormal eigenbasis even when eigenvalues repeat.

    Raises
    ------
    NotNormal
        If ``||M M^* - M^* M||_F > tol * ||M||_F^2``.
    NoConvergence
        If LAPACK fails to converge.
    """
    M = as_square(M, dtype=complex)
    scale = np.linalg.norm(M)
    comm = M @ M.conj().T - M.conj().T @ M
    if np.linalg.norm(comm) > tol * scale**2:
        raise NotNormal(
            f"commutator residual {np.linalg.norm(comm):.3e} exceeds "
            f"{tol:.0e} * ||M||^2"
        )
    try:
        T, V = scipy.linalg.schur(M, output="complex")
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise NoConvergence(str(exc)) from exc
    return np.diag(T).copy(), V


def singular_values(M):
    """Singular values of `M` in descending order."""
    M = np.asarray(M)
    if M.ndim != 2 or not np.all(np.isfinite(M)):
        raise ValueError("expected a finite 2-D array")
    try:
        return np.linalg.svd(M, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc


def cluster_eigenvalues(values, scale, *, tol=TOL.eig_cluster):
    """Group indices of `values` lying within ``tol * (1 + scale)`` of each other.

    Clusters are connected components of the "closer than the threshold"
    relation, returned as lists of indices in ascending order.
    """
    values = np.asarray(values)
    thresh = tol * (1.0 + scale)
    n = len(values)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(values[i] - values[j]) <= thresh:
                parent[find(i)] = find(j)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda g: g[0])


def haar_orthogonal(n, rng):
    """Haar-distributed element of O(n) drawn from the generator `rng`."""
    G = rng.standard_normal((n, n))
    Q, _ = qr(G)
    return Q
