"""The Lie algebra of real skew-symmetric matrices.

Matrices are plain ``numpy`` arrays. Functions that need a validated element
call :func:`assert_skew`, which also symmetrises away rounding noise.
"""
from dataclasses import dataclass

import numpy as np

from .errors import AnglePi, BadDimension, DimensionMismatch, NotSkew, WrongDimension
from .linalg import as_square, qr
from .tolerances import TOL

__all__ = [
    "YoulaForm",
    "assert_skew",
    "youla",
    "tilde",
    "bch_series3",
    "bch_numeric",
    "random_skew",
    "block_generator",
]

# relative threshold below which an eigenvalue of iX counts as a zero mode
_ZERO_MODE = 1e-12


@dataclass(frozen=True)
class YoulaForm:
    """Orthogonal block-diagonalisation ``X = Q Sigma Q^T``.

    `lambdas` has length ``n // 2``, is sorted in descending order and holds
    the rotation rates of the 2x2 blocks ``[[0, l], [-l, 0]]`` of `Sigma`.
    """

    Q: np.ndarray
    lambdas: np.ndarray

    @property
    def n(self):
        return self.Q.shape[0]

    def sigma(self):
        """Assemble the canonical block matrix."""
        return block_generator(self.lambdas, self.n)

    def reconstruct(self):
        return self.Q @ self.sigma() @ self.Q.T


def block_generator(lambdas, n):
    """Block-diagonal skew matrix with leading 2x2 blocks ``[[0, l], [-l, 0]]``."""
    S = np.zeros((n, n))
    for k, lam in enumerate(lambdas):
        S[2 * k, 2 * k + 1] = lam
        S[2 * k + 1, 2 * k] = -lam
    return S


def assert_skew(M, tol=TOL.skew):
    """Validate `M` as skew-symmetric and return ``(M - M^T) / 2``."""
    M = as_square(M)
    if np.linalg.norm(M + M.T) > tol * (1.0 + np.linalg.norm(M)):
        raise NotSkew("matrix is not skew-symmetric within tolerance")
    return 0.5 * (M - M.T)


def _canonical_plane(P, X):
    """Rotate the orthonormal pair `P` (n x 2) to a reproducible basis.

    The first vector is the normalised projection of the first standard basis
    vector that has a sizeable component in the plane; the second is fixed by
    requiring ``q1^T X q2 >= 0``.
    """
    # row j of P holds the in-plane coordinates of e_j
    norms = np.linalg.norm(P, axis=1)
    j = int(np.argmax(norms > 1e-3 * norms.max()))
    c = P[j] / norms[j]
    q1 = P @ c
    q2 = P @ np.array([-c[1], c[0]])
    if q1 @ X @ q2 < 0:
        q2 = -q2
    return q1, q2


def _canonical_subspace(N):
    """Reproducible orthonormal basis of the column span of `N`.

    Greedy Gram-Schmidt on the projected standard basis, so that a subspace
    spanned by coordinate axes comes back as those axes.
    """
    n, r = N.shape
    if r == 0:
        return N
    P = N @ N.T
    basis = []
    for j in range(n):
        v = P[:, j].copy()
        for b in basis:
            v -= (b @ v) * b
        nv = np.linalg.norm(v)
        if nv > 1e-3:
            basis.append(v / nv)
            if len(basis) == r:
                break
    if len(basis) < r:
        return N
    return np.column_stack(basis)


def youla(X):
    """Youla decomposition of a skew-symmetric matrix.

    The invariant planes are read off the Hermitian eigenproblem of ``iX``:
    an eigenvector ``a + ib`` for the eigenvalue ``mu > 0`` spans the plane of
    the block with rate ``mu``.

    Parameters
    ----------
    X : (n, n) array_like
        Skew-symmetric matrix.

    Returns
    -------
    YoulaForm
        ``Q`` orthogonal and ``lambdas`` descending, with zero modes last.
    """
    X = assert_skew(X)
    n = X.shape[0]
    scale = np.linalg.norm(X)
    mu, V = np.linalg.eigh(1j * X)
    order = np.argsort(mu)[::-1]
    positive = [k for k in order if mu[k] > _ZERO_MODE * (1.0 + scale)]

    planes = []
    for k in positive:
        v = V[:, k]
        P, _ = np.linalg.qr(np.column_stack([v.imag, v.real]))
        planes.append(_canonical_plane(P, X))

    cols = [c for plane in planes for c in plane]
    if cols:
        B = np.column_stack(cols)
        full, _ = np.linalg.qr(B, mode="complete")
        null = full[:, len(cols):]
    else:
        null = np.eye(n)
    null = _canonical_subspace(null)

    Q = np.column_stack(cols + [null[:, j] for j in range(null.shape[1])])
    # remove the O(eps) loss of orthogonality between separately built planes
    Q, _ = qr(Q)

    T = Q.T @ X @ Q
    lambdas = np.zeros(n // 2)
    for k in range(len(planes)):
        lam = T[2 * k, 2 * k + 1]
        if lam < 0:
            Q[:, 2 * k + 1] *= -1
            lam = -lam
        lambdas[k] = lam

    # Rayleigh values can reorder nearly equal rates; keep the descending contract
    perm = np.argsort(-lambdas[: len(planes)], kind="stable")
    if np.any(perm != np.arange(len(planes))):
        idx = [i for p in perm for i in (2 * p, 2 * p + 1)]
        Q[:, : 2 * len(planes)] = Q[:, idx]
        lambdas[: len(planes)] = lambdas[: len(planes)][perm]
    return YoulaForm(Q=Q + 0.0, lambdas=lambdas + 0.0)


def tilde(X):
    """Swap the (1,4)/(2,3) and (4,1)/(3,2) entries of a 4x4 skew matrix."""
    X = np.array(X, dtype=float)
    if X.shape != (4, 4):
        raise WrongDimension(f"tilde is defined on 4x4 matrices, got {X.shape}")
    X[0, 3], X[1, 2] = X[1, 2], X[0, 3]
    X[3, 0], X[2, 1] = X[2, 1], X[3, 0]
    return X


def bch_series3(X, Y):
    """Baker-Campbell-Hausdorff series through the third-order terms."""
    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    if X.shape != Y.shape:
        raise DimensionMismatch(f"{X.shape} vs {Y.shape}")
    XY, YX = X @ Y, Y @ X
    third = (X @ XY + XY @ Y - 2 * XY @ X + Y @ YX + YX @ X - 2 * YX @ Y) / 12.0
    return X + Y + 0.5 * (XY - YX) + third


def bch_numeric(X, Y, *, guard=TOL.angle_pi_guard):
    """The principal logarithm of ``exp(X) exp(Y)``.

    Raises
    ------
    AnglePi
        If the product has a rotation angle within `guard` of pi.
    """
    from .rotation import exp_skew, log_so, rotation_angles

    X = assert_skew(X)
    Y = assert_skew(Y)
    if X.shape != Y.shape:
        raise DimensionMismatch(f"{X.shape} vs {Y.shape}")
    P = exp_skew(X) @ exp_skew(Y)
    angles = rotation_angles(P)
    if angles.size and angles.max() > np.pi - guard:
        raise AnglePi(f"product has rotation angle {angles.max():.12f} near pi")
    return log_so(P)


def random_skew(n, scale, seed):
    """Skew matrix with upper entries i.i.d. uniform on ``[-scale, scale]``."""
    if n < 2 or not scale > 0:
        raise BadDimension(f"need n >= 2 and scale > 0, got n={n}, scale={scale}")
    rng = np.random.default_rng(seed)
    iu = np.triu_indices(n, 1)
    X = np.zeros((n, n))
    X[iu] = rng.uniform(-scale, scale, size=len(iu[0]))
    return X - X.T
