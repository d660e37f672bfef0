"""The rotation group SO(n): validation, exponential, logarithm, sampling."""
import numpy as np
import scipy.linalg

from .errors import BadDimension, NegativeDeterminant, NoConvergence, NotOrthogonal
from .linalg import as_square, haar_orthogonal
from .skewsym import assert_skew, youla
from .tolerances import TOL

__all__ = [
    "assert_so",
    "exp_skew",
    "log_so",
    "rotation_angles",
    "one_param",
    "random_so",
]


def assert_so(M, tol=TOL.orthogonal, *, det_tol=TOL.determinant):
    """Validate `M` as a rotation.

    ``||M^T M - I||_F`` must not exceed ``tol * n`` and the determinant must be
    within `det_tol` of +1.
    """
    M = as_square(M)
    n = M.shape[0]
    if np.linalg.norm(M.T @ M - np.eye(n)) > tol * n:
        raise NotOrthogonal("M^T M differs from the identity")
    det = np.linalg.det(M)
    if det < 0:
        raise NegativeDeterminant(f"det = {det:.6g}; matrix is a reflection")
    if abs(det - 1.0) > det_tol:
        raise NotOrthogonal(f"det = {det:.12g} is not +1")
    return M


def exp_skew(X):
    """Matrix exponential of a skew matrix, assembled from its Youla form."""
    form = youla(X)
    n = form.n
    R = np.eye(n)
    for k, lam in enumerate(form.lambdas):
        c, s = np.cos(lam), np.sin(lam)
        R[2 * k : 2 * k + 2, 2 * k : 2 * k + 2] = [[c, s], [-s, c]]
    return form.Q @ R @ form.Q.T


def _log_blocks(A):
    """Real Schur basis of `A` and its invariant planes with signed angles.

    Returns ``(Z, planes)`` where each plane is ``(i, j, theta)`` meaning the
    columns ``Z[:, i], Z[:, j]`` carry the block ``[[cos t, sin t], [-sin t, cos t]]``.
    Pairs of real eigenvalues -1 are joined into planes with angle pi, in the
    order the Schur form lists them.
    """
    A = as_square(A)
    n = A.shape[0]
    try:
        T, Z = scipy.linalg.schur(A, output="real")
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise NoConvergence(str(exc)) from exc
    planes, minus = [], []
    i = 0
    while i < n:
        if i + 1 < n and T[i + 1, i] != 0.0:
            cos_t = 0.5 * (T[i, i] + T[i + 1, i + 1])
            sin_t = 0.5 * (T[i, i + 1] - T[i + 1, i])
            planes.append((i, i + 1, np.arctan2(sin_t, cos_t)))
            i += 2
        else:
            if T[i, i] < 0:
                minus.append(i)
            i += 1
    if len(minus) % 2:
        raise NegativeDeterminant("odd number of eigenvalues -1")
    for a, b in zip(minus[::2], minus[1::2]):
        planes.append((a, b, np.pi))
    return Z, planes


def log_so(A):
    """Real principal logarithm of a rotation.

    Every rotation angle of the result lies in ``[0, pi]``. Below pi the
    logarithm is unique; at pi the plane orientation is whatever the Schur
    basis provides and the angle is taken as ``+pi``.
    """
    Z, planes = _log_blocks(A)
    n = Z.shape[0]
    L = np.zeros((n, n))
    for i, j, theta in planes:
        L[i, j] = theta
        L[j, i] = -theta
    X = Z @ L @ Z.T
    return 0.5 * (X - X.T)


def rotation_angles(A):
    """Rotation angles of `A` in ``[0, pi]``, descending, length ``n // 2``."""
    Z, planes = _log_blocks(A)
    n = Z.shape[0]
    angles = np.zeros(n // 2)
    found = np.sort(np.abs([t for _, _, t in planes]))[::-1]
    angles[: len(found)] = found
    return angles


def one_param(X, t):
    """Point ``exp(t X)`` of the one-parameter subgroup generated by `X`."""
    return exp_skew(t * assert_skew(X))


def random_so(n, seed):
    """Haar-distributed rotation, deterministic per `seed`.

    `seed` may be an integer, a ``SeedSequence`` or a ``Generator``.
    """
    if n < 2:
        raise BadDimension(f"need n >= 2, got {n}")
    rng = np.random.default_rng(seed)
    Q = haar_orthogonal(n, rng)
    if np.linalg.det(Q) < 0:
        Q[:, 0] = -Q[:, 0]
    return Q
