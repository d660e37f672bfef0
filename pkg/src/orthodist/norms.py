"""Unitarily invariant norms evaluated through singular values.

Note on the three-dimensional case: a skew matrix in K_3 with eigenvalues
``{i l, -i l, 0}`` has singular values ``(l, l, 0)``, hence
``||X||_F = sqrt(2) * ||X||_op = sqrt(2) * l``. The Frobenius norm therefore
coincides on K_3 with the c-spectral norm for ``c = (sqrt(2), 0, 0)``.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .errors import SpecInvalid
from .linalg import haar_orthogonal, singular_values

__all__ = [
    "NormSpec",
    "parse_norm",
    "evaluate",
    "is_frobenius_multiple",
    "unitary_invariance_residual",
]

_KINDS = ("operator", "frobenius", "schatten", "kyfan", "cspectral")


@dataclass(frozen=True)
class NormSpec:
    """Descriptor of a unitarily invariant norm.

    `param` is ``p`` for ``schatten``, ``k`` for ``kyfan`` and the weight tuple
    for ``cspectral``; `multiplier` scales the whole norm.
    """

    kind: str
    param: Optional[object] = None
    multiplier: float = 1.0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise SpecInvalid(f"unknown norm kind {self.kind!r}")
        if not (np.isfinite(self.multiplier) and self.multiplier > 0):
            raise SpecInvalid("multiplier must be positive")
        if self.kind == "schatten":
            if self.param is None or not float(self.param) >= 1:
                raise SpecInvalid("Schatten exponent must be >= 1")
        elif self.kind == "kyfan":
            if self.param is None or int(self.param) != self.param or self.param < 1:
                raise SpecInvalid("Ky Fan index must be an integer >= 1")
        elif self.kind == "cspectral":
            c = np.asarray(self.param, dtype=float)
            if c.ndim != 1 or c.size == 0:
                raise SpecInvalid("c-spectral weights must be a nonempty list")
            if not c[0] > 0 or np.any(c < 0) or np.any(np.diff(c) > 0):
                raise SpecInvalid("c-spectral weights must be nonincreasing, nonnegative, c1 > 0")
            object.__setattr__(self, "param", tuple(float(v) for v in c))

    @classmethod
    def operator(cls, m=1.0):
        return cls("operator", None, m)

    @classmethod
    def frobenius(cls, m=1.0):
        return cls("frobenius", None, m)

    @classmethod
    def schatten(cls, p, m=1.0):
        return cls("schatten", float(p), m)

    @classmethod
    def kyfan(cls, k, m=1.0):
        return cls("kyfan", int(k), m)

    @classmethod
    def cspectral(cls, c: Tuple[float, ...], m=1.0):
        return cls("cspectral", tuple(c), m)

    def __str__(self):
        if self.kind == "operator":
            body = "op"
        elif self.kind == "frobenius":
            body = "fro"
        elif self.kind == "schatten":
            body = f"schatten:{self.param:g}"
        elif self.kind == "kyfan":
            body = f"kyfan:{self.param}"
        else:
            body = "c:" + ",".join(f"{v:g}" for v in self.param)
        return body if self.multiplier == 1.0 else f"{self.multiplier:g}*{body}"


def parse_norm(text):
    """Parse the CLI grammar ``[m*](op|fro|schatten:p|kyfan:k|c:v1,v2,...)``."""
    text = text.strip()
    m = 1.0
    if "*" in text:
        head, text = text.split("*", 1)
        try:
            m = float(head)
        except ValueError:
            raise SpecInvalid(f"bad multiplier {head!r}") from None
    name, _, arg = text.partition(":")
    try:
        if name == "op" and not arg:
            return NormSpec.operator(m)
        if name == "fro" and not arg:
            return NormSpec.frobenius(m)
        if name == "schatten":
            return NormSpec.schatten(float(arg), m)
        if name == "kyfan":
            return NormSpec.kyfan(int(arg), m)
        if name == "c":
            return NormSpec.cspectral(tuple(float(v) for v in arg.split(",")), m)
    except ValueError as exc:
        raise SpecInvalid(f"cannot parse norm {text!r}: {exc}") from None
    raise SpecInvalid(f"unknown norm {text!r}")


def _gauge(spec, s):
    if spec.kind == "operator":
        return s[0] if s.size else 0.0
    if spec.kind == "frobenius":
        return np.sqrt(np.sum(s**2))
    if spec.kind == "schatten":
        p = spec.param
        top = s[0] if s.size else 0.0
        if top == 0:
            return 0.0
        # scaled to avoid overflow for large p
        return top * np.sum((s / top) ** p) ** (1.0 / p)
    if spec.kind == "kyfan":
        return np.sum(s[: spec.param])
    c = np.zeros(s.size)
    w = np.asarray(spec.param)[: s.size]
    c[: w.size] = w
    return float(c @ s)


def evaluate(spec, M):
    """Value of the norm `spec` at the matrix `M`."""
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise SpecInvalid(f"norms are evaluated on square matrices, got shape {M.shape}")
    return float(spec.multiplier * _gauge(spec, singular_values(M)))


def is_frobenius_multiple(spec):
    """Whether `spec` is a constant multiple of the Frobenius norm (decided symbolically)."""
    return spec.kind == "frobenius" or (spec.kind == "schatten" and spec.param == 2)


def unitary_invariance_residual(spec, M, trials=50, seed=0):
    """Largest ``|N(U M V) - N(M)|`` over seeded Haar orthogonal `U`, `V`."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    M = np.asarray(M)
    n = M.shape[0]
    base = evaluate(spec, M)
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        U = haar_orthogonal(n, rng)
        V = haar_orthogonal(n, rng)
        worst = max(worst, abs(evaluate(spec, U @ M @ V) - base))
    return worst
