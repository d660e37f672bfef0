"""Runnable verification suites behind ``orthodist verify``.

Every suite returns ``(passed, report)`` where `report` is a JSON-friendly
dict. Suites are deterministic for a given seed.
"""
import numpy as np

from .distance import DistanceSpec
from .isometry import (
    IsometryForm,
    check_mu_conditions,
    homomorphism_pairs,
    jordan_residual,
    lemma8_residual,
    max_deviation,
    power_residual,
    random_form,
)
from .linalg import haar_orthogonal, singular_values
from .norms import NormSpec
from .rotation import exp_skew, random_so
from .scalarfun import PRINCIPAL_LOG, Z_MINUS_1
from .skewsym import random_skew

DEFAULT_NORMS = (
    NormSpec.operator(),
    NormSpec.frobenius(),
    NormSpec.schatten(3),
    NormSpec.kyfan(2),
    NormSpec.cspectral((2.0, 1.0, 0.5)),
)
DEFAULT_SYMBOLS = (Z_MINUS_1, PRINCIPAL_LOG)

DEFAULT_TOL = {
    "theorem1-ab": 1e-9,
    "theorem1-cd": 1e-7,
    "lemma8": 1e-8,
    "jordan": 1e-9,
    "mu-conditions": 1e-10,
    "frobenius-k3": 1e-12,
    "distinguish-c": 0.1,
    "maptable": 1e-9,
}


def _grid(norms, symbols):
    return [DistanceSpec(N, f) for N in norms for f in symbols]


def sufficiency(tags, n, specs, samples, seed, tol):
    rows, worst = [], 0.0
    for k, tag in enumerate(tags):
        form = random_form(tag, n, [seed, k])
        for spec in specs:
            dev = max_deviation(form, spec, samples, seed)
            worst = max(worst, dev)
            rows.append({"form": tag, "spec": str(spec), "max_deviation": dev})
    return worst <= tol, {"n": n, "tol": tol, "worst": worst, "cases": rows}


def scaled_skew(n, radius, seed):
    """Seeded skew matrix with spectral norm `radius`."""
    X = random_skew(n, 1.0, seed)
    return X * (radius / np.linalg.norm(X, 2))


def lemma8(samples, seed, tol, scale=0.5):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for i in range(samples):
        X = scaled_skew(4, scale * rng.uniform(), [seed, i, 0])
        Y = scaled_skew(4, scale * rng.uniform(), [seed, i, 1])
        worst = max(worst, lemma8_residual(X, Y))
    return worst <= tol, {"samples": samples, "scale": scale, "tol": tol, "worst": worst}


def jordan(n, samples, seed, tol):
    rows, worst = [], 0.0
    for k, tag in enumerate("ab"):
        Q = haar_orthogonal(n, np.random.default_rng([seed, k]))
        form = IsometryForm(tag, Q, np.eye(n))
        jr = jordan_residual(form, samples, seed)
        pr = power_residual(form, (2, 3, -1), samples, seed)
        worst = max(worst, jr, pr)
        rows.append({"form": tag, "jordan": jr, "power": pr})
    return worst <= tol, {"n": n, "tol": tol, "worst": worst, "cases": rows}


def mu_conditions(n, specs, samples, seed, tol, step=0.05):
    rows, ok = [], True
    A = random_so(n, [seed, 0])
    B = A @ exp_skew(random_skew(n, step, [seed, 1]))
    for spec in specs:
        rep = check_mu_conditions(spec, A, B, samples, seed, searches=min(samples, 5))
        case_ok = rep.c1_residual <= tol and rep.c4_residual <= tol and rep.c2_finite and rep.passed["c3"]
        ok &= case_ok
        rows.append(
            {
                "spec": str(spec),
                "c1": rep.c1_residual,
                "c2_sup": rep.c2_sup,
                "c3_min_ratio": rep.c3_min_ratio,
                "c3_doubling": rep.c3_doubling,
                "c4": rep.c4_residual,
                "members": rep.members,
                "slack": rep.slack,
                "pass": case_ok,
            }
        )
    return ok, {"n": n, "tol": tol, "cases": rows}


def frobenius_k3(samples, seed, tol):
    worst = 0.0
    for i in range(samples):
        X = random_skew(3, 1.0 + i % 5, [seed, i])
        s = singular_values(X)
        worst = max(worst, abs(np.linalg.norm(X) - np.sqrt(2) * s[0]))
    return worst <= tol, {"samples": samples, "tol": tol, "worst": worst}


def distinguish_c(samples, seed, threshold=0.1):
    Q = haar_orthogonal(4, np.random.default_rng(seed))
    form = IsometryForm("c", Q, np.eye(4))
    r = homomorphism_pairs(form, samples, seed)
    both = np.minimum(r[:, 0], r[:, 1])
    best = int(np.argmax(both))
    return bool(both[best] >= threshold), {
        "samples": samples,
        "threshold": threshold,
        "witness": best,
        "mult": float(r[best, 0]),
        "antimult": float(r[best, 1]),
    }


def maptable(table, spec, samples, seed, tol):
    dev = max_deviation(table, spec, samples, seed)
    return dev <= tol, {"entries": len(table.pairs), "spec": str(spec), "tol": tol, "max_deviation": dev}


def run_suite(name, *, n=None, samples=200, seed=0, tol=None, norms=None, symbols=None, table=None):
    tol = DEFAULT_TOL[name] if tol is None else tol
    specs = _grid(norms or DEFAULT_NORMS, symbols or DEFAULT_SYMBOLS)
    if name == "theorem1-ab":
        return sufficiency("ab", n or 3, specs, samples, seed, tol)
    if name == "theorem1-cd":
        if n not in (None, 4):
            raise ValueError("theorem1-cd runs on SO(4) only")
        return sufficiency("cd", 4, specs, samples, seed, tol)
    if name == "lemma8":
        return lemma8(samples, seed, tol)
    if name == "jordan":
        return jordan(n or 3, samples, seed, tol)
    if name == "mu-conditions":
        return mu_conditions(n or 3, specs, samples, seed, tol)
    if name == "frobenius-k3":
        return frobenius_k3(samples, seed, tol)
    if name == "distinguish-c":
        return distinguish_c(samples, seed, tol)
    if name == "maptable":
        if table is None:
            raise ValueError("suite 'maptable' needs --table")
        spec = DistanceSpec(norms[0] if norms else NormSpec.frobenius(), symbols[0] if symbols else Z_MINUS_1)
        return maptable(table, spec, samples, seed, tol)
    raise ValueError(f"unknown suite {name!r}")


SUITES = tuple(DEFAULT_TOL)
