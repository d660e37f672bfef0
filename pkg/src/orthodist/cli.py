"""Command-line front end.

Every command prints one JSON record per line with the keys ``command``,
``inputs`` and ``value`` (or ``report`` for verification suites). Floats are
printed with 17 significant digits.

Exit codes: 0 success, 1 verification failure or numerical refusal, 2 usage
or input error.
"""
import argparse
import json
import sys

import numpy as np

from . import errors
from .distance import DistanceSpec, dist, geodesic_distance, norm_distance
from .isometry import IsometryForm, apply_form
from .matfile import MatrixFileError, format_matrix, read_map_table, read_matrix
from .norms import parse_norm
from .rotation import assert_so, exp_skew, log_so
from .scalarfun import check_axioms, symbol_by_name
from .skewsym import assert_skew, bch_numeric, bch_series3, tilde, youla
from .suites import SUITES, run_suite

_INPUT_ERRORS = (
    MatrixFileError,
    errors.SpecInvalid,
    errors.NotSkew,
    errors.NotOrthogonal,
    errors.NegativeDeterminant,
    errors.NonSquare,
    errors.DimensionMismatch,
    errors.WrongDimension,
    errors.BadDimension,
    OSError,
)


class UsageError(Exception):
    pass


def dumps(obj):
    """JSON text with every float written to 17 significant digits."""
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, np.ndarray):
        return dumps(obj.tolist())
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (complex, np.complexfloating)):
        return dumps({"re": obj.real, "im": obj.imag})
    if isinstance(obj, (float, np.floating)):
        if not np.isfinite(obj):
            return json.dumps(str(float(obj)))
        return f"{float(obj):.16e}"
    if obj is None:
        return "null"
    return json.dumps(str(obj))


def _emit(out, command, inputs, **payload):
    record = {"command": command, "inputs": inputs}
    record.update(payload)
    out.write(dumps(record) + "\n")


def _rotation(path):
    return assert_so(read_matrix(path), 1e-9)


def _write_out(path, M):
    if path:
        with open(path, "w") as fh:
            fh.write(format_matrix(M))


def build_parser():
    p = argparse.ArgumentParser(prog="orthodist", description="Generalised distances and isometries on SO(n).")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help, files=(), norm=False, symbol=False, out=False):
        sp = sub.add_parser(name, help=help)
        for f in files:
            sp.add_argument(f)
        if norm:
            sp.add_argument("--norm", default="fro", help="op | fro | schatten:<p> | kyfan:<k> | c:<v1,...>, optional m* prefix")
        if symbol:
            sp.add_argument("--f", dest="symbol", default="zminus1", choices=["zminus1", "log"])
        if out:
            sp.add_argument("--out", help="also write the resulting matrix to this file")
        return sp

    add("dist", "d_{N,f}(A, B) = N(f(A^-1 B))", ("A", "B"), norm=True, symbol=True)
    add("geodist", "Frobenius norm of log(A^-1 B)", ("A", "B"))
    add("normdist", "N(A - B)", ("A", "B"), norm=True)
    add("exp", "exponential of a skew matrix", ("X",), out=True)
    add("log", "principal logarithm of a rotation", ("A",), out=True)
    add("youla", "Youla decomposition of a skew matrix", ("X",))
    add("tilde", "tilde involution on K_4", ("X",), out=True)
    sp = add("bch", "log(exp X exp Y)", ("X", "Y"), out=True)
    sp.add_argument("--series", action="store_true", help="use the third-order series instead")
    sp = add("applyform", "evaluate an isometry shape", ("A",), out=True)
    sp.add_argument("--form", required=True, choices=["a", "b", "c", "d"])
    sp.add_argument("--Q", dest="Q", help="orthogonal matrix file (default identity)")
    sp.add_argument("--P0", dest="P0", help="rotation file for phi(I) (default identity)")
    sp = add("checkf", "check the admissibility conditions of a symbol", symbol=True)
    sp.add_argument("--grid", type=int, default=256)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", required=True, choices=SUITES)
    sp.add_argument("--n", type=int)
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--tol", type=float)
    sp.add_argument("--norm", action="append", help="restrict to this norm (repeatable)")
    sp.add_argument("--f", dest="symbol", action="append", choices=["zminus1", "log"])
    sp.add_argument("--table", help="map table file for suite 'maptable'")
    return p


def _dispatch(args, out):
    cmd = args.command
    if cmd == "dist":
        spec = DistanceSpec(parse_norm(args.norm), symbol_by_name(args.symbol))
        value = dist(spec, _rotation(args.A), _rotation(args.B))
        _emit(out, cmd, {"A": args.A, "B": args.B, "norm": args.norm, "f": args.symbol}, value=value)
    elif cmd == "geodist":
        value = geodesic_distance(_rotation(args.A), _rotation(args.B))
        _emit(out, cmd, {"A": args.A, "B": args.B}, value=value)
    elif cmd == "normdist":
        value = norm_distance(parse_norm(args.norm), _rotation(args.A), _rotation(args.B))
        _emit(out, cmd, {"A": args.A, "B": args.B, "norm": args.norm}, value=value)
    elif cmd == "exp":
        R = exp_skew(assert_skew(read_matrix(args.X)))
        _write_out(args.out, R)
        _emit(out, cmd, {"X": args.X}, value=R)
    elif cmd == "log":
        X = log_so(_rotation(args.A))
        _write_out(args.out, X)
        _emit(out, cmd, {"A": args.A}, value=X)
    elif cmd == "youla":
        form = youla(read_matrix(args.X))
        _emit(out, cmd, {"X": args.X}, value={"Q": form.Q, "lambdas": form.lambdas})
    elif cmd == "tilde":
        X = tilde(assert_skew(read_matrix(args.X)))
        _write_out(args.out, X)
        _emit(out, cmd, {"X": args.X}, value=X)
    elif cmd == "bch":
        X, Y = assert_skew(read_matrix(args.X)), assert_skew(read_matrix(args.Y))
        Z = bch_series3(X, Y) if args.series else bch_numeric(X, Y)
        _write_out(args.out, Z)
        _emit(out, cmd, {"X": args.X, "Y": args.Y, "series": args.series}, value=Z)
    elif cmd == "applyform":
        A = _rotation(args.A)
        n = A.shape[0]
        Q = read_matrix(args.Q) if args.Q else np.eye(n)
        P0 = _rotation(args.P0) if args.P0 else np.eye(n)
        R = apply_form(IsometryForm(args.form, Q, P0), A)
        _write_out(args.out, R)
        _emit(out, cmd, {"A": args.A, "form": args.form, "Q": args.Q, "P0": args.P0}, value=R)
    elif cmd == "checkf":
        rep = check_axioms(symbol_by_name(args.symbol), args.grid)
        _emit(out, cmd, {"f": args.symbol, "grid": args.grid}, report={"passed": rep.passed, "details": rep.details})
        return 0 if rep.all_passed else 1
    elif cmd == "verify":
        norms = [parse_norm(t) for t in args.norm] if args.norm else None
        symbols = [symbol_by_name(s) for s in args.symbol] if args.symbol else None
        table = read_map_table(args.table) if args.table else None
        if args.suite == "maptable" and table is None:
            raise UsageError("suite 'maptable' needs --table")
        passed, report = run_suite(
            args.suite, n=args.n, samples=args.samples, seed=args.seed, tol=args.tol,
            norms=norms, symbols=symbols, table=table,
        )
        inputs = {"suite": args.suite, "n": args.n, "samples": args.samples, "seed": args.seed, "tol": args.tol}
        if args.table:
            inputs["table"] = args.table
        _emit(out, cmd, inputs, report=dict(report, passed=passed))
        return 0 if passed else 1
    return 0


def run(argv=None, out=None, err=None):
    """Run the CLI on `argv` and return the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args, out)
    except Exception as exc:
        if isinstance(exc, _INPUT_ERRORS + (UsageError,)):
            code = 2
        elif isinstance(exc, errors.OrthodistError):
            code = 1
        elif isinstance(exc, ValueError):
            code = 2
        else:
            raise
        err.write(f"orthodist: {type(exc).__name__}: {exc}\n")
        return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
