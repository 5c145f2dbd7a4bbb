"""Command line front end.

Exit codes: 0 success, 1 failed verification or self-test, 2 invalid input,
3 a spec outside the classified range (``Sigma`` three-dimensional).
"""

import argparse
import json
import sys

import numpy as np

from .catalog import CanonicalLabel, GroupSpec, catalog_json, entry
from .classifier import Certificate, classify, verify
from .core import Tolerances, phi_inv
from .errors import DimensionOutOfScope, E2Error
from .orbits import OrbitClass, classify_vector

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_SCOPE = 0, 1, 2, 3

_ETA_OF_ORBIT = {
    OrbitClass.FUTURE: "Pos", OrbitClass.PAST: "Pos",
    OrbitClass.FUTURE_CONE: "Null", OrbitClass.PAST_CONE: "Null", OrbitClass.PRESENT: "Null",
    OrbitClass.ELSEWHERE: "Neg",
}


class InputError(Exception):
    pass


def _round(x):
    if isinstance(x, dict):
        return {k: _round(v) for k, v in sorted(x.items())}
    if isinstance(x, (list, tuple)):
        return [_round(v) for v in x]
    if isinstance(x, np.ndarray):
        return _round(x.tolist())
    if isinstance(x, (float, np.floating)):
        r = float(f"{float(x):.12g}")
        return 0.0 if r == 0 else r
    return x


def _read(args):
    try:
        if args.input and args.input != "-":
            with open(args.input) as fh:
                text = fh.read()
        else:
            text = sys.stdin.read()
    except OSError as exc:
        raise InputError(f"cannot read input: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _matrix(m, what):
    try:
        a = np.array(m, dtype=float)
    except (TypeError, ValueError):
        raise InputError(f"{what} is not a numeric matrix") from None
    if a.shape != (2, 2) or not np.all(np.isfinite(a)):
        raise InputError(f"{what} must be a finite 2x2 matrix")
    return a


def _slot_params(data):
    """Instantiate the symbolic slots of a catalog entry from its schema."""
    e = entry(data["id"])
    p = data.get("params") or {n: s["default"] for n, s in data.get("params_schema", {}).items()}
    return e.h_matrices(p or None)


def _spec(data, tol):
    if not isinstance(data, dict) or "sigma_generators" not in data or "h_generators" not in data:
        raise InputError("a spec needs 'sigma_generators' and 'h_generators'")
    sig = []
    for i, m in enumerate(data["sigma_generators"]):
        a = _matrix(m, f"sigma generator {i}")
        if np.max(np.abs(a - a.T)) > tol.residual * max(1.0, np.max(np.abs(a))):
            raise InputError(f"sigma generator {i} is not symmetric")
        sig.append(a)
    if any(isinstance(x, str) for x in np.ravel(np.array(data["h_generators"], dtype=object))):
        h = _slot_params(data)
    else:
        h = [_matrix(m, f"h generator {i}") for i, m in enumerate(data["h_generators"])]
    return GroupSpec.from_generators(sig, h, tol)


def _classify_one(data, tol):
    label, cert = classify(_spec(data, tol), tol)
    return {
        "label": label.id,
        "dimension": label.dim_total,
        "params": label.params,
        "conjugator": cert.conjugator,
        "residuals": {"sigma": cert.residual_sigma, "h": cert.residual_h},
    }


def _text(obj):
    if isinstance(obj, list):
        return "\n".join(_text(o) for o in obj)
    if "label" in obj:
        params = ", ".join(f"{k}={v}" for k, v in obj["params"].items())
        return (f"{obj['label']} (dim {obj['dimension']}) {params}".rstrip()
                + f"  conjugator={obj['conjugator']}"
                + f"  residuals sigma={obj['residuals']['sigma']} h={obj['residuals']['h']}")
    return " ".join(f"{k}={v}" for k, v in obj.items())


def _emit(obj, args):
    obj = _round(obj)
    text = json.dumps(obj, indent=2) if args.format == "json" else _text(obj)
    _write(text + "\n", args)


def _write(text, args):
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_classify(args, tol):
    data = _read(args)
    if isinstance(data, list):
        _emit([_classify_one(d, tol) for d in data], args)
    else:
        _emit(_classify_one(data, tol), args)
    return EXIT_OK


def cmd_verify(args, tol):
    data = _read(args)
    if not isinstance(data, dict):
        raise InputError("verify expects an object")
    spec = _spec(data.get("spec", data), tol)
    lab = data.get("label")
    if isinstance(lab, dict):
        lab_id, params = lab.get("id"), lab.get("params", {})
    else:
        lab_id, params = lab, data.get("params", {})
    if lab_id is None:
        raise InputError("verify needs a 'label'")
    cert = data.get("certificate", data)
    if "conjugator" not in cert:
        raise InputError("verify needs a 'conjugator'")
    g = _matrix(cert["conjugator"], "conjugator")
    e = entry(lab_id)
    report = verify(spec, CanonicalLabel(e.id, e.dim, params), Certificate(g, np.nan, np.nan), tol)
    _emit(report.to_dict(), args)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_table(args, tol):
    _write(catalog_json(), args)
    return EXIT_OK


def cmd_orbit(args, tol):
    data = _read(args)
    try:
        a = np.array(data, dtype=float)
    except (TypeError, ValueError):
        raise InputError("orbit expects a 3-vector or a 2x2 symmetric matrix") from None
    if a.shape == (2, 2):
        if abs(a[0, 1] - a[1, 0]) > tol.residual * max(1.0, np.max(np.abs(a))):
            raise InputError("matrix is not symmetric")
        v = phi_inv(a)
    elif a.shape == (3,):
        v = a
    else:
        raise InputError("orbit expects a 3-vector or a 2x2 symmetric matrix")
    c = classify_vector(v, tol)
    _emit({"eta_type": _ETA_OF_ORBIT[c], "orbit": c.value}, args)
    return EXIT_OK


def cmd_selftest(args, tol):
    from .selftest import run_selftest

    results = run_selftest(seed=args.seed, n=args.samples, tol=tol)
    lines = [f"{'PASS' if ok else 'FAIL'} {name}: {detail}" for name, ok, detail in results]
    _write("\n".join(lines) + "\n", args)
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_FAIL


def build_parser():
    d = Tolerances()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol-residual", type=float, default=d.residual,
                        help=f"span and closure residual threshold (default {d.residual})")
    common.add_argument("--tol-rank", type=float, default=d.rank,
                        help=f"relative rank threshold (default {d.rank})")
    common.add_argument("--param-tol", type=float, default=d.param_tol,
                        help=f"parameter comparison tolerance (default {d.param_tol})")
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--input", help="input file (default stdin)")
    common.add_argument("--output", help="output file (default stdout)")

    p = argparse.ArgumentParser(prog="e2class", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("classify", parents=[common], help="label a group spec (or a list of them)")
    sub.add_parser("verify", parents=[common], help="check a spec, label and conjugator")
    sub.add_parser("table", parents=[common], help="print the catalog as JSON")
    sub.add_parser("orbit", parents=[common], help="orbit of a 3-vector or symmetric matrix")
    st = sub.add_parser("selftest", parents=[common], help="run the seeded property suites")
    st.add_argument("--samples", type=int, default=20, help="samples per suite (default 20)")
    return p


_COMMANDS = {
    "classify": cmd_classify, "verify": cmd_verify, "table": cmd_table,
    "orbit": cmd_orbit, "selftest": cmd_selftest,
}


def run(argv=None):
    args = build_parser().parse_args(argv)
    try:
        tol = Tolerances(rank=args.tol_rank, residual=args.tol_residual, param_tol=args.param_tol)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    try:
        return _COMMANDS[args.command](args, tol)
    except DimensionOutOfScope as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCOPE
    except (InputError, E2Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main():
    sys.exit(run())
