"""``rootcat`` command line: JSON reports for algebras, forms, GIMs, Hall tables and named checks."""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from .errors import RootcatError, SpecError, VerificationFailed
from .linalg import PrimeField

VERBS = ("info", "forms", "gim", "hall", "verify")


class UsageError(RootcatError):
    code = "usage_error"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common(p):
    p.add_argument("--q", type=int, default=3, help="prime field size (default 3)")
    p.add_argument("--dim-bound", default=None, help="comma-separated dimension bound per vertex")
    p.add_argument("--cap", type=int, default=None, help="enumeration cap")
    p.add_argument("--out", default=None, help="write the JSON report here instead of stdout")
    p.add_argument("--mod-view", action="store_true", help="reduce coefficients mod q-1")
    p.add_argument("--timings", action="store_true", help="record wall-clock timings (breaks byte-identity)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rootcat", description=__doc__)
    sub = parser.add_subparsers(dest="verb", parser_class=_Parser)
    for verb, help_ in [("info", "summary of a bound quiver algebra"),
                        ("forms", "Cartan, Euler, symmetric and Coxeter matrices"),
                        ("hall", "Ringel-Hall Lie algebra table of a hereditary algebra")]:
        p = sub.add_parser(verb, help=help_)
        p.add_argument("target", help="bundled name or path to a quiver-spec JSON file")
        _common(p)
    p = sub.add_parser("gim", help="GIM tools")
    p.add_argument("action", choices=["classify", "root-basis"])
    p.add_argument("target", help="bundled name, spec path, or a JSON integer matrix")
    _common(p)
    from .verify import CHECKS

    p = sub.add_parser("verify", help="named verification checks")
    p.add_argument("check", choices=sorted(CHECKS) + ["all"])
    _common(p)
    return parser


def _dim_bound(text):
    if text is None:
        return None
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--dim-bound must be comma-separated integers, got {text!r}") from None


def _matrix_or_algebra(target, q):
    from .ktheory import euler_matrix
    from .quiver import load_algebra

    if target.lstrip().startswith("["):
        try:
            M = np.array(json.loads(target), dtype=np.int64)
        except (ValueError, TypeError) as exc:
            raise SpecError(f"bad matrix: {exc}") from None
        return M, None
    A = load_algebra(target)
    E = euler_matrix(A, q)
    return E + E.T, A


def cmd_info(args, field):
    from .ktheory import cartan_matrix
    from .quiver import load_algebra
    from .rep_lab import global_dimension, projective_dimension
    from .representation import simple

    A = load_algebra(args.target)
    return {
        "name": A.name,
        "vertices": list(A.quiver.vertices),
        "arrows": [{"name": a.name, "from": A.quiver.vertices[a.source], "to": A.quiver.vertices[a.target]}
                   for a in A.quiver.arrows],
        "relations": [[A.quiver.arrows[i].name for i in reversed(r)] for r in A.ideal.relations],
        "dimension": A.dim,
        "hereditary": not A.ideal.relations,
        "cartan": cartan_matrix(A).tolist(),
        "projective_dimensions_of_simples": [projective_dimension(simple(A, field, v)) for v in range(A.n)],
        "global_dimension": global_dimension(A, field),
        "fingerprint": A.fingerprint(),
    }


def cmd_forms(args, field):
    from .ktheory import coxeter_identification_check, form_pack, isometry_check
    from .quiver import load_algebra

    A = load_algebra(args.target)
    pack = form_pack(A, field)
    out = pack.to_dict()
    out["vertices"] = list(A.quiver.vertices)
    out["isometry"] = isometry_check(A, field.q)["ok"]
    out["coxeter_identification"] = coxeter_identification_check(A, field.q)["ok"]
    return out


def cmd_gim(args, field):
    from .ktheory import gim_classify, root_basis

    M, A = _matrix_or_algebra(args.target, field.q)
    if args.action == "classify":
        out = gim_classify(M)
        out["matrix"] = M.tolist()
        return out
    rb = root_basis(M)
    return {"matrix": M.tolist(), "l": rb.l, "H_dim": rb.H_dim,
            "coroots": [[str(x) for x in row] for row in rb.coroot_matrix],
            "roots": [[str(x) for x in row] for row in rb.root_matrix]}


def cmd_hall(args, field):
    from .hall_lie import build_hall_lie
    from .quiver import load_algebra
    from .rep_lab import TUPLE_CAP

    A = load_algebra(args.target)
    table, lie = build_hall_lie(A, field.q, _dim_bound(args.dim_bound), cap=args.cap or TUPLE_CAP)
    out = table.to_dict(mod_view=args.mod_view)
    out["mod_view"] = bool(args.mod_view)
    out["antisymmetry"] = table.antisymmetry_ok()
    out["jacobi_failures"] = len(table.jacobi_failures())
    return out


def cmd_verify(args, field):
    from .verify import CHECKS

    names = sorted(CHECKS) if args.check == "all" else [args.check]
    results = {name: CHECKS[name](field.q) for name in names}
    return results


COMMANDS = {"info": cmd_info, "forms": cmd_forms, "gim": cmd_gim, "hall": cmd_hall, "verify": cmd_verify}


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    return obj


def run(argv=None) -> tuple[int, dict]:
    """Parse ``argv`` and run one command; returns the exit status and the report."""
    argv = list(sys.argv[1:] if argv is None else argv)
    report = {"command": None, "inputs": {"argv": argv}, "results": None, "timings": None}
    status = 0
    args = None
    try:
        args = build_parser().parse_args(argv)
        if args.verb is None:
            raise UsageError(f"a verb is required: one of {', '.join(VERBS)}")
        report["command"] = args.verb
        report["inputs"] = {k: v for k, v in sorted(vars(args).items()) if k not in ("verb", "timings")}
        field = PrimeField(args.q)
        t0 = time.perf_counter()
        results = COMMANDS[args.verb](args, field)
        elapsed = time.perf_counter() - t0
        report["results"] = _jsonable(results)
        if args.timings:
            report["timings"] = {"total_seconds": round(elapsed, 6)}
        if args.verb == "verify":
            failed = [name for name, r in results.items() if not r.get("ok")]
            if failed:
                raise VerificationFailed(f"checks failed: {', '.join(failed)}")
    except RootcatError as exc:
        report["error"] = exc.to_dict()
        status = 1 if not isinstance(exc, UsageError) else 2
    except Exception as exc:  # noqa: BLE001 - every failure becomes a structured report
        report["error"] = {"code": "internal_error", "message": f"{type(exc).__name__}: {exc}"}
        status = 3
    return status, report


def main(argv=None) -> int:
    status, report = run(argv)
    text = json.dumps(report, indent=2, ensure_ascii=False) + "\n"
    out = report.get("inputs", {}).get("out")
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
