"""Command-line front end.

    hopftwist check KIND REF...            run the certification suite for KIND
    hopftwist build WHAT REF [--out PATH]  construct an object and write it as a definition file
    hopftwist pipeline NAME [REF] ...      run a worked-instance pipeline end to end
    hopftwist list-builtins

REF is a definition file path or ``builtin:NAME[?k=v]``.  Exit codes: 0 all
checks pass, 1 a check failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import contextlib
import hashlib
import json
import sys
import time

from . import builtins, fileformat
from .algebra import certify_algebra, certify_hopf, check_comodule_algebra
from .constructions import drinfeld_double, named_r, regular_comodule, smash_product, trivial_comodule
from .errors import CertificationError, HopfTwistError, InputError
from .field import Field
from .invariance import build_star_algebra, check_invariance_hypotheses, check_star_hypotheses, derive_twisted_map
from .pipelines import (c_deformation, check_auxiliary_relation, check_nu_conditions, check_nu_inverse_relations,
                        check_sqt, comodule_twist_pipeline, homogenization_pipeline, sqt_double_pipeline,
                        trivial_nu)
from .report import Failure, Report, set_jobs
from .twisting import build_twisted_product, check_twisting_axioms

REPORT_FORMAT = "hopftwist-report/1"
EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

KIND_ALIASES = {"twisting": "twisting-data", "star": "star-data", "invariance": "invariance-data",
                "sqt": "sqt-element", "comodule": "comodule-algebra", "nu": "nu-twist"}
BUILD_INPUT = {"twisted-product": "twisting-data", "smash": "comodule-algebra", "double": "hopf",
               "star-algebra": "star-data", "derive-rprime": "invariance-data"}
PIPELINES = ("comodule-twist", "homogenization", "sqt-double")


class _Run:
    """Collects stages and input digests for the structured report."""

    def __init__(self, command, F):
        self.command = command
        self.F = F
        self.inputs = []
        self.stages = []
        self.error = None
        self.output = None
        self.start = time.perf_counter()

    def add(self, kind, report: Report):
        self.stages.append((kind, report))
        return report

    @property
    def ok(self):
        return self.error is None and all(r.ok for _, r in self.stages)

    def exit_code(self):
        if self.error is not None:
            return EXIT_INPUT
        return EXIT_OK if self.ok else EXIT_FAIL

    def to_dict(self):
        return {
            "format": REPORT_FORMAT,
            "command": self.command,
            "field": self.F.name,
            "inputs": self.inputs,
            "verdict": "error" if self.error else ("pass" if self.ok else "fail"),
            "exit_code": self.exit_code(),
            "error": self.error,
            "stages": [dict(kind=k, **r.to_dict(self.F)) for k, r in self.stages],
            "output": self.output,
            "wall_time_s": round(time.perf_counter() - self.start, 6),
        }


def _digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


def _load(run: _Run, kind, ref):
    """Resolve REF as an object of ``kind``; records the input digest."""
    if ref.startswith("builtin:"):
        got, obj = fileformat._builtin(kind, ref, run.F)
        obj = fileformat._coerce(kind, got, obj)
        run.inputs.append({"ref": ref, "digest": _digest(fileformat.dumps(obj))})
        return obj
    with open(ref, "rb") as fh:
        raw = fh.read()
    got, obj = fileformat.load(ref)
    obj = fileformat._coerce(kind, got, obj)
    run.inputs.append({"ref": ref, "digest": "sha256:" + hashlib.sha256(raw).hexdigest()})
    if obj.field != run.F:
        # a file's declared field wins over the default
        run.F = obj.field
    return obj


def _product_dim(kind, obj) -> int:
    """Largest algebra an exhaustive check will touch."""
    if kind in ("algebra", "hopf"):
        return obj.dim
    if kind == "comodule-algebra":
        return obj.A.dim * obj.H.dim
    if kind in ("twisting-data", "star-data", "invariance-data"):
        T = obj if kind == "twisting-data" else obj.T
        return T.A.dim * T.B.dim
    if kind == "nu-twist":
        return obj.CA.A.dim * obj.CA.H.dim
    if kind == "sqt-element":
        return obj.H.dim ** 2
    return 0


def _guard(args, kind, obj, scale=1):
    n = _product_dim(kind, obj) * scale
    if n > args.max_dim:
        raise InputError(f"total product dimension {n} exceeds --max-dim {args.max_dim}")


# checks -------------------------------------------------------------------

def _check(run: _Run, kind, obj, jobs):
    if kind == "linmap":
        run.add("parse", Report("linear map parses", ["parse"]))
    elif kind == "algebra":
        run.add("certify", certify_algebra(obj, jobs))
    elif kind == "hopf":
        run.add("certify", certify_hopf(obj, jobs))
    elif kind == "comodule-algebra":
        run.add("certify", certify_hopf(obj.H, jobs))
        run.add("certify", check_comodule_algebra(obj, jobs))
    elif kind == "twisting-data":
        run.add("certify", certify_algebra(obj.A, jobs))
        run.add("certify", certify_algebra(obj.B, jobs))
        run.add("certify", check_twisting_axioms(obj, jobs))
    elif kind == "star-data":
        if run.add("certify", check_twisting_axioms(obj.T, jobs)).ok:
            run.add("certify", check_star_hypotheses(obj, jobs))
    elif kind == "invariance-data":
        if run.add("certify", check_twisting_axioms(obj.T, jobs)).ok:
            run.add("certify", check_invariance_hypotheses(obj, jobs))
    elif kind == "nu-twist":
        try:
            obj.nu_inv
        except HopfTwistError as exc:
            run.add("certify", Report("nu convolution invertible", ["convolution inverse"],
                                      [Failure(f"nu convolution invertible: {exc}", (), {}, {})]))
            return
        if run.add("certify", check_nu_conditions(obj, jobs)).ok:
            run.add("certify", check_nu_inverse_relations(obj, jobs))
    elif kind == "sqt-element":
        if run.add("certify", check_sqt(obj, jobs)).ok:
            run.add("certify", check_auxiliary_relation(obj, jobs))


def cmd_check(args, run: _Run):
    kind = KIND_ALIASES.get(args.kind, args.kind)
    if kind not in fileformat.KINDS:
        raise InputError(f"unknown kind {args.kind!r}")
    for ref in args.refs:
        obj = _load(run, kind, ref)
        _guard(args, kind, obj)
        _check(run, kind, obj, args.jobs)


# builders -----------------------------------------------------------------

def _build(run: _Run, what, obj, jobs):
    if what == "twisted-product":
        if not run.add("certify", check_twisting_axioms(obj, jobs)).ok:
            return None
        return build_twisted_product(obj, jobs=jobs).product
    if what == "smash":
        if not run.add("certify", check_comodule_algebra(obj, jobs)).ok:
            return None
        T, alg = smash_product(obj)
        run.add("certify", certify_algebra(alg, jobs))
        return alg
    if what == "double":
        if not run.add("certify", certify_hopf(obj, jobs)).ok:
            return None
        D = drinfeld_double(obj)
        run.add("certify", certify_algebra(D, jobs))
        return D
    if what == "star-algebra":
        if not run.add("certify", check_twisting_axioms(obj.T, jobs)).ok:
            return None
        if not run.add("certify", check_star_hypotheses(obj, jobs)).ok:
            return None
        return build_star_algebra(obj, jobs=jobs)
    if what == "derive-rprime":
        if not run.add("certify", check_twisting_axioms(obj.T, jobs)).ok:
            return None
        if not run.add("certify", check_invariance_hypotheses(obj, jobs)).ok:
            return None
        Tp = derive_twisted_map(obj, jobs)
        run.add("certify", Tp.certificate)
        return Tp.R
    raise InputError(f"unknown build target {what!r}")


def cmd_build(args, run: _Run):
    kind = BUILD_INPUT[args.what]
    obj = _load(run, kind, args.ref)
    _guard(args, kind, obj, scale=obj.dim if args.what == "double" else 1)
    try:
        out = _build(run, args.what, obj, args.jobs)
    except CertificationError as exc:
        run.add("certify", exc.report or Report(args.what, [args.what], [Failure(str(exc), (), {}, {})]))
        return
    if out is None:
        return
    text = fileformat.dumps(out)
    run.output = {"kind": fileformat.kind_of(out), "digest": _digest(text), "path": args.out}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# pipelines ----------------------------------------------------------------

def _pipeline_input(args, run: _Run):
    name = args.name
    if args.ref and args.builtin:
        raise InputError("give either a definition file or --builtin, not both")
    if name == "comodule-twist":
        if args.ref:
            return "nu-twist", _load(run, "nu-twist", args.ref)
        H = _load(run, "hopf", f"builtin:{args.builtin or 'kC2'}")
        if args.c is not None:
            return "nu-twist", c_deformation(H, run.F.parse(args.c))
        return "nu-twist", trivial_nu(regular_comodule(H))
    if name == "homogenization":
        if args.ref:
            return "comodule-algebra", _load(run, "comodule-algebra", args.ref)
        H = _load(run, "hopf", f"builtin:{args.builtin or 'kC2'}")
        return "comodule-algebra", (trivial_comodule(H.algebra, H) if args.coaction == "trivial"
                                    else regular_comodule(H))
    if args.ref:
        return "sqt-element", _load(run, "sqt-element", args.ref)
    H = _load(run, "hopf", f"builtin:{args.builtin or 'kC2'}")
    return "sqt-element", named_r(H, args.r or "trivial")


def cmd_pipeline(args, run: _Run):
    kind, obj = _pipeline_input(args, run)
    _guard(args, kind, obj)
    if args.name == "comodule-twist":
        res = comodule_twist_pipeline(obj, args.jobs)
    elif args.name == "homogenization":
        res = homogenization_pipeline(obj, jobs=args.jobs)
    else:
        res = sqt_double_pipeline(obj, args.jobs)
    for s in res.stages:
        run.add(s.kind, Report(s.name, s.report.checked, s.report.failures))
    if res.certificate is None and all(s.ok for s in res.stages):
        run.add("conclusion", Report("isomorphism certificate", ["certificate"],
                                     [Failure("no certificate produced", (), {}, {})]))
    run.pipeline = res


def cmd_list(args, run: _Run):
    for kind, pattern, desc in builtins.catalogue():
        print(f"{kind:18} builtin:{pattern:28} {desc}")
    print(f"{'':18} <H> is one of: {', '.join(builtins.hopf_names())}")


# entry point ----------------------------------------------------------------

def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="Q", help="Q or GF:p (default Q); files declare their own")
    common.add_argument("--report-out", metavar="PATH", help="write the structured JSON report here")
    common.add_argument("--max-dim", type=int, default=64, help="largest total product dimension (default 64)")
    common.add_argument("--jobs", type=int, default=1, help="worker threads for identity checks (default 1)")

    p = argparse.ArgumentParser(prog="hopftwist", description="Exact checks for Hopf algebras and twisted tensor products.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="certify objects")
    c.add_argument("kind", help=f"one of {', '.join(fileformat.KINDS)} (aliases: {', '.join(KIND_ALIASES)})")
    c.add_argument("refs", nargs="+", metavar="REF")

    b = sub.add_parser("build", parents=[common], help="construct an object")
    b.add_argument("what", choices=sorted(BUILD_INPUT))
    b.add_argument("ref", metavar="REF")
    b.add_argument("--out", metavar="PATH", help="output file (default standard output)")

    q = sub.add_parser("pipeline", parents=[common], help="run a worked-instance pipeline")
    q.add_argument("name", choices=PIPELINES)
    q.add_argument("ref", nargs="?", metavar="REF")
    q.add_argument("--builtin", metavar="H", help="built-in Hopf algebra (default kC2)")
    q.add_argument("--c", metavar="C", help="comodule-twist: c for the c-deformation of kC2")
    q.add_argument("--r", metavar="NAME", help="sqt-double: trivial, triangular or 1xg")
    q.add_argument("--coaction", choices=("regular", "trivial"), default="regular",
                   help="homogenization: coaction on A = H")

    sub.add_parser("list-builtins", parents=[common], help="list built-in instances")
    return p


def _human(run: _Run, args):
    res = getattr(run, "pipeline", None)
    if res is not None:
        print(res.summary())
        return
    for _, rep in run.stages:
        print(rep.summary())


def main(argv=None) -> int:
    parser = _parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        F = Field.from_name(args.field)
    except HopfTwistError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    set_jobs(args.jobs)
    run = _Run(argv, F)
    handler = {"check": cmd_check, "build": cmd_build, "pipeline": cmd_pipeline, "list-builtins": cmd_list}
    try:
        handler[args.command](args, run)
    except (InputError, OSError) as exc:
        run.error = str(exc)
    except HopfTwistError as exc:
        rep = getattr(exc, "report", None)
        run.add("certify", rep if rep is not None and not rep.ok else
                Report(args.command, [args.command], [Failure(str(exc), (), {}, {})]))
    if run.error:
        print(f"error: {run.error}", file=sys.stderr)
    elif args.command != "list-builtins":
        out = sys.stderr if args.command == "build" and not args.out else sys.stdout
        with contextlib.redirect_stdout(out):
            _human(run, args)
            print("verdict:", "PASS" if run.ok else "FAIL")
    if args.report_out:
        with open(args.report_out, "w", encoding="utf-8") as fh:
            json.dump(run.to_dict(), fh, indent=2, ensure_ascii=False)
            fh.write("\n")
    return run.exit_code()


if __name__ == "__main__":
    sys.exit(main())
