"""The ``binarytor`` command.

Every subcommand prints one JSON report::

    {"command": ..., "inputs": {...}, "checks": [{"name", "pass", "detail"}], "result": ...}

Exit status: 0 when every check passes, 1 when a mathematical check fails,
2 for unreadable or invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import complexes as cx
from . import relative as rel
from .complexes import BinaryComplex, ChainComplex
from .io import (DocumentError, bicomplex_from_document, from_document, jsonable, load_json,
                 map_from_document, to_document)
from .proofs import (PreconditionFailed, UnequalClass, k0_witness_construct, k0omegashift_witness,
                     part0_reduction, part1_construct, part2_construct, part3_construct,
                     part3_fabricate, totbcf_check, totbcf_fabricate)
from .rings import RingError, parse_ring
from .suites import SUITES, default_seed, run_suite
from .torsion import NotAcyclic, cls, torsion

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


class Report:
    def __init__(self, command: str, inputs: dict):
        self.command = command
        self.inputs = inputs
        self.checks: list[dict] = []
        self.result = None
        self.input_error = False

    def check(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append({"name": name, "pass": bool(passed), "detail": detail})
        return bool(passed)

    def bundle(self, b) -> None:
        for c in b.all_checks():
            self.check(c.name, c.passed, c.detail)

    def as_dict(self) -> dict:
        return {"command": self.command, "inputs": self.inputs, "checks": self.checks,
                "result": self.result}

    @property
    def code(self) -> int:
        if self.input_error:
            return EXIT_INPUT
        return EXIT_OK if all(c["pass"] for c in self.checks) else EXIT_FAIL


def _read(path: str, report: Report):
    try:
        return from_document(load_json(path))
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None
    except DocumentError as e:
        raise InputError(f"{path}: {e}") from None
    except ValueError as e:
        raise InputError(f"{path}: {e}") from None


def _structure(x, report: Report) -> None:
    probs = rel.validate_rel(x) if isinstance(x, rel.RelObject) else cx.validate(x)
    report.check("structurally valid", not probs, "; ".join(probs))
    if probs:
        report.input_error = True
        raise InputError("; ".join(probs))


# -- subcommands ------------------------------------------------------------------------------

def cmd_check(args, report: Report) -> None:
    x = _read(args.file, report)
    probs = rel.validate_rel(x) if isinstance(x, rel.RelObject) else cx.validate(x)
    report.check("structurally valid", not probs, "; ".join(probs))
    if probs:
        report.input_error = True
        return
    if isinstance(x, rel.RelObject):
        acyclic = rel.is_acyclic_rel(x)
    elif isinstance(x, (ChainComplex, BinaryComplex)):
        acyclic = cx.is_acyclic(x)
    else:
        acyclic = None
    result = {"kind": type(x).__name__, "acyclic": acyclic}
    if isinstance(x, BinaryComplex):
        result["diagonal"] = cx.is_diagonal(x)
    if isinstance(x, ChainComplex) and x.ring.is_field:
        result["euler_char"] = cx.euler_char(x)
    report.result = result


def _acyclic_input(x, report: Report) -> None:
    if not cx.is_acyclic(x):
        report.check("input is acyclic", False, "torsion needs an acyclic complex")
        report.input_error = True
        raise InputError("not acyclic")


def cmd_torsion(args, report: Report) -> None:
    x = _read(args.file, report)
    if not isinstance(x, ChainComplex):
        raise InputError("torsion takes a chain complex")
    _structure(x, report)
    _acyclic_input(x, report)
    import random
    a, b = torsion(x), torsion(x, "random", random.Random(args.seed))
    report.check("pivot and randomized contractions agree", a == b, f"{a} vs {b}")
    report.result = str(a)


def cmd_cls(args, report: Report) -> None:
    x = _read(args.file, report)
    _structure(x, report)
    if isinstance(x, rel.RelObjectB):
        if not x.functor.source_is_zero and not x.functor.target_is_zero:
            raise InputError("a numeric class exists over 0 -> N and M -> 0 only")
        v = rel.class_of(x)
        report.result = str(v) if x.functor.target_is_zero else str(v.value)
        return
    if not isinstance(x, BinaryComplex):
        raise InputError("cls takes a binary complex")
    _acyclic_input(x, report)
    report.result = str(cls(x).value)


def cmd_cone(args, report: Report) -> None:
    s, t = _read(args.source, report), _read(args.target, report)
    for x in (s, t):
        _structure(x, report)
    try:
        f = map_from_document(load_json(args.map), s, t)
    except (DocumentError, OSError) as e:
        raise InputError(f"{args.map}: {e}") from None
    ok = cx.is_chain_map(f)
    report.check("map is a chain map", ok)
    if not ok:
        report.input_error = True
        return
    report.result = to_document(cx.mapping_cone(f))


def cmd_tot(args, report: Report) -> None:
    try:
        cc = bicomplex_from_document(load_json(args.file))
    except (DocumentError, OSError) as e:
        raise InputError(f"{args.file}: {e}") from None
    probs = cx.validate_bicomplex(cc)
    report.check("bicomplex is valid", not probs, "; ".join(probs))
    if probs:
        report.input_error = True
        return
    report.result = to_document(cx.total_complex(cc))


def cmd_shift(args, report: Report) -> None:
    x = _read(args.file, report)
    _structure(x, report)
    y = rel.shift_rel(x, args.i) if isinstance(x, rel.RelObject) else cx.shift(x, args.i)
    report.result = to_document(y)


def _functor(text: str):
    try:
        return rel.parse_functor(text)
    except (ValueError, RingError) as e:
        raise InputError(str(e)) from None


def cmd_witness(args, report: Report) -> None:
    kind = args.kind
    if kind == "k0":
        try:
            ring = parse_ring(args.ring)
        except (ValueError, RingError) as e:
            raise InputError(str(e)) from None
        try:
            b = k0_witness_construct(ring, args.m, args.m2, seed=args.seed)
        except UnequalClass as e:
            report.check("classes are equal", False, str(e))
            return
    elif kind in ("part1", "part3", "totbcf"):
        F = _functor(args.functor)
        seed = args.seed if args.seed is not None else default_seed()
        if kind == "part1":
            b = part1_construct(F, args.m, args.m if args.m2 is None else args.m2, seed=seed)
        elif kind == "part3":
            b = part3_construct(part3_fabricate(F, seed), drop_minus=args.drop_minus)
        else:
            b = totbcf_check(*totbcf_fabricate(F, seed))
    else:
        if not args.file:
            raise InputError(f"witness {kind} needs an object file")
        x = _read(args.file, report)
        if not isinstance(x, rel.RelObject):
            raise InputError(f"witness {kind} takes a rel-object document")
        if kind == "part0":
            b = part0_reduction(x)
        elif kind == "part2":
            b = part2_construct(x)
        else:
            b = k0omegashift_witness(x)
    report.bundle(b)
    report.result = {"bundle": b.kind, "passes": b.passes,
                     "objects": {k: jsonable(v) for k, v in b.objects.items()}}


def cmd_verify(args, report: Report) -> None:
    if args.suite not in SUITES:
        raise InputError(f"unknown suite {args.suite!r}; known: {', '.join(SUITES)}")
    try:
        reports = run_suite(args.suite, args.seed, args.count, args.ring)
    except (ValueError, RingError) as e:
        raise InputError(str(e)) from None
    for r in reports:
        for c in r.checks:
            report.check(f"{r.name} [{r.target}] {c.name}", c.passed, c.detail)
    report.result = {"suite": args.suite, "passed": all(r.passed for r in reports),
                     "targets": [r.target for r in reports]}


def cmd_selftest(args, report: Report) -> None:
    summary = {}
    for name in SUITES:
        for r in run_suite(name, args.seed, args.count):
            for c in r.checks:
                report.check(f"{r.name} [{r.target}] {c.name}", c.passed, c.detail)
            summary[f"{r.name} [{r.target}]"] = r.passed
    report.result = summary


# -- parsing ------------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="binarytor", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="validate a document and report acyclicity")
    s.add_argument("file")
    s = sub.add_parser("torsion", help="torsion of an acyclic chain complex")
    s.add_argument("file")
    s.add_argument("--seed", type=int, default=0, help="seed of the randomized contraction")
    s = sub.add_parser("cls", help="class of an acyclic binary complex")
    s.add_argument("file")
    s = sub.add_parser("cone", help="mapping cone of a chain map")
    s.add_argument("source")
    s.add_argument("target")
    s.add_argument("map")
    s = sub.add_parser("tot", help="total complex of a bicomplex document")
    s.add_argument("file")
    s = sub.add_parser("shift", help="shift a complex or rel-object")
    s.add_argument("file")
    s.add_argument("-i", type=int, required=True)

    s = sub.add_parser("witness", help="build and check a witness bundle")
    s.add_argument("kind", choices=["k0", "part0", "part1", "part2", "part3", "shiftrel", "totbcf"])
    s.add_argument("file", nargs="?")
    s.add_argument("--ring", default="QQ")
    s.add_argument("--functor", default="Identity(QQ)")
    s.add_argument("--m", type=int, default=2)
    s.add_argument("--m2", type=int, default=None)
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--drop-minus", action="store_true", help="part3 with the sign of q' dropped")

    s = sub.add_parser("verify", help="run a named property suite")
    s.add_argument("suite")
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--count", type=int, default=None)
    s.add_argument("--ring", default=None, help="ring or functor descriptor")
    s = sub.add_parser("selftest", help="run every suite")
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--count", type=int, default=None)
    return p


COMMANDS = {"check": cmd_check, "torsion": cmd_torsion, "cls": cmd_cls, "cone": cmd_cone,
            "tot": cmd_tot, "shift": cmd_shift, "witness": cmd_witness, "verify": cmd_verify,
            "selftest": cmd_selftest}


def _inputs(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k != "command"}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    if args.command == "witness" and args.kind == "k0" and args.m2 is None:
        args.m2 = args.m
    report = Report(args.command, _inputs(args))
    try:
        COMMANDS[args.command](args, report)
    except InputError as e:
        report.input_error = True
        if not any(not c["pass"] for c in report.checks):
            report.check("input", False, str(e))
    except (NotAcyclic, PreconditionFailed, rel.WrongFunctor, rel.WrongPair) as e:
        report.input_error = True
        report.check("input", False, str(e))
    out.write(json.dumps(report.as_dict(), indent=2) + "\n")
    return report.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
