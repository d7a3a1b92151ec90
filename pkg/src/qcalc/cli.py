"""Command-line front end: ``qcalc <subcommand> ...``.

Exit status is 0 on success, 1 when a result is undefined, an evaluation
fails or a model violates what was checked, and 2 on usage, syntax and
file errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from importlib import resources
from pathlib import Path
from typing import TextIO

from .errors import DefinitionError, ModelError
from .evaluate import run
from .finite import (
    check_fieldoid_axioms,
    check_fieldoid_lemmas,
    check_no_dimensionful_roots,
    check_paf_axioms,
    check_paf_lemmas,
    check_root_indistinguishability,
    decompose_fieldoid,
    load_model,
    search_coherent_systems,
)
from .finite.model import FiniteModel
from .qdef import load_definitions
from .report import CheckReport
from .scalars import ExactRational, Float64
from .units import UnitRegistry

__all__ = ["main", "build_parser", "repl", "resolve_defs"]

DEFS_ENV = "QCALC_DEFS"


class UsageError(Exception):
    pass


def shipped_file(name: str) -> Path:
    return Path(str(resources.files("qcalc") / "corpus" / name))


def resolve_defs(path: str | None) -> Path:
    """Definitions path from the flag, then ``$QCALC_DEFS``, then the shipped SI file.

    A bare file name that does not exist locally is looked up among the
    shipped definition files.
    """
    if path is None:
        path = os.environ.get(DEFS_ENV) or str(shipped_file("si.qdef"))
    p = Path(path)
    if not p.exists() and p.parent == Path(".") and shipped_file(p.name).exists():
        return shipped_file(p.name)
    return p


def _load_registry(args) -> UnitRegistry:
    path = resolve_defs(args.defs)
    field = Float64() if args.float else ExactRational()
    try:
        return load_definitions(path, field)
    except OSError as exc:
        raise UsageError(f"cannot read definitions {path}: {exc.strerror}") from exc
    except DefinitionError as exc:
        raise UsageError(str(exc)) from exc


def _load_model(path: str) -> FiniteModel:
    try:
        model = load_model(path)
    except OSError as exc:
        raise UsageError(f"cannot read model {path}: {exc.strerror}") from exc
    except ModelError as exc:
        raise UsageError(f"{path}: {exc}") from exc
    try:
        model.ensure_checkable()
    except ModelError as exc:
        raise UsageError(f"{path}: {exc}") from exc
    return model


def _print_report(title: str, report: CheckReport, out: TextIO, limit: int | None) -> None:
    if report.passed:
        print(f"{title}: ok", file=out)
        return
    noun = "violation" if len(report) == 1 else "violations"
    print(f"{title}: {len(report)} {noun}", file=out)
    for line in report.format(limit):
        print(f"  {line}", file=out)


def cmd_eval(args, out: TextIO, err: TextIO) -> int:
    registry = _load_registry(args)
    outcome = run(args.expr, registry)
    print(outcome.text, file=err if outcome.status in ("error", "syntax") else out)
    return outcome.exit_code


def repl(registry: UnitRegistry, stdin: TextIO, out: TextIO, prompt: str = "> ") -> int:
    """Evaluate one expression per line until end of input or ``:quit``."""
    interactive = prompt and stdin.isatty()
    while True:
        if interactive:
            out.write(prompt)
            out.flush()
        line = stdin.readline()
        if not line:
            return 0
        line = line.strip()
        if not line:
            continue
        if line in (":q", ":quit", ":exit"):
            return 0
        if line == ":units":
            print(" ".join(registry.names), file=out)
            continue
        print(run(line, registry).text, file=out)


def cmd_repl(args, out: TextIO, err: TextIO) -> int:
    return repl(_load_registry(args), sys.stdin, out)


def cmd_check_model(args, out: TextIO, err: TextIO) -> int:
    model = _load_model(args.model)
    fieldoid = args.fieldoid or model.mode == "fieldoid"
    kind = "fieldoid" if fieldoid else "paf"
    print(f"model {model.name}: {model.n} elements, checked as {kind}", file=out)
    axioms = check_fieldoid_axioms(model) if fieldoid else check_paf_axioms(model)
    lemmas = check_fieldoid_lemmas(model) if fieldoid else check_paf_lemmas(model)
    _print_report("axioms", axioms, out, args.limit)
    _print_report("derived properties", lemmas, out, args.limit)
    return 0 if axioms.passed and lemmas.passed else 1


def cmd_decompose_fieldoid(args, out: TextIO, err: TextIO) -> int:
    model = _load_model(args.model)
    report = check_fieldoid_axioms(model)
    if not report.passed:
        _print_report("fieldoid axioms", report, out, args.limit)
        return 1
    parts = decompose_fieldoid(model)
    print(f"{len(parts)} components", file=out)
    status = 0
    for k, part in enumerate(parts, start=1):
        paf = check_paf_axioms(part)
        verdict = "paf ok" if paf.passed else f"not a paf ({len(paf)} violations)"
        print(f"  component {k}: {part.n} elements [{', '.join(part.labels)}] {verdict}", file=out)
        if not paf.passed:
            status = 1
    return status


def _require_paf(model: FiniteModel, out: TextIO, limit: int | None) -> bool:
    report = check_paf_axioms(model)
    if not report.passed:
        _print_report("axioms", report, out, limit)
    return report.passed


def cmd_find_coherent(args, out: TextIO, err: TextIO) -> int:
    model = _load_model(args.model)
    if not _require_paf(model, out, args.limit):
        return 1
    search = search_coherent_systems(model)
    if search.found:
        print(
            f"coherent unit system: {', '.join(search.labels)} "
            f"({search.candidates_examined} of {search.total_candidates} candidates examined)",
            file=out,
        )
    else:
        print(f"no coherent unit system exists ({search.candidates_examined} candidates exhausted)", file=out)
    return 0


def cmd_check_conditions(args, out: TextIO, err: TextIO) -> int:
    model = _load_model(args.model)
    if not _require_paf(model, out, args.limit):
        return 1
    roots = check_no_dimensionful_roots(model, max_n=args.max_n)
    twins = check_root_indistinguishability(model, max_n=args.max_n, include_dimensionless=args.include_dimensionless)
    _print_report("no dimensionful roots of dimensionless elements", roots, out, args.limit)
    _print_report("root indistinguishability", twins, out, args.limit)
    search = search_coherent_systems(model)
    found = "yes" if search.found else "no"
    print(f"coherent unit system: {found} ({search.candidates_examined} candidates examined)", file=out)
    return 0 if roots.passed and twins.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcalc", description="Dimensional quantity calculator and finite-model checker.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def defs_options(p):
        p.add_argument("--defs", help=f"unit definition file (default: ${DEFS_ENV}, then the shipped si.qdef)")
        p.add_argument("--float", action="store_true", help="use 64-bit floats instead of exact rationals")

    def model_command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("model", help="model file")
        p.add_argument("--limit", type=int, default=None, help="show at most N witnesses per property")
        p.set_defaults(func=func)
        return p

    p = sub.add_parser("eval", help="evaluate one expression")
    p.add_argument("expr")
    defs_options(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("repl", help="read expressions from standard input")
    defs_options(p)
    p.set_defaults(func=cmd_repl)

    p = model_command("check-model", cmd_check_model, "check the axioms and their consequences")
    p.add_argument("--fieldoid", action="store_true", help="check the fieldoid axioms")
    model_command("decompose-fieldoid", cmd_decompose_fieldoid, "split a fieldoid into its components")
    model_command("find-coherent", cmd_find_coherent, "search for a coherent unit system")
    p = model_command("check-conditions", cmd_check_conditions, "check the two root conditions for coherence")
    p.add_argument("--max-n", type=int, default=None, help="largest root degree (default: exponent of the nonzero group)")
    p.add_argument("--include-dimensionless", action="store_true", help="also compare dimensionless elements")
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out, err)
    except UsageError as exc:
        print(f"qcalc: {exc}", file=err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
