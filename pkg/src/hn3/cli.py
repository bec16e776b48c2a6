"""Command line interface.

Exit codes: 0 when every requested check passed (negative findings such
as non-coinciding connections still count as answered questions), 1 when
a mathematical check failed or a construction's precondition does not
hold, 2 for unusable input (bad file, bad flags).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .builtin import builtin_example
from .connections import (
    class_condition_alpha1,
    class_condition_alpha23,
    coincidence_check,
    in_skew_torsion_class,
    natural_connection,
    naturality_report,
    structure_torsion,
)
from .errors import (
    ExistenceError,
    StructureFileError,
    SymmetryError,
    ValidationError,
)
from .fileio import dump_structure, load_structure, validation_reports
from .linalg import signature
from .nijenhuis import (
    associated_nijenhuis,
    fundamental_tensor,
    metric_lie_derivative,
    nijenhuis_tensor,
)
from .reporting import Report
from .structures import HN3Manifold
from .tensor import cyclic_sum

_TENSORS = (
    "F1", "F2", "F3",
    "N1", "N2", "N3",
    "Nhat1", "Nhat2", "Nhat3",
    "T1", "T2", "T3",
    "LC", "braces",
)


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", nargs="?", help="structure file (JSON)")
    common.add_argument(
        "--example", action="store_true",
        help="use the built-in 7-dimensional example instead of a file",
    )
    common.add_argument(
        "--lambda", dest="lam", metavar="p/q", default=None,
        help="bracket parameter of the built-in example (default 2); "
        "write negative values as --lambda=-p/q",
    )
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument(
        "--force", action="store_true",
        help="compute past failed existence preconditions (output not certified)",
    )

    parser = argparse.ArgumentParser(
        prog="hn3",
        description="Exact checks for almost contact 3-structures with "
        "Hermitian-Norden metrics on Lie algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common], help="run all structure validators")
    p_compute = sub.add_parser("compute", parents=[common], help="print one tensor")
    p_compute.add_argument("--tensor", choices=_TENSORS, required=True)
    sub.add_parser(
        "classify", parents=[common],
        help="evaluate the skew-torsion admissibility conditions",
    )
    sub.add_parser(
        "connection", parents=[common],
        help="build the three natural connections and compare them",
    )
    p_product = sub.add_parser(
        "product", parents=[common], help="check the almost hypercomplex extension"
    )
    p_product.add_argument("--alpha", type=int, choices=(1, 2, 3))
    p_product.add_argument("--beta", type=int, choices=(1, 2, 3))
    p_example = sub.add_parser(
        "example", parents=[common], help="summarize or emit the built-in example"
    )
    p_example.add_argument("--emit", metavar="PATH", help="write a structure file")
    return parser


def _resolve_input(args) -> HN3Manifold:
    use_example = args.example or args.command == "example"
    if use_example and args.file:
        raise _UsageError("give either a structure file or --example, not both")
    if not use_example and args.lam is not None:
        raise _UsageError("--lambda only applies to the built-in example")
    if use_example:
        try:
            return builtin_example(args.lam if args.lam is not None else 2)
        except (ValueError, TypeError) as exc:
            raise _UsageError(f"bad --lambda: {exc}") from exc
    if not args.file:
        raise _UsageError("a structure file or --example is required")
    return load_structure(args.file)


def _emit(reports: list[Report], as_json: bool) -> None:
    if as_json:
        print(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        print("\n".join(r.render() for r in reports))


def _cmd_validate(h: HN3Manifold, args) -> tuple[int, list[Report]]:
    reports = validation_reports(h)
    code = 0 if all(r.passed for r in reports) else 1
    return code, reports


def _cmd_compute(h: HN3Manifold, args) -> tuple[int, list[Report]]:
    name = args.tensor
    report = Report(f"compute {name}")
    if name.startswith("F"):
        t = fundamental_tensor(h, int(name[1]))
    elif name.startswith("Nhat"):
        t = associated_nijenhuis(h, int(name[4]))[1]
    elif name.startswith("N"):
        t = nijenhuis_tensor(h, int(name[1]))[1]
    elif name.startswith("T"):
        alpha = int(name[1])
        t = structure_torsion(h, alpha, force=args.force)
        if args.force and not in_skew_torsion_class(h, alpha):
            report.warnings.append(
                "existence precondition fails; this expression is not the "
                "torsion of a natural connection"
            )
    elif name == "LC":
        t = h.mla.levi_civita.gamma
    else:
        t = h.mla.braces
    report.attach_tensor(name, t)
    return 0, [report]


def _cmd_classify(h: HN3Manifold, args) -> tuple[int, list[Report]]:
    report = Report("skew-torsion admissibility")
    funds = {a: fundamental_tensor(h, a) for a in (1, 2, 3)}
    report.findings["structure1_reflection_identity"] = class_condition_alpha1(
        h, funds[1]
    )
    for a in (2, 3):
        report.findings[f"structure{a}_cyclic_sum_vanishes"] = cyclic_sum(
            funds[a]
        ).is_zero()
        report.findings[f"structure{a}_reeb_killing"] = metric_lie_derivative(
            h, a
        ).is_zero()
        report.findings[f"structure{a}_class_condition"] = class_condition_alpha23(
            h, a, funds[a]
        )
    for a in (1, 2, 3):
        report.findings[f"structure{a}_associated_nijenhuis_vanishes"] = (
            associated_nijenhuis(h, a)[0].is_zero()
        )
    return 0, [report]


def _cmd_connection(h: HN3Manifold, args) -> tuple[int, list[Report]]:
    reports: list[Report] = []
    code = 0
    built = {}
    for a in (1, 2, 3):
        t = structure_torsion(h, a, force=args.force)
        try:
            nc = natural_connection(h, a, t)
        except SymmetryError:
            rep = Report(f"naturality for structure {a}")
            rep.warnings.append(
                "torsion is not a 3-form here; no natural connection was built"
            )
            rep.attach_tensor(f"T{a}", t)
            reports.append(rep)
            continue
        built[a] = nc
        rep = naturality_report(nc.connection, h, a)
        rep.attach_tensor(f"T{a}", t)
        reports.append(rep)
        if not rep.passed:
            code = 1
    coin = coincidence_check(h, force=args.force)
    rep = Report("coincidence of the three natural connections")
    for (a, b), equal in coin.torsions_equal.items():
        rep.findings[f"D{a}=D{b}"] = equal
    rep.findings["routes_agree"] = coin.routes_agree
    rep.findings["common_connection_exists"] = coin.common_exists
    rep.findings["summary"] = coin.summary()
    reports.append(rep)
    return code, reports


def _cmd_product(h: HN3Manifold, args) -> tuple[int, list[Report]]:
    from .nijenhuis import braces_nijenhuis_product
    from .structures import build_product, validate_hypercomplex_hn

    p = build_product(h)
    reports = [validate_hypercomplex_hn(p)]
    if args.alpha or args.beta:
        alpha = args.alpha or args.beta
        beta = args.beta or alpha
        rep = Report(f"braces Nijenhuis pairing of J{alpha} and J{beta}")
        rep.attach_tensor(
            f"JJ{alpha}{beta}", braces_nijenhuis_product(p, alpha, beta)
        )
        reports.append(rep)
    code = 0 if all(r.passed for r in reports) else 1
    return code, reports


def _cmd_example(h: HN3Manifold, args) -> tuple[int, list[Report]]:
    report = Report("built-in example")
    report.findings["dimension"] = str(h.dim)
    report.findings["metric_signature"] = "({},{},{})".format(*signature(h.metric))
    report.attach_tensor("brackets", h.mla.algebra.bracket)
    if args.emit:
        dump_structure(h, Path(args.emit))
        report.findings["written"] = str(args.emit)
    return 0, [report]


_COMMANDS = {
    "validate": _cmd_validate,
    "compute": _cmd_compute,
    "classify": _cmd_classify,
    "connection": _cmd_connection,
    "product": _cmd_product,
    "example": _cmd_example,
}


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        h = _resolve_input(args)
        code, reports = _COMMANDS[args.command](h, args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except StructureFileError as exc:
        print(f"structure file error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return 2
    except (ValidationError, ExistenceError, SymmetryError) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    _emit(reports, args.json)
    return code


def main() -> None:
    sys.exit(run())
