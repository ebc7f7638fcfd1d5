"""Command line interface.

Commands:
    quantize          multiplicities of a dataset (one weight, full character, diagram)
    cut               write the two cut datasets for a dataset plus cut spec
    check-additivity  verify char(data) = char(plus) + char(minus) after cutting
    sphere            the P_{k,n} catalogue: data, cut identities, diagrams
    validate          structural validation report for a dataset file

Exit codes: 0 success, 1 malformed or invalid input, 2 unrealizable data
(exact division failed or a half weight leaked), 3 additivity failure.
All output is deterministic.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .cutting import DimensionMismatchError, build_cut_data, check_additivity
from .diagram import render_diagram
from .documents import (
    DocumentSyntaxError,
    SchemaError,
    parse_cut_spec,
    parse_dataset,
    serialize_dataset,
)
from .fixed_points import FixedPointData, InvalidDataError, polarize, validate
from .kostant import (
    NonIntegerMultiplicityError,
    character_rational,
    multiplicity,
)
from .laurent import (
    NotDivisibleError,
    OddExponentError,
    VirtualCharacter,
    char_sum,
)
from . import sphere as sphere_catalogue


def format_character_report(char: VirtualCharacter) -> str:
    """The quantize --character output: one 'weight: multiplicity' line each."""
    if not char:
        return "(zero representation)"
    return "\n".join(f"{weight}: {mult}" for weight, mult in char.items())


def _signed(value: int) -> str:
    return str(value) if value >= 0 else f"({value})"


def format_additivity_report(report) -> str:
    lines = [
        f"{row.weight}: {_signed(row.original)} = {_signed(row.plus)} + {_signed(row.minus)}"
        for row in report.rows
    ]
    lines.append("ADDITIVITY HOLDS" if report.holds else "ADDITIVITY FAILS")
    return "\n".join(lines)


def _load_dataset(path: str) -> FixedPointData:
    data = parse_dataset(Path(path).read_text(encoding="utf-8"))
    violations = validate(data)
    if violations:
        details = "\n".join(f"  {v}" for v in violations)
        raise InvalidDataError(f"invalid dataset {path}:\n{details}")
    return data


def _cmd_quantize(args: argparse.Namespace) -> int:
    data = _load_dataset(args.input)
    if args.beta is not None:
        # Counting path: polarize first, then one partition query per component.
        print(multiplicity(polarize(data), args.beta, args.paper_signs))
    elif args.diagram:
        for line in render_diagram(character_rational(data, args.paper_signs)):
            print(line)
    else:
        print(format_character_report(character_rational(data, args.paper_signs)))
    return 0


def _cmd_cut(args: argparse.Namespace) -> int:
    data = _load_dataset(args.input)
    spec = parse_cut_spec(Path(args.spec).read_text(encoding="utf-8"))
    plus, minus = build_cut_data(data, spec)
    Path(args.out_plus).write_text(serialize_dataset(plus), encoding="utf-8")
    Path(args.out_minus).write_text(serialize_dataset(minus), encoding="utf-8")
    return 0


def _cmd_check_additivity(args: argparse.Namespace) -> int:
    data = _load_dataset(args.input)
    spec = parse_cut_spec(Path(args.spec).read_text(encoding="utf-8"))
    plus, minus = build_cut_data(data, spec)
    report = check_additivity(data, plus, minus, args.paper_signs)
    print(format_additivity_report(report))
    return 0 if report.holds else 3


def _cmd_validate(args: argparse.Namespace) -> int:
    data = parse_dataset(Path(args.input).read_text(encoding="utf-8"))
    violations = validate(data)
    if violations:
        for violation in violations:
            print(violation, file=sys.stderr)
        return 1
    print("OK")
    return 0


def _sphere_summary(k: int, n: int) -> str:
    data = sphere_catalogue.sphere_data(k, n)
    north, south = data.isolated
    return "\n".join(
        [
            f"{sphere_catalogue.label(k, n)}: half_dimension {data.half_dimension}",
            f"  north pole: weight {north.weights[0]}, det_weight {north.det_weight}, "
            f"sign {north.sign:+d}",
            f"  south pole: weight {south.weights[0]}, det_weight {south.det_weight}, "
            f"sign {south.sign:+d}",
        ]
    )


def _cmd_sphere(args: argparse.Namespace) -> int:
    k, n = args.k, args.n
    printed = False
    if args.cut:
        (pk, pn), (mk, mn) = sphere_catalogue.cut_identity(k, n)
        name = sphere_catalogue.label(k, n)
        print(
            f"({name})+ = {sphere_catalogue.label(pk, pn)}, "
            f"({name})- = {sphere_catalogue.label(mk, mn)}"
        )
        printed = True
    if args.diagram:
        if args.cut:
            (pk, pn), (mk, mn) = sphere_catalogue.cut_identity(k, n)
            for kk, nn in ((k, n), (pk, pn), (mk, mn)):
                print(f"{sphere_catalogue.label(kk, nn)}:")
                char = character_rational(sphere_catalogue.sphere_data(kk, nn))
                for line in render_diagram(char):
                    print(line)
        else:
            char = character_rational(sphere_catalogue.sphere_data(k, n))
            for line in render_diagram(char):
                print(line)
        printed = True
    if args.emit:
        Path(args.emit).write_text(
            serialize_dataset(sphere_catalogue.sphere_data(k, n)), encoding="utf-8"
        )
        printed = True
    if not printed:
        print(_sphere_summary(k, n))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spincut",
        description="Exact circle-equivariant quantization from fixed-point data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    quantize = sub.add_parser("quantize", help="multiplicities of a dataset")
    quantize.add_argument("input", help="dataset file (JSON)")
    mode = quantize.add_mutually_exclusive_group()
    mode.add_argument("--beta", type=int, metavar="B", help="one weight, counting path")
    mode.add_argument(
        "--character", action="store_true", help="full character, rational path (default)"
    )
    mode.add_argument("--diagram", action="store_true", help="render the multiplicity diagram")
    quantize.add_argument(
        "--paper-signs",
        action="store_true",
        help="flip the sign of every codimension-2 contribution",
    )
    quantize.set_defaults(func=_cmd_quantize)

    cut = sub.add_parser("cut", help="write both cut datasets")
    cut.add_argument("input", help="dataset file (JSON)")
    cut.add_argument("spec", help="cut specification file (JSON)")
    cut.add_argument("--out-plus", required=True, help="output path for the plus side")
    cut.add_argument("--out-minus", required=True, help="output path for the minus side")
    cut.set_defaults(func=_cmd_cut)

    check = sub.add_parser(
        "check-additivity", help="verify additivity of quantization under a cut"
    )
    check.add_argument("input", help="dataset file (JSON)")
    check.add_argument("spec", help="cut specification file (JSON)")
    check.add_argument(
        "--paper-signs",
        action="store_true",
        help="flip the sign of every codimension-2 contribution",
    )
    check.set_defaults(func=_cmd_check_additivity)

    sphere = sub.add_parser("sphere", help="the P_{k,n} catalogue")
    sphere.add_argument("--k", type=int, required=True)
    sphere.add_argument("--n", type=int, required=True)
    sphere.add_argument("--cut", action="store_true", help="print the cut identities")
    sphere.add_argument(
        "--diagram",
        action="store_true",
        help="render diagrams (all three spaces with --cut)",
    )
    sphere.add_argument("--emit", metavar="PATH", help="write the dataset file")
    sphere.set_defaults(func=_cmd_sphere)

    check_file = sub.add_parser("validate", help="validation report for a dataset")
    check_file.add_argument("input", help="dataset file (JSON)")
    check_file.set_defaults(func=_cmd_validate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DocumentSyntaxError, SchemaError, InvalidDataError, DimensionMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (NotDivisibleError, OddExponentError, NonIntegerMultiplicityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
