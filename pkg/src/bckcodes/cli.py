"""Command line interface.

Subcommands: verify, encode, construct, lift, enumerate.  Input paths
accept '-' for stdin.  Exit codes: 0 success, 1 a checked property
failed (axioms, exact round trip), 2 malformed input or unmet
hypothesis, 3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import sys

from . import io
from .algebra import (
    PropertyCheck,
    check_axioms,
    induced_order,
    is_commutative,
    is_implicative,
)
from .census import census
from .codes import enumerate_triangular_codes
from .construct import construct_from_code, verify_roundtrip
from .encode import BckFunction, generate_code
from .errors import InputError, InternalInvariantError, ParseError
from .lift import family_algebra, lift_code

_AXIOM_TEXT = {
    1: "((x*y)*(x*z))*(z*y) = 0",
    2: "(x*(x*y))*y = 0",
    3: "x*x = 0",
    4: "x*y = 0 and y*x = 0 imply x = y",
    5: "0*x = 0",
}


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _witness_str(witness) -> str:
    if witness is None:
        return ""
    vars_ = "xyz"
    return ", ".join(f"{vars_[i]}={v}" for i, v in enumerate(witness))


def _property_json(p: PropertyCheck | None):
    if p is None:
        return None
    return {"holds": p.holds, "witness": list(p.witness) if p.witness else None}


def cmd_verify(args) -> int:
    alg = io.parse_algebra(_read(args.algebra))
    report = check_axioms(alg)
    comm = impl = poset = None
    if report.is_bck:
        comm = is_commutative(alg)
        impl = is_implicative(alg)
        poset = induced_order(alg)

    if args.json:
        payload = {
            "order": alg.order,
            "axioms": [
                {
                    "axiom": c.axiom,
                    "holds": c.holds,
                    "witness": list(c.witness) if c.witness else None,
                    "evaluation": c.evaluation,
                }
                for c in report.checks
            ],
            "bci": report.is_bci,
            "bck": report.is_bck,
            "commutative": _property_json(comm),
            "implicative": _property_json(impl),
            "order_pairs": None
            if poset is None
            else [
                [x, y]
                for x in range(alg.order)
                for y in range(alg.order)
                if x != y and poset.le(x, y)
            ],
        }
        sys.stdout.write(io.render_report("verify", payload))
    else:
        lines = [f"order: {alg.order}"]
        for c in report.checks:
            if c.holds:
                lines.append(f"axiom {c.axiom} [{_AXIOM_TEXT[c.axiom]}]: holds")
            else:
                got = "" if c.evaluation is None else f", got {c.evaluation}"
                lines.append(
                    f"axiom {c.axiom} [{_AXIOM_TEXT[c.axiom]}]: "
                    f"fails at {_witness_str(c.witness)}{got}"
                )
        lines.append(f"bci: {'yes' if report.is_bci else 'no'}")
        lines.append(f"bck: {'yes' if report.is_bck else 'no'}")
        if report.is_bck:
            for name, p in (("commutative", comm), ("implicative", impl)):
                if p.holds:
                    lines.append(f"{name}: yes")
                else:
                    lines.append(f"{name}: no ({_witness_str(p.witness)})")
            pairs = " ".join(
                f"{x}<={y}"
                for x in range(alg.order)
                for y in range(alg.order)
                if x != y and poset.le(x, y)
            )
            lines.append(f"order pairs: {pairs if pairs else '(none)'}")
        sys.stdout.write("\n".join(lines) + "\n")
    return 0 if report.is_bck else 1


def cmd_encode(args) -> int:
    alg = io.parse_algebra(_read(args.algebra))
    report = check_axioms(alg)
    if not report.is_bck:
        failed = [c.axiom for c in report.checks if not c.holds]
        sys.stderr.write(
            f"not a BCK-algebra: axiom(s) {', '.join(map(str, failed))} fail\n"
        )
        return 1
    if args.function:
        fn = io.parse_function(_read(args.function), alg)
    else:
        fn = BckFunction.identity(alg)
    code = generate_code(fn)
    if args.json:
        payload = {
            "order": alg.order,
            "domain": list(fn.domain),
            "words": list(code.strings()),
        }
        sys.stdout.write(io.render_report("encode", payload))
    else:
        sys.stdout.write(
            io.render_code(code, header=f"{len(code)} codewords of length {code.length}")
        )
    return 0


def cmd_construct(args) -> int:
    code = io.parse_code(_read(args.code))
    result = construct_from_code(code)
    trip = verify_roundtrip(code)
    if args.json:
        payload = {
            "order": result.algebra.order,
            "table": [list(row) for row in result.algebra.table],
            "names": list(result.algebra.names),
            "sorted_code": list(result.code.strings()),
            "roundtrip": {
                "exact": trip.exact,
                "self_describing": trip.self_describing,
                "regenerated": list(trip.regenerated.strings()),
                "mismatches": [
                    {
                        "element": m.element,
                        "expected": str(m.expected),
                        "produced": str(m.produced),
                    }
                    for m in trip.mismatches
                ],
            },
        }
        sys.stdout.write(io.render_report("construct", payload))
    else:
        out = io.render_algebra(
            result.algebra, header=f"constructed from {len(result.code)} codewords"
        )
        if trip.exact:
            out += "# roundtrip: exact\n"
        else:
            out += f"# roundtrip: inexact ({len(trip.mismatches)} mismatched rows)\n"
            for m in trip.mismatches:
                out += f"# element {m.element}: expected {m.expected} produced {m.produced}\n"
        sys.stdout.write(out)
    if trip.exact:
        return 0
    if args.lax:
        sys.stderr.write("warning: round trip is inexact\n")
        return 0
    return 1


def cmd_lift(args) -> int:
    code = io.parse_code(_read(args.code))
    result = lift_code(code)
    if args.json:
        payload = {
            "source": list(result.source_code.strings()),
            "ambient_order": result.ambient.rows,
            "ambient_matrix": [
                "".join(map(str, row)) for row in result.ambient.entries
            ],
            "column_map": list(result.column_map),
            "domain": list(result.domain),
            "lifted": list(result.lifted_code.strings()),
        }
        sys.stdout.write(io.render_report("lift", payload))
    else:
        lines = [
            f"# lifted {len(result.source_code)} codewords of length "
            f"{result.source_code.length} into order {result.ambient.rows}",
            "# ambient matrix:",
        ]
        lines.extend("#   " + "".join(map(str, row)) for row in result.ambient.entries)
        lines.append(
            "# columns: "
            + " ".join(f"{j}->{e}" for j, e in enumerate(result.column_map))
        )
        lines.extend(result.lifted_code.strings())
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_enumerate(args) -> int:
    n = args.order
    if args.codes:
        max_order = max(7, args.max_order or 0)
        codes = list(enumerate_triangular_codes(n, max_order=max_order))
        if args.json:
            payload = {
                "order": n,
                "count": len(codes),
                "codes": [list(c.strings()) for c in codes],
            }
            sys.stdout.write(io.render_report("codes", payload))
        else:
            sys.stdout.write(f"count: {len(codes)}\n")
            for c in codes:
                sys.stdout.write(" ".join(c.strings()) + "\n")
        return 0

    if args.algebras:
        allow_large = (args.max_order or 0) >= n > 5
        if n == 6 and not allow_large:
            raise InputError("order 6 needs --max-order 6 and can take a while")
        if allow_large:
            sys.stderr.write("warning: order 6 enumeration may take a while\n")
        report = census(n, allow_large=allow_large)
        if args.json:
            payload = {
                "order": report.order,
                "total_tables": report.total_tables,
                "iso_classes": report.iso_classes,
                "similarity_classes": report.similarity_classes,
                "label_canonical_classes": report.label_canonical_classes,
                "bound": report.bound,
                "bound_check": report.bound_check,
                "code_varies_within_iso_class": report.code_varies_within_iso_class,
                "classes": [
                    {
                        "size": e.size,
                        "table": [list(row) for row in e.representative.table],
                        "code": list(e.code.strings()),
                        "label_canonical_code": list(e.label_canonical.strings()),
                    }
                    for e in report.class_inventory
                ],
            }
            sys.stdout.write(io.render_report("census", payload))
        else:
            lines = [
                f"order: {report.order}",
                f"tables: {report.total_tables}",
                f"iso classes: {report.iso_classes}",
                f"similarity classes: {report.similarity_classes}",
                f"label-canonical classes: {report.label_canonical_classes}",
                f"bound 2^((n-1)(n-2)/2): {report.bound}",
                f"bound check: {'pass' if report.bound_check else 'FAIL'}",
                "code varies within iso class: "
                + ("yes" if report.code_varies_within_iso_class else "no"),
            ]
            sys.stdout.write("\n".join(lines) + "\n")
        return 0

    algebra, code = family_algebra(n)
    if args.json:
        payload = {
            "order": algebra.order,
            "table": [list(row) for row in algebra.table],
            "code": list(code.strings()),
        }
        sys.stdout.write(io.render_report("family", payload))
    else:
        out = io.render_algebra(
            algebra, header=f"algebra of the {algebra.order} order-{n} family members"
        )
        out += "# canonical code:\n"
        for w in code.strings():
            out += f"# {w}\n"
        sys.stdout.write(out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bckcodes",
        description="Convert between finite BCK-algebras and binary block codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the five axioms and derived properties")
    p.add_argument("algebra", help="algebra file, or - for stdin")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("encode", help="generate the block code of an algebra")
    p.add_argument("algebra", help="algebra file, or - for stdin")
    p.add_argument("--function", help="function file (default: identity)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("construct", help="build the algebra of a triangular code")
    p.add_argument("code", help="code file, or - for stdin")
    p.add_argument(
        "--lax", action="store_true", help="exit 0 even when the round trip is inexact"
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("lift", help="embed any code into the triangular family")
    p.add_argument("code", help="code file, or - for stdin")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("enumerate", help="sweep codes, algebras, or the family algebra")
    p.add_argument("--order", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--codes", action="store_true", help="triangular-family codes")
    group.add_argument("--algebras", action="store_true", help="BCK census")
    group.add_argument("--family", action="store_true", help="family algebra and code")
    p.add_argument("--max-order", type=int, default=None, help="raise the size bound")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except InternalInvariantError as exc:
        sys.stderr.write(f"internal error: {exc}\n")
        return 3


def console_main() -> None:
    sys.exit(main())
