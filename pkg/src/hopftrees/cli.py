"""Command-line front end.

Thin wrappers over the library: every subcommand parses its inputs, calls the
corresponding library operation, and renders the result either as canonical
text or as a stable JSON document (``--format json-like``).  Output is sorted
canonically everywhere, so identical invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from .connection import flat_connection, load_connection
from .hopf import antipode, coproduct, format_tree_sum, gl_mul
from .poly import (
    ParseError,
    format_derivation,
    format_polynomial,
    parse_derivation,
    parse_polynomial,
    scan_nvars,
)
from .smash import SmashAlgebra, format_smash, parse_smash
from .trees import format_tree, parse_tree
from .action import act
from .verify import format_report, run_suites


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopftrees",
        description="Compute with labeled rooted trees, their action on polynomials, "
        "and the smash product.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, connection=False) -> None:
        p.add_argument("--vars", type=int, default=None, metavar="N",
                       help="ring dimension (default: inferred from the inputs)")
        p.add_argument("--format", choices=["text", "json-like"], default="text")
        if connection:
            p.add_argument("--connection", default="flat", metavar="flat|PATH",
                           help="connection table file, or 'flat' (default)")

    p = sub.add_parser("mul", help="product of two trees")
    p.add_argument("tree1")
    p.add_argument("tree2")
    common(p)

    p = sub.add_parser("comul", help="coproduct of a tree")
    p.add_argument("tree")
    common(p)

    p = sub.add_parser("antipode", help="antipode of a tree")
    p.add_argument("tree")
    common(p)

    p = sub.add_parser("act", help="act with a tree on a polynomial")
    p.add_argument("tree")
    p.add_argument("polynomial")
    common(p, connection=True)

    p = sub.add_parser("bracket", help="Lie bracket of two derivations")
    p.add_argument("derivation1")
    p.add_argument("derivation2")
    common(p)

    p = sub.add_parser("rewrite", help="rewrite a smash element to basis labels")
    p.add_argument("element")
    common(p, connection=True)

    p = sub.add_parser("member", help="test membership in the rewriting kernel ideal")
    p.add_argument("element")
    common(p, connection=True)

    p = sub.add_parser("verify", help="run the identity sweeps")
    p.add_argument("--suite", choices=["hopf", "action", "smash", "all"],
                   default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["text", "json-like"], default="text")

    return parser


def _nvars(args, *texts: str) -> int:
    n = args.vars if args.vars is not None else scan_nvars(*texts)
    if n < 1:
        raise ParseError("", 0, "--vars must be at least 1")
    return n


def _connection_for(args, nvars: int):
    if getattr(args, "connection", "flat") == "flat":
        return flat_connection(nvars)
    conn = load_connection(args.connection)
    if conn.nvars != nvars:
        raise ValueError(
            f"connection file has {conn.nvars} variables, inputs need {nvars}"
        )
    return conn


def _emit(args, text: str, structured) -> None:
    if args.format == "json-like":
        print(json.dumps(structured, sort_keys=True, indent=2))
    else:
        print(text)


def _tree_sum_records(total) -> list[dict]:
    return [
        {"coefficient": str(c), "tree": format_tree(tree)} for tree, c in total.items()
    ]


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    command = args.command

    if command == "mul":
        n = _nvars(args, args.tree1, args.tree2)
        total = gl_mul(parse_tree(args.tree1, n), parse_tree(args.tree2, n))
        _emit(args, format_tree_sum(total), {"terms": _tree_sum_records(total)})
        return 0

    if command == "comul":
        n = _nvars(args, args.tree)
        split = coproduct(parse_tree(args.tree, n))
        text = " + ".join(
            f"{c} * ({format_tree(left)} ⊗ {format_tree(right)})"
            for (left, right), c in split.items()
        )
        records = [
            {"coefficient": str(c), "left": format_tree(left), "right": format_tree(right)}
            for (left, right), c in split.items()
        ]
        _emit(args, text or "0", {"terms": records})
        return 0

    if command == "antipode":
        n = _nvars(args, args.tree)
        total = antipode(parse_tree(args.tree, n))
        _emit(args, format_tree_sum(total), {"terms": _tree_sum_records(total)})
        return 0

    if command == "act":
        n = _nvars(args, args.tree, args.polynomial)
        conn = _connection_for(args, n)
        result = act(parse_tree(args.tree, n), parse_polynomial(args.polynomial, n), conn)
        _emit(args, format_polynomial(result), {"polynomial": format_polynomial(result)})
        return 0

    if command == "bracket":
        n = _nvars(args, args.derivation1, args.derivation2)
        result = parse_derivation(args.derivation1, n).bracket(
            parse_derivation(args.derivation2, n)
        )
        _emit(args, format_derivation(result), {"derivation": format_derivation(result)})
        return 0

    if command == "rewrite":
        n = _nvars(args, args.element)
        ctx = SmashAlgebra(_connection_for(args, n))
        result = ctx.alpha(parse_smash(args.element, n))
        records = [
            {"coefficient": format_polynomial(p), "tree": format_tree(tree)}
            for tree, p in result.items()
        ]
        _emit(args, format_smash(result), {"terms": records})
        return 0

    if command == "member":
        n = _nvars(args, args.element)
        ctx = SmashAlgebra(_connection_for(args, n))
        answer = ctx.ideal_member(parse_smash(args.element, n))
        _emit(args, "true" if answer else "false", {"member": answer})
        return 0

    if command == "verify":
        results = run_suites([args.suite], seed=args.seed)
        if args.format == "json-like":
            records = [
                {
                    "suite": r.suite,
                    "check": r.name,
                    "cases": r.cases,
                    "passed": r.ok,
                    "failures": r.failures,
                }
                for r in results
            ]
            print(json.dumps({"checks": records}, sort_keys=True, indent=2))
        else:
            print(format_report(results))
        return 0 if all(r.ok for r in results) else 1

    raise ValueError(f"unknown command {command!r}")


if __name__ == "__main__":
    sys.exit(main())
