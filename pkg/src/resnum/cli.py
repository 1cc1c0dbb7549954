"""Command line front end.

Every report is newline-delimited JSON with sorted keys, one line per
graph, so output can be piped and diffed.  Exit codes: 0 success, 2 bad
input, 3 size cap exceeded, 4 theorem violation (reserved for outcomes
that would falsify a published result; seeing it means a bug).
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import asdict

from .bounds import PROP_IDS, verify_bounds
from .canon import canonical_form
from .catalog import (
    build_res3_catalog,
    clique_equals_res_report,
    load_default_catalog,
    load_fixture_text,
    render_fixture,
)
from .errors import InputError, InvalidFamilyParam, ResnumError, TheoremViolation, TooLarge
from .families import FamilySpec, classify_res, family_names
from .graphs import Graph, distance_matrix
from .invariants import invariant_summary
from .resolve import metric_dimension, resolving_number, upper_dimension
from .serial import (
    parse_edge_list,
    parse_graph6_lines,
    to_json_line,
    write_graph6,
)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")


def _load_graphs(path: str, fmt: str) -> list[Graph]:
    text = _read_text(path)
    if fmt == "edgelist":
        return [parse_edge_list(text).graph]
    graphs = list(parse_graph6_lines(text))
    if not graphs:
        raise InputError(f"no graph6 lines found in {path}")
    return graphs


def _jsonable_girth(value) -> int | None:
    return None if math.isinf(value) else int(value)


def _cmd_compute(args: argparse.Namespace) -> int:
    for g in _load_graphs(args.input, args.format):
        dm = distance_matrix(g)
        rep = resolving_number(g, dm)
        inv = invariant_summary(g, dm)
        out = {
            "n": g.n,
            "m": g.m,
            "res": rep.res,
            "witness_pair": list(rep.witness_pair) if rep.witness_pair else None,
            "diameter": inv.diameter,
            "girth": _jsonable_girth(inv.girth),
            "is_tree": inv.is_tree,
            "omega": inv.omega,
            "max_degree": inv.max_degree,
        }
        if args.dim:
            out["dim"] = metric_dimension(g).dim
        if args.updim:
            out["updim"] = upper_dimension(g).updim
        print(to_json_line(out))
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    for g in _load_graphs(args.input, args.format):
        cat = classify_res(g)
        out = {"category": cat.tag, "res": cat.res}
        if cat.tag.startswith("Catalog"):
            member = load_default_catalog().lookup(canonical_form(g))
            out["catalog_member"] = member.graph6 if member else None
        print(to_json_line(out))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    for g in _load_graphs(args.input, args.format):
        dm = distance_matrix(g)
        inv = invariant_summary(g, dm)
        res = resolving_number(g, dm).res
        rows = verify_bounds(g, inv, res)
        if args.prop != "all":
            rows = tuple(r for r in rows if r.prop_id == args.prop)
        print(to_json_line([asdict(r) for r in rows]))
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    try:
        params = tuple(int(p) for p in args.params.split(",")) if args.params else ()
    except ValueError:
        raise InvalidFamilyParam(f"params must be comma-separated integers, got {args.params!r}")
    g = FamilySpec(kind=args.family, params=params).build()
    print(write_graph6(g))
    return 0


def _cmd_enum(args: argparse.Namespace) -> int:
    from .enumeration import EnumConstraints, enumerate_graphs

    constraints = EnumConstraints(
        n=args.n,
        max_degree=args.max_deg,
        min_girth=args.min_girth,
        trees_only=args.trees,
    )
    for g in enumerate_graphs(constraints):
        print(write_graph6(g))
    return 0


def _cmd_catalog(args: argparse.Namespace) -> int:
    if args.res != 3:
        raise InputError(f"only the res = 3 catalog is derivable, got --res {args.res}")
    derived = build_res3_catalog()
    if args.fixture:
        expected = load_fixture_text(_read_text(args.fixture))
    else:
        expected = load_default_catalog()
    match = render_fixture(derived) == render_fixture(expected)
    g5 = derived.slice_by_girth(5)
    out = {
        "members": len(derived.members),
        "girth3": len(derived.slice_by_girth(3)),
        "girth5": len(g5),
        "girth5_orders": sorted(m.n for m in g5),
        "fixture_match": match,
        "clique_equals_res": clique_equals_res_report(derived),
    }
    print(to_json_line(out))
    return 0 if match else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="resnum",
        description="Resolving-number computations, classifications, and bound checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--input", required=True, help="file path, or - for stdin")
        p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")

    p = sub.add_parser("compute", help="resolving number plus invariant summary")
    add_input(p)
    p.add_argument("--dim", action="store_true", help="include metric dimension")
    p.add_argument("--updim", action="store_true", help="include upper dimension")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("classify", help="structural category of the resolving number")
    add_input(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="bound verdicts")
    add_input(p)
    p.add_argument("--prop", default="all", choices=("all",) + PROP_IDS)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="emit a named family member as graph6")
    p.add_argument("--family", required=True, choices=sorted(family_names()))
    p.add_argument("--params", default="", help="comma-separated integers")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("enum", help="stream connected graphs as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-deg", type=int, default=None)
    p.add_argument("--min-girth", type=int, default=None)
    p.add_argument("--trees", action="store_true")
    p.set_defaults(func=_cmd_enum)

    p = sub.add_parser("catalog", help="derive and validate the res = 3 catalog")
    p.add_argument("--res", type=int, required=True)
    p.add_argument("--fixture", default=None, help="fixture path to validate against")
    p.set_defaults(func=_cmd_catalog)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return 4
    except TooLarge as exc:
        print(f"size cap: {exc}", file=sys.stderr)
        return 3
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ResnumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
