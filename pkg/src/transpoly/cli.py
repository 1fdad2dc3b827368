"""Command line interface.

Exit codes: 0 success, 1 validation or usage error, 2 size guard refusal,
3 internal assertion (bound violation or failed invariant).
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounded_path import bounded_pivot_path
from .degree_core import (
    DEFAULT_ENUMERATION_LIMIT,
    count_trees,
    enumerate_trees,
    parse_degrees,
    parse_tree,
)
from .errors import BoundViolation, InstanceTooLarge, ValidationError
from .joyal import bijection_check
from .pivoting import bfs_distance, build_graph, diameter, diameter_bound, to_dot, to_json_obj
from .polytope import OutOfLemmaScope, hirsch_bound, summary, tree_to_vertex
from .sweep import invariant_report

EXIT_OK, EXIT_INVALID, EXIT_TOO_LARGE, EXIT_ASSERTION = 0, 1, 2, 3

MAX_TREES = 10**6
MAX_CELLS = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def guard(df, force: bool) -> None:
    """Refuse enumeration-backed work on large instances unless forced."""
    if force:
        return
    trees = count_trees(df)
    if trees > MAX_TREES:
        raise InstanceTooLarge("enumeration (count_trees)", trees, MAX_TREES)
    if df.m * df.n > MAX_CELLS:
        raise InstanceTooLarge("enumeration (m*n)", df.m * df.n, MAX_CELLS)


def _limit(args):
    return None if args.force else DEFAULT_ENUMERATION_LIMIT


def _emit(out, fmt, obj, plain_lines):
    if fmt == "plain":
        for line in plain_lines:
            print(line, file=out)
    else:
        print(json.dumps(obj), file=out)


def cmd_count(args, df, out):
    value = count_trees(df)
    _emit(out, args.format, value, [value])


def cmd_trees(args, df, out):
    guard(df, args.force)
    codes = [t.encode() for t in enumerate_trees(df, _limit(args))]
    _emit(out, args.format, codes, codes)


def cmd_graph(args, df, out):
    guard(df, args.force)
    g = build_graph(df, _limit(args))
    if args.format == "dot":
        out.write(to_dot(g))
    else:
        obj = to_json_obj(g)
        _emit(out, args.format, obj,
              [f"{obj['vertices'][i]} {obj['vertices'][j]}" for i, j in obj["edges"]])


def _hirsch_or_none(df):
    try:
        return hirsch_bound(df)
    except OutOfLemmaScope:
        return None


def cmd_diameter(args, df, out):
    guard(df, args.force)
    value = diameter(build_graph(df, _limit(args)))
    bound, hirsch = diameter_bound(df), _hirsch_or_none(df)
    _emit(out, args.format, {"diameter": value, "bound": bound, "hirsch": hirsch},
          [value, f"bound={bound} hirsch={hirsch}"])


def cmd_path(args, df, out):
    if args.from_tree is None or args.to_tree is None:
        raise ValidationError("path needs --from and --to")
    S, T = parse_tree(args.from_tree, df), parse_tree(args.to_tree, df)
    cert = bounded_pivot_path(S, T)
    obj = cert.to_json_obj()
    if args.certify:
        cert.verify()
        obj["certified"] = True
    try:
        guard(df, False)
        obj["bfs_distance"] = bfs_distance(build_graph(df), S, T)
    except InstanceTooLarge:
        obj["bfs_distance"] = None
    lines = (
        [f"S {mv}" for mv in cert.moves_on_S]
        + [f"T {mv}" for mv in cert.moves_on_T]
        + [f"meeting={obj['meeting_tree']}", f"total_length={cert.total_length}",
           f"bound={cert.bound}", f"bfs_distance={obj['bfs_distance']}"]
    )
    _emit(out, args.format, obj, lines)


def cmd_vertex(args, df, out):
    if args.tree is None:
        raise ValidationError("vertex needs --tree")
    point = tree_to_vertex(df, parse_tree(args.tree, df))
    if args.format == "json":
        print(json.dumps([list(row) for row in point.x]), file=out)
    else:
        out.write(point.to_csv())


def cmd_summary(args, df, out):
    obj = summary(df)
    _emit(out, args.format, obj, [f"{k}={v}" for k, v in obj.items()])


def cmd_bijection(args, df, out):
    guard(df, args.force)
    rep = bijection_check(df, _limit(args))
    obj = {
        "S_d": rep.functional,
        "R_d": rep.marked,
        "n_times_T_d": df.n * rep.trees_formula,
        "phi_psi_identity": rep.phi_psi_ok,
        "psi_phi_identity": rep.psi_phi_ok,
    }
    _emit(out, args.format, obj, [f"{k}={v}" for k, v in obj.items()])
    return EXIT_OK if rep.ok else EXIT_ASSERTION


def cmd_check(args, df, out):
    guard(df, args.force)
    rep = invariant_report(df, _limit(args))
    ok = all(rep.values())
    obj = {"degrees": list(df.degrees), "ok": ok, "checks": rep}
    _emit(out, args.format, obj, [f"{k}={v}" for k, v in rep.items()] + [f"ok={ok}"])
    return EXIT_OK if ok else EXIT_ASSERTION


COMMANDS = {
    "count": (cmd_count, "exact |T_d| from the closed formula"),
    "trees": (cmd_trees, "list T_d in canonical order"),
    "graph": (cmd_graph, "pivoting graph as dot or json"),
    "diameter": (cmd_diameter, "exact diameter with the 2n-2 and Hirsch bounds"),
    "path": (cmd_path, "bounded pivot path certificate between two trees"),
    "vertex": (cmd_vertex, "vertex of P_d supported on a tree"),
    "fvector": (cmd_summary, "f0, f1, facets, Hirsch bound"),
    "facets": (cmd_summary, "f0, f1, facets, Hirsch bound"),
    "hirsch": (cmd_summary, "f0, f1, facets, Hirsch bound"),
    "bijection-check": (cmd_bijection, "round-trip the Joyal bijection"),
    "check": (cmd_check, "full invariant sweep"),
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--degrees", required=True, help="comma-separated integers, e.g. 1,1,1")
    common.add_argument("--format", choices=["json", "plain", "dot", "csv"])
    common.add_argument("--plain", action="store_true", help="same as --format plain")
    common.add_argument("--force", action="store_true", help="disable size guards")
    common.add_argument("--seed", type=int, help="reserved; all algorithms are deterministic")

    parser = _Parser(prog="transpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "path":
            p.add_argument("--from", dest="from_tree", required=True)
            p.add_argument("--to", dest="to_tree", required=True)
            p.add_argument("--certify", action="store_true")
        if name == "vertex":
            p.add_argument("--tree", required=True)
        if name == "diameter":
            p.add_argument("--method", choices=["bfs"], default="bfs")
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    if args.plain:
        args.format = "plain"
    if args.format is None:
        args.format = "csv" if args.command == "vertex" else "json"
    try:
        df = parse_degrees(args.degrees)
        handler = COMMANDS[args.command][0]
        code = handler(args, df, out)
        return EXIT_OK if code is None else code
    except InstanceTooLarge as exc:
        print(f"error: {exc} (use --force to override)", file=err)
        return EXIT_TOO_LARGE
    except BoundViolation as exc:
        print(f"assertion: {exc}", file=err)
        return EXIT_ASSERTION
    except ValidationError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INVALID
    except AssertionError as exc:
        print(f"assertion: {exc!r}", file=err)
        return EXIT_ASSERTION


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
