"""Command-line front end.

Exit codes: 0 success, 1 malformed input, 2 validation failure,
3 structure not tree-like (realize).
"""

from __future__ import annotations

import argparse
import sys

from . import census, core, links, realize
from .canon import canonical_form
from .errors import (
    CensusCapExceeded,
    InconsistentLinkDescription,
    InvalidLinkingMatrix,
    InvalidStructure,
    NotTreeLike,
)
from .formats import FormatError, format_space, parse_matrix, parse_space_family
from .pd import format_pd

EXIT_OK, EXIT_MALFORMED, EXIT_INVALID, EXIT_NOT_TREE_LIKE = 0, 1, 2, 3


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_space(path):
    n, family = parse_space_family(_read(path))
    return core.ConnectivitySpace(n, family)


def _labels(mask):
    return " ".join(map(str, core.labels(mask)))


def cmd_validate(args, out):
    n, family = parse_space_family(_read(args.file))
    report = core.validate_structure(n, family)
    if report.valid:
        out.write("valid\n")
        return EXIT_OK
    for v in report.violations:
        out.write(f"violation: {v}\n")
    return EXIT_INVALID


def cmd_order(args, out):
    out.write(f"{core.order(_load_space(args.file))}\n")
    return EXIT_OK


def cmd_irreducibles(args, out):
    space = _load_space(args.file)
    for k in core.irreducibles(space):
        out.write(f"{core.order_of_subset(space, k)}\t{_labels(k)}\n")
    return EXIT_OK


def cmd_graph(args, out):
    graph = core.generic_graph(_load_space(args.file))
    if args.dot:
        out.write(graph.to_dot())
    else:
        for a, b in graph.edges:
            out.write(f"{_labels(a)}\t{_labels(b)}\n")
        out.write(f"longest\t{graph.longest_path}\n")
    return EXIT_OK


def cmd_canon(args, out):
    out.write(canonical_form(_load_space(args.file)).hex() + "\n")
    return EXIT_OK


def cmd_an(args, out):
    out.write(format_space(core.make_An(args.n)))
    return EXIT_OK


def cmd_link_order(args, out):
    n, family = parse_space_family(_read(args.file))
    link = links.LinkDescription(n, family)
    out.write(f"{links.connectivity_order_of_link(link, close=args.close)}\n")
    return EXIT_OK


def cmd_lk_bound(args, out):
    matrix = parse_matrix(_read(args.file))
    space = links.linking_lower_bound(matrix)
    out.write(format_space(space, comment="linking-number lower bound, not the full structure"))
    return EXIT_OK


def cmd_realize(args, out):
    space = _load_space(args.file)
    pd = realize.realize(space)
    text = format_pd(pd)
    if args.pd == "-":
        out.write(text)
    else:
        with open(args.pd, "w", encoding="utf-8") as fh:
            fh.write(text)
        out.write(f"components\t{len(pd.components)}\ncrossings\t{pd.crossing_count}\n")
    return EXIT_OK


def cmd_census(args, out):
    report = census.enumerate_structures(
        args.n, labeled=args.labeled, cap=args.cap, workers=args.workers
    )
    out.write(report.to_table())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="connspace",
        description="Finite connectivity spaces, connectivity order of links, "
        "and Brunnian link realizations.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help, file_help="space file ('-' for stdin)"):
        p = sub.add_parser(name, help=help, description=help)
        p.set_defaults(func=func)
        if file_help:
            p.add_argument("file", nargs="?", default="-", help=file_help)
        return p

    add("validate", cmd_validate, "check a space file against the axioms (exit 2 if invalid)")
    add("order", cmd_order, "print the order of the space")
    add("irreducibles", cmd_irreducibles, "list irreducible connected sets as ORDER<TAB>LABELS")
    g = add("graph", cmd_graph, "print the generic graph (edge list, or DOT with --dot)")
    g.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    add("canon", cmd_canon, "print the canonical form as lowercase hex")
    a = add("an", cmd_an, "write the space A_N as a space file", file_help=None)
    a.add_argument("n", type=int, help="number of points (1..64)")
    lo = add(
        "link-order",
        cmd_link_order,
        "connectivity order of a link given by its nonsplittable sublinks",
        file_help="space file: points = components, set = nonsplittable sublink",
    )
    lo.add_argument("--close", action="store_true", help="close the family instead of rejecting it")
    add(
        "lk-bound",
        cmd_lk_bound,
        "space file of the structure forced by nonzero linking numbers",
        file_help="matrix file: N, then N rows of integers",
    )
    r = add("realize", cmd_realize, "emit a PD code realizing a tree-like structure (exit 3 otherwise)")
    r.add_argument("--pd", required=True, metavar="OUT", help="output PD file ('-' for stdout)")
    c = add("census", cmd_census, "order histogram of all structures on N points", file_help=None)
    c.add_argument("n", type=int, help="number of points")
    c.add_argument("--labeled", action="store_true", help="count labeled structures, not classes")
    c.add_argument("--workers", type=int, default=1, help="worker processes (default 1)")
    c.add_argument("--cap", type=int, default=census.DEFAULT_CAP, help="largest N accepted")
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except NotTreeLike as e:
        err.write(f"not tree-like: {e}\n")
        return EXIT_NOT_TREE_LIKE
    except (InvalidStructure, InconsistentLinkDescription, InvalidLinkingMatrix) as e:
        err.write(f"invalid: {e}\n")
        return EXIT_INVALID
    except (FormatError, CensusCapExceeded, ValueError, OSError) as e:
        err.write(f"error: {e}\n")
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
