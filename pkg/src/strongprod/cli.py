"""Command-line front end: check, apsp, product, avgdist.

Data goes to standard output (or ``--out`` for products), diagnostics to
standard error. Output is deterministic: identical inputs give
byte-identical output.

Exit codes: 0 success, 1 usage, 2 parse or validation failure,
3 not strongly connected, 4 product size limit, 5 arithmetic overflow.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

from .apsp import floyd_warshall
from .digraph import Digraph, build_digraph, is_strongly_connected, parse_edge_list, write_edge_list
from .errors import (
    ArithmeticOverflowError,
    DigraphValidationError,
    EdgeListFormatError,
    NotStronglyConnectedError,
    OrderTooSmallError,
    ProductTooLargeError,
)
from .metrics import average_distance_product_n
from .product import DEFAULT_MAX_PRODUCT_VERTICES, strong_product_n

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID_INPUT = 2
EXIT_NOT_STRONGLY_CONNECTED = 3
EXIT_PRODUCT_TOO_LARGE = 4
EXIT_OVERFLOW = 5

_JSON_COMPACT = {"separators": (",", ":")}


@dataclass(frozen=True)
class CliConfig:
    """One parsed invocation."""

    subcommand: str
    paths: tuple[str, ...]
    method: str = "counting"
    fmt: str = "tsv"
    out: str | None = None
    max_product_vertices: int = DEFAULT_MAX_PRODUCT_VERTICES
    check_connected: bool = False


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; the contract says 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="strongprod",
        description="Distances, diameters, and average distances of strong "
                    "product digraphs given as edge-list files.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True, metavar="command")

    p = sub.add_parser("check", help="validate a file and test strong connectivity")
    p.add_argument("paths", nargs=1, metavar="file")

    p = sub.add_parser("apsp", help="print the all-pairs distance matrix")
    p.add_argument("paths", nargs=1, metavar="file")
    p.add_argument("--format", dest="fmt", choices=("tsv", "json"), default="tsv",
                   help="tsv uses INF for unreachable pairs, json uses null")

    p = sub.add_parser("product", help="write the explicit strong product edge list")
    p.add_argument("paths", nargs="+", metavar="file")
    p.add_argument("--out", help="write the edge list here instead of stdout")
    p.add_argument("--check-connected", action="store_true",
                   help="fail (exit 3) when the product is not strongly connected")
    p.add_argument("--max-product-vertices", type=int,
                   default=DEFAULT_MAX_PRODUCT_VERTICES,
                   help="refuse products larger than this many vertices")

    p = sub.add_parser("avgdist", help="average distance report of a strong product")
    p.add_argument("paths", nargs="+", metavar="file")
    p.add_argument("--method", choices=("naive", "counting", "oracle"),
                   default="counting")
    p.add_argument("--max-product-vertices", type=int,
                   default=DEFAULT_MAX_PRODUCT_VERTICES,
                   help="vertex limit for the explicit product (oracle method)")

    return parser


def _config(args: argparse.Namespace) -> CliConfig:
    return CliConfig(
        subcommand=args.subcommand,
        paths=tuple(args.paths),
        method=getattr(args, "method", "counting"),
        fmt=getattr(args, "fmt", "tsv"),
        out=getattr(args, "out", None),
        max_product_vertices=getattr(
            args, "max_product_vertices", DEFAULT_MAX_PRODUCT_VERTICES
        ),
        check_connected=getattr(args, "check_connected", False),
    )


def _load(path: str) -> Digraph:
    return build_digraph(parse_edge_list(Path(path).read_text(encoding="utf-8")))


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def cmd_check(config: CliConfig) -> int:
    g = _load(config.paths[0])
    connected = is_strongly_connected(g)
    print(json.dumps({"n": g.n, "m": g.m, "strongly_connected": connected},
                     **_JSON_COMPACT))
    return EXIT_OK if connected else EXIT_NOT_STRONGLY_CONNECTED


def cmd_apsp(config: CliConfig) -> int:
    d = floyd_warshall(_load(config.paths[0]))
    if config.fmt == "json":
        print(json.dumps([list(row) for row in d.entries], **_JSON_COMPACT))
    else:
        for row in d.entries:
            print("\t".join("INF" if e is None else str(e) for e in row))
    return EXIT_OK


def cmd_product(config: CliConfig) -> int:
    factors = [_load(path) for path in config.paths]
    product = strong_product_n(factors, max_vertices=config.max_product_vertices)
    if config.check_connected and not is_strongly_connected(product):
        print("strongprod: product is not strongly connected", file=sys.stderr)
        return EXIT_NOT_STRONGLY_CONNECTED
    orders = " ".join(str(g.n) for g in factors)
    comments = (
        f"strong product of {len(factors)} factors with orders {orders}",
        "vertex index = row-major encoding of factor coordinates, "
        "leftmost factor most significant",
    )
    _emit(write_edge_list(product, comments=comments), config.out)
    return EXIT_OK


def cmd_avgdist(config: CliConfig) -> int:
    factors = [_load(path) for path in config.paths]
    report = average_distance_product_n(
        factors,
        method=config.method,
        max_product_vertices=config.max_product_vertices,
    )
    payload = {
        "factor_orders": list(report.factor_orders),
        "product_order": report.product_order,
        "sigma": str(report.sigma),
        "mu": {"num": report.mu.numerator, "den": report.mu.denominator},
        "mu_decimal": report.mu_decimal,
        "diameter": report.diameter,
        "method": report.method,
    }
    print(json.dumps(payload, **_JSON_COMPACT))
    return EXIT_OK


_COMMANDS = {
    "check": cmd_check,
    "apsp": cmd_apsp,
    "product": cmd_product,
    "avgdist": cmd_avgdist,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.subcommand in ("product", "avgdist") and len(args.paths) < 2:
        print(f"strongprod: error: {args.subcommand} needs at least two files",
              file=sys.stderr)
        return EXIT_USAGE
    config = _config(args)
    try:
        return _COMMANDS[config.subcommand](config)
    except (EdgeListFormatError, DigraphValidationError, OrderTooSmallError) as exc:
        print(f"strongprod: error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except OSError as exc:
        print(f"strongprod: error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except NotStronglyConnectedError as exc:
        print(f"strongprod: error: {exc}", file=sys.stderr)
        return EXIT_NOT_STRONGLY_CONNECTED
    except ProductTooLargeError as exc:
        print(f"strongprod: error: {exc}", file=sys.stderr)
        return EXIT_PRODUCT_TOO_LARGE
    except ArithmeticOverflowError as exc:
        print(f"strongprod: error: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW


def run() -> None:
    sys.exit(main())
