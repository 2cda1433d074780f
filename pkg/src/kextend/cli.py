"""Command-line interface.

Subcommands:

* ``analyze``: one JSON line per input graph with the derived quantities
  and per-level extendibility certificates.
* ``verify``: run selected properties over a corpus, print a report as a
  single JSON document; exit 1 when any violation is found.
* ``gen``: write a corpus as graph6 lines.
* ``convert``: translate between graph6 and edge-list text.

Exit codes: 0 clean, 1 property violation found, 2 usage or input error.
``KEXTEND_WORKERS`` sets the verification worker count (default: machine
parallelism); output bytes do not depend on it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Iterator, Optional, TextIO

from . import __version__
from .connectivity import vertex_connectivity
from .extendibility import extendibility_number, is_k_extendible
from .graphs import (
    Bipartition,
    Graph,
    GraphParseError,
    bipartition,
    is_connected,
    min_degree,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
    to_graph6,
)
from .jsonio import (
    bipartition_json,
    certificate_json,
    cut_witness_json,
    odd_cycle_json,
)
from .matching import has_perfect_matching, matching_number
from .verifier import (
    PROPERTY_IDS,
    CorpusSpec,
    generate_corpus,
    report_json,
    run_corpus,
)

USAGE_ERROR = 2


def analysis_record(g: Graph, kmax: int) -> dict[str, Any]:
    """All analyze fields, each re-derivable from the corresponding library
    call on the same graph."""
    record: dict[str, Any] = {
        "graph6": to_graph6(g) if g.n <= 62 else None,
        "n": g.n,
        "edge_count": g.edge_count,
        "connected": is_connected(g),
    }
    bp = bipartition(g)
    if isinstance(bp, Bipartition):
        record["bipartite"] = True
        record["bipartition"] = bipartition_json(bp)
        record["odd_cycle"] = None
    else:
        record["bipartite"] = False
        record["bipartition"] = None
        record["odd_cycle"] = odd_cycle_json(bp)
    record["min_degree"] = min_degree(g) if g.n else None
    record["matching_number"] = matching_number(g)
    record["has_perfect_matching"] = has_perfect_matching(g)
    if g.n:
        kappa, witness = vertex_connectivity(g)
        record["vertex_connectivity"] = kappa
        record["cut_witness"] = cut_witness_json(witness)
    else:
        record["vertex_connectivity"] = None
        record["cut_witness"] = None
    record["extendibility_number"] = extendibility_number(g)
    record["certificates"] = [certificate_json(is_k_extendible(g, k))
                              for k in range(kmax + 1)]
    return record


def _read_graphs(handle: TextIO, fmt: str) -> Iterator[Graph]:
    if fmt == "g6":
        for lineno, line in enumerate(handle, start=1):
            stripped = line.strip()
            if not stripped:
                continue
            try:
                yield parse_graph6(stripped)
            except GraphParseError as exc:
                raise GraphParseError(f"line {lineno}: {exc}",
                                      line=lineno) from exc
    else:
        yield parse_edge_list(handle.read())


def _open_input(path: str) -> TextIO:
    if path == "-":
        return sys.stdin
    return open(path, "r", encoding="ascii")


def cmd_analyze(args: argparse.Namespace) -> int:
    handle = _open_input(args.input)
    try:
        for g in _read_graphs(handle, args.format):
            print(json.dumps(analysis_record(g, args.kmax)))
    except GraphParseError as exc:
        print(f"kextend analyze: {exc}", file=sys.stderr)
        return USAGE_ERROR
    finally:
        if handle is not sys.stdin:
            handle.close()
    return 0


def _corpus_spec(args: argparse.Namespace) -> CorpusSpec:
    if args.exhaustive is not None:
        return CorpusSpec(mode="exhaustive", n=args.exhaustive)
    if args.random is not None:
        n, count, seed = args.random
        return CorpusSpec(mode="random", n=n, count=count, seed=seed,
                          edge_probability=args.p)
    return CorpusSpec(mode="external", source=args.input,
                      strict=args.strict)


def _workers() -> int:
    raw = os.environ.get("KEXTEND_WORKERS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        workers = int(raw)
    except ValueError:
        raise ValueError(f"KEXTEND_WORKERS must be an integer, got {raw!r}")
    if workers < 1:
        raise ValueError("KEXTEND_WORKERS must be >= 1")
    return workers


def cmd_verify(args: argparse.Namespace) -> int:
    properties = (PROPERTY_IDS if args.properties == "all"
                  else tuple(args.properties.split(",")))
    unknown = set(properties) - set(PROPERTY_IDS)
    if unknown:
        print(f"kextend verify: unknown properties {sorted(unknown)}; "
              f"known: {', '.join(PROPERTY_IDS)}", file=sys.stderr)
        return USAGE_ERROR
    try:
        report = run_corpus(_corpus_spec(args), properties, kmax=args.kmax,
                            workers=_workers())
    except (GraphParseError, ValueError, OSError) as exc:
        print(f"kextend verify: {exc}", file=sys.stderr)
        return USAGE_ERROR
    print(json.dumps(report_json(report, include_timing=args.timing),
                     indent=2))
    return 1 if report.violations else 0


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        for g in generate_corpus(_corpus_spec(args)):
            print(to_graph6(g))
    except ValueError as exc:
        print(f"kextend gen: {exc}", file=sys.stderr)
        return USAGE_ERROR
    return 0


def cmd_convert(args: argparse.Namespace) -> int:
    handle = _open_input(args.input)
    try:
        graphs = list(_read_graphs(handle, args.src))
    except GraphParseError as exc:
        print(f"kextend convert: {exc}", file=sys.stderr)
        return USAGE_ERROR
    finally:
        if handle is not sys.stdin:
            handle.close()
    try:
        if args.dst == "g6":
            for g in graphs:
                print(to_graph6(g))
        else:
            # edge-list documents, blank-line separated when streaming
            print("\n\n".join(to_edge_list(g) for g in graphs))
    except ValueError as exc:
        print(f"kextend convert: {exc}", file=sys.stderr)
        return USAGE_ERROR
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kextend",
        description="Certify k-extendibility of small graphs and verify "
                    "matching-theory properties over corpora.")
    parser.add_argument("--version", action="version",
                        version=f"kextend {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser(
        "analyze", help="per-graph quantities and certificates as JSON lines")
    p_analyze.add_argument("input", nargs="?", default="-",
                           help="input file (default: stdin)")
    p_analyze.add_argument("--format", choices=("g6", "edges"), default="g6")
    p_analyze.add_argument("--kmax", type=int, default=3,
                           help="certificate depth (default 3)")
    p_analyze.set_defaults(func=cmd_analyze)

    p_verify = sub.add_parser(
        "verify", help="run property verification over a corpus")
    mode = p_verify.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", type=int, metavar="N")
    mode.add_argument("--random", type=int, nargs=3,
                      metavar=("N", "COUNT", "SEED"))
    mode.add_argument("--input", metavar="FILE",
                      help="graph6 stream, one graph per line")
    p_verify.add_argument("--properties", default="all",
                          help="comma-separated ids (default: all of "
                               f"{','.join(PROPERTY_IDS)})")
    p_verify.add_argument("--kmax", type=int, default=3)
    p_verify.add_argument("--p", type=float, default=0.5,
                          help="edge probability for random mode")
    p_verify.add_argument("--no-strict", dest="strict", action="store_false",
                          help="skip malformed graph6 lines instead of "
                               "aborting")
    p_verify.add_argument("--timing", action="store_true",
                          help="include wall time in the report (breaks "
                               "byte-for-byte reproducibility)")
    p_verify.set_defaults(func=cmd_verify)

    p_gen = sub.add_parser("gen", help="emit a corpus as graph6 lines")
    gmode = p_gen.add_mutually_exclusive_group(required=True)
    gmode.add_argument("--exhaustive", type=int, metavar="N")
    gmode.add_argument("--random", type=int, nargs=3,
                       metavar=("N", "COUNT", "SEED"))
    p_gen.add_argument("--p", type=float, default=0.5)
    p_gen.set_defaults(func=cmd_gen, input=None, strict=True)

    p_convert = sub.add_parser("convert",
                               help="translate between graph formats")
    p_convert.add_argument("--from", dest="src", required=True,
                           choices=("g6", "edges"))
    p_convert.add_argument("--to", dest="dst", required=True,
                           choices=("g6", "edges"))
    p_convert.add_argument("input", nargs="?", default="-")
    p_convert.set_defaults(func=cmd_convert)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
