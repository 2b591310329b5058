"""Command-line front end.

Exit codes: 0 success, 1 input/parse error, 2 not a block graph,
3 oracle limit exceeded, 4 bad arguments, 5 linear/oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from beiblock.blocks import NotBlockGraph, split_indecomposable, validate_block_graph
from beiblock.generate import GeneratorConfig, generate_block_graph
from beiblock.graph import Graph, ParseError, induced_subgraph, parse_graph
from beiblock.krull import krull_dim_linear, traversal_witness
from beiblock.oracle import OracleLimitExceeded, krull_dim_bruteforce, minh_maxh
from beiblock.regularity import compute_regularity, reg_bounds
from beiblock.report import OracleMismatch, invariant_report, to_json, to_text

EXIT_OK, EXIT_PARSE, EXIT_NOT_BLOCK, EXIT_LIMIT, EXIT_ARGS, EXIT_MISMATCH = range(6)


class _ArgError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgError(message)


def _read(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_graph(text)


def _emit(lines: List[str]) -> None:
    sys.stdout.write("".join(line + "\n" for line in lines))


def cmd_invariants(args) -> int:
    g = _read(args.file)
    report = invariant_report(g, check=args.check, limit=args.limit_n)
    sys.stdout.write(to_json(report) if args.format == "json" else to_text(report))
    return EXIT_OK


def cmd_dim(args) -> int:
    g = _read(args.file)
    bd = validate_block_graph(g)
    dim = krull_dim_linear(bd)
    lines = [f"dimension: {dim}"]
    if args.witness:
        w = traversal_witness(bd)
        lines.append(f"witness: {json.dumps(list(w.cutset.vertices))}")
        lines.append(f"peel: {json.dumps([list(p) for p in w.peel_sequence])}")
    if args.check:
        odim, ow = krull_dim_bruteforce(g, args.limit_n)
        lines.append(f"oracle_dimension: {odim}")
        lines.append(f"oracle_witness: {json.dumps(list(ow.vertices))}")
        if odim != dim:
            _emit(lines)
            print(f"mismatch: linear {dim}, oracle {odim}", file=sys.stderr)
            return EXIT_MISMATCH
    _emit(lines)
    return EXIT_OK


def cmd_reg(args) -> int:
    g = _read(args.file)
    bd = validate_block_graph(g)
    lines = [f"regularity: {compute_regularity(bd)}"]
    if args.bounds:
        if len(bd.components) == 1 and g.n >= 2:
            b = reg_bounds(bd)
            lines += [f"flower_lower: {b.flower_lower}", f"path_lower: {b.path_lower}",
                      f"clique_upper: {b.clique_upper}"]
        else:
            for idx, comp in enumerate(bd.components, start=1):
                if len(comp) < 2:
                    lines.append(f"component[{idx}]: isolated vertex {comp[0]}")
                    continue
                b = reg_bounds(validate_block_graph(induced_subgraph(g, comp)))
                lines.append(f"component[{idx}]: flower_lower={b.flower_lower} "
                             f"path_lower={b.path_lower} clique_upper={b.clique_upper}")
    _emit(lines)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _read(args.file)
    s = minh_maxh(g, args.limit_n)
    best = max(s.all_cutsets, key=lambda c: c.dim_term)
    lines = [
        f"n: {g.n}",
        f"cutsets: {len(s.all_cutsets)}",
        f"minh_height: {s.minh_height}",
        f"minh_count: {len(s.minh)}",
        f"maxh_height: {s.maxh_height}",
        f"maxh_count: {len(s.maxh)}",
        f"maxh_only_empty: {json.dumps(s.maxh_is_empty_set_only)}",
        f"dimension: {s.dim}",
        f"witness: {json.dumps(list(best.vertices))}",
    ]
    _emit(lines)
    return EXIT_OK


def cmd_decompose(args) -> int:
    g = _read(args.file)
    split = split_indecomposable(validate_block_graph(g))
    lines = [f"parts: {len(split.parts)}"]
    lines += [f"part[{i}]: {' '.join(map(str, p))}" for i, p in enumerate(split.parts, start=1)]
    lines.append(f"glue: {' '.join(map(str, sorted(split.glue_vertices)))}".rstrip())
    _emit(lines)
    return EXIT_OK


def cmd_gen(args) -> int:
    cfg = GeneratorConfig(num_blocks=args.blocks, max_block_size=args.max_block_size,
                          tree_shape_bias=args.bias, min_block_size=args.min_block_size)
    try:
        cfg.check()
    except ValueError as exc:
        raise _ArgError(str(exc)) from None
    text = generate_block_graph(cfg, args.seed).to_text()
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="beiblock", description="Invariants of binomial edge ideals of block graphs.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def with_limit(sp):
        sp.add_argument("--limit-n", type=int, default=None,
                        help="largest n the exhaustive oracle accepts (default 22 or $BEI_ORACLE_LIMIT)")

    sp = sub.add_parser("invariants", help="full invariant report")
    sp.add_argument("file")
    sp.add_argument("--format", choices=["json", "text"], default="text")
    sp.add_argument("--check", action="store_true", help="cross-check against the exhaustive oracle")
    with_limit(sp)
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("dim", help="Krull dimension")
    sp.add_argument("file")
    sp.add_argument("--witness", action="store_true")
    sp.add_argument("--check", action="store_true")
    with_limit(sp)
    sp.set_defaults(func=cmd_dim)

    sp = sub.add_parser("reg", help="Castelnuovo-Mumford regularity")
    sp.add_argument("file")
    sp.add_argument("--bounds", action="store_true")
    sp.set_defaults(func=cmd_reg)

    sp = sub.add_parser("oracle", help="cutset census of any graph")
    sp.add_argument("file")
    with_limit(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("decompose", help="indecomposable parts")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("gen", help="random block graph as an edge list")
    sp.add_argument("--blocks", type=int, required=True)
    sp.add_argument("--max-block-size", type=int, required=True)
    sp.add_argument("--min-block-size", type=int, default=2)
    sp.add_argument("--bias", type=float, default=0.0, help="tree shape bias in [0, 1]")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_gen)
    return p


def run(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except _ArgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS
    try:
        return args.func(args)
    except _ArgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except (ParseError, OSError) as exc:
        print(f"ParseError: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotBlockGraph as exc:
        print(f"NotBlockGraph: {exc}", file=sys.stderr)
        return EXIT_NOT_BLOCK
    except OracleLimitExceeded as exc:
        print(f"OracleLimitExceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except OracleMismatch as exc:
        print(f"OracleMismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
