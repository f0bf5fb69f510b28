"""Command-line front end.

Exit codes: 0 ok, 2 input syntax, 3 oracle misuse, 4 class violation,
5 resource bound, 6 roundtrip failure, 7 atlas counterexample.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import atlas, codec
from .errors import InputFormatError, LangRepError
from .formats import format_graph, format_word, parse_word, read_graph, read_host
from .graphs import ClassWitness, Graph, HostGraph, is_isomorphic
from .languages import catalog, host_language, make_oracle

EXIT_ROUNDTRIP = 6
EXIT_COUNTEREXAMPLE = 7


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc


def _content_lines(text: str) -> list[list[str]]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line.split())
    return out


def parse_aux(text: str, witness_class: str):
    """Read a witness file for the given class.

    * comparability: lines ``u v`` meaning ``u < v``
    * bipartite: two lines, one per side (``-`` for an empty side)
    * cluster: one line per block
    * k-colorable / h-colorable: lines ``vertex colour``
    * co-interval: lines ``vertex left right``; ``--`` starts a new component
    """
    rows = _content_lines(text)
    kind = witness_class.partition(":")[0]
    if kind == "comparability":
        if any(len(r) != 2 for r in rows):
            raise InputFormatError("order lines are 'u v'")
        return ClassWitness(witness_class, frozenset(tuple(r) for r in rows))
    if kind in ("bipartite", "cluster"):
        blocks = [[] if r == ["-"] else r for r in rows]
        if kind == "bipartite" and len(blocks) != 2:
            raise InputFormatError("a bipartition file has exactly two lines")
        return ClassWitness(witness_class, tuple(blocks))
    if kind in ("k-colorable", "h-colorable"):
        if any(len(r) != 2 for r in rows):
            raise InputFormatError("colouring lines are 'vertex colour'")
        if kind == "k-colorable":
            try:
                return ClassWitness(witness_class, {v: int(c) for v, c in rows})
            except ValueError:
                raise InputFormatError("colours must be integers") from None
        return ClassWitness(witness_class, {v: c for v, c in rows})
    if kind == "co-interval":
        comps: list[dict] = [{}]
        for r in rows:
            if r == ["--"]:
                comps.append({})
                continue
            if len(r) != 3:
                raise InputFormatError("interval lines are 'vertex left right'")
            try:
                comps[-1][r[0]] = (int(r[1]), int(r[2]))
            except ValueError:
                raise InputFormatError("interval endpoints must be integers") from None
        return [c for c in comps if c]
    raise InputFormatError(f"no witness format for {witness_class}")


def _scheme_host(scheme: str) -> Optional[HostGraph]:
    if scheme.startswith("hgraph:"):
        return read_host(scheme[len("hgraph:"):])
    return None


def _encode(args):
    g = read_graph(args.graph)
    host = _scheme_host(args.scheme)
    info, _ = codec.scheme_info(args.scheme, host)
    witness = parse_aux(_read_text(args.aux), info.witness_class) if args.aux else None
    word, oracle = codec.encode(args.scheme, g, witness, host=host)
    return g, info, word, oracle


def cmd_decode(args) -> int:
    oracle = make_oracle(args.lang)
    word = parse_word(_read_text(args.word), compact=args.compact)
    sys.stdout.write(format_graph(codec.decode(oracle, word)))
    return 0


def cmd_encode(args) -> int:
    _, _, word, _ = _encode(args)
    sys.stdout.write(format_word(word, compact=args.compact))
    print(codec.report_size(word).summary(), file=sys.stderr)
    return 0


def _same_graph(a: Graph, b: Graph) -> bool:
    if a == b:
        return True
    return a.n <= 9 and is_isomorphic(a, b)


def cmd_verify(args) -> int:
    g, info, word, oracle = _encode(args)
    oracles = [oracle] if args.scheme.startswith("hgraph:") else [make_oracle(x) for x in info.languages]
    ok = all(_same_graph(codec.decode(o, word), g) for o in oracles)
    print("OK" if ok else "FAIL")
    return 0 if ok else EXIT_ROUNDTRIP


def cmd_atlas(args) -> int:
    host = read_host(args.host) if args.host else _scheme_host(args.lang)
    oracle = host_language(host, args.lang[len("hgraph:"):]) if (
        host is not None and args.lang.startswith("hgraph:")) else make_oracle(args.lang)
    report = atlas.verify_class(oracle, args.cls, args.max_n, args.max_len, host=host,
                                use_encoders=not args.no_encoders)
    print(report.summary())
    if args.lines:
        for line in report.lines():
            print(line)
    else:
        for f in report.counterexamples:
            print(f.line())
    return 0 if report.ok else EXIT_COUNTEREXAMPLE


def cmd_list_langs(args) -> int:
    for name, sym, rev, desc in catalog():
        flags = ("symmetric" if sym else "asymmetric") + (",rev-closed" if rev else "")
        print(f"{name:22s} {flags:22s} {desc}")
    print("combinators: not(L) and(L1,L2,...) or(L1,L2,...) hull(L) rev(L)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="langrep", description="Encode and decode graphs as words via binary languages.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decode", help="decode a word into a graph")
    p.add_argument("--lang", required=True, help="language spec, e.g. 'and(pal,classical)'")
    p.add_argument("--word", required=True, help="word file path, or - for stdin")
    p.add_argument("--compact", action="store_true", help="read the word as single-character letters")
    p.set_defaults(func=cmd_decode)

    for name, func, helptext in (("encode", cmd_encode, "encode a graph as a word"),
                                 ("verify", cmd_verify, "encode, decode and compare")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--scheme", required=True,
                       help="one of: " + ", ".join(codec.SCHEME_NAMES))
        p.add_argument("--graph", required=True, help="graph file path")
        p.add_argument("--aux", help="witness file (order, bipartition, colouring, partition or intervals)")
        if name == "encode":
            p.add_argument("--compact", action="store_true", help="print letters without separators")
        p.set_defaults(func=func)

    p = sub.add_parser("atlas", help="check a language against a graph class at bounded size")
    p.add_argument("--lang", required=True)
    p.add_argument("--class", dest="cls", required=True,
                   help="bipartite, split, cobipartite, cluster, complete-multipartite, comparability, "
                        "k-colorable:k (also written k-colorable with a number), h-colorable, co-interval, all")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-len", type=int, default=10)
    p.add_argument("--host", help="host graph file for h-colorable")
    p.add_argument("--lines", action="store_true", help="print every finding as a tab-separated line")
    p.add_argument("--no-encoders", action="store_true", help="rely on enumeration and search only")
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser("list-langs", help="list the language catalog")
    p.set_defaults(func=cmd_list_langs)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LangRepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
