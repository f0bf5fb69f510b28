"""Plain-text graph and word files.

Graph file::

    # optional comments
    n 4
    vertices: a b c d      (optional; default labels are 1..n)
    1 2
    2 3

Word file: one line of whitespace-separated tokens, or with ``compact=True``
one contiguous string of single-character letters.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Union

from .errors import InputFormatError
from .graphs import Graph, HostGraph, sort_labels

RESERVED = set("#:()")


def _check_token(tok: str, lineno: int) -> None:
    if RESERVED & set(tok):
        raise InputFormatError(f"line {lineno}: token {tok!r} uses a reserved character")


def _parse_graph_lines(lines: Iterable[str], allow_loops: bool):
    n = None
    names = None
    edges: list[tuple[str, str]] = []
    seen = set()
    loops = set()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("vertices:"):
            if names is not None:
                raise InputFormatError(f"line {lineno}: duplicate vertices line")
            names = line[len("vertices:"):].split()
            for tok in names:
                _check_token(tok, lineno)
            if len(set(names)) != len(names):
                raise InputFormatError(f"line {lineno}: repeated vertex name")
            continue
        parts = line.split()
        if parts[0] == "n" and n is None and not edges:
            if len(parts) != 2 or not parts[1].isdigit():
                raise InputFormatError(f"line {lineno}: expected 'n <count>'")
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise InputFormatError(f"line {lineno}: expected an edge 'u v', got {line!r}")
        u, v = parts
        _check_token(u, lineno)
        _check_token(v, lineno)
        if u == v:
            if not allow_loops:
                raise InputFormatError(f"line {lineno}: loop {u} {v} not allowed in a graph file")
            loops.add(u)
            continue
        key = frozenset((u, v))
        if key in seen:
            raise InputFormatError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(key)
        edges.append((u, v))
    if n is None:
        raise InputFormatError("missing 'n <count>' line")
    if names is None:
        names = [str(i) for i in range(1, n + 1)]
    elif len(names) != n:
        raise InputFormatError(f"vertices line names {len(names)} vertices but n = {n}")
    declared = set(names)
    for u, v in edges:
        if u not in declared or v not in declared:
            raise InputFormatError(f"edge {u} {v} uses an undeclared vertex")
    for r in loops:
        if r not in declared:
            raise InputFormatError(f"loop at undeclared vertex {r}")
    return Graph(names, edges), frozenset(loops)


def parse_graph(text: str) -> Graph:
    return _parse_graph_lines(text.splitlines(), allow_loops=False)[0]


def parse_host(text: str) -> HostGraph:
    g, loops = _parse_graph_lines(text.splitlines(), allow_loops=True)
    return HostGraph(g, loops)


def _read(path: Union[str, Path]) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc


def read_graph(path: Union[str, Path]) -> Graph:
    return parse_graph(_read(path))


def read_host(path: Union[str, Path]) -> HostGraph:
    return parse_host(_read(path))


def format_graph(g: Graph, loops: Iterable[str] = ()) -> str:
    """Serialise with sorted vertices and lexicographically sorted edges."""
    vs = g.sorted_vertices()
    out = [f"n {len(vs)}"]
    if vs != [str(i) for i in range(1, len(vs) + 1)]:
        out.append("vertices: " + " ".join(vs))
    out.extend(f"{r} {r}" for r in sort_labels(loops))
    out.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"


def parse_word(text: str, compact: bool = False) -> tuple[str, ...]:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) != 1:
        raise InputFormatError(f"a word file holds exactly one line, found {len(lines)}")
    line = lines[0].strip()
    if compact:
        if any(c.isspace() for c in line):
            raise InputFormatError("compact words are one contiguous string of single-character letters")
        toks = tuple(line)
    else:
        toks = tuple(line.split())
    for tok in toks:
        _check_token(tok, 1)
    return toks


def format_word(w: Iterable[str], compact: bool = False) -> str:
    w = list(w)
    if compact:
        if any(len(a) != 1 for a in w):
            raise InputFormatError("compact output needs single-character letters")
        return "".join(w) + "\n"
    return " ".join(w) + "\n"
