"""Decoding words into graphs, and one encoder per representation scheme.

Every encoder renames the input vertices to ``1..n`` in sorted label order,
builds the word over those integers and maps the letters back, so the output
uses the caller's own vertex names.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from .errors import ClassViolationError, InvalidArgumentsError, OracleMisuseError
from .graphs import (
    ClassWitness,
    Graph,
    HostGraph,
    check_witness,
    complement_graph,
    connected_components,
    find_structure,
    label_key,
    sort_labels,
)
from .languages import LanguageOracle, as_oracle, host_language
from .words import as_word, project

WordLike = Union[str, Sequence[str]]


# -- decoding --------------------------------------------------------------------

def decode(lang, w: WordLike) -> Graph:
    """The graph on ``alphabet(w)`` whose edges are the pairs projecting into ``lang``."""
    oracle = as_oracle(lang)
    if not oracle.symmetric:
        raise OracleMisuseError(f"language {oracle.id} is not declared 0-1-symmetric")
    w = as_word(w)
    if not w:
        raise InvalidArgumentsError("cannot decode the empty word")
    letters = sort_labels(set(w))
    edges = [(u, v) for u, v in combinations(letters, 2) if oracle.member(project(w, u, v))]
    return Graph(letters, edges)


# -- shared plumbing ---------------------------------------------------------------

class _Indexed:
    """``g`` renamed to ``1..n`` in sorted label order."""

    def __init__(self, g: Graph):
        if g.n == 0:
            raise InvalidArgumentsError("encoders need at least one vertex")
        self.names = g.sorted_vertices()
        self.index = {v: i for i, v in enumerate(self.names, start=1)}
        self.n = len(self.names)
        self.adj = {i: set() for i in range(1, self.n + 1)}
        for u, v in g.sorted_edges():
            a, b = self.index[u], self.index[v]
            self.adj[a].add(b)
            self.adj[b].add(a)

    def non_neighbours_below(self, i: int) -> list[int]:
        return [j for j in range(1, i) if j not in self.adj[i]]

    def neighbours_below(self, i: int) -> list[int]:
        return [j for j in range(1, i) if j in self.adj[i]]

    def restore(self, word: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.names[i - 1] for i in word)


def _sorted(vs: Iterable[str]) -> list[str]:
    return sorted(vs, key=label_key)


# -- encoders for every graph ------------------------------------------------------

def encode_palindrome(g: Graph) -> tuple[str, ...]:
    """Word whose pair projections are palindromes exactly on the edges."""
    ix = _Indexed(g)
    w = [1, 1]
    for i in range(2, ix.n + 1):
        u = ix.non_neighbours_below(i)
        w = [i, *u, *w, i, *reversed(u)]
    return ix.restore(w)


def encode_detp(g: Graph) -> tuple[str, ...]:
    ix = _Indexed(g)
    w = [1, 1, *range(1, ix.n + 1), 1, 1]
    for i in range(2, ix.n + 1):
        u = [j for j in ix.non_neighbours_below(i) for _ in (0, 1)]
        w = [i, i, *u, *w, i, i, *reversed(u)]
    return ix.restore(w)


def _copy_word(ix: _Indexed, gaps: Callable[[int], list[int]]) -> list[int]:
    first, second = [], []
    for i in range(1, ix.n + 1):
        u = gaps(i)
        first += [*u, i]
        second += [i, *u]
    return first + second


def encode_copy(g: Graph) -> tuple[str, ...]:
    ix = _Indexed(g)
    return ix.restore(_copy_word(ix, ix.non_neighbours_below))


def encode_sparse(g: Graph) -> tuple[str, ...]:
    """Copy construction on the complement; decode with ``not(copy)``.

    The length is exactly ``2n + 2m``.
    """
    ix = _Indexed(g)
    return ix.restore(_copy_word(ix, ix.neighbours_below))


def encode_lyndon(g: Graph) -> tuple[str, ...]:
    ix = _Indexed(g)
    n = ix.n
    w = [i for i in range(1, n + 1) for _ in range(3)]
    for i in range(1, n + 1):
        v = list(range(i, n + 1))
        x = [j for j in range(i, n + 1) if j in ix.adj[i]]
        y = [j for j in range(i + 1, n + 1) if j not in ix.adj[i]]
        w += v + v + [i, i, *x, i, i, *y]
    return ix.restore(w)


# -- class encoders -------------------------------------------------------------------

def _payload(witness, kind: str):
    if isinstance(witness, ClassWitness):
        if witness.kind.partition(":")[0] != kind:
            raise InvalidArgumentsError(f"expected a {kind} witness, got {witness.kind}")
        return witness.payload
    return witness


def linear_extension(order: Iterable[tuple[str, str]], vertices: Iterable[str]) -> list[str]:
    """Topological sort of a strict order, taking the smallest label among ties."""
    vertices = _sorted(vertices)
    preds = {v: set() for v in vertices}
    for a, b in order:
        preds[b].add(a)
    out: list[str] = []
    placed: set = set()
    while len(out) < len(vertices):
        ready = [v for v in vertices if v not in placed and preds[v] <= placed]
        if not ready:
            raise InvalidArgumentsError("order contains a cycle")
        out.append(ready[0])
        placed.add(ready[0])
    return out


def encode_dyck(g: Graph, order) -> tuple[str, ...]:
    """Encode a comparability graph given a strict order whose comparable pairs are the edges."""
    rel = frozenset(tuple(p) for p in _payload(order, "comparability"))
    if g.n == 0:
        raise InvalidArgumentsError("encoders need at least one vertex")
    if not check_witness(g, ClassWitness("comparability", rel)):
        raise InvalidArgumentsError("order is not a transitive orientation of the graph")
    lin = linear_extension(rel, g.vertices)
    w = list(lin)
    for v in lin:
        upper = {b for a, b in rel if a == v}
        x = [u for u in lin if u in upper]
        y = [u for u in lin if u not in upper and u != v]
        w += [*y, v, *x]
    return tuple(w)


def _bipartition(g: Graph, parts) -> tuple[list[str], list[str]]:
    p = _payload(parts, "bipartite")
    try:
        a, b = p
    except (TypeError, ValueError):
        raise InvalidArgumentsError("a bipartition is a pair of vertex sets") from None
    a, b = _sorted(a), _sorted(b)
    if g.n == 0:
        raise InvalidArgumentsError("encoders need at least one vertex")
    if not check_witness(g, ClassWitness("bipartite", (a, b))):
        raise InvalidArgumentsError("not a bipartition of the graph")
    if not a:
        a, b = b, a
    return a, b


def encode_bipartite_palindrome(g: Graph, parts) -> tuple[str, ...]:
    """Encode a bipartite graph for ``and(pal,classical)``."""
    a, b = _bipartition(g, parts)
    w = list(a)
    for ai in a:
        nb = g.neighbors(ai)
        w += [x for x in b if x in nb] + [ai] + [y for y in b if y not in nb]
        w += [x for x in a if x != ai]
    return tuple(w)


def encode_bipartite_lyndon(g: Graph, parts) -> tuple[str, ...]:
    """Encode a bipartite graph for ``lyndon-odd``.

    After the blocks ``a²·y²·a²`` a closing ``b_1²···b_t²`` is appended. It
    keeps every B-letter count even and makes each edge projection end in
    ``11``, which the Lyndon property needs; without it the trailing ``00``
    of the last block rotates in front of the ``000`` prefix.
    """
    a, b = _bipartition(g, parts)
    head = [x for x in a for _ in range(3)] + [y for y in b for _ in range(2)]
    w = list(head)
    for ai in a:
        nb = g.neighbors(ai)
        y = [x for x in b if x in nb]
        w += [ai, ai, *y, *y, ai, ai]
    w += [y for y in b for _ in range(2)]
    return tuple(w)


def _mod_scheme_word(ix: _Indexed, k: int, counts: Mapping[int, int]) -> tuple[str, ...]:
    x = [i for i in range(1, ix.n + 1) for _ in range(counts[i])]
    first, second = list(x), list(x)
    for i in range(1, ix.n + 1):
        u = [t for t in ix.non_neighbours_below(i) for _ in range(k)]
        first += [*u, *([i] * k)]
        second += [*([i] * k), *u]
    return ix.restore(first + second)


def encode_mod_scheme(g: Graph, host: Union[int, HostGraph], f) -> tuple[str, ...]:
    """Encode a graph through a colouring.

    With an integer ``host = k``, ``f`` is a proper colouring with integer
    colours read modulo ``k`` and the target language is ``copy-mod:k``.
    With a :class:`HostGraph`, ``f`` maps vertices to host vertices and must
    be a homomorphism; the target language is the host language.
    """
    f = dict(_payload(f, "h-colorable" if isinstance(host, HostGraph) else "k-colorable"))
    ix = _Indexed(g)
    if set(f) != set(g.vertices):
        raise InvalidArgumentsError("the colouring must assign every vertex")
    if isinstance(host, HostGraph):
        res = host.residues()
        k = len(res)
        if any(c not in res for c in f.values()):
            raise InvalidArgumentsError("colouring uses a vertex outside the host")
        if not all(host.allows(f[u], f[v]) for u, v in g.sorted_edges()):
            raise InvalidArgumentsError("colouring is not a homomorphism into the host")
        residue = {v: res[c] for v, c in f.items()}
    else:
        k = int(host)
        if k < 1:
            raise InvalidArgumentsError("k must be at least 1")
        try:
            residue = {v: int(c) % k for v, c in f.items()}
        except (TypeError, ValueError):
            raise InvalidArgumentsError("colours must be integers") from None
        if any(residue[u] == residue[v] for u, v in g.sorted_edges()):
            raise InvalidArgumentsError("colouring is not proper modulo k")
    counts = {ix.index[v]: (r or k) for v, r in residue.items()}
    return _mod_scheme_word(ix, k, counts)


def encode_cluster(g: Graph, clusters) -> tuple[str, ...]:
    """Cluster ``j`` (1-based) contributes each of its vertices ``j`` times."""
    blocks = [_sorted(c) for c in _payload(clusters, "cluster")]
    if g.n == 0:
        raise InvalidArgumentsError("encoders need at least one vertex")
    if not check_witness(g, ClassWitness("cluster", tuple(blocks))):
        raise InvalidArgumentsError("not a partition of the graph into cliques")
    return tuple(v for j, block in enumerate(blocks, start=1) for v in block for _ in range(j))


IntervalFamily = Mapping[str, tuple[int, int]]


def _check_family(fam: IntervalFamily) -> None:
    ends = [x for lr in fam.values() for x in lr]
    if len(ends) != len(set(ends)):
        raise InvalidArgumentsError("interval endpoints must be pairwise distinct")
    if any(l >= r for l, r in fam.values()):
        raise InvalidArgumentsError("every interval needs left < right")


def encode_interval_union(components: Sequence[IntervalFamily]) -> tuple[str, ...]:
    """Encode a disjoint union of co-interval graphs given by interval models.

    Component ``i`` (1-based) lists its letters by endpoint position with the
    first occurrence of each letter repeated ``i`` times.
    """
    seen: set = set()
    w: list[str] = []
    for i, fam in enumerate(components, start=1):
        _check_family(fam)
        if seen & set(fam):
            raise InvalidArgumentsError("components must use disjoint letters")
        seen |= set(fam)
        events = sorted((x, v) for v, lr in fam.items() for x in lr)
        started: set = set()
        for _, v in events:
            w += [v] * (1 if v in started else i)
            started.add(v)
    if not w:
        raise InvalidArgumentsError("encoders need at least one vertex")
    return tuple(w)


def interval_union_graph(components: Sequence[IntervalFamily]) -> Graph:
    """Disjoint union of the co-interval graphs (edge iff disjoint intervals)."""
    vs, edges = [], []
    for fam in components:
        vs += list(fam)
        for u, v in combinations(fam, 2):
            (a, b), (c, d) = fam[u], fam[v]
            if b < c or d < a:
                edges.append((u, v))
    return Graph(vs, edges)


def interval_components(g: Graph) -> Optional[list[dict]]:
    """Interval models for the connected components of ``g``, or ``None``
    when some component is not co-interval."""
    out = []
    for comp in connected_components(g):
        sub = g.induced(comp)
        wit = find_structure(sub, "co-interval")
        if wit is None:
            return None
        out.append(dict(wit.payload))
    return out


# -- size accounting ------------------------------------------------------------------

@dataclass(frozen=True)
class EncodingReport:
    word: tuple
    language: Optional[str]
    n: int
    m: Optional[int]
    length: int
    bits: int

    def summary(self) -> str:
        return f"length={self.length} bits={self.bits}"


def letter_bits(n: int) -> int:
    """Bits per letter: ``ceil(log2 n)`` for ``n >= 2`` and 1 for a single letter."""
    return max(1, (n - 1).bit_length())


def report_size(w: WordLike, language=None) -> EncodingReport:
    w = as_word(w)
    if not w:
        raise InvalidArgumentsError("cannot report on the empty word")
    n = len(set(w))
    m = decode(language, w).m if language is not None else None
    lang_id = as_oracle(language).id if language is not None else None
    return EncodingReport(w, lang_id, n, m, len(w), len(w) * letter_bits(n))


# -- scheme registry -------------------------------------------------------------------

@dataclass(frozen=True)
class Scheme:
    name: str
    languages: tuple[str, ...]
    witness_class: Optional[str]


_FIXED_SCHEMES = {
    "palindrome": Scheme("palindrome", ("pal",), None),
    "detp": Scheme("detp", ("detp",), None),
    "copy": Scheme("copy", ("copy",), None),
    "sparse": Scheme("sparse", ("not(copy)",), None),
    "lyndon": Scheme("lyndon", ("lyndon",), None),
    "dyck": Scheme("dyck", ("dyck",), "comparability"),
    "bip-pal": Scheme("bip-pal", ("and(classical,pal)",), "bipartite"),
    "bip-lyndon": Scheme("bip-lyndon", ("lyndon-odd",), "bipartite"),
    "cluster": Scheme("cluster", ("balanced", "nested"), "cluster"),
    "interval-union": Scheme("interval-union", ("nested",), "co-interval"),
}

SCHEME_NAMES = tuple(_FIXED_SCHEMES) + ("mod:<k>", "hgraph:<file>")

_UNIVERSAL = {
    "palindrome": encode_palindrome,
    "detp": encode_detp,
    "copy": encode_copy,
    "sparse": encode_sparse,
    "lyndon": encode_lyndon,
}


def scheme_info(name: str, host: Optional[HostGraph] = None) -> tuple[Scheme, Optional[LanguageOracle]]:
    """Resolve a scheme name. ``hgraph:`` schemes return their host oracle."""
    if name in _FIXED_SCHEMES:
        return _FIXED_SCHEMES[name], None
    if name.startswith("mod:"):
        k = name[4:]
        if not k.isdigit() or int(k) < 1:
            raise InvalidArgumentsError(f"mod scheme needs k >= 1, got {name!r}")
        return Scheme(name, (f"copy-mod:{int(k)}",), f"k-colorable:{int(k)}"), None
    if name.startswith("hgraph:"):
        if host is None:
            raise InvalidArgumentsError("hgraph scheme needs a host graph")
        oracle = host_language(host, name=name[len("hgraph:"):])
        return Scheme(name, (oracle.id,), "h-colorable"), oracle
    raise InvalidArgumentsError(f"unknown scheme {name!r}")


def encode(name: str, g: Graph, witness=None, *, host: Optional[HostGraph] = None):
    """Encode ``g`` with a named scheme; returns ``(word, oracle)``.

    Class schemes search for a witness when none is given and raise
    :class:`ClassViolationError` when the graph lies outside the class.
    """
    scheme, host_oracle = scheme_info(name, host)
    oracle = host_oracle or as_oracle(scheme.languages[0])
    if name in _UNIVERSAL:
        return _UNIVERSAL[name](g), oracle
    if name == "interval-union":
        comps = witness if witness is not None else interval_components(g)
        if comps is None:
            raise ClassViolationError("graph is not a disjoint union of co-interval graphs")
        if interval_union_graph(comps) != g:
            raise InvalidArgumentsError("interval models do not describe the graph")
        return encode_interval_union(comps), oracle
    if witness is None:
        witness = find_structure(g, scheme.witness_class, host=host)
        if witness is None:
            raise ClassViolationError(f"graph is not {scheme.witness_class}")
    if name == "dyck":
        return encode_dyck(g, witness), oracle
    if name == "bip-pal":
        return encode_bipartite_palindrome(g, witness), oracle
    if name == "bip-lyndon":
        return encode_bipartite_lyndon(g, witness), oracle
    if name == "cluster":
        return encode_cluster(g, witness), oracle
    if name.startswith("mod:"):
        return encode_mod_scheme(g, int(name[4:]), witness), oracle
    return encode_mod_scheme(g, host, witness), oracle

