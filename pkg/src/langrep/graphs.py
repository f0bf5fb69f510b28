"""Finite simple graphs, brute-force class recognisers and small-graph isomorphism.

Vertex labels are string tokens. Everything here is exact and exponential in
the worst case; the ``max_n`` guards keep the searches at desk scale.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Any, Iterable, Mapping, Optional

from .errors import InvalidArgumentsError, ResourceLimitError

ORIENTATION_BOUND = 10
ISOMORPHISM_BOUND = 9

_INT_RE = re.compile(r"-?\d+\Z")


def label_key(label: str):
    """Sort key placing integer-looking labels first, in numeric order."""
    if _INT_RE.match(label):
        return (0, int(label), label)
    return (1, 0, label)


def sort_labels(labels: Iterable[str]) -> list[str]:
    return sorted(labels, key=label_key)


class Graph:
    """Immutable undirected simple graph.

    >>> g = Graph.from_edges([(1, 2), (2, 3)])
    >>> g.sorted_edges()
    [('1', '2'), ('2', '3')]
    """

    __slots__ = ("_vertices", "_edges", "_adj")

    def __init__(self, vertices: Iterable = (), edges: Iterable = ()):
        vs = frozenset(str(v) for v in vertices)
        es = set()
        adj: dict[str, set[str]] = {v: set() for v in vs}
        for e in edges:
            u, v = (str(x) for x in e)
            if u == v:
                raise InvalidArgumentsError(f"loop at vertex {u!r}")
            if u not in vs or v not in vs:
                raise InvalidArgumentsError(f"edge {u}-{v} has an endpoint outside the vertex set")
            es.add(frozenset((u, v)))
            adj[u].add(v)
            adj[v].add(u)
        self._vertices = vs
        self._edges = frozenset(es)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}

    @classmethod
    def from_edges(cls, edges: Iterable, vertices: Iterable = ()) -> "Graph":
        edges = [tuple(e) for e in edges]
        vs = {str(v) for v in vertices}
        for u, v in edges:
            vs.update((str(u), str(v)))
        return cls(vs, edges)

    @property
    def vertices(self) -> frozenset:
        return self._vertices

    @property
    def edges(self) -> frozenset:
        return self._edges

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def neighbors(self, v: str) -> frozenset:
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._adj.get(u, ())

    def sorted_vertices(self) -> list[str]:
        return sort_labels(self._vertices)

    def sorted_edges(self) -> list[tuple[str, str]]:
        pairs = [tuple(sort_labels(e)) for e in self._edges]
        return sorted(pairs, key=lambda p: (label_key(p[0]), label_key(p[1])))

    def relabel(self, mapping: Mapping[str, Any]) -> "Graph":
        return Graph((mapping[v] for v in self._vertices),
                     ((mapping[u], mapping[v]) for u, v in map(tuple, self._edges)))

    def induced(self, subset: Iterable[str]) -> "Graph":
        sub = set(subset)
        return Graph(sub, (tuple(e) for e in self._edges if e <= sub))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self):
        return hash((self._vertices, self._edges))

    def __repr__(self):
        es = ", ".join(f"{u}-{v}" for u, v in self.sorted_edges())
        return f"Graph(V={self.sorted_vertices()}, E=[{es}])"


@dataclass(frozen=True)
class HostGraph:
    """Target of an H-colouring. Unlike :class:`Graph` it may carry loops."""

    graph: Graph
    loops: frozenset = field(default_factory=frozenset)

    @property
    def vertices(self) -> frozenset:
        return self.graph.vertices

    def allows(self, r: str, s: str) -> bool:
        if r == s:
            return r in self.loops
        return self.graph.has_edge(r, s)

    def residues(self) -> dict[str, int]:
        """Map host vertices to residues modulo ``k = |V(H)|``.

        Labels that are exactly ``0..k-1`` are used as residues directly.
        Otherwise the vertex at 1-based position ``p`` in sorted order gets
        ``p mod k``, so the default labelling ``1..k`` sends ``k`` to 0.
        """
        labels = sort_labels(self.graph.vertices)
        k = len(labels)
        if set(labels) == {str(r) for r in range(k)}:
            return {v: int(v) for v in labels}
        return {v: (p % k) for p, v in enumerate(labels, start=1)}


# -- constructors -----------------------------------------------------------

def _labels(n: int, labels: Optional[Iterable] = None) -> list[str]:
    return [str(x) for x in labels] if labels is not None else [str(i) for i in range(1, n + 1)]


def complete_graph(n: int, labels=None) -> Graph:
    vs = _labels(n, labels)
    return Graph(vs, combinations(vs, 2))


def null_graph(n: int, labels=None) -> Graph:
    return Graph(_labels(n, labels))


def path_graph(n: int, labels=None) -> Graph:
    vs = _labels(n, labels)
    return Graph(vs, zip(vs, vs[1:]))


def cycle_graph(n: int, labels=None) -> Graph:
    vs = _labels(n, labels)
    return Graph(vs, list(zip(vs, vs[1:])) + [(vs[-1], vs[0])])


def complete_bipartite_graph(s: int, t: int) -> Graph:
    a = [f"a{i}" for i in range(1, s + 1)]
    b = [f"b{j}" for j in range(1, t + 1)]
    return Graph(a + b, [(x, y) for x in a for y in b])


def complement_graph(g: Graph) -> Graph:
    vs = g.sorted_vertices()
    return Graph(vs, ((u, v) for u, v in combinations(vs, 2) if not g.has_edge(u, v)))


def union_graph(g: Graph, h: Graph) -> Graph:
    if g.vertices & h.vertices:
        raise InvalidArgumentsError("graph union needs disjoint vertex sets")
    return Graph(g.vertices | h.vertices, [tuple(e) for e in g.edges | h.edges])


def connected_components(g: Graph) -> list[list[str]]:
    seen: set[str] = set()
    comps = []
    for s in g.sorted_vertices():
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(sort_labels(comp))
    return comps


# -- witnesses --------------------------------------------------------------

@dataclass(frozen=True)
class ClassWitness:
    """Evidence that a graph lies in a class.

    ``payload`` depends on ``kind``: a pair of vertex sets for bipartite,
    split and cobipartite; a tuple of blocks for cluster and
    complete-multipartite; a frozenset of ordered pairs ``(u, v)`` meaning
    ``u < v`` for comparability; a vertex map for colourings; a vertex to
    ``(left, right)`` map for co-interval.
    """

    kind: str
    payload: Any


def _parse_class(cls: str) -> tuple[str, Optional[str]]:
    name, _, arg = cls.partition(":")
    return name, (arg or None)


CLASS_NAMES = (
    "bipartite", "split", "cobipartite", "cluster", "complete-multipartite",
    "comparability", "k-colorable", "h-colorable", "co-interval",
)


def _bipartition(g: Graph):
    side: dict[str, int] = {}
    for comp in connected_components(g):
        root = comp[0]
        side[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u not in side:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return None
    a = frozenset(v for v, s in side.items() if s == 0)
    return a, g.vertices - a


def _split_partition(g: Graph):
    # Hammer-Simeone degree-sequence test
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), label_key(v)))
    degs = [g.degree(v) for v in order]
    m = max((i for i in range(1, len(degs) + 1) if degs[i - 1] >= i - 1), default=0)
    if sum(degs[:m]) != m * (m - 1) + sum(degs[m:]):
        return None
    return frozenset(order[:m]), frozenset(order[m:])


def _cluster_blocks(g: Graph):
    blocks = []
    for comp in connected_components(g):
        if any(not g.has_edge(u, v) for u, v in combinations(comp, 2)):
            return None
        blocks.append(frozenset(comp))
    return tuple(blocks)


def _transitive_orientation(g: Graph):
    """Backtracking search for a transitive orientation.

    Orienting ``a -> b`` forces ``a -> c`` for every neighbour ``c`` of ``a``
    not adjacent to ``b``, and ``c -> b`` for every neighbour ``c`` of ``b``
    not adjacent to ``a``; chains ``a -> b -> c`` force ``a -> c``.
    """
    edges = sorted((tuple(sort_labels(e)) for e in g.edges),
                   key=lambda p: (label_key(p[0]), label_key(p[1])))

    def propagate(arcs: set, out: dict, inn: dict, queue: list) -> bool:
        while queue:
            a, b = queue.pop()
            if (a, b) in arcs:
                continue
            if (b, a) in arcs:
                return False
            arcs.add((a, b))
            out.setdefault(a, set()).add(b)
            inn.setdefault(b, set()).add(a)
            na, nb = g.neighbors(a), g.neighbors(b)
            for c in na:
                if c != b and c not in nb:
                    queue.append((a, c))
            for c in nb:
                if c != a and c not in na:
                    queue.append((c, b))
            for c in out.get(b, ()):
                if c == a or not g.has_edge(a, c):
                    return False
                queue.append((a, c))
            for c in inn.get(a, ()):
                if c == b or not g.has_edge(c, b):
                    return False
                queue.append((c, b))
        return True

    def search(arcs, out, inn):
        for u, v in edges:
            if (u, v) not in arcs and (v, u) not in arcs:
                break
        else:
            return arcs
        for a, b in ((u, v), (v, u)):
            arcs2 = set(arcs)
            out2 = {k: set(s) for k, s in out.items()}
            inn2 = {k: set(s) for k, s in inn.items()}
            if propagate(arcs2, out2, inn2, [(a, b)]):
                found = search(arcs2, out2, inn2)
                if found is not None:
                    return found
        return None

    result = search(set(), {}, {})
    return frozenset(result) if result is not None else None


def _coloring(g: Graph, colors: list, allowed) -> Optional[dict]:
    """Backtracking map ``V(g) -> colors`` with ``allowed(c1, c2)`` on every edge."""
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), label_key(v)))
    assign: dict[str, Any] = {}

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for c in colors:
            if all(allowed(c, assign[u]) for u in g.neighbors(v) if u in assign):
                assign[v] = c
                if rec(i + 1):
                    return True
                del assign[v]
        return False

    return dict(assign) if rec(0) else None


def _has_two_plus_two(order: frozenset) -> bool:
    comparable = {frozenset(p) for p in order}
    pairs = list(order)
    for (a, b), (c, d) in combinations(pairs, 2):
        quad = {a, b, c, d}
        if len(quad) < 4:
            continue
        if all(frozenset((x, y)) not in comparable
               for x, y in ((a, c), (a, d), (b, c), (b, d))):
            return True
    return False


def interval_model_from_order(order: frozenset, vertices: Iterable[str]) -> dict[str, tuple[int, int]]:
    """Interval representation of an interval order, with distinct endpoints.

    ``u < v`` in the order becomes "the interval of ``u`` lies entirely left
    of the interval of ``v``". Predecessor sets of an interval order form a
    chain; the left end of ``v`` is the rank of its predecessor set and the
    right end is the last rank whose set still misses ``v``.
    """
    vertices = sort_labels(vertices)
    down = {v: frozenset(u for u, w in order if w == v) for v in vertices}
    chain = sorted(set(down.values()), key=len)
    left = {v: chain.index(down[v]) for v in vertices}
    right = {v: max(i for i, d in enumerate(chain) if v not in d) for v in vertices}
    # at equal coordinates left ends precede right ends, so touching intervals overlap
    ends = sorted([(left[v], 0, label_key(v), v) for v in vertices]
                  + [(right[v], 1, label_key(v), v) for v in vertices])
    pos: dict[str, list[int]] = {v: [] for v in vertices}
    for p, (_, _, _, v) in enumerate(ends, start=1):
        pos[v].append(p)
    return {v: (pos[v][0], pos[v][1]) for v in vertices}


def _co_interval_model(g: Graph):
    order = _transitive_orientation(g)
    if order is None or _has_two_plus_two(order):
        return None
    return interval_model_from_order(order, g.vertices)


def _needs_bound(g: Graph, max_n: int, what: str) -> None:
    if g.n > max_n:
        raise ResourceLimitError(f"{what} is brute force and limited to {max_n} vertices, got {g.n}")


def find_structure(g: Graph, cls: str, *, host: Optional[HostGraph] = None,
                   max_n: int = ORIENTATION_BOUND) -> Optional[ClassWitness]:
    """Search for a witness of ``g`` lying in ``cls``; ``None`` if there is none."""
    name, arg = _parse_class(cls)
    if name == "bipartite":
        p = _bipartition(g)
    elif name == "split":
        p = _split_partition(g)
    elif name == "cobipartite":
        p = _bipartition(complement_graph(g))
    elif name == "cluster":
        p = _cluster_blocks(g)
    elif name == "complete-multipartite":
        p = _cluster_blocks(complement_graph(g))
    elif name == "comparability":
        _needs_bound(g, max_n, "comparability recognition")
        p = _transitive_orientation(g)
    elif name == "k-colorable":
        if arg is None or not arg.isdigit() or int(arg) < 1:
            raise InvalidArgumentsError(f"k-colorable needs a positive k, got {cls!r}")
        _needs_bound(g, max_n, "k-colouring")
        p = _coloring(g, list(range(int(arg))), lambda a, b: a != b)
    elif name == "h-colorable":
        if host is None:
            raise InvalidArgumentsError("h-colorable needs a host graph")
        _needs_bound(g, max_n, "H-colouring")
        p = _coloring(g, host.graph.sorted_vertices(), host.allows)
    elif name == "co-interval":
        _needs_bound(g, max_n, "co-interval recognition")
        p = _co_interval_model(g)
    else:
        raise InvalidArgumentsError(f"unknown graph class {cls!r}")
    if p is None:
        return None
    return ClassWitness(cls, p)


def recognize(g: Graph, cls: str, *, host: Optional[HostGraph] = None,
              max_n: int = ORIENTATION_BOUND) -> tuple[bool, Optional[ClassWitness]]:
    w = find_structure(g, cls, host=host, max_n=max_n)
    return w is not None, w


# -- witness checking (independent of the searches above) --------------------

def _is_independent(g: Graph, s) -> bool:
    return not any(g.has_edge(u, v) for u, v in combinations(s, 2))


def _is_clique(g: Graph, s) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(s, 2))


def _is_partition(g: Graph, blocks) -> bool:
    seen = []
    for b in blocks:
        seen.extend(b)
    return len(seen) == len(set(seen)) and set(seen) == set(g.vertices)


def is_strict_order_for(g: Graph, order) -> bool:
    """``order`` is a strict partial order whose comparable pairs are exactly E(g)."""
    rel = set(order)
    if any(u == v or u not in g.vertices or v not in g.vertices for u, v in rel):
        return False
    if any((v, u) in rel for u, v in rel):
        return False
    succ: dict[str, set] = {}
    for u, v in rel:
        succ.setdefault(u, set()).add(v)
    for u, v in rel:
        for w in succ.get(v, ()):
            if (u, w) not in rel:
                return False
    for u, v in combinations(g.vertices, 2):
        if g.has_edge(u, v) != ((u, v) in rel or (v, u) in rel):
            return False
    return True


def is_interval_model_for(g: Graph, model: Mapping[str, tuple]) -> bool:
    """Distinct endpoints, ``l < r`` and: edge iff the two intervals are disjoint."""
    if set(model) != set(g.vertices):
        return False
    ends = [x for lr in model.values() for x in lr]
    if len(ends) != len(set(ends)) or any(l >= r for l, r in model.values()):
        return False
    for u, v in combinations(g.vertices, 2):
        (a, b), (c, d) = model[u], model[v]
        disjoint = b < c or d < a
        if g.has_edge(u, v) != disjoint:
            return False
    return True


def check_witness(g: Graph, witness: ClassWitness, *, host: Optional[HostGraph] = None) -> bool:
    name, arg = _parse_class(witness.kind)
    p = witness.payload
    if name in ("bipartite", "split", "cobipartite"):
        a, b = p
        if not _is_partition(g, (a, b)):
            return False
        if name == "bipartite":
            return _is_independent(g, a) and _is_independent(g, b)
        if name == "split":
            return _is_clique(g, a) and _is_independent(g, b)
        return _is_clique(g, a) and _is_clique(g, b)
    if name in ("cluster", "complete-multipartite"):
        if not _is_partition(g, p):
            return False
        cluster = name == "cluster"
        inside = _is_clique if cluster else _is_independent
        if not all(inside(g, b) for b in p):
            return False
        across = [g.has_edge(u, v) for i, b in enumerate(p) for c in p[i + 1:] for u in b for v in c]
        return not any(across) if cluster else all(across)
    if name == "comparability":
        return is_strict_order_for(g, p)
    if name == "k-colorable":
        k = int(arg)
        return (set(p) == set(g.vertices) and all(0 <= c < k for c in p.values())
                and all(p[u] != p[v] for u, v in map(tuple, g.edges)))
    if name == "h-colorable":
        if host is None:
            return False
        return (set(p) == set(g.vertices) and all(c in host.vertices for c in p.values())
                and all(host.allows(p[u], p[v]) for u, v in map(tuple, g.edges)))
    if name == "co-interval":
        return is_interval_model_for(g, p)
    raise InvalidArgumentsError(f"unknown graph class {witness.kind!r}")


# -- isomorphism ------------------------------------------------------------

def find_isomorphism(g: Graph, h: Graph, max_n: int = ISOMORPHISM_BOUND) -> Optional[dict]:
    """An edge-preserving bijection ``V(g) -> V(h)``, or ``None``."""
    if max(g.n, h.n) > max_n:
        raise ResourceLimitError(f"isomorphism search is limited to {max_n} vertices")
    if g.n != h.n or g.m != h.m:
        return None
    if sorted(g.degree(v) for v in g.vertices) != sorted(h.degree(v) for v in h.vertices):
        return None
    gv = sorted(g.vertices, key=lambda v: (-g.degree(v), label_key(v)))
    by_degree: dict[int, list[str]] = {}
    for v in h.sorted_vertices():
        by_degree.setdefault(h.degree(v), []).append(v)
    image: dict[str, str] = {}
    used: set[str] = set()

    def rec(i: int) -> bool:
        if i == len(gv):
            return True
        v = gv[i]
        for x in by_degree.get(g.degree(v), ()):
            if x in used:
                continue
            if all(g.has_edge(v, u) == h.has_edge(x, image[u]) for u in gv[:i]):
                image[v] = x
                used.add(x)
                if rec(i + 1):
                    return True
                used.discard(x)
                del image[v]
        return False

    return dict(image) if rec(0) else None


def is_isomorphic(g: Graph, h: Graph, max_n: int = ISOMORPHISM_BOUND) -> bool:
    return find_isomorphism(g, h, max_n) is not None


def canonical_form(g: Graph, max_n: int = ISOMORPHISM_BOUND) -> str:
    """Lexicographically least upper-triangle code over all vertex orderings.

    Bits are read column by column: ``(0,1), (0,2), (1,2), (0,3), ...`` so each
    placed vertex fixes a prefix, which lets worse branches be cut early.
    """
    if g.n > max_n:
        raise ResourceLimitError(f"canonical form is limited to {max_n} vertices")
    vs = g.sorted_vertices()
    n = len(vs)
    adj = [[g.has_edge(u, v) for v in vs] for u in vs]
    nbr = [frozenset(j for j in range(n) if adj[i][j]) for i in range(n)]
    best: list = [None]

    def twins(a: int, b: int) -> bool:
        return nbr[a] - {b} == nbr[b] - {a}

    def rec(order: list, bits: str, remaining: list) -> None:
        if not remaining:
            if best[0] is None or bits < best[0]:
                best[0] = bits
            return
        tried: list[int] = []
        for v in remaining:
            if any(twins(v, t) for t in tried):
                continue
            tried.append(v)
            cand = bits + "".join("1" if adj[u][v] else "0" for u in order)
            if best[0] is not None and cand > best[0][:len(cand)]:
                continue
            rec(order + [v], cand, [r for r in remaining if r != v])

    rec([], "", list(range(n)))
    return best[0] or ""


@lru_cache(maxsize=None)
def _iso_classes(n: int) -> tuple:
    if n <= 0:
        return ()
    if n == 1:
        return (null_graph(1),)
    # every graph on n vertices is a graph on n-1 vertices plus one new vertex
    found: dict[str, Graph] = {}
    vs = [str(i) for i in range(1, n + 1)]
    for g in _iso_classes(n - 1):
        old = [tuple(e) for e in g.edges]
        for r in range(n):
            for nbrs in combinations(vs[:-1], r):
                h = Graph(vs, old + [(u, vs[-1]) for u in nbrs])
                found.setdefault(canonical_form(h), h)
    return tuple(found[c] for c in sorted(found))


def all_graphs(n: int) -> list[Graph]:
    """One representative (on vertices ``1..n``) of every isomorphism class."""
    return list(_iso_classes(n))
