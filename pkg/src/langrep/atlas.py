"""Bounded, exhaustive checks of which graphs a language represents.

Words are enumerated up to renaming of letters: a word is visited only when
its letters first appear in the order ``1, 2, 3, ...``. Decoding commutes with
renaming, so this loses no graph up to isomorphism.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional

from .codec import (
    decode,
    encode_bipartite_lyndon,
    encode_bipartite_palindrome,
    encode_cluster,
    encode_copy,
    encode_detp,
    encode_dyck,
    encode_lyndon,
    encode_mod_scheme,
    encode_palindrome,
    encode_sparse,
)
from .errors import InvalidArgumentsError, OracleMisuseError, ResourceLimitError
from .graphs import (
    Graph,
    HostGraph,
    all_graphs,
    canonical_form,
    complement_graph,
    find_isomorphism,
    find_structure,
)
from .languages import LanguageOracle, as_oracle

MAX_N = 5
MAX_LEN = 12

ALL_GRAPHS = "all"


def _check_bounds(max_n: int, max_len: int, limit_n: int, limit_len: int) -> None:
    if max_n < 1 or max_len < 1:
        raise InvalidArgumentsError("bounds must be positive")
    if max_n > limit_n or max_len > limit_len:
        raise ResourceLimitError(
            f"bounds n <= {max_n}, length <= {max_len} exceed the limits n <= {limit_n}, length <= {limit_len}")


def _letters(n: int) -> list[str]:
    return [str(i) for i in range(1, n + 1)]


def _mask_graph(used: int, mask: int) -> Graph:
    vs = _letters(used)
    pairs = list(combinations(range(used), 2))
    return Graph(vs, [(vs[a], vs[b]) for i, (a, b) in enumerate(pairs) if mask >> i & 1])


def _walk(oracle: LanguageOracle, max_n: int, lengths, visit: Callable[[list, int, int], None],
          need: int = 0) -> None:
    """Depth-first walk over first-occurrence canonical words.

    ``visit(word, used, mask)`` runs on every word whose length is in
    ``lengths``; ``mask`` has bit ``i`` set when the ``i``-th pair (in
    ``combinations`` order) is an edge. Branches that can no longer introduce
    ``need`` distinct letters are cut.
    """
    member = oracle.member
    max_len = max(lengths)
    pair_index = {p: i for i, p in enumerate(combinations(range(max_n), 2))}
    # projections are tracked for every pair, including letters that have not
    # appeared yet, so they stay correct when such a letter shows up later
    proj = {p: "" for p in pair_index}
    touching = [[(p, "0" if p[0] == c else "1") for p in pair_index if c in p] for c in range(max_n)]
    pairs_upto = [[(i, p) for p, i in pair_index.items() if p[1] < u] for u in range(max_n + 1)]
    word: list[int] = []

    def rec(used: int) -> None:
        if len(word) in lengths and used:
            mask = 0
            for i, p in pairs_upto[used]:
                if member(proj[p]):
                    mask |= 1 << i
            visit(word, used, mask)
        if len(word) == max_len or max_len - len(word) < need - used:
            return
        for c in range(min(used + 1, max_n)):
            saved = [(p, proj[p]) for p, _ in touching[c]]
            for p, bit in touching[c]:
                proj[p] += bit
            word.append(c)
            rec(max(used, c + 1))
            word.pop()
            for p, old in saved:
                proj[p] = old

    rec(0)


@dataclass
class Finding:
    kind: str
    item: str
    verdict: str

    def line(self) -> str:
        return f"{self.kind}\t{self.item}\t{self.verdict}"


@dataclass
class AtlasReport:
    language: str
    max_n: int
    max_len: int
    codes: set = field(default_factory=set)
    witnesses: dict = field(default_factory=dict)
    class_id: Optional[str] = None
    coverage: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    language_oracle: Optional[LanguageOracle] = field(default=None, repr=False)

    @property
    def refuted(self) -> list:
        return [f for f in self.counterexamples if f.verdict == "refuted"]

    @property
    def inconclusive(self) -> list:
        return [f for f in self.counterexamples if f.verdict == "inconclusive"]

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def graph(self, code: str) -> Graph:
        """The graph decoded from the shortest stored word with this code."""
        return decode(self.language_oracle, self.witnesses[code])

    def lines(self) -> list[str]:
        out = [Finding("member", code, "found").line() for code in sorted(self.codes, key=lambda c: (len(c), c))]
        out += [Finding("covered", code, how).line() for code, how in sorted(self.coverage.items())]
        out += [f.line() for f in self.counterexamples]
        return out

    def summary(self) -> str:
        head = f"language {self.language}  n<={self.max_n}  len<={self.max_len}"
        if self.class_id is not None:
            head += f"  class {self.class_id}"
        parts = [head, f"graphs found: {len(self.codes)}"]
        if self.class_id is not None:
            parts.append(f"class graphs covered: {len(self.coverage)}")
            parts.append(f"refuted: {len(self.refuted)}  inconclusive: {len(self.inconclusive)}")
        return "\n".join(parts)


def enumerate_class(lang, max_n: int, max_len: int, *, limit_n: int = MAX_N,
                    limit_len: int = MAX_LEN) -> AtlasReport:
    """Canonical codes of every graph decoded from a word within the bounds."""
    _check_bounds(max_n, max_len, limit_n, limit_len)
    oracle = as_oracle(lang)
    if not oracle.symmetric:
        raise OracleMisuseError(f"language {oracle.id} is not declared 0-1-symmetric")
    best: dict[tuple[int, int], tuple] = {}

    def visit(word, used, mask):
        key = (used, mask)
        if key not in best or len(word) < len(best[key]):
            best[key] = tuple(word)

    _walk(oracle, max_n, set(range(1, max_len + 1)), visit)
    report = AtlasReport(oracle.id, max_n, max_len, language_oracle=oracle)
    letters = _letters(max_n)
    for (used, mask), w in best.items():
        code = canonical_form(_mask_graph(used, mask))
        word = tuple(letters[c] for c in w)
        old = report.witnesses.get(code)
        if old is None or len(word) < len(old):
            report.witnesses[code] = word
        report.codes.add(code)
    return report


def search_word(lang, g: Graph, max_len: int, *, limit_n: int = MAX_N,
                limit_len: int = MAX_LEN) -> Optional[tuple[str, ...]]:
    """A shortest word over ``V(g)`` decoding exactly to ``g``, or ``None``."""
    _check_bounds(max(g.n, 1), max_len, limit_n, limit_len)
    oracle = as_oracle(lang)
    n = g.n
    if n == 0:
        raise InvalidArgumentsError("search needs at least one vertex")
    target = canonical_form(g)
    # all labelled graphs on the abstract letters that are isomorphic to g
    pairs = list(combinations(range(n), 2))
    wanted = {mask for mask in range(1 << len(pairs)) if canonical_form(_mask_graph(n, mask)) == target}
    found: list = []

    class _Stop(Exception):
        pass

    def visit(word, used, mask):
        if used == n and mask in wanted:
            found.append(tuple(word))
            raise _Stop

    for length in range(n, max_len + 1):
        try:
            _walk(oracle, n, {length}, visit, need=n)
        except _Stop:
            break
    if not found:
        return None
    letters = _letters(n)
    abstract = tuple(letters[c] for c in found[0])
    iso = find_isomorphism(decode(oracle, abstract), g)
    return tuple(iso[a] for a in abstract)


# -- class verification -------------------------------------------------------------

_CLASS_ALIAS = re.compile(r"(\d+)-colou?rable\Z")


def normalise_class(cls: str) -> str:
    m = _CLASS_ALIAS.match(cls)
    return f"k-colorable:{m.group(1)}" if m else cls


def _split_word(g: Graph) -> tuple:
    """Clique side gets odd letter counts, independent side even ones."""
    clique, indep = find_structure(g, "split").payload
    clique, indep = list(clique), list(indep)
    if not clique:
        clique, indep = indep[:1], indep[1:]
    inner = Graph(g.vertices, [e for e in map(tuple, g.edges) if not (e[0] in clique and e[1] in clique)])
    return encode_bipartite_lyndon(inner, (clique, indep))


def _cobipartite_word(g: Graph) -> tuple:
    a, b = find_structure(g, "cobipartite").payload
    inner = Graph(g.vertices, [e for e in map(tuple, g.edges)
                               if not ({e[0], e[1]} <= set(a) or {e[0], e[1]} <= set(b))])
    return encode_bipartite_lyndon(inner, (a, b))


_UNIVERSAL_ROUTES = {
    "pal": ("palindrome", encode_palindrome),
    "detp": ("detp", encode_detp),
    "copy": ("copy", encode_copy),
    "not(copy)": ("sparse", encode_sparse),
    "lyndon": ("lyndon", encode_lyndon),
}


def encoder_route(oracle: LanguageOracle, cls: str, host: Optional[HostGraph] = None):
    """``(name, g -> word)`` for a constructive encoder matching the pair, if any."""
    lid, cls = oracle.id, normalise_class(cls)
    if cls == ALL_GRAPHS and lid in _UNIVERSAL_ROUTES:
        return _UNIVERSAL_ROUTES[lid]
    if (lid, cls) == ("dyck", "comparability"):
        return "dyck", lambda g: encode_dyck(g, find_structure(g, "comparability"))
    if cls == "bipartite" and lid == "and(classical,pal)":
        return "bip-pal", lambda g: encode_bipartite_palindrome(g, find_structure(g, "bipartite"))
    if cls == "bipartite" and lid == "lyndon-odd":
        return "bip-lyndon", lambda g: encode_bipartite_lyndon(g, find_structure(g, "bipartite"))
    if cls == "cluster" and lid in ("balanced", "nested"):
        return "cluster", lambda g: encode_cluster(g, find_structure(g, "cluster"))
    if (lid, cls) == ("not(balanced)", "complete-multipartite"):
        return "cluster-of-complement", lambda g: encode_cluster(
            complement_graph(g), find_structure(complement_graph(g), "cluster"))
    if lid.startswith("copy-mod:") and cls == "k-colorable:" + lid.split(":", 1)[1]:
        k = int(lid.split(":", 1)[1])
        return f"mod:{k}", lambda g: encode_mod_scheme(g, k, find_structure(g, cls))
    if lid.startswith("hgraph:") and cls == "h-colorable" and host is not None:
        return "hgraph", lambda g: encode_mod_scheme(g, host, find_structure(g, cls, host=host))
    if (lid, cls) == ("or(lyndon-odd,parity-odd)", "split"):
        return "split-lyndon", _split_word
    if (lid, cls) == ("or(lyndon-odd,parity-even,parity-odd)", "cobipartite"):
        return "cobipartite-lyndon", _cobipartite_word
    return None


def _in_class(g: Graph, cls: str, host: Optional[HostGraph]) -> bool:
    if cls == ALL_GRAPHS:
        return True
    return find_structure(g, cls, host=host) is not None


def verify_class(lang, cls: str, max_n: int, max_len: int, *, host: Optional[HostGraph] = None,
                 use_encoders: bool = True, limit_n: int = MAX_N, limit_len: int = MAX_LEN) -> AtlasReport:
    """Compare the language-defined class with a recogniser-defined class.

    Soundness: every enumerated graph must pass the recogniser; a failure is
    ``refuted`` together with its word. Completeness: every class graph with
    at most ``max_n`` vertices must be reached by a constructive encoder, by
    the enumeration, or by :func:`search_word`; otherwise it is reported as
    ``inconclusive``.
    """
    cls = normalise_class(cls)
    oracle = as_oracle(lang)
    report = enumerate_class(oracle, max_n, max_len, limit_n=limit_n, limit_len=limit_len)
    report.class_id = cls
    for code, w in sorted(report.witnesses.items()):
        g = decode(oracle, w)
        if not _in_class(g, cls, host):
            report.counterexamples.append(Finding("soundness", "".join(w) if all(len(a) == 1 for a in w)
                                                  else " ".join(w), "refuted"))
    route = encoder_route(oracle, cls, host) if use_encoders else None
    for n in range(1, max_n + 1):
        for g in all_graphs(n):
            if not _in_class(g, cls, host):
                continue
            code = canonical_form(g)
            how = None
            if route is not None:
                name, enc = route
                w = enc(g)
                if find_isomorphism(decode(oracle, w), g) is not None:
                    how = f"encoder:{name}"
            if how is None and code in report.codes:
                how = "enumeration"
            if how is None and n <= limit_n and search_word(oracle, g, max_len, limit_n=limit_n,
                                                            limit_len=limit_len) is not None:
                how = "search"
            if how is None:
                report.counterexamples.append(Finding("completeness", code, "inconclusive"))
            else:
                report.coverage[code] = how
    return report
