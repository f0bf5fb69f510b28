"""Binary-language membership oracles and a small combinator grammar.

Oracles are built from spec strings such as ``"and(pal,classical)"`` or
``"or(lyndon-odd,parity-odd)"``. Base identifiers::

    classical  pal  detp  copy  copy-mod:<k>  hgraph:<file>  lyndon
    lyndon-odd  dyck  nested  balanced  parity-odd  parity-even
    even-square-shuffle  first-last-differ  avoid:<f1,f2,...>  k11:<k>
    finite:<w1,w2,...>

Combinators: ``not(L)``, ``and(L1,L2,...)``, ``or(L1,L2,...)``, ``hull(L)``
(``L`` united with its bit complement) and ``rev(L)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Optional

from .errors import InvalidArgumentsError, ResourceLimitError, SpecSyntaxError
from .graphs import HostGraph
from .words import SHUFFLE_BOUND, complement, is_copy, least_rotation

SYMMETRY_CHECK_BOUND = 14


@dataclass(frozen=True, eq=False)
class LanguageOracle:
    """A named membership predicate over binary strings.

    ``symmetric`` and ``reversal_closed`` are declarations; use
    :func:`check_symmetry` to test the first one.
    """

    id: str
    predicate: Callable[[str], bool] = field(repr=False)
    symmetric: bool = True
    reversal_closed: bool = False
    _cache: dict = field(default_factory=dict, repr=False)

    def member(self, x: str) -> bool:
        try:
            return self._cache[x]
        except KeyError:
            r = self._cache[x] = bool(self.predicate(x))
            return r

    __call__ = member

    def __contains__(self, x: str) -> bool:
        return self.member(x)


# -- base predicates ----------------------------------------------------------

def _classical(x: str) -> bool:
    return "00" not in x and "11" not in x


def _pal(x: str) -> bool:
    return bool(x) and x == x[::-1]


def _detp(x: str) -> bool:
    n = len(x)
    if n < 2 or n % 2:
        return False
    h = n // 2
    p, c, q = x[:h - 1], x[h - 1:h + 1], x[h + 1:]
    return c in ("01", "10") and q == p[::-1] and p[0::2] == p[1::2]


def _copy_mod(k: int) -> Callable[[str], bool]:
    def pred(x: str) -> bool:
        if not is_copy(x):
            return False
        v = x[: len(x) // 2]
        return (v.count("0") - v.count("1")) % k != 0
    return pred


def _host_language(host: HostGraph) -> Callable[[str], bool]:
    res = host.residues()
    k = len(res)
    vertex_of = {r: v for v, r in res.items()}

    def pred(x: str) -> bool:
        if not is_copy(x):
            return False
        v = x[: len(x) // 2]
        return host.allows(vertex_of[v.count("0") % k], vertex_of[v.count("1") % k])
    return pred


def is_binary_lyndon(x: str) -> bool:
    """Lyndon test under ``0 < 1`` via least rotation plus primitivity."""
    if not x:
        return False
    return least_rotation(x) == 0 and (x + x).find(x, 1) == len(x)


def _lyndon(x: str) -> bool:
    return is_binary_lyndon(x) or is_binary_lyndon(complement(x))


def in_raw_dyck(x: str) -> bool:
    """Balanced, and no prefix has more 0s than 1s."""
    depth = 0
    for c in x:
        depth += 1 if c == "1" else -1
        if depth < 0:
            return False
    return depth == 0


def _dyck(x: str) -> bool:
    return in_raw_dyck(x) or in_raw_dyck(complement(x))


def _nested(x: str) -> bool:
    h, r = divmod(len(x), 2)
    if r:
        return False
    return x in ("0" * h + "1" * h, "1" * h + "0" * h)


def _balanced(x: str) -> bool:
    return 2 * x.count("0") == len(x)


def _parity(odd: bool) -> Callable[[str], bool]:
    want = 1 if odd else 0

    def pred(x: str) -> bool:
        return x.count("0") % 2 == want and x.count("1") % 2 == want
    return pred


def _even_square_shuffle(x: str) -> bool:
    z, o = x.count("0"), x.count("1")
    return z >= 2 and o >= 2 and z % 2 == 0 and o % 2 == 0


def _first_last_differ(x: str) -> bool:
    return len(x) >= 2 and x[0] != x[-1]


def _avoid(factors: tuple) -> Callable[[str], bool]:
    def pred(x: str) -> bool:
        return not any(f in x for f in factors)
    return pred


def _k11(k: int) -> Callable[[str], bool]:
    def pred(x: str) -> bool:
        return sum(1 for i in range(len(x) - 1) if x[i] == x[i + 1]) <= k
    return pred


# name -> (predicate, reversal_closed, short description)
_PLAIN = {
    "classical": (_classical, True, "strictly alternating words (1+λ)(01)*(0+λ)"),
    "pal": (_pal, True, "nonempty palindromes"),
    "detp": (_detp, True, "d(w)01d(w)^R and d(w)10d(w)^R, d doubling each symbol"),
    "copy": (is_copy, True, "copy-words vv"),
    "lyndon": (_lyndon, False, "Lyndon words under 0<1 or under 1<0"),
    "lyndon-odd": (lambda x: len(x) % 2 == 1 and _lyndon(x), False, "odd-length members of lyndon"),
    "dyck": (_dyck, True, "restricted Dyck words and their complements"),
    "nested": (_nested, True, "0^n1^n and 1^n0^n"),
    "balanced": (_balanced, True, "as many 0s as 1s"),
    "parity-odd": (_parity(True), True, "both symbol counts odd"),
    "parity-even": (_parity(False), True, "both symbol counts even"),
    "even-square-shuffle": (_even_square_shuffle, True, "(00)+ shuffled with (11)+"),
    "first-last-differ": (_first_last_differ, True, "first and last symbols differ"),
}

_PARAMETRIC = {
    "copy-mod:<k>": "copy-words vv with |v|_0 and |v|_1 incongruent mod k",
    "hgraph:<file>": "copy-words vv with {|v|_0 mod k, |v|_1 mod k} an edge (or loop) of the host",
    "avoid:<f1,...>": "words avoiding each listed factor and its complement",
    "k11:<k>": "at most k positions i with x[i] = x[i+1]",
    "finite:<w1,...>": "exactly the listed words (not symmetric unless closed under complement)",
}


def catalog() -> list[tuple[str, bool, bool, str]]:
    """``(id, symmetric, reversal_closed, description)`` rows for listing."""
    rows = [(name, True, rev, desc) for name, (_, rev, desc) in _PLAIN.items()]
    rows += [(name, name != "finite:<w1,...>", name in ("copy-mod:<k>", "hgraph:<file>", "k11:<k>"), desc)
             for name, desc in _PARAMETRIC.items()]
    return rows


# -- parsing --------------------------------------------------------------------

_COMBINATORS = {"not": 1, "hull": 1, "rev": 1, "and": -2, "or": -2}
_NAME_RE = re.compile(r"[a-z][a-z0-9-]*")
_BITS_RE = re.compile(r"[01]+")


class _Parser:
    def __init__(self, text: str):
        self.s = re.sub(r"\s+", "", text)
        self.i = 0

    def error(self, msg: str) -> SpecSyntaxError:
        return SpecSyntaxError(f"{msg} at offset {self.i} in {self.s!r}")

    def peek(self) -> str:
        return self.s[self.i] if self.i < len(self.s) else ""

    def expect(self, c: str) -> None:
        if self.peek() != c:
            raise self.error(f"expected {c!r}")
        self.i += 1

    def parse(self):
        node = self.expr()
        if self.i != len(self.s):
            raise self.error("trailing input")
        return node

    def expr(self):
        m = _NAME_RE.match(self.s, self.i)
        if not m:
            raise self.error("expected a language name")
        name = m.group()
        self.i = m.end()
        if name in _COMBINATORS and self.peek() == "(":
            self.i += 1
            args = [self.expr()]
            while self.peek() == ",":
                self.i += 1
                args.append(self.expr())
            self.expect(")")
            arity = _COMBINATORS[name]
            if (arity > 0 and len(args) != arity) or (arity < 0 and len(args) < -arity):
                raise self.error(f"wrong number of operands for {name}")
            return (name, *args)
        if self.peek() != ":":
            return ("base", name, None)
        self.i += 1
        if name in ("avoid", "finite"):
            items = [self.bits()]
            # greedy: a comma continues the list only when binary digits follow
            while self.peek() == "," and _BITS_RE.match(self.s, self.i + 1):
                self.i += 1
                items.append(self.bits())
            return ("base", name, tuple(items))
        start = self.i
        while self.i < len(self.s) and self.s[self.i] not in ",)":
            self.i += 1
        if start == self.i:
            raise self.error(f"missing parameter for {name}")
        return ("base", name, self.s[start:self.i])

    def bits(self) -> str:
        m = _BITS_RE.match(self.s, self.i)
        if not m:
            raise self.error("expected a binary word")
        self.i = m.end()
        return m.group()


def _positive_int(name: str, raw: str) -> int:
    if not raw.isdigit() or int(raw) < 1:
        raise InvalidArgumentsError(f"{name} needs an integer parameter >= 1, got {raw!r}")
    return int(raw)


def _nonneg_int(name: str, raw: str) -> int:
    if not raw.isdigit():
        raise InvalidArgumentsError(f"{name} needs an integer parameter >= 0, got {raw!r}")
    return int(raw)


def _build_base(name: str, param) -> LanguageOracle:
    if name in _PLAIN:
        if param is not None:
            raise InvalidArgumentsError(f"{name} takes no parameter")
        pred, rev, _ = _PLAIN[name]
        return LanguageOracle(name, pred, True, rev)
    if param is None:
        raise SpecSyntaxError(f"unknown language {name!r}")
    if name == "copy-mod":
        k = _positive_int(name, param)
        return LanguageOracle(f"copy-mod:{k}", _copy_mod(k), True, True)
    if name == "k11":
        k = _nonneg_int(name, param)
        return LanguageOracle(f"k11:{k}", _k11(k), True, True)
    if name == "avoid":
        factors = tuple(sorted(set(param) | {complement(f) for f in param}))
        rev = {f[::-1] for f in factors} == set(factors)
        return LanguageOracle("avoid:" + ",".join(factors), _avoid(factors), True, rev)
    if name == "finite":
        words = tuple(sorted(set(param), key=lambda w: (len(w), w)))
        table = frozenset(words)
        sym = {complement(w) for w in words} == set(words)
        rev = {w[::-1] for w in words} == set(words)
        return LanguageOracle("finite:" + ",".join(words), table.__contains__, sym, rev)
    if name == "hgraph":
        from .formats import read_host
        return host_language(read_host(param), name=param)
    raise SpecSyntaxError(f"unknown language {name!r}")


def host_language(host: HostGraph, name: Optional[str] = None) -> LanguageOracle:
    """Oracle for copy-words whose half-counts map onto a host edge or loop."""
    if host.graph.n == 0:
        raise InvalidArgumentsError("host graph needs at least one vertex")
    label = name if name is not None else f"<host {id(host):x}>"
    return LanguageOracle(f"hgraph:{label}", _host_language(host), True, True)


def _build(node) -> LanguageOracle:
    kind = node[0]
    if kind == "base":
        return _build_base(node[1], node[2])
    args = [_build(a) for a in node[1:]]
    if kind == "not":
        (a,) = args
        if a.id.startswith("not(") and isinstance(a.predicate, _Negation):
            return a.predicate.inner
        return LanguageOracle(f"not({a.id})", _Negation(a), a.symmetric, a.reversal_closed)
    if kind == "hull":
        (a,) = args
        if a.symmetric:
            return a
        return LanguageOracle(f"hull({a.id})",
                              lambda x, a=a: a.member(x) or a.member(complement(x)),
                              True, a.reversal_closed)
    if kind == "rev":
        (a,) = args
        if a.reversal_closed:
            return a
        if isinstance(a.predicate, _Reversal):
            return a.predicate.inner
        return LanguageOracle(f"rev({a.id})", _Reversal(a), a.symmetric, False)
    ops = sorted({a.id: a for a in args}.values(), key=lambda a: a.id)
    if len(ops) == 1:
        return ops[0]
    combine = all if kind == "and" else any
    return LanguageOracle(
        f"{kind}({','.join(a.id for a in ops)})",
        lambda x, ops=ops, combine=combine: combine(a.member(x) for a in ops),
        all(a.symmetric for a in ops),
        all(a.reversal_closed for a in ops),
    )


class _Negation:
    def __init__(self, inner: LanguageOracle):
        self.inner = inner

    def __call__(self, x: str) -> bool:
        return not self.inner.member(x)


class _Reversal:
    def __init__(self, inner: LanguageOracle):
        self.inner = inner

    def __call__(self, x: str) -> bool:
        return self.inner.member(x[::-1])


@lru_cache(maxsize=256)
def make_oracle(spec: str) -> LanguageOracle:
    """Parse ``spec`` and build its oracle; ids come back canonicalised.

    >>> make_oracle("and(pal,classical)").id
    'and(classical,pal)'
    >>> make_oracle("not(not(copy))").id
    'copy'
    """
    if isinstance(spec, LanguageOracle):
        return spec
    return _build(_Parser(spec).parse())


def as_oracle(lang) -> LanguageOracle:
    return lang if isinstance(lang, LanguageOracle) else make_oracle(lang)


def membership(lang, x: str) -> bool:
    return as_oracle(lang).member(x)


def negate(lang) -> LanguageOracle:
    """The complement language, built directly from an oracle."""
    a = as_oracle(lang)
    if isinstance(a.predicate, _Negation):
        return a.predicate.inner
    return LanguageOracle(f"not({a.id})", _Negation(a), a.symmetric, a.reversal_closed)


def reversed_language(lang) -> LanguageOracle:
    a = as_oracle(lang)
    if isinstance(a.predicate, _Reversal):
        return a.predicate.inner
    return LanguageOracle(f"rev({a.id})", _Reversal(a), a.symmetric, a.reversal_closed)


def unary_shuffle_subset(lang, k: int, l: int, bound: int = SHUFFLE_BOUND) -> bool:
    """True iff every interleaving of ``0^k`` and ``1^l`` is in the language."""
    if k + l > bound:
        raise ResourceLimitError(f"0^{k} shuffled with 1^{l} exceeds the bound {bound}")
    oracle = as_oracle(lang)
    n = k + l
    for zeros in combinations(range(n), k):
        z = set(zeros)
        if not oracle.member("".join("0" if i in z else "1" for i in range(n))):
            return False
    return True


def binary_words(max_len: int):
    for n in range(max_len + 1):
        for bits in product("01", repeat=n):
            yield "".join(bits)


def check_symmetry(lang, max_len: int) -> bool:
    if max_len > SYMMETRY_CHECK_BOUND:
        raise ResourceLimitError(f"symmetry check is limited to length {SYMMETRY_CHECK_BOUND}")
    oracle = as_oracle(lang)
    return all(oracle.member(x) == oracle.member(complement(x)) for x in binary_words(max_len))


def check_reversal(lang, max_len: int) -> bool:
    if max_len > SYMMETRY_CHECK_BOUND:
        raise ResourceLimitError(f"reversal check is limited to length {SYMMETRY_CHECK_BOUND}")
    oracle = as_oracle(lang)
    return all(oracle.member(x) == oracle.member(x[::-1]) for x in binary_words(max_len))
