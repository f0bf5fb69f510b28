"""Word combinatorics over arbitrary letter tokens.

A word is any finite sequence of letters. Plain strings are accepted and read
one character per letter; every other sequence is normalised to a tuple of
string tokens by :func:`as_word`. Binary words (the images of projections) are
plain ``str`` objects over ``"0"`` and ``"1"``.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Sequence, Union

from .errors import InvalidArgumentsError, ResourceLimitError

Letter = str
Word = Sequence[Letter]
BinaryWord = str

SHUFFLE_BOUND = 16

_BIT_FLIP = str.maketrans("01", "10")


def as_word(w: Union[str, Iterable[Hashable]]) -> tuple[str, ...]:
    """Normalise ``w`` to a tuple of string letters."""
    if isinstance(w, str):
        return tuple(w)
    return tuple(str(a) for a in w)


def alphabet(w: Word) -> set:
    return set(w)


def count(w: Word, a: Letter) -> int:
    return sum(1 for b in w if b == a)


def reverse(w):
    if isinstance(w, str):
        return w[::-1]
    return tuple(reversed(w))


def frequentness_set(w: Word) -> set[int]:
    """The set of occurrence counts of the letters of ``w``."""
    return set(Counter(w).values())


def is_uniform(w: Word, k: int) -> bool:
    return all(c == k for c in Counter(w).values())


def project(w: Word, u: Letter, v: Letter) -> BinaryWord:
    """Erase every letter except ``u`` and ``v``, then rename ``u -> 0``, ``v -> 1``.

    >>> project("banana", "a", "b")
    '1000'
    """
    if u == v:
        raise InvalidArgumentsError(f"projection needs two distinct letters, got {u!r} twice")
    return "".join("0" if a == u else "1" for a in w if a == u or a == v)


def _check_binary(x: str) -> None:
    if not isinstance(x, str) or x.strip("01"):
        raise InvalidArgumentsError(f"not a binary word: {x!r}")


def complement(x: BinaryWord) -> BinaryWord:
    _check_binary(x)
    return x.translate(_BIT_FLIP)


def normal_form(x: BinaryWord) -> BinaryWord:
    return min(x, complement(x))


def is_palindrome(w: Word) -> bool:
    n = len(w)
    return all(w[i] == w[n - 1 - i] for i in range(n // 2))


def is_copy(w: Word) -> bool:
    # the empty word is lambda * lambda
    n = len(w)
    if n % 2:
        return False
    h = n // 2
    return all(w[i] == w[h + i] for i in range(h))


def _period_divides(w: Sequence, p: int) -> bool:
    return all(w[i] == w[i - p] for i in range(p, len(w)))


def is_primitive(w: Word) -> bool:
    n = len(w)
    if n == 0:
        raise InvalidArgumentsError("primitivity is undefined for the empty word")
    for p in range(1, n // 2 + 1):
        if n % p == 0 and _period_divides(w, p):
            return False
    return True


def least_rotation(s: Sequence) -> int:
    """Start index of the lexicographically least rotation (Booth's algorithm).

    Elements of ``s`` must be mutually comparable. Among equal least rotations
    the smallest index is returned.
    """
    n = len(s)
    if n == 0:
        return 0
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = s[j % n]
        i = f[j - k - 1]
        while i != -1 and sj != s[(k + i + 1) % n]:
            if sj < s[(k + i + 1) % n]:
                k = j - i - 1
            i = f[i]
        if i == -1 and sj != s[(k + i + 1) % n]:
            if sj < s[(k + i + 1) % n]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def _ranks(w: Word, order) -> list[int]:
    if order is None:
        rank = {a: i for i, a in enumerate(sorted(set(w)))}
    elif isinstance(order, Mapping):
        rank = dict(order)
    else:
        rank = {a: i for i, a in enumerate(order)}
    missing = set(w) - rank.keys()
    if missing:
        raise InvalidArgumentsError(f"order does not rank the letters {sorted(missing)}")
    return [rank[a] for a in w]


def is_lyndon(w: Word, order=None) -> bool:
    """True iff ``w`` is primitive and strictly smallest among its rotations.

    ``order`` lists the letters from smallest to largest (or maps letters to
    ranks). By default letters compare by their natural string order, which
    gives ``0 < 1`` on binary words.
    """
    if len(w) == 0:
        raise InvalidArgumentsError("the empty word is not a Lyndon word")
    ranks = _ranks(w, order)
    return least_rotation(ranks) == 0 and is_primitive(ranks)


def conjugates(w: Word) -> list:
    if len(w) == 0:
        raise InvalidArgumentsError("conjugates of the empty word are not defined")
    return [w[i:] + w[:i] for i in range(len(w))]


def shuffle_enumerate(u: Word, v: Word, bound: int = SHUFFLE_BOUND) -> set:
    """All interleavings of ``u`` and ``v``.

    Results are strings when both inputs are strings, tuples otherwise.
    """
    n = len(u) + len(v)
    if n > bound:
        raise ResourceLimitError(f"shuffle of total length {n} exceeds the bound {bound}")
    as_str = isinstance(u, str) and isinstance(v, str)
    u, v = list(u), list(v)
    out = set()
    for slots in combinations(range(n), len(u)):
        chosen = set(slots)
        iu, iv = iter(u), iter(v)
        word = tuple(next(iu) if i in chosen else next(iv) for i in range(n))
        out.add("".join(word) if as_str else word)
    return out

