"""Words over the indexed alphabet x1, x2, ... and their basic statistics.

A word is a tuple of positive letter indices; the empty tuple is the monoid
identity.  A commutative monomial is a dict {letter index: exponent > 0}.
Canonical text forms are ``"x2*x1*x1"`` and ``"x1^2*x2^3"``, with ``"1"``
for the identity in both grammars.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from collections.abc import Iterable, Iterator, Mapping, Sequence

from .errors import DEFAULT_LIMIT, LimitError, ParseError

Word = tuple[int, ...]
CommMonomial = dict[int, int]
MultiRank = tuple[int, ...]

_WORD_TERM = re.compile(r"x([1-9][0-9]*)\Z")
_MON_FACTOR = re.compile(r"x([1-9][0-9]*)(?:\^([1-9][0-9]*))?\Z")


def check_word(m: Iterable[int], n: int | None = None) -> Word:
    """Return ``m`` as a tuple, validating letter indices (and the bound n)."""
    w = tuple(m)
    for i in w:
        if not isinstance(i, int) or i < 1:
            raise ValueError(f"letter indices must be integers >= 1, got {i!r}")
        if n is not None and i > n:
            raise ValueError(f"letter x{i} exceeds the alphabet bound n={n}")
    return w


def parse_word(text: str) -> Word:
    """Parse ``"x2*x1*x1"`` (or ``"1"`` for the identity) into a word."""
    if text == "1":
        return ()
    if not text:
        raise ParseError("empty input")
    letters = []
    for pos, token in enumerate(text.split("*"), start=1):
        match = _WORD_TERM.fullmatch(token)
        if match is None:
            raise ParseError(f"token {pos}: expected xK with K >= 1, got {token!r}")
        letters.append(int(match.group(1)))
    return tuple(letters)


def format_word(m: Sequence[int]) -> str:
    return "*".join(f"x{i}" for i in m) if m else "1"


def normalize_monomial(t: Mapping[int, int], n: int | None = None) -> CommMonomial:
    """Copy ``t`` dropping zero exponents, validating indices and exponents."""
    out: CommMonomial = {}
    for i, e in t.items():
        if not isinstance(i, int) or i < 1:
            raise ValueError(f"letter indices must be integers >= 1, got {i!r}")
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"exponents must be integers >= 0, got {e!r}")
        if n is not None and i > n:
            raise ValueError(f"letter x{i} exceeds the alphabet bound n={n}")
        if e:
            out[i] = e
    return out


def parse_monomial(text: str) -> CommMonomial:
    """Parse ``"x1^2*x2"`` (or ``"1"``) into an exponent dict."""
    if text == "1":
        return {}
    if not text:
        raise ParseError("empty input")
    out: CommMonomial = {}
    for pos, token in enumerate(text.split("*"), start=1):
        match = _MON_FACTOR.fullmatch(token)
        if match is None:
            raise ParseError(
                f"token {pos}: expected xK or xK^E with K, E >= 1, got {token!r}"
            )
        index = int(match.group(1))
        exponent = int(match.group(2)) if match.group(2) else 1
        out[index] = out.get(index, 0) + exponent
    return out


def format_monomial(t: Mapping[int, int]) -> str:
    t = normalize_monomial(t)
    if not t:
        return "1"
    return "*".join(
        f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in sorted(t.items())
    )


def abelianize(m: Sequence[int]) -> CommMonomial:
    """Occurrence counts of each letter: the commutative image of a word."""
    return dict(Counter(check_word(m)))


def sort_word(t: Mapping[int, int]) -> Word:
    """The word listing the letters of a monomial in weakly increasing order."""
    t = normalize_monomial(t)
    letters: list[int] = []
    for i in sorted(t):
        letters.extend([i] * t[i])
    return tuple(letters)


def sorted_form(m: Sequence[int]) -> Word:
    """Sort the letters of a word: ``sort_word(abelianize(m))``, directly."""
    return tuple(sorted(check_word(m)))


def raise_letter(m: Sequence[int], j: int, n: int | None = None) -> Word:
    """Increment the letter at 1-based position ``j`` by one.

    With an alphabet bound ``n`` the letter must be below ``n``.
    """
    w = check_word(m)
    if not 1 <= j <= len(w):
        raise ValueError(f"position {j} out of range for a word of length {len(w)}")
    if n is not None and w[j - 1] >= n:
        raise ValueError(
            f"letter x{w[j - 1]} at position {j} is already at the alphabet bound n={n}"
        )
    return w[: j - 1] + (w[j - 1] + 1,) + w[j:]


def degree(m: Sequence[int]) -> int:
    """Total degree: the number of letters."""
    return len(m)


def rank(m: Sequence[int]) -> int:
    """Sum of the letter indices of a word."""
    return sum(m)


def multirank(m: Sequence[int]) -> MultiRank:
    """Component j counts the letters of index >= j; trailing zeros dropped.

    Weakly decreasing; component 1 is the degree and the component sum is
    the rank.
    """
    w = check_word(m)
    if not w:
        return ()
    top = max(w)
    counts = [0] * (top + 1)
    for i in w:
        counts[i] += 1
    components = []
    running = 0
    for j in range(top, 0, -1):
        running += counts[j]
        components.append(running)
    return tuple(reversed(components))


def format_multirank(components: Sequence[int]) -> str:
    return "[" + ",".join(str(c) for c in components) + "]"


def is_factor(u: Sequence[int], m: Sequence[int]) -> bool:
    """True iff ``u`` occurs as a contiguous subword of ``m``."""
    u, m = tuple(u), tuple(m)
    if not u:
        return True
    lu = len(u)
    return any(m[k : k + lu] == u for k in range(len(m) - lu + 1))


def canonical_key(m: Sequence[int]) -> tuple[int, str]:
    """Sort key (rank ascending, then canonical text ascending)."""
    return (rank(m), format_word(m))


def words_of_degree(n: int, d: int) -> Iterator[Word]:
    """All words of exact degree ``d`` over letters 1..n, lexicographic."""
    return itertools.product(range(1, n + 1), repeat=d)


def words_up_to_degree(n: int, max_degree: int) -> list[Word]:
    out: list[Word] = []
    for d in range(max_degree + 1):
        out.extend(words_of_degree(n, d))
    return out


def words_up_to_rank(
    max_rank: int, n: int | None = None, limit: int | None = None
) -> list[Word]:
    """All words of rank <= max_rank in canonical order.

    Over the unbounded alphabet letters above ``max_rank`` cannot occur, so
    the enumeration is finite either way.  Raises `LimitError` beyond the
    element cap.
    """
    cap = DEFAULT_LIMIT if limit is None else limit
    top = max_rank if n is None else min(n, max_rank)
    out: list[Word] = []
    stack: list[tuple[Word, int]] = [((), max_rank)]
    while stack:
        word, budget = stack.pop()
        out.append(word)
        if len(out) > cap:
            raise LimitError(
                f"enumeration of words up to rank {max_rank} exceeded the cap of {cap}"
            )
        for letter in range(1, min(top, budget) + 1):
            stack.append((word + (letter,), budget - letter))
    out.sort(key=canonical_key)
    return out
