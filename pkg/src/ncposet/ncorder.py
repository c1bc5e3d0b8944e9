"""The base word order: the intersection of all standard term orders.

A word sits below another exactly when the larger one can be produced from
it by prepending x1, appending x1, and raising single letters.  Each of
those moves adds one unit to the multirank, so the order is graded by rank
and every interval is finite.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterator, Sequence

from .words import Word, check_word, multirank

__all__ = [
    "nc_leq",
    "nc_leq_oracle",
    "covers_up",
    "covers_down",
    "principal_down_set",
    "walk",
]


def dominated(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise a <= b for trimmed vectors (missing entries are 0)."""
    if len(a) > len(b):
        return False
    return all(x <= y for x, y in zip(a, b))


def bump(vector: tuple[int, ...], j: int) -> tuple[int, ...]:
    """Add the j-th unit vector (1-based), extending with zeros if needed."""
    if j <= len(vector):
        return vector[: j - 1] + (vector[j - 1] + 1,) + vector[j:]
    return vector + (0,) * (j - len(vector) - 1) + (1,)


def rule_successors(
    w: Word, phi: tuple[int, ...], n: int | None
) -> Iterator[tuple[Word, tuple[int, ...]]]:
    """One-step successors (prepend x1, append x1, raise one letter).

    Each successor is paired with its multirank, obtained from ``phi`` by a
    single unit bump.
    """
    yield (1,) + w, bump(phi, 1)
    yield w + (1,), bump(phi, 1)
    for j, letter in enumerate(w):
        if n is None or letter < n:
            yield w[:j] + (letter + 1,) + w[j + 1 :], bump(phi, letter + 1)


def nc_leq(m: Sequence[int], m2: Sequence[int], n: int | None = None) -> bool:
    """Comparability test by letterwise window domination.

    ``m <= m2`` iff some contiguous window of ``m2`` of length ``len(m)``
    dominates ``m`` letter by letter: the letters outside the window are
    absorbed by the x1-padding moves, the window letters by raisings.  This
    is the fast shortcut; `nc_leq_oracle` is the rule-based ground truth and
    the two are compared exhaustively in the test suite.
    """
    m = check_word(m, n)
    m2 = check_word(m2, n)
    lm, lm2 = len(m), len(m2)
    if lm > lm2:
        return False
    for k in range(lm2 - lm + 1):
        if all(m2[k + t] >= m[t] for t in range(lm)):
            return True
    return False


def nc_leq_oracle(m: Sequence[int], m2: Sequence[int], n: int | None = None) -> bool:
    """Rule-based comparability: breadth-first search upward from ``m``.

    States whose multirank is not dominated by ``multirank(m2)`` are pruned.
    Every move adds one unit to the multirank, so the live states form a
    finite box below the target multirank and the search terminates.
    """
    m = check_word(m, n)
    m2 = check_word(m2, n)
    if m == m2:
        return True
    target = multirank(m2)
    start = multirank(m)
    if not dominated(start, target):
        return False
    seen = {m}
    queue: deque[tuple[Word, tuple[int, ...]]] = deque([(m, start)])
    while queue:
        w, phi = queue.popleft()
        for w2, phi2 in rule_successors(w, phi, n):
            if w2 in seen or not dominated(phi2, target):
                continue
            if w2 == m2:
                return True
            seen.add(w2)
            queue.append((w2, phi2))
    return False


def covers_up(m: Sequence[int], n: int | None = None) -> set[Word]:
    """The words covering ``m``: x1-padded copies plus one-letter raisings.

    For m = x1^k the two paddings coincide, so the set has k+1 elements
    (k+1 on the unbounded alphabet and for n >= 2; 1 for n = 1); otherwise
    it has 2 + (number of raisable letters) elements.
    """
    w = check_word(m, n)
    out = {(1,) + w, w + (1,)}
    for j, letter in enumerate(w):
        if n is None or letter < n:
            out.add(w[:j] + (letter + 1,) + w[j + 1 :])
    return out


def covers_down(m: Sequence[int]) -> set[Word]:
    """The words covered by ``m``: strip a marginal x1, or lower one letter.

    The same set over bounded and unbounded alphabets.
    """
    w = check_word(m)
    out: set[Word] = set()
    if w and w[0] == 1:
        out.add(w[1:])
    if w and w[-1] == 1:
        out.add(w[:-1])
    for j, letter in enumerate(w):
        if letter >= 2:
            out.add(w[:j] + (letter - 1,) + w[j + 1 :])
    return out


def principal_down_set(m: Sequence[int]) -> set[Word]:
    """All words below ``m``; finite because the order is graded by rank."""
    m = check_word(m)
    seen = {m}
    queue: deque[Word] = deque([m])
    while queue:
        w = queue.popleft()
        for w2 in covers_down(w):
            if w2 not in seen:
                seen.add(w2)
                queue.append(w2)
    return seen


def walk(m: Sequence[int], dim: int | None = None) -> list[tuple[int, ...]]:
    """The lattice walk of a word: letter x_i steps by (1,...,1,0,...), i ones.

    Returns the d+1 visited points, truncated to the max-letter dimension
    (or to ``dim`` if given); the endpoint is the multirank of the word.
    """
    w = check_word(m)
    if dim is None:
        dim = max(w, default=0)
    point = (0,) * dim
    points = [point]
    for letter in w:
        point = tuple(c + (1 if idx < letter else 0) for idx, c in enumerate(point))
        points.append(point)
    return points
