"""Handles over the four order families, comparison, and Hasse graphs.

Families: "nc" (base word order), "q" (sorted variant), "p" (degree-first
variant), "comm" (commutative order on monomials).  A handle may carry an
alphabet bound n; without one the alphabet is countable and enumeration is
bounded by the rank cap instead.
"""

from __future__ import annotations

import json
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from .commutative import (
    comm_leq,
    monomial_canonical_key,
    monomial_rank,
    monomials_up_to_rank,
    to_partition,
)
from .ncorder import covers_up, nc_leq
from .variants import p_leq, q_leq, swap_successors
from .words import (
    canonical_key,
    check_word,
    format_monomial,
    format_word,
    multirank,
    normalize_monomial,
    rank,
    words_up_to_rank,
)

FAMILIES = ("nc", "q", "p", "comm")

LT = "LT"
GT = "GT"
EQ = "EQ"
INCOMPARABLE = "INCOMPARABLE"

__all__ = [
    "FAMILIES",
    "LT",
    "GT",
    "EQ",
    "INCOMPARABLE",
    "PosetHandle",
    "leq",
    "compare",
    "HasseGraph",
    "hasse",
]


@dataclass(frozen=True)
class PosetHandle:
    """One of the four order families, optionally over a bounded alphabet."""

    family: str
    n: int | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown poset family {self.family!r}; expected one of {FAMILIES}")
        if self.n is not None and self.n < 1:
            raise ValueError(f"alphabet bound must be >= 1, got {self.n}")


def _check_element(handle: PosetHandle, value):
    if handle.family == "comm":
        if not isinstance(value, Mapping):
            raise TypeError(
                f"the comm family compares monomials (mappings), got {type(value).__name__}"
            )
        return normalize_monomial(value, handle.n)
    if isinstance(value, Mapping):
        raise TypeError(
            f"the {handle.family} family compares words (letter tuples), got a mapping"
        )
    return check_word(value, handle.n)


def leq(handle: PosetHandle, a, b) -> bool:
    """Directed comparability in the handle's family."""
    a = _check_element(handle, a)
    b = _check_element(handle, b)
    if handle.family == "nc":
        return nc_leq(a, b, handle.n)
    if handle.family == "q":
        return q_leq(a, b, handle.n)
    if handle.family == "p":
        return p_leq(a, b)
    return comm_leq(a, b, handle.n)


def compare(handle: PosetHandle, a, b) -> str:
    """LT, GT, EQ, or INCOMPARABLE; EQ exactly on structural equality."""
    a = _check_element(handle, a)
    b = _check_element(handle, b)
    if a == b:
        return EQ
    if leq(handle, a, b):
        return LT
    if leq(handle, b, a):
        return GT
    return INCOMPARABLE


@dataclass(frozen=True)
class HasseGraph:
    """Cover graph of one family restricted to the elements of rank <= bound.

    Vertices are (element, rank, multirank) triples in canonical order
    (rank ascending, then canonical text ascending); edges are (lower,
    upper) index pairs and every edge is a cover.
    """

    family: str
    n: int | None
    max_rank: int
    vertices: tuple
    labels: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]

    def level_sizes(self) -> list[int]:
        counts = [0] * (self.max_rank + 1)
        for _, r, _ in self.vertices:
            counts[r] += 1
        return counts

    def to_json_dict(self) -> dict:
        return {
            "poset": self.family,
            "n": self.n,
            "max_rank": self.max_rank,
            "vertices": [
                {"word": label, "rank": r, "multirank": list(mr)}
                for label, (_, r, mr) in zip(self.labels, self.vertices)
            ],
            "edges": [list(edge) for edge in self.edges],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json_dict(), indent=indent)

    def to_dot(self) -> str:
        lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=none];"]
        by_rank: dict[int, list[int]] = {}
        for idx, (_, r, _) in enumerate(self.vertices):
            by_rank.setdefault(r, []).append(idx)
        for r in sorted(by_rank):
            nodes = " ".join(
                f'v{idx} [label="{self.labels[idx]}"];' for idx in by_rank[r]
            )
            lines.append(f"  {{ rank=same; {nodes} }}")
        for lo, hi in self.edges:
            lines.append(f"  v{lo} -> v{hi};")
        lines.append("}")
        return "\n".join(lines)


def hasse(handle: PosetHandle, max_rank: int, limit: int | None = None) -> HasseGraph:
    """Build the Hasse graph of the handle's family up to a rank bound.

    The nc family uses its cover sets directly; the other families build
    the one-move successor graph (all comparable pairs for "p") and take
    its transitive reduction.
    """
    if max_rank < 0:
        raise ValueError("max_rank must be >= 0")
    if handle.family == "comm":
        elements = monomials_up_to_rank(max_rank, handle.n, limit)
        labels = tuple(format_monomial(t) for t in elements)
        triples = tuple(
            (t, monomial_rank(t), to_partition(t)) for t in elements
        )
        index = {_freeze_monomial(t): i for i, t in enumerate(elements)}
        raw_edges = _comm_one_step_edges(elements, index, handle.n, max_rank)
        edges = _transitive_reduction(len(elements), raw_edges)
        return HasseGraph(handle.family, handle.n, max_rank, triples, labels, edges)

    elements = words_up_to_rank(max_rank, handle.n, limit)
    labels = tuple(format_word(w) for w in elements)
    triples = tuple((w, rank(w), multirank(w)) for w in elements)
    index = {w: i for i, w in enumerate(elements)}

    if handle.family == "nc":
        edges = []
        for i, w in enumerate(elements):
            for c in covers_up(w, handle.n):
                j = index.get(c)
                if j is not None:
                    edges.append((i, j))
        edges = tuple(sorted(edges))
    elif handle.family == "q":
        raw = []
        for i, w in enumerate(elements):
            successors = set(covers_up(w, handle.n)) | swap_successors(w)
            for s in successors:
                j = index.get(s)
                if j is not None:
                    raw.append((i, j))
        edges = _transitive_reduction(len(elements), raw)
    else:  # "p": closed-form order, reduce the full comparability digraph
        raw = [
            (i, j)
            for i, w in enumerate(elements)
            for j, w2 in enumerate(elements)
            if i != j and p_leq(w, w2)
        ]
        edges = _transitive_reduction(len(elements), raw)
    return HasseGraph(handle.family, handle.n, max_rank, triples, labels, edges)


def _freeze_monomial(t) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(t.items()))


def _comm_one_step_edges(elements, index, n, max_rank):
    edges = []
    for i, t in enumerate(elements):
        successors = [dict(t)]
        successors[0][1] = successors[0].get(1, 0) + 1
        for letter in t:
            if n is not None and letter >= n:
                continue
            s = dict(t)
            s[letter] -= 1
            if s[letter] == 0:
                del s[letter]
            s[letter + 1] = s.get(letter + 1, 0) + 1
            successors.append(s)
        for s in successors:
            j = index.get(_freeze_monomial(s))
            if j is not None:
                edges.append((i, j))
    return edges


def _transitive_reduction(
    count: int, raw_edges: Sequence[tuple[int, int]]
) -> tuple[tuple[int, int], ...]:
    """Unique transitive reduction of a DAG given by generating edges."""
    succ: list[set[int]] = [set() for _ in range(count)]
    indegree = [0] * count
    for a, b in raw_edges:
        if b not in succ[a]:
            succ[a].add(b)
            indegree[b] += 1
    order = []
    ready = [v for v in range(count) if indegree[v] == 0]
    while ready:
        v = ready.pop()
        order.append(v)
        for w in succ[v]:
            indegree[w] -= 1
            if indegree[w] == 0:
                ready.append(w)
    if len(order) != count:
        raise ValueError("successor graph contains a cycle; not a partial order")
    reach: list[set[int]] = [set() for _ in range(count)]
    for v in reversed(order):
        r: set[int] = set()
        for w in succ[v]:
            r.add(w)
            r |= reach[w]
        reach[v] = r
    out = []
    for a in range(count):
        for b in succ[a]:
            if not any(b in reach[c] for c in succ[a] if c != b):
                out.append((a, b))
    return tuple(sorted(out))
