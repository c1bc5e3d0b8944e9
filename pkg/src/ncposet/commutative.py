"""The commutative order on monomials and its partition picture.

Monomials are ordered by the smallest multiplicative order in which
multiplying by x1 and trading an x_i for an x_{i+1} both move upward.
Reading off suffix sums of the exponent vector identifies this order with
containment of integer partitions (Young's lattice); a monomial over n
letters lands on a partition with at most n parts.

The pair (abelianize, sort_word) relates the sorted-order variant on words
to this order: `check_coconnection` verifies the four coconnection laws on
a rank-bounded range.
"""

from __future__ import annotations

import json
from collections import deque
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from .errors import DEFAULT_LIMIT, LimitError
from .ncorder import dominated
from .variants import q_leq
from .words import (
    CommMonomial,
    abelianize,
    format_monomial,
    format_word,
    normalize_monomial,
    sort_word,
    words_up_to_rank,
)

Partition = tuple[int, ...]

__all__ = [
    "Partition",
    "to_partition",
    "from_partition",
    "comm_leq",
    "comm_leq_oracle",
    "monomial_product",
    "monomial_rank",
    "monomials_up_to_rank",
    "monomial_canonical_key",
    "LawCheck",
    "CoconnectionReport",
    "check_coconnection",
]


def to_partition(t: Mapping[int, int]) -> Partition:
    """Suffix sums of the exponent vector: part j counts letters >= j.

    Weakly decreasing, with as many parts as the highest letter; the part
    sum equals the monomial rank.
    """
    t = normalize_monomial(t)
    if not t:
        return ()
    top = max(t)
    parts = []
    running = 0
    for j in range(top, 0, -1):
        running += t.get(j, 0)
        parts.append(running)
    return tuple(reversed(parts))


def from_partition(p: Sequence[int]) -> CommMonomial:
    """Inverse of `to_partition`: exponent i is part i minus part i+1."""
    parts = tuple(p)
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"parts must be weakly decreasing, got {parts}")
    if parts and parts[-1] < 1:
        raise ValueError(f"parts must be positive, got {parts}")
    out: CommMonomial = {}
    for i, part in enumerate(parts, start=1):
        nxt = parts[i] if i < len(parts) else 0
        if part - nxt:
            out[i] = part - nxt
    return out


def monomial_rank(t: Mapping[int, int]) -> int:
    """Sum of letter index times exponent; matches the partition size."""
    t = normalize_monomial(t)
    return sum(i * e for i, e in t.items())


def monomial_product(t: Mapping[int, int], t2: Mapping[int, int]) -> CommMonomial:
    out = normalize_monomial(t)
    for i, e in normalize_monomial(t2).items():
        out[i] = out.get(i, 0) + e
    return out


def monomial_canonical_key(t: Mapping[int, int]) -> tuple[int, str]:
    return (monomial_rank(t), format_monomial(t))


def comm_leq(
    t: Mapping[int, int], t2: Mapping[int, int], n: int | None = None
) -> bool:
    """Containment of the corresponding partitions, componentwise."""
    t = normalize_monomial(t, n)
    t2 = normalize_monomial(t2, n)
    return dominated(to_partition(t), to_partition(t2))


def _freeze(t: CommMonomial) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(t.items()))


def comm_leq_oracle(t: Mapping[int, int], t2: Mapping[int, int]) -> bool:
    """Rule-based comparability: multiply by x1 or trade an x_i for x_{i+1}.

    Breadth-first search pruned by partition domination; both moves add one
    box to the partition, so the search space is finite.
    """
    t = normalize_monomial(t)
    t2 = normalize_monomial(t2)
    if t == t2:
        return True
    target = to_partition(t2)
    if not dominated(to_partition(t), target):
        return False
    goal = _freeze(t2)
    start = _freeze(t)
    seen = {start}
    queue = deque([t])
    while queue:
        state = queue.popleft()
        for succ in _comm_successors(state):
            key = _freeze(succ)
            if key in seen or not dominated(to_partition(succ), target):
                continue
            if key == goal:
                return True
            seen.add(key)
            queue.append(succ)
    return False


def _comm_successors(t: CommMonomial) -> list[CommMonomial]:
    out = [monomial_product(t, {1: 1})]
    for i in t:
        succ = dict(t)
        succ[i] -= 1
        if succ[i] == 0:
            del succ[i]
        succ[i + 1] = succ.get(i + 1, 0) + 1
        out.append(succ)
    return out


def monomials_up_to_rank(
    max_rank: int, n: int | None = None, limit: int | None = None
) -> list[CommMonomial]:
    """All monomials of rank <= max_rank over x1..xn, in canonical order."""
    cap = DEFAULT_LIMIT if limit is None else limit
    top = max_rank if n is None else min(n, max_rank)
    out: list[CommMonomial] = []
    stack: list[tuple[CommMonomial, int, int]] = [({}, 1, max_rank)]
    while stack:
        exponents, start, budget = stack.pop()
        out.append(exponents)
        if len(out) > cap:
            raise LimitError(
                f"enumeration of monomials up to rank {max_rank} exceeded the cap of {cap}"
            )
        for letter in range(start, top + 1):
            if letter > budget:
                break
            for e in range(1, budget // letter + 1):
                stack.append(
                    ({**exponents, letter: e}, letter + 1, budget - letter * e)
                )
    out.sort(key=monomial_canonical_key)
    return out


@dataclass(frozen=True)
class LawCheck:
    """Outcome of one coconnection law: how many instances, first violation."""

    law: str
    checked: int
    witness: str | None = None

    @property
    def ok(self) -> bool:
        return self.witness is None


@dataclass(frozen=True)
class CoconnectionReport:
    n: int | None
    max_rank: int
    laws: tuple[LawCheck, ...]

    @property
    def ok(self) -> bool:
        return all(law.ok for law in self.laws)

    @property
    def violations(self) -> int:
        return sum(0 if law.ok else 1 for law in self.laws)

    def format_lines(self) -> list[str]:
        lines = []
        for law in self.laws:
            status = "ok" if law.ok else f"VIOLATED ({law.witness})"
            lines.append(f"{law.law}: {status} (checked {law.checked})")
        lines.append(f"result: {self.violations} violated laws")
        return lines

    def to_json(self) -> str:
        payload = {
            "n": self.n,
            "max_rank": self.max_rank,
            "laws": [
                {
                    "law": law.law,
                    "status": "ok" if law.ok else "violated",
                    "checked": law.checked,
                    "witness": law.witness,
                }
                for law in self.laws
            ],
        }
        return json.dumps(payload, indent=2)


def check_coconnection(n: int | None, max_rank: int) -> CoconnectionReport:
    """Verify the coconnection laws between sorted-order words and monomials.

    Over all words and monomials of rank <= max_rank: abelianize and
    sort_word are order-preserving, sorting a word moves it (weakly) up,
    and abelianize undoes sort_word exactly.  Violations are reported, not
    raised.
    """
    words = words_up_to_rank(max_rank, n)
    monomials = monomials_up_to_rank(max_rank, n)

    sigma_checked = 0
    sigma_witness = None
    for m in words:
        for m2 in words:
            if m is m2 or not q_leq(m, m2, n):
                continue
            sigma_checked += 1
            if sigma_witness is None and not comm_leq(abelianize(m), abelianize(m2)):
                sigma_witness = f"{format_word(m)} <= {format_word(m2)}"

    sigma_plus_checked = 0
    sigma_plus_witness = None
    for t in monomials:
        for t2 in monomials:
            if t is t2 or not comm_leq(t, t2):
                continue
            sigma_plus_checked += 1
            if sigma_plus_witness is None and not q_leq(sort_word(t), sort_word(t2), n):
                sigma_plus_witness = f"{format_monomial(t)} <= {format_monomial(t2)}"

    ascend_witness = None
    for m in words:
        if not q_leq(m, sort_word(abelianize(m)), n):
            ascend_witness = format_word(m)
            break

    roundtrip_witness = None
    for t in monomials:
        if abelianize(sort_word(t)) != t:
            roundtrip_witness = format_monomial(t)
            break

    laws = (
        LawCheck("abelianize-monotone", sigma_checked, sigma_witness),
        LawCheck("sort-monotone", sigma_plus_checked, sigma_plus_witness),
        LawCheck("word-roundtrip-ascends", len(words), ascend_witness),
        LawCheck("monomial-roundtrip-identity", len(monomials), roundtrip_witness),
    )
    return CoconnectionReport(n=n, max_rank=max_rank, laws=laws)
