"""Concrete term orders on words and validators for their axioms.

Three families are provided: degree-then-leftmost-letter, degree-then-
rightmost-letter, and weighted degree with a deglex tie-break.  All are
total; `validate_order` certifies the term-order axioms on a bounded range
instead of assuming them, and `contains_poset` checks that a given order
refines one of the partial-order families.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .errors import ParseError
from .posets import EQ, GT, LT, PosetHandle, leq
from .words import Word, canonical_key, check_word, words_up_to_degree

KINDS = ("deg_left_lex", "deg_right_lex", "weight_deg")

__all__ = [
    "TermOrderSpec",
    "DEG_LEFT_LEX",
    "DEG_RIGHT_LEX",
    "weight_deg",
    "parse_order_spec",
    "order_compare",
    "sort_key",
    "OrderValidationReport",
    "validate_order",
    "contains_poset",
]


@dataclass(frozen=True)
class TermOrderSpec:
    kind: str
    weights: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}; expected one of {KINDS}")
        if self.kind == "weight_deg":
            w = self.weights
            if not w:
                raise ValueError("weight_deg needs at least one weight")
            if any(x < 1 for x in w) or any(a >= b for a, b in zip(w, w[1:])):
                raise ValueError(
                    f"weights must be strictly increasing positive integers, got {w}"
                )
        elif self.weights is not None:
            raise ValueError(f"{self.kind} takes no weights")

    def describe(self) -> str:
        if self.kind == "weight_deg":
            return "weight:" + ",".join(str(w) for w in self.weights)
        return {"deg_left_lex": "deglex", "deg_right_lex": "degrevlex"}[self.kind]


DEG_LEFT_LEX = TermOrderSpec("deg_left_lex")
DEG_RIGHT_LEX = TermOrderSpec("deg_right_lex")


def weight_deg(*weights: int) -> TermOrderSpec:
    return TermOrderSpec("weight_deg", tuple(weights))


def parse_order_spec(text: str) -> TermOrderSpec:
    """Parse "deglex", "degrevlex", or "weight:1,2,3"."""
    if text == "deglex":
        return DEG_LEFT_LEX
    if text == "degrevlex":
        return DEG_RIGHT_LEX
    if text.startswith("weight:"):
        try:
            weights = tuple(int(part) for part in text[len("weight:") :].split(","))
        except ValueError as exc:
            raise ParseError(f"bad weight list in {text!r}") from exc
        try:
            return weight_deg(*weights)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    raise ParseError(
        f"unknown order spec {text!r}; expected deglex, degrevlex, or weight:W1,W2,..."
    )


def sort_key(spec: TermOrderSpec, m: Sequence[int]):
    """A total-order key: words compare under ``spec`` as their keys do."""
    w = check_word(m)
    if spec.kind == "deg_left_lex":
        return (len(w), w)
    if spec.kind == "deg_right_lex":
        # equal lengths align the positions, so reversing realizes the
        # rightmost-first scan
        return (len(w), w[::-1])
    weights = spec.weights
    for i in w:
        if i > len(weights):
            raise ValueError(
                f"letter x{i} has no weight; the spec covers letters up to x{len(weights)}"
            )
    return (sum(weights[i - 1] for i in w), len(w), w)


def order_compare(spec: TermOrderSpec, m: Sequence[int], m2: Sequence[int]) -> str:
    """LT, GT, or EQ under the given total order; EQ iff the words are equal."""
    a = sort_key(spec, m)
    b = sort_key(spec, m2)
    if a == b:
        return EQ
    return LT if a < b else GT


@dataclass(frozen=True)
class OrderValidationReport:
    spec: TermOrderSpec
    n: int
    max_degree: int
    is_total: bool
    one_minimal: bool
    is_multiplicative: bool
    is_standard: bool
    is_sorted: bool
    is_degree_compatible: bool
    witnesses: dict

    @property
    def axioms_ok(self) -> bool:
        """The term-order axioms proper (flags are descriptive extras)."""
        return (
            self.is_total
            and self.one_minimal
            and self.is_multiplicative
            and self.is_standard
        )

    def format_lines(self) -> list[str]:
        def yn(flag: bool) -> str:
            return "yes" if flag else "no"

        return [
            f"total-order: {yn(self.is_total)}",
            f"identity-minimal: {yn(self.one_minimal)}",
            f"multiplicative: {yn(self.is_multiplicative)}",
            f"standard: {yn(self.is_standard)}",
            f"sorted: {yn(self.is_sorted)}",
            f"degree-compatible: {yn(self.is_degree_compatible)}",
        ]


def validate_order(
    spec: TermOrderSpec, n: int, max_degree: int, cofactor_degree: int = 2
) -> OrderValidationReport:
    """Certify the order axioms exhaustively on words of bounded degree.

    Multiplicativity and sortedness quantify cofactors up to
    ``cofactor_degree``; this is a bounded certification, not a proof.
    """
    words = words_up_to_degree(n, max_degree)
    witnesses: dict = {}

    is_total = True
    one_minimal = True
    is_degree_compatible = True
    for a in words:
        if order_compare(spec, a, a) != EQ:
            is_total = False
            witnesses.setdefault("total", (a, a))
        for b in words:
            fwd = order_compare(spec, a, b)
            back = order_compare(spec, b, a)
            if a == b:
                continue
            if fwd == EQ or {fwd, back} != {LT, GT}:
                is_total = False
                witnesses.setdefault("total", (a, b))
            if len(a) < len(b) and fwd != LT:
                is_degree_compatible = False
                witnesses.setdefault("degree-compatible", (a, b))
        if a and order_compare(spec, (), a) != LT:
            one_minimal = False
            witnesses.setdefault("identity-minimal", a)

    is_standard = all(
        order_compare(spec, (i,), (i + 1,)) == LT for i in range(1, n)
    )
    if not is_standard:
        witnesses.setdefault(
            "standard",
            next(
                ((i,), (i + 1,))
                for i in range(1, n)
                if order_compare(spec, (i,), (i + 1,)) != LT
            ),
        )

    cofactors = words_up_to_degree(n, cofactor_degree)
    is_multiplicative = True
    for s in words:
        for t in words:
            if s == t or order_compare(spec, s, t) != LT:
                continue
            for a in cofactors:
                for b in cofactors:
                    if order_compare(spec, a + s + b, a + t + b) != LT:
                        is_multiplicative = False
                        witnesses.setdefault("multiplicative", (s, t, a, b))
                        break
                if not is_multiplicative:
                    break
            if not is_multiplicative:
                break
        if not is_multiplicative:
            break

    is_sorted = True
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for t in cofactors:
                for s in cofactors:
                    low = t + (j, i) + s
                    high = t + (i, j) + s
                    if order_compare(spec, high, low) != GT:
                        is_sorted = False
                        witnesses.setdefault("sorted", (low, high))

    return OrderValidationReport(
        spec=spec,
        n=n,
        max_degree=max_degree,
        is_total=is_total,
        one_minimal=one_minimal,
        is_multiplicative=is_multiplicative,
        is_standard=is_standard,
        is_sorted=is_sorted,
        is_degree_compatible=is_degree_compatible,
        witnesses=witnesses,
    )


def contains_poset(
    spec: TermOrderSpec, handle: PosetHandle, max_degree: int
) -> tuple[bool, tuple[Word, Word] | None]:
    """Does the total order refine the partial order on the bounded range?

    Scans the comparable pairs in canonical order and returns the first
    pair ordered the other way, if any.
    """
    if handle.family not in ("nc", "q", "p"):
        raise ValueError(f"containment checks cover word posets, not {handle.family!r}")
    if handle.n is None:
        raise ValueError("containment checks need a bounded alphabet")
    words = sorted(words_up_to_degree(handle.n, max_degree), key=canonical_key)
    for a in words:
        for b in words:
            if a == b or not leq(handle, a, b):
                continue
            if order_compare(spec, a, b) != LT:
                return False, (a, b)
    return True, None
