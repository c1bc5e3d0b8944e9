#!/usr/bin/env python3
"""Strongly stable ideals as upward-closed sets of words.

A two-sided monomial ideal is strongly stable when raising any letter of a
member stays inside the ideal.  Equivalently the member set is upward
closed in the base word order, so stability can be certified by walking
cover edges, and any ideal has a least strongly stable enlargement.
"""

from ncposet import (
    format_word,
    is_strongly_stable,
    minimalize,
    parse_word,
    strongly_stable_closure,
)

# The ideal generated by x1 alone is not stable: raising x1 gives x2,
# which the ideal misses.
ideal = minimalize([parse_word("x1")], n=2)
check = is_strongly_stable(ideal, rank_bound=6)
print("ideal (x1) over two letters")
print("  stable:", check.window_closed)
m, c = check.window_witness
print(f"  witness: {format_word(m)} is a member, its cover {format_word(c)} is not")

# The closure adds the missing raisings and re-minimalizes.
closed = strongly_stable_closure(ideal)
print("  closure:", ", ".join(format_word(g) for g in closed.gens))
print("  closure stable:", bool(is_strongly_stable(closed, rank_bound=8)))

# A degree-two example: all raisings of x1^2 appear, and the four
# generators form an antichain under factor divisibility.
square = minimalize([parse_word("x1*x1")], n=2)
closed = strongly_stable_closure(square)
print("\nclosure of (x1*x1) over two letters:")
for g in closed.gens:
    print("   ", format_word(g))

# Already-stable ideals are fixed points.
stable = minimalize([parse_word("x2")], n=2)
print("\nideal (x2):")
print("  closure unchanged:", strongly_stable_closure(stable) == stable)
print("  certified stable: ", bool(is_strongly_stable(stable, rank_bound=8)))
