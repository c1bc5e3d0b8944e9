#!/usr/bin/env python3
"""The commutative order is Young's lattice in disguise.

Suffix sums of the exponent vector turn a monomial into a weakly
decreasing sequence, i.e. an integer partition; multiplying by x1 adds a
box in row 1 and trading x_i for x_{i+1} adds a box in row i+1.  Monomial
comparability is then exactly containment of Ferrers diagrams, and the
abelianize/sort pair connects the sorted word order to this picture as a
coconnection.
"""

from ncposet import (
    PosetHandle,
    check_coconnection,
    comm_leq,
    format_monomial,
    from_partition,
    hasse,
    to_partition,
)


def ferrers(partition):
    return [" ".join("□" for _ in range(part)) for part in partition]


for t in ({1: 2, 2: 3}, {3: 1}, {1: 1, 3: 2}):
    p = to_partition(t)
    print(f"{format_monomial(t):12} -> partition {p}")
    for row in ferrers(p):
        print("    " + row)
    assert from_partition(p) == t

# Containment of diagrams decides comparability.
print("\nx1 <= x2 ?", comm_leq({1: 1}, {2: 1}))
print("x1^2 vs x2:", comm_leq({1: 2}, {2: 1}), "/", comm_leq({2: 1}, {1: 2}))

# The bounded commutative poset, drawn by rank level.
graph = hasse(PosetHandle("comm", 2), max_rank=6)
print("\ncommutative poset over two letters, rank <= 6")
print("  level sizes:", graph.level_sizes())
for lo, hi in graph.edges[:8]:
    print(f"    {graph.labels[lo]} -> {graph.labels[hi]}")
print("    ...")

# The four coconnection laws, verified over every element of rank <= 6.
report = check_coconnection(2, 6)
print()
for line in report.format_lines():
    print(line)
