#!/usr/bin/env python3
"""Hasse diagrams of the word order, bounded and unbounded.

The base order is generated by three moves: prepend x1, append x1, raise
one letter by one.  Every move adds 1 to the rank (the sum of the letter
indices), so the order is graded and the diagram splits into rank levels.
"""

from ncposet import PosetHandle, hasse, nc_leq

# Two letters, all elements of rank at most 4: the classic 12-vertex picture.
graph = hasse(PosetHandle("nc", 2), max_rank=4)
print("two letters, rank <= 4")
print("  level sizes:", graph.level_sizes())

by_rank = {}
for idx, (_, r, _) in enumerate(graph.vertices):
    by_rank.setdefault(r, []).append(idx)
for r in sorted(by_rank):
    print(f"  rank {r}: " + "  ".join(graph.labels[i] for i in by_rank[r]))

print("  cover edges:")
for lo, hi in graph.edges:
    print(f"    {graph.labels[lo]} -> {graph.labels[hi]}")

# Unbounded alphabet: x3 enters at rank 3 and the level sizes double.
unbounded = hasse(PosetHandle("nc"), max_rank=3)
print("\nunbounded alphabet, rank <= 3")
print("  level sizes:", unbounded.level_sizes())
top = [lbl for lbl, (_, r, _) in zip(unbounded.labels, unbounded.vertices) if r == 3]
print("  rank-3 level:", "  ".join(top))

# The two rank-2 elements form an antichain: neither reaches the other.
print("\nx1*x1 vs x2 comparable?", nc_leq((1, 1), (2,)) or nc_leq((2,), (1, 1)))

# Graphviz export: pipe this into `dot -Tpdf` to draw the picture.
print("\nDOT source of the bounded diagram:\n")
print(graph.to_dot())
