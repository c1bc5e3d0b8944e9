#!/usr/bin/env python3
"""Counting words by rank: rational series against brute enumeration.

Over the unbounded alphabet the level sizes are 1, 1, 2, 4, 8, ...: the
coefficients of (1-t)/(1-2t).  Bounding the alphabet at n trims the
denominator to 1-2t+t^(n+1); for n = 2 that yields the Fibonacci numbers.
Both expansions run on exact integers and are checked here against a
direct tally of the generated words.
"""

from ncposet import enumerate_by_rank, rank_coefficients

print("unbounded alphabet:")
table = rank_coefficients(10)
counts = enumerate_by_rank(10)
for k, (c, e) in enumerate(zip(table.coefficients, counts)):
    marker = "ok" if c == e else "MISMATCH"
    print(f"  rank {k:2d}: series {c:5d}   enumeration {e:5d}   {marker}")

for n in (1, 2, 3):
    table = rank_coefficients(10, n)
    counts = enumerate_by_rank(10, n)
    assert list(table.coefficients) == counts
    print(f"\nn = {n}: " + " ".join(str(c) for c in table.coefficients))

print("\nn = 2 reproduces the Fibonacci numbers;")
print("each row is also the list of level sizes of the Hasse diagram.")
