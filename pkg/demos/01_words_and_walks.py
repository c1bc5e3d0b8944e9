#!/usr/bin/env python3
"""Words, their commutative shadows, and the lattice-walk picture.

A word over x1, x2, ... is just a tuple of letter indices.  Forgetting the
order of the letters gives a commutative monomial; listing that monomial's
letters in increasing order gives the sorted form of the word.  Reading
the word as a walk (letter x_i steps by a vector of i ones) draws the same
data as a path whose endpoint is the multirank.
"""

from ncposet import (
    abelianize,
    format_monomial,
    format_multirank,
    format_word,
    multirank,
    parse_word,
    rank,
    sort_word,
    walk,
)

w = parse_word("x2*x1*x1*x2*x2")
print("word:          ", format_word(w))
print("degree:        ", len(w))
print("rank:          ", rank(w))
print("multirank:     ", format_multirank(multirank(w)))

# The commutative shadow counts letters; sorting it gives the canonical
# representative of the fiber.
shadow = abelianize(w)
print("abelianized:   ", format_monomial(shadow))
print("sorted form:   ", format_word(sort_word(shadow)))

# Both the word and its sorted form walk to the same endpoint.
print("\nwalk of the word (steps x1 -> (1,0), x2 -> (1,1)):")
for point in walk(w):
    print("   ", point)

print("\nwalk of the sorted form:")
for point in walk(sort_word(shadow)):
    print("   ", point)

# A quick ASCII rendering of the two paths in the plane.
for title, word in (("original", w), ("sorted", sort_word(shadow))):
    points = walk(word)
    height = max(p[1] for p in points)
    width = max(p[0] for p in points)
    grid = [["." for _ in range(width + 1)] for _ in range(height + 1)]
    for x, y in points:
        grid[height - y][x] = "o"
    print(f"\n{title} path:")
    for row in grid:
        print("    " + " ".join(row))
