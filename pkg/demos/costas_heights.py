"""Costas permutations seen through root heights.

A permutation is Costas when, for every column gap g, the differences
w(k+g) - w(k) are pairwise distinct.  In root language that is a clean
separation statement: the permutation maps the equal-height positive roots
(i, i+g) to roots of pairwise distinct heights.  This script shows both
faces on small examples and counts Costas permutations per rank.
"""

from rootcosets import (
    act,
    enumerate_costas,
    is_costas,
    parse_one_line,
    positive_roots,
)

good = parse_one_line("2431", 4)
bad = parse_one_line("2413", 4)

for w, name in ((good, "Costas"), (bad, "not Costas")):
    print(f"{w} is {name}")
    for g in (1, 2, 3):
        layer = [r for r in positive_roots(4) if r.height == g]
        images = [act(w, r) for r in layer]
        rendered = ", ".join(
            f"{r} -> {s} (h={s.height})" for r, s in zip(layer, images)
        )
        heights = [s.height for s in images]
        verdict = "distinct" if len(set(heights)) == len(heights) else "collision"
        print(f"  gap {g}: {rendered}   heights {verdict}")
    print()

print("counts by rank (backtracking enumeration, cross-checked by filtering):")
for n in range(1, 8):
    found = enumerate_costas(n)
    print(f"  n={n}: {len(found)}")
    if n <= 4:
        print(f"        {' '.join(str(w) for w in found)}")

assert all(is_costas(w) for w in enumerate_costas(6))
