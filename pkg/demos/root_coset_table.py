"""Walk through the root/coset dictionary at rank 5.

Dropping the last two simple reflections of the symmetric group leaves a
subgroup that only shuffles the first n-2 one-line positions.  Every left
coset is therefore pinned down by the last two entries of any member, and
that ordered pair is exactly a root (i, j) ~ e_i - e_j.  This script builds
the dictionary explicitly and tabulates the length of each coset's longest
element.
"""

from rootcosets import (
    all_permutations,
    all_roots,
    coset_of,
    max_rep,
    max_rep_length,
    min_rep,
    parabolic_elements,
)

N = 5

print(f"rank n = {N}")
print(f"subgroup size (n-2)! = {len(parabolic_elements(N))}")
print(f"number of cosets n(n-1) = {len(all_roots(N))}")
print()

# Sort the whole group into cosets by reading the last two entries.
blocks = {}
for w in all_permutations(N):
    blocks.setdefault(coset_of(w), []).append(w)

print("each coset, keyed by its root, with its shortest and longest member:")
print(f"{'root':>7} {'height':>6} {'min':>6} {'max':>6} {'length':>6}")
for r in sorted(blocks, key=lambda r: (r.height, r.i)):
    members = blocks[r]
    assert min_rep(r) == min(members, key=lambda w: w.length())
    assert max_rep(r) == max(members, key=lambda w: w.length())
    print(
        f"{str(r):>7} {r.height:>6} {min_rep(r)!s:>6} {max_rep(r)!s:>6}"
        f" {max_rep_length(r):>6}"
    )

print()
spread = (N - 2) * (N - 3) // 2
print(
    f"the gap between longest and shortest member is always (n-2)(n-3)/2 = {spread},"
)
print("the length of the longest element of the subgroup itself.")
