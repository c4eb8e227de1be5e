"""Equal heights force comparability; watch the chains that prove it.

Two cosets compare in Bruhat order exactly when their minimal (equivalently
maximal) representatives do.  Whenever two roots share a height, their
cosets turn out to be comparable, and the reason is constructive: starting
from the bottom coset of the height class, two single value-transpositions
at a time walk the longest representative up to the next coset of the same
height, raising the length by exactly one at each hop.
"""

from rootcosets import (
    all_roots,
    chain,
    chain_start,
    comparable,
    coset_leq,
    max_rep,
)

N = 6

print(f"rank n = {N}")
for h in (2, -3):
    roots = [r for r in all_roots(N) if r.height == h]
    print(f"\nheight {h}: {' '.join(str(r) for r in sorted(roots, key=lambda r: r.i))}")

    pairs = [(a, b) for a in roots for b in roots if (a.i, a.j) < (b.i, b.j)]
    assert all(comparable(a, b) for a, b in pairs)
    print(f"all {len(pairs)} pairs comparable; the class is a chain in the order")

    start = chain_start(N, h)
    assert all(coset_leq(start, r) for r in roots)
    head = max_rep(start)
    print(f"start at the bottom coset {start}: longest element {head}, "
          f"length {head.length()}")
    for step in chain(start):
        first, second = step.intermediates
        print(
            f"  swap two values: {first} (length {first.length()}), "
            f"swap two more: {second} (length {second.length()}) "
            f"= longest element of {step.target}"
        )

print()
print("heights differ on every incomparable pair:")
shown = 0
for a in all_roots(4):
    for b in all_roots(4):
        if (a.i, a.j) < (b.i, b.j) and not comparable(a, b):
            print(f"  rank 4: {a} (h={a.height}) vs {b} (h={b.height})")
            shown += 1
            if shown == 3:
                break
    if shown == 3:
        break
