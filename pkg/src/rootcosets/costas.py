"""
Costas permutations and the equal-height collision test.

A permutation is Costas when its difference triangle has no repeats:
for each fixed position gap, the value differences across that gap are
pairwise distinct.  Equivalently, the positive roots of any one height
map under the permutation to roots of pairwise distinct heights, which
is the formulation checked against every enumerated Costas array.
"""

import warnings

from .permutation import Permutation
from .report import CostasReport
from .roots import Root, act

__all__ = [
    "SOFT_LIMIT",
    "is_costas",
    "is_costas_via_roots",
    "enumerate_costas",
    "verify_costas_height_property",
]

# enumeration above this order still works, but emits a runtime warning
SOFT_LIMIT = 7


def is_costas(w: Permutation) -> bool:
    """Difference-triangle test.

    >>> is_costas(Permutation((1, 2, 3)))
    False
    >>> is_costas(Permutation((2, 1, 3)))
    True
    """
    im = w.images
    n = len(im)
    for gap in range(1, n):
        diffs = [im[a + gap] - im[a] for a in range(n - gap)]
        if len(set(diffs)) != len(diffs):
            return False
    return True


def is_costas_via_roots(w: Permutation) -> bool:
    """Root formulation: no two distinct positive roots of equal height
    may land on roots of equal height.

    Pointwise equal to is_costas; the gap-g differences are exactly the
    heights of the images of the height-g positive roots.
    """
    n = w.n
    if n < 2:
        return True
    for height in range(1, n):
        seen = set()
        for a in range(1, n - height + 1):
            image_height = act(w, Root(a, a + height, n)).height
            if image_height in seen:
                return False
            seen.add(image_height)
    return True


def enumerate_costas(n: int) -> list[Permutation]:
    """All Costas permutations of order n, lexicographically.

    Backtracking over positions with one running difference set per gap;
    a placement extending any gap's set with a repeat is pruned.
    """
    if n < 1:
        raise ValueError(f"order must be at least 1, got {n}")
    if n > SOFT_LIMIT:
        warnings.warn(
            f"Costas enumeration at order {n} may take a while",
            RuntimeWarning,
            stacklevel=2,
        )
    found: list[Permutation] = []
    line: list[int] = []
    used = [False] * (n + 1)
    diffs: list[set[int]] = [set() for _ in range(n)]

    def extend(pos: int) -> None:
        if pos == n:
            found.append(Permutation(tuple(line)))
            return
        for value in range(1, n + 1):
            if used[value]:
                continue
            fresh = []
            ok = True
            for gap in range(1, pos + 1):
                d = value - line[pos - gap]
                if d in diffs[gap]:
                    ok = False
                    break
                fresh.append((gap, d))
            if not ok:
                continue
            for gap, d in fresh:
                diffs[gap].add(d)
            used[value] = True
            line.append(value)
            extend(pos + 1)
            line.pop()
            used[value] = False
            for gap, d in fresh:
                diffs[gap].remove(d)

    extend(0)
    return found


def verify_costas_height_property(n: int, force: bool = False) -> CostasReport:
    """Every Costas array separates the heights within each positive
    equal-height class.

    Checked over positive pairs only; the negative pairs follow from the
    sign symmetry of heights under the action.
    """
    if n < 3:
        raise ValueError(f"rank must be at least 3, got {n}")
    if n > 7 and not force:
        raise ValueError(f"rank {n} beyond supported range 3..7")
    costas = enumerate_costas(n)
    counterexamples = []
    for w in costas:
        for height in range(1, n):
            seen: dict[int, Root] = {}
            for a in range(1, n - height + 1):
                r = Root(a, a + height, n)
                image_height = act(w, r).height
                if image_height in seen:
                    counterexamples.append(
                        {"w": str(w), "pair": [str(seen[image_height]), str(r)]}
                    )
                else:
                    seen[image_height] = r
    return CostasReport(
        rank=n,
        costas_count=len(costas),
        counterexamples=counterexamples,
    )
