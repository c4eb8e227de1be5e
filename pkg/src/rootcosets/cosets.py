"""
Cosets of the parabolic subgroup dropping the last two generators, and the
bijection matching them to the roots.

For rank n >= 3 the subgroup W_J generated by s_1 .. s_{n-3} rearranges
one-line positions 1 .. n-2 and fixes positions n-1 and n, so a left coset
w W_J consists of the permutations sharing the last two one-line entries.
Reading those entries as a pair identifies the coset with the root
(w(n-1), w(n)).  The longest element of the coset of (i, j) lists the
remaining values in decreasing order and then i, j; its length is the
statistic attached to the root.
"""

import itertools
import time

from .permutation import (
    Permutation,
    all_permutations,
    conjugacy_class_representatives,
)
from .report import VerificationReport
from .roots import Root, all_roots, act

__all__ = [
    "MIN_RANK",
    "parabolic_generators",
    "parabolic_elements",
    "in_parabolic",
    "coset_of",
    "max_rep",
    "min_rep",
    "max_rep_length",
    "coset_count",
    "fixed_roots_count",
    "fixed_cosets_count",
    "verify_character_identity",
]

# Two distinct generators must be dropped, so ranks 1 and 2 are rejected.
MIN_RANK = 3


def _check_rank(n: int) -> None:
    if n < MIN_RANK:
        raise ValueError(f"rank must be at least {MIN_RANK}, got {n}")


def parabolic_generators(n: int) -> tuple[int, ...]:
    """Generator indices 1 .. n-3; empty at rank 3."""
    _check_rank(n)
    return tuple(range(1, n - 2))


def parabolic_elements(n: int) -> list[Permutation]:
    """All (n-2)! elements of the subgroup, as rank-n permutations."""
    _check_rank(n)
    tail = (n - 1, n)
    return [
        Permutation(head + tail)
        for head in itertools.permutations(range(1, n - 1))
    ]


def in_parabolic(w: Permutation) -> bool:
    """Membership test: the last two positions are fixed pointwise."""
    _check_rank(w.n)
    return w(w.n - 1) == w.n - 1 and w(w.n) == w.n


def coset_of(w: Permutation) -> Root:
    """The coset label of w: its last two one-line entries, as a root.

    >>> str(coset_of(Permutation((6, 2, 4, 3, 1, 5))))
    'a(1,5)'
    """
    _check_rank(w.n)
    return Root(w(w.n - 1), w(w.n), w.n)


def max_rep(r: Root) -> Permutation:
    """Longest element of the coset labelled by r.

    The values other than i and j appear first in decreasing order,
    then i, then j.

    >>> str(max_rep(Root(2, 4, 6)))
    '653124'
    """
    _check_rank(r.rank)
    head = sorted(set(range(1, r.rank + 1)) - {r.i, r.j}, reverse=True)
    return Permutation(tuple(head) + (r.i, r.j))


def min_rep(r: Root) -> Permutation:
    """Shortest element of the coset labelled by r.

    >>> str(min_rep(Root(2, 4, 6)))
    '135624'
    """
    _check_rank(r.rank)
    head = sorted(set(range(1, r.rank + 1)) - {r.i, r.j})
    return Permutation(tuple(head) + (r.i, r.j))


def max_rep_length(r: Root) -> int:
    """Length of the longest coset element, the statistic attached to r.

    >>> max_rep_length(Root(2, 4, 6))
    11
    """
    return max_rep(r).length()


def coset_count(n: int) -> int:
    """Number of cosets: n!/(n-2)! = n(n-1), one per root."""
    _check_rank(n)
    return n * (n - 1)


def fixed_roots_count(w: Permutation) -> int:
    """Number of roots fixed by w, i.e. the root permutation character at w."""
    if w.n < 2:
        return 0
    return sum(1 for r in all_roots(w.n) if act(w, r) == r)


def fixed_cosets_count(w: Permutation) -> int:
    """Number of cosets fixed by left multiplication with w.

    The coset of x is fixed exactly when inverse(x) * w * x lies in the
    subgroup; one representative per coset suffices, and the shortest
    one is probed here.
    """
    _check_rank(w.n)
    count = 0
    for r in all_roots(w.n):
        x = min_rep(r)
        if in_parabolic(x.inverse() * w * x):
            count += 1
    return count


def verify_character_identity(n: int, force: bool = False) -> VerificationReport:
    """Check that w fixes as many cosets as it fixes roots.

    Exhaustive over S_n for n <= 6; one representative per conjugacy
    class beyond that (the counts are class functions).  Ranks above 7
    are rejected unless force is set.
    """
    _check_rank(n)
    if n > 7 and not force:
        raise ValueError(f"rank {n} beyond supported range 3..7")
    start = time.perf_counter()
    elements = all_permutations(n) if n <= 6 else conjugacy_class_representatives(n)
    counterexamples = []
    for w in elements:
        roots_fixed = fixed_roots_count(w)
        cosets_fixed = fixed_cosets_count(w)
        if roots_fixed != cosets_fixed:
            counterexamples.append(
                {
                    "w": str(w),
                    "fixed_roots": roots_fixed,
                    "fixed_cosets": cosets_fixed,
                }
            )
    return VerificationReport(
        check="character",
        rank=n,
        counterexamples=counterexamples,
        elapsed=time.perf_counter() - start,
    )
