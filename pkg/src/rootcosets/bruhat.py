"""
Bruhat order on the symmetric group and on the coset space.

The production comparison is the sorted-prefix dominance criterion.  The
subword test over a fixed reduced word is kept alongside as an independent
oracle for cross-validation.  Cosets compare through their shortest
representatives; agreement with the longest-representative order is a
tested fact, not an assumption.

Climbing between cosets works on longest representatives: two value
transpositions carry the longest element over the coset of (i, j) to the
longest element over (i-1, j-1), each raising the length, so equal-height
cosets fall into a single chain and are pairwise comparable.
"""

import itertools
import time
from dataclasses import dataclass
from functools import lru_cache

from .cosets import max_rep, max_rep_length, min_rep
from .permutation import Permutation, identity, reduced_word, swap_values
from .report import VerificationReport
from .roots import Root, all_roots

__all__ = [
    "bruhat_leq",
    "bruhat_leq_oracle",
    "coset_leq",
    "comparable",
    "ChainStep",
    "chain_step",
    "chain",
    "chain_start",
    "verify_equal_height_comparable",
    "verify_height_separation",
    "hasse_covers",
]


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """Dominance test: u <= v iff every sorted k-prefix of u is entrywise
    at most the sorted k-prefix of v.

    >>> bruhat_leq(Permutation((2, 1, 3)), Permutation((3, 1, 2)))
    True
    """
    if u.n != v.n:
        raise ValueError(f"rank mismatch: {u.n} vs {v.n}")
    pu: list[int] = []
    pv: list[int] = []
    for k in range(u.n - 1):
        pu = sorted(pu + [u.images[k]])
        pv = sorted(pv + [v.images[k]])
        if any(a > b for a, b in zip(pu, pv)):
            return False
    return True


@lru_cache(maxsize=None)
def _subword_products(v: Permutation) -> frozenset[Permutation]:
    """Products of all subwords of the fixed reduced word of v."""
    states = {identity(v.n)}
    for letter in reduced_word(v):
        grown = set()
        for p in states:
            images = list(p.images)
            images[letter - 1], images[letter] = images[letter], images[letter - 1]
            grown.add(Permutation(tuple(images)))
        states |= grown
    return frozenset(states)


def bruhat_leq_oracle(u: Permutation, v: Permutation) -> bool:
    """Subword test: u <= v iff some subword of a fixed reduced word of v
    multiplies out to u.  Exponential in spirit; meant for cross-checks.
    """
    if u.n != v.n:
        raise ValueError(f"rank mismatch: {u.n} vs {v.n}")
    return u in _subword_products(v)


def coset_leq(a: Root, b: Root) -> bool:
    """Order on cosets via their shortest representatives."""
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")
    return bruhat_leq(min_rep(a), min_rep(b))


def comparable(a: Root, b: Root) -> bool:
    return coset_leq(a, b) or coset_leq(b, a)


@dataclass(frozen=True)
class ChainStep:
    """One climb from the coset of (i, j) to the coset of (i-1, j-1).

    The two intermediates are the permutations after the first and second
    value transposition; the second one is the longest element over the
    target, and all three lengths strictly increase.
    """

    source: Root
    target: Root
    intermediates: tuple[Permutation, Permutation]


def chain_step(source: Root) -> ChainStep | None:
    """Climb one coset down in indices, up in length.

    Returns None when min(i, j) = 1 and no (i-1, j-1) target exists.
    Each transposition swaps two one-line values of the longest coset
    element, keeping the decreasing-head shape; the case split follows
    whether i and j are adjacent and in which order.

    >>> step = chain_step(Root(2, 4, 6))
    >>> [str(p) for p in step.intermediates]
    ['653214', '654213']
    """
    i, j, n = source.i, source.j, source.rank
    if min(i, j) == 1:
        return None
    w = max_rep(source)
    if j == i - 1:
        first = swap_values(w, j - 1, j)
        second = swap_values(first, i - 1, i)
    elif j == i + 1:
        first = swap_values(w, i, j)
        second = swap_values(first, i - 1, j)
    else:
        first = swap_values(w, i - 1, i)
        second = swap_values(first, j - 1, j)
    return ChainStep(source, Root(i - 1, j - 1, n), (first, second))


def chain(source: Root) -> list[ChainStep]:
    """All climbs from the given coset until the indices hit 1."""
    steps = []
    cur = source
    while (step := chain_step(cur)) is not None:
        steps.append(step)
        cur = step.target
    return steps


def chain_start(n: int, height: int) -> Root:
    """The height-class member every other member is reached from.

    This is the root of that height with the largest smaller index, and
    the Bruhat-least coset of its class.
    """
    if height == 0 or not -(n - 1) <= height <= n - 1:
        raise ValueError(f"no roots of height {height} at rank {n}")
    if height > 0:
        return Root(n - height, n, n)
    return Root(n, n + height, n)


def _check_verifier_rank(n: int, ceiling: int, force: bool) -> None:
    if n < 3:
        raise ValueError(f"rank must be at least 3, got {n}")
    if n > ceiling and not force:
        raise ValueError(f"rank {n} beyond supported range 3..{ceiling}")


def verify_equal_height_comparable(n: int, force: bool = False) -> VerificationReport:
    """Equal-height cosets are pairwise comparable, and the transposition
    chains sweep out each height class.

    Two independent routes: a pairwise dominance scan over every
    equal-height pair, and a replay of the climbs from each class's least
    coset checking lengths, endpoints and coverage.
    """
    _check_verifier_rank(n, 8, force)
    start_time = time.perf_counter()
    counterexamples = []
    by_height: dict[int, list[Root]] = {}
    for r in all_roots(n):
        by_height.setdefault(r.height, []).append(r)
    for height, cls in sorted(by_height.items()):
        for a, b in itertools.combinations(cls, 2):
            if not comparable(a, b):
                counterexamples.append(
                    {"kind": "incomparable", "pair": [str(a), str(b)]}
                )
        visited = set()
        cur = chain_start(n, height)
        visited.add(cur)
        while (step := chain_step(cur)) is not None:
            first, second = step.intermediates
            lengths = (max_rep(cur).length(), first.length(), second.length())
            if not (lengths[0] < lengths[1] < lengths[2]):
                counterexamples.append(
                    {"kind": "non_increasing_step", "coset": str(cur)}
                )
            if second != max_rep(step.target):
                counterexamples.append(
                    {"kind": "endpoint_mismatch", "coset": str(cur)}
                )
            if step.target.height != cur.height:
                counterexamples.append(
                    {"kind": "height_changed", "coset": str(cur)}
                )
            cur = step.target
            visited.add(cur)
        missing = sorted(str(r) for r in set(cls) - visited)
        if missing:
            counterexamples.append(
                {"kind": "uncovered", "height": height, "missing": missing}
            )
    return VerificationReport(
        check="theorem1",
        rank=n,
        counterexamples=counterexamples,
        elapsed=time.perf_counter() - start_time,
    )


def verify_height_separation(n: int, force: bool = False) -> VerificationReport:
    """Incomparable cosets have different heights, and so do distinct
    roots sharing the longest-representative length."""
    _check_verifier_rank(n, 8, force)
    start_time = time.perf_counter()
    counterexamples = []
    roots = all_roots(n)
    for a, b in itertools.combinations(roots, 2):
        if a.height == b.height and not comparable(a, b):
            counterexamples.append(
                {"kind": "incomparable_equal_height", "pair": [str(a), str(b)]}
            )
    by_stat: dict[int, list[Root]] = {}
    for r in roots:
        by_stat.setdefault(max_rep_length(r), []).append(r)
    for stat, cls in sorted(by_stat.items()):
        for a, b in itertools.combinations(cls, 2):
            if a.height == b.height:
                counterexamples.append(
                    {
                        "kind": "equal_statistic_equal_height",
                        "statistic": stat,
                        "pair": [str(a), str(b)],
                    }
                )
    return VerificationReport(
        check="contrapositives",
        rank=n,
        counterexamples=counterexamples,
        elapsed=time.perf_counter() - start_time,
    )


def hasse_covers(n: int, force: bool = False) -> list[tuple[Root, Root]]:
    """Covering pairs of the coset order, in lexicographic order.

    Built by a full pairwise comparison followed by betweenness
    elimination; cubic in the n(n-1) cosets, fine at desk scale.
    """
    _check_verifier_rank(n, 7, force)
    roots = all_roots(n)
    reps = {r: min_rep(r) for r in roots}
    below = {
        (a, b): a != b and bruhat_leq(reps[a], reps[b])
        for a in roots
        for b in roots
    }
    covers = []
    for a in roots:
        for b in roots:
            if not below[(a, b)]:
                continue
            if any(below[(a, c)] and below[(c, b)] for c in roots):
                continue
            covers.append((a, b))
    return covers
