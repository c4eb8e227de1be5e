"""
The rank-n type A root system on index pairs.

A root is an ordered pair (i, j) with i != j, standing for the vector
e_i - e_j over the coordinate basis.  Positive roots have i < j, the
simple roots are the adjacent pairs (k, k+1), and the height of (i, j)
is j - i.  The symmetric group acts by relabelling the two indices,
which permutes the n(n-1) roots.
"""

import re
from dataclasses import dataclass

from .permutation import Permutation

__all__ = [
    "Root",
    "all_roots",
    "positive_roots",
    "simple_roots",
    "act",
    "decompose",
    "parse_root",
]

_ROOT_RE = re.compile(r"a\(\s*(\d+)\s*,\s*(\d+)\s*\)")


@dataclass(frozen=True)
class Root:
    """The root e_i - e_j inside rank n.

    >>> r = Root(2, 4, 6)
    >>> r.height, r.is_positive
    (2, True)
    >>> str(r.negation())
    'a(4,2)'
    """

    i: int
    j: int
    rank: int

    def __post_init__(self):
        if self.rank < 2:
            raise ValueError(f"rank must be at least 2, got {self.rank}")
        if not (1 <= self.i <= self.rank and 1 <= self.j <= self.rank):
            raise ValueError(
                f"indices ({self.i},{self.j}) out of range 1..{self.rank}"
            )
        if self.i == self.j:
            raise ValueError(f"root indices must differ, got ({self.i},{self.j})")

    @property
    def height(self) -> int:
        return self.j - self.i

    @property
    def is_positive(self) -> bool:
        return self.i < self.j

    def negation(self) -> "Root":
        return Root(self.j, self.i, self.rank)

    def __str__(self) -> str:
        return f"a({self.i},{self.j})"


def all_roots(n: int) -> tuple[Root, ...]:
    """All n(n-1) roots of rank n in lexicographic (i, j) order.

    >>> [str(r) for r in all_roots(2)]
    ['a(1,2)', 'a(2,1)']
    """
    if n < 2:
        raise ValueError(f"rank must be at least 2, got {n}")
    return tuple(
        Root(i, j, n)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j
    )


def positive_roots(n: int) -> tuple[Root, ...]:
    return tuple(r for r in all_roots(n) if r.is_positive)


def simple_roots(n: int) -> tuple[Root, ...]:
    """The adjacent pairs (k, k+1) for k = 1 .. n-1."""
    if n < 2:
        raise ValueError(f"rank must be at least 2, got {n}")
    return tuple(Root(k, k + 1, n) for k in range(1, n))


def act(w: Permutation, r: Root) -> Root:
    """Image of the root under w: (i, j) goes to (w(i), w(j)).

    >>> str(act(Permutation((6, 2, 4, 3, 1, 5)), Root(1, 2, 6)))
    'a(6,2)'
    """
    if w.n != r.rank:
        raise ValueError(f"rank mismatch: permutation {w.n} vs root {r.rank}")
    return Root(w(r.i), w(r.j), r.rank)


def decompose(r: Root) -> tuple[int, ...]:
    """Coefficients of the root over the simple roots.

    For i < j the coefficients are 1 on the block i <= k < j and 0
    elsewhere; negated for i > j.  The sum telescopes back to e_i - e_j,
    so the coefficient total is the height.

    >>> decompose(Root(2, 4, 6))
    (0, 1, 1, 0, 0)
    >>> decompose(Root(4, 2, 6))
    (0, -1, -1, 0, 0)
    """
    lo, hi = min(r.i, r.j), max(r.i, r.j)
    sign = 1 if r.is_positive else -1
    return tuple(sign if lo <= k < hi else 0 for k in range(1, r.rank))


def parse_root(text: str, rank: int) -> Root:
    """Read the a(i,j) text form.

    >>> parse_root("a(2,4)", 6) == Root(2, 4, 6)
    True
    """
    m = _ROOT_RE.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"expected a(i,j), got {text!r}")
    return Root(int(m.group(1)), int(m.group(2)), rank)
