"""
Permutations of {1, ..., n} in one-line notation.

A permutation w is the tuple of its images (w(1), ..., w(n)).  Composition
uses the "right factor acts first" convention: (u * v)(k) = u(v(k)).  The
Coxeter generators are the adjacent transpositions s_1 .. s_{n-1}, where
s_i exchanges i and i+1; all indices here are 1-based.

Text form follows the compact style 624315 for n <= 9 and a comma-separated
list such as 10,9,...,1 for larger n.
"""

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

__all__ = [
    "Permutation",
    "identity",
    "simple_reflection",
    "transposition",
    "parse_one_line",
    "format_one_line",
    "apply_simple",
    "swap_values",
    "right_descents",
    "reduced_word",
    "evaluate_word",
    "all_permutations",
    "partitions",
    "cycle_type",
    "conjugacy_class_representatives",
]


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., n}, stored as the image tuple.

    >>> w = Permutation((6, 2, 4, 3, 1, 5))
    >>> w(1), w(5)
    (6, 1)
    >>> str(w)
    '624315'
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n < 1:
            raise ValueError("permutation must have rank at least 1")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {images!r}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        """Image of the point k, 1-based."""
        if not 1 <= k <= self.n:
            raise ValueError(f"point {k} out of range 1..{self.n}")
        return self.images[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composite u * v with v acting first: (u * v)(k) = u(v(k))."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")
        return Permutation(tuple(self.images[x - 1] for x in other.images))

    def inverse(self) -> "Permutation":
        """The inverse permutation.

        >>> Permutation((2, 3, 1)).inverse()
        Permutation(images=(3, 1, 2))
        """
        inv = [0] * self.n
        for pos, val in enumerate(self.images):
            inv[val - 1] = pos + 1
        return Permutation(tuple(inv))

    def length(self) -> int:
        """Coxeter length, computed as the number of inversions.

        >>> Permutation((6, 5, 3, 1, 2, 4)).length()
        11
        """
        w = self.images
        return sum(
            1
            for a in range(len(w))
            for b in range(a + 1, len(w))
            if w[a] > w[b]
        )

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(k for k in range(1, self.n + 1) if self.images[k - 1] == k)

    def __str__(self) -> str:
        return format_one_line(self)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def simple_reflection(i: int, n: int) -> Permutation:
    """The adjacent transposition s_i exchanging i and i+1."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")
    return transposition(i, i + 1, n)


def transposition(a: int, b: int, n: int) -> Permutation:
    """The transposition exchanging the values a and b."""
    if a == b or not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f"bad transposition ({a} {b}) for rank {n}")
    images = list(range(1, n + 1))
    images[a - 1], images[b - 1] = b, a
    return Permutation(tuple(images))


def parse_one_line(text: str, n: int) -> Permutation:
    """Read a permutation from its one-line text form.

    Contiguous digits for n <= 9, comma-separated integers otherwise.

    >>> parse_one_line("624315", 6).images
    (6, 2, 4, 3, 1, 5)
    >>> parse_one_line("1,2,3", 3) == identity(3)
    True
    """
    if n < 1:
        raise ValueError("rank must be at least 1")
    text = text.strip()
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != n:
            raise ValueError(f"expected {n} entries, got {len(parts)}: {text!r}")
        try:
            images = tuple(int(p) for p in parts)
        except ValueError:
            raise ValueError(f"non-integer entry in {text!r}") from None
    else:
        if n > 9:
            raise ValueError(f"digit form is only valid for n <= 9, got n = {n}")
        if len(text) != n or not text.isdigit():
            raise ValueError(f"expected {n} digits, got {text!r}")
        images = tuple(int(c) for c in text)
    return Permutation(images)


def format_one_line(w: Permutation) -> str:
    """Inverse of parse_one_line.

    >>> format_one_line(Permutation((6, 5, 3, 1, 2, 4)))
    '653124'
    """
    if w.n <= 9:
        return "".join(str(x) for x in w.images)
    return ",".join(str(x) for x in w.images)


def apply_simple(w: Permutation, i: int, side: str = "right") -> Permutation:
    """Multiply w by s_i on the given side.

    On the right s_i swaps one-line positions i and i+1; on the left it
    swaps the values i and i+1.  Either way the length changes by exactly 1.

    >>> str(apply_simple(Permutation((6, 5, 3, 1, 2, 4)), 5, "right"))
    '653142'
    """
    if not 1 <= i <= w.n - 1:
        raise ValueError(f"generator index {i} out of range 1..{w.n - 1}")
    if side == "right":
        images = list(w.images)
        images[i - 1], images[i] = images[i], images[i - 1]
        return Permutation(tuple(images))
    if side == "left":
        return swap_values(w, i, i + 1)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def swap_values(w: Permutation, a: int, b: int) -> Permutation:
    """Exchange the one-line entries holding the values a and b.

    Equals left multiplication by the transposition (a b).

    >>> str(swap_values(Permutation((6, 5, 3, 1, 2, 4)), 1, 2))
    '653214'
    """
    images = list(w.images)
    pa, pb = images.index(a), images.index(b)
    images[pa], images[pb] = b, a
    return Permutation(tuple(images))


def right_descents(w: Permutation) -> tuple[int, ...]:
    """Indices i with w(i) > w(i+1), i.e. l(w s_i) < l(w)."""
    im = w.images
    return tuple(i + 1 for i in range(len(im) - 1) if im[i] > im[i + 1])


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """A canonical reduced word for w in the generators s_1 .. s_{n-1}.

    Strategy: repeatedly strip the smallest-index right descent, then
    reverse the record.  The result evaluates back to w and its length is
    the inversion count.

    >>> reduced_word(identity(4))
    ()
    >>> reduced_word(Permutation((3, 2, 1)))
    (1, 2, 1)
    """
    images = list(w.images)
    stripped = []
    while True:
        d = next(
            (k for k in range(len(images) - 1) if images[k] > images[k + 1]),
            None,
        )
        if d is None:
            break
        stripped.append(d + 1)
        images[d], images[d + 1] = images[d + 1], images[d]
    return tuple(reversed(stripped))


def evaluate_word(letters: Sequence[int], n: int) -> Permutation:
    """Left-to-right product of the simple reflections named by letters.

    >>> evaluate_word((1, 2, 1), 3)
    Permutation(images=(3, 2, 1))
    """
    images = list(range(1, n + 1))
    for i in letters:
        if not 1 <= i <= n - 1:
            raise ValueError(f"letter {i} out of range 1..{n - 1}")
        images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic one-line order."""
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of n as weakly decreasing tuples, largest first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def cycle_type(w: Permutation) -> tuple[int, ...]:
    """Cycle lengths of w in weakly decreasing order."""
    seen = [False] * (w.n + 1)
    lengths = []
    for start in range(1, w.n + 1):
        if seen[start]:
            continue
        size = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = w(k)
            size += 1
        lengths.append(size)
    return tuple(sorted(lengths, reverse=True))


def conjugacy_class_representatives(n: int) -> list[Permutation]:
    """One permutation per conjugacy class of S_n.

    For each partition the representative cycles consecutive blocks of
    {1, ..., n}, so its cycle type equals the partition.
    """
    reps = []
    for part in partitions(n):
        images = list(range(1, n + 1))
        start = 1
        for size in part:
            for t in range(size):
                images[start + t - 1] = start + (t + 1) % size
            start += size
        reps.append(Permutation(tuple(images)))
    return reps
