"""Permutations of the infinite symmetric group in one-line notation.

A permutation is stored as a trimmed tuple ``(pi(1), ..., pi(n))`` with
trailing fixed points removed, so the same group element compares equal no
matter which finite symmetric group it came from.  Composition is functional:
``(sigma * pi)(i) == sigma(pi(i))``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator


class Permutation:
    """An element of S-infinity as a trimmed one-line word.

    >>> Permutation([2, 1, 3]).word
    (2, 1)
    >>> Permutation([2, 1])(5)
    5
    >>> (Permutation([2, 1]) * Permutation([1, 3, 2])).word
    (2, 3, 1)
    """

    __slots__ = ("word",)

    def __init__(self, word: Iterable[int] = ()):
        w = tuple(word)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a permutation word: {w!r}")
        while w and w[-1] == len(w):
            w = w[:-1]
        self.word = w

    @classmethod
    def identity(cls) -> "Permutation":
        return cls(())

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse a one-line word.

        Accepts comma or space separated values, or a compact digit
        string when every value is a single digit.

        >>> Permutation.parse("2,1,5,4,3") == Permutation.parse("21543")
        True
        """
        parts = text.replace(",", " ").split()
        if not parts:
            raise ValueError("empty permutation text")
        if len(parts) == 1 and parts[0].isdigit() and len(parts[0]) > 1:
            return cls(int(ch) for ch in parts[0])
        return cls(int(p) for p in parts)

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        """The longest element of S_n."""
        return cls(range(n, 0, -1))

    @property
    def size(self) -> int:
        """Size of the support, i.e. the length of the trimmed word."""
        return len(self.word)

    def __call__(self, i: int) -> int:
        if i < 1:
            raise ValueError("positions are 1-based")
        return self.word[i - 1] if i <= len(self.word) else i

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.word)
        for i, v in enumerate(self.word, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def __mul__(self, other: "Permutation") -> "Permutation":
        m = max(self.size, other.size)
        return Permutation(self(other(i)) for i in range(1, m + 1))

    def right_t(self, a: int, b: int) -> "Permutation":
        """Right-multiply by the transposition t_{a,b}: swap positions a and b."""
        if not 1 <= a < b:
            raise ValueError(f"need 1 <= a < b, got {(a, b)}")
        w = list(self.word) + list(range(len(self.word) + 1, b + 1))
        w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
        return Permutation(w)

    def right_s(self, i: int) -> "Permutation":
        return self.right_t(i, i + 1)

    def left_s(self, i: int) -> "Permutation":
        """Left-multiply by s_i: swap the values i and i+1."""
        if i < 1:
            raise ValueError("need i >= 1")
        m = max(self.size, i + 1)
        swap = {i: i + 1, i + 1: i}
        return Permutation(swap.get(self(j), self(j)) for j in range(1, m + 1))

    def length(self) -> int:
        """Coxeter length = number of inversions.

        >>> Permutation([2, 1, 5, 4, 3]).length()
        4
        """
        w = self.word
        return sum(
            1
            for i in range(len(w))
            for j in range(i + 1, len(w))
            if w[i] > w[j]
        )

    def is_identity(self) -> bool:
        return not self.word

    def left_descents(self) -> frozenset[int]:
        """{i : i appears after i+1 in the word}.

        >>> sorted(Permutation([2, 1, 5, 4, 3]).left_descents())
        [1, 3, 4]
        """
        inv = self.inverse()
        return frozenset(
            i for i in range(1, self.size) if inv(i) > inv(i + 1)
        )

    def right_descents(self) -> frozenset[int]:
        return frozenset(
            i for i in range(1, self.size) if self(i) > self(i + 1)
        )

    def lehmer_code(self) -> tuple[int, ...]:
        w = self.word
        return tuple(
            sum(1 for j in range(i + 1, len(w)) if w[j] < w[i])
            for i in range(len(w))
        )

    def embed(self, n: int) -> "Permutation":
        """The image of pi in S_n.  Trimming makes this the identity on the data."""
        if n < self.size:
            raise ValueError(f"cannot embed support {self.size} into S_{n}")
        return self

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.word == other.word

    def __hash__(self) -> int:
        return hash(self.word)

    def __repr__(self) -> str:
        return f"Permutation({list(self.word)!r})"

    def __str__(self) -> str:
        return ",".join(map(str, self.word)) if self.word else "id"


def is_bruhat_cover(pi: Permutation, a: int, b: int) -> bool:
    """True iff pi * t_{a,b} covers pi in Bruhat order (length goes up by 1)."""
    if not 1 <= a < b:
        raise ValueError(f"need 1 <= a < b, got {(a, b)}")
    return pi.right_t(a, b).length() == pi.length() + 1


def monk_covers(pi: Permutation, alpha: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The cover data entering Monk's rule at x_alpha.

    Returns ``(left, right)`` where ``left`` collects s < alpha with
    pi*t_{s,alpha} covering pi and ``right`` collects l > alpha with
    pi*t_{alpha,l} covering pi.  The right list is never empty.
    """
    if alpha < 1:
        raise ValueError("need alpha >= 1")
    left = tuple(s for s in range(1, alpha) if is_bruhat_cover(pi, s, alpha))
    n = max(pi.size, alpha)
    right = tuple(
        l for l in range(alpha + 1, n + 2) if is_bruhat_cover(pi, alpha, l)
    )
    if not right:
        raise AssertionError("right Monk covers cannot be empty in S-infinity")
    return left, right


@lru_cache(maxsize=None)
def reduced_words(pi: Permutation) -> frozenset[tuple[int, ...]]:
    """All reduced words of pi, peeling right descents recursively.

    A word (a_1, ..., a_l) multiplies to pi left to right:
    pi == s_{a_1} s_{a_2} ... s_{a_l}.
    """
    if pi.is_identity():
        return frozenset({()})
    out = set()
    for i in pi.right_descents():
        for w in reduced_words(pi.right_s(i)):
            out.add(w + (i,))
    return frozenset(out)


def iter_reduced_words(pi: Permutation) -> Iterator[tuple[int, ...]]:
    """Lazily generate the reduced words of pi (no memo; good for big sets)."""
    if pi.is_identity():
        yield ()
        return
    for i in sorted(pi.right_descents()):
        for w in iter_reduced_words(pi.right_s(i)):
            yield w + (i,)


def one_reduced_word(pi: Permutation) -> tuple[int, ...]:
    """A deterministic reduced word of pi (smallest right descent peeled last)."""
    word: list[int] = []
    cur = pi
    while not cur.is_identity():
        i = min(cur.right_descents())
        word.append(i)
        cur = cur.right_s(i)
    return tuple(reversed(word))


def symmetric_group(n: int) -> Iterator[Permutation]:
    """All permutations with support inside {1, ..., n}."""
    for w in itertools.permutations(range(1, n + 1)):
        yield Permutation(w)


if __name__ == "__main__":  # pragma: no cover
    import doctest

    doctest.testmod()
