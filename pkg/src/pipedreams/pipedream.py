"""Pipe dreams (RC-graphs) and compatible sequences.

A pipe dream is stored as its finite set of cross positions (row, col),
1-indexed in matrix convention; every other cell of the positive quadrant is
an implicit elbow.  Crosses are read in the grid order: top row first, and
right to left within a row.  The cross at (i, j) stands for the simple
transposition s_{i+j-1}, and the product of these letters, taken left to
right by right multiplication, is the permutation of the diagram.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import EmptyDiagramError, InvalidDiagramError, InvalidSequenceError
from .perm import Permutation, reduced_words
from .poly import SparsePolynomial


def grid_key(pos: tuple[int, int]) -> tuple[int, int]:
    """Sort key for the reading order on crosses (row up, column down)."""
    return (pos[0], -pos[1])


class CompatibleSequence:
    """A pair (a, r) of equal-length integer sequences.

    The defining conditions: a is a reduced word, r is weakly increasing,
    r_k <= a_k, and r_k < r_{k+1} whenever a_k < a_{k+1}.
    """

    __slots__ = ("a", "r")

    def __init__(self, a: Iterable[int], r: Iterable[int]):
        self.a = tuple(a)
        self.r = tuple(r)

    def validate(self) -> "CompatibleSequence":
        a, r = self.a, self.r
        if len(a) != len(r):
            raise InvalidSequenceError("a and r differ in length")
        if any(v < 1 for v in a) or any(v < 1 for v in r):
            raise InvalidSequenceError("entries must be positive")
        cur = Permutation.identity()
        for i in a:
            nxt = cur.right_s(i)
            if nxt.length() != cur.length() + 1:
                raise InvalidSequenceError(f"word {a} is not reduced")
            cur = nxt
        for k in range(len(a) - 1):
            if r[k] > r[k + 1]:
                raise InvalidSequenceError("r is not weakly increasing")
            if a[k] < a[k + 1] and r[k] >= r[k + 1]:
                raise InvalidSequenceError(
                    "r must increase strictly across an ascent of a"
                )
        for k in range(len(a)):
            if r[k] > a[k]:
                raise InvalidSequenceError(f"r_{k + 1} exceeds a_{k + 1}")
        return self

    def permutation(self) -> Permutation:
        out = Permutation.identity()
        for i in self.a:
            out = out.right_s(i)
        return out

    def to_pipe_dream(self) -> "PipeDream":
        self.validate()
        return PipeDream(
            (rk, ak - rk + 1) for ak, rk in zip(self.a, self.r)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CompatibleSequence)
            and self.a == other.a
            and self.r == other.r
        )

    def __hash__(self) -> int:
        return hash((self.a, self.r))

    def __repr__(self) -> str:
        return f"CompatibleSequence({self.a!r}, {self.r!r})"

    def to_json(self) -> dict:
        return {"a": list(self.a), "r": list(self.r)}

    @classmethod
    def from_json(cls, data: dict) -> "CompatibleSequence":
        return cls(data["a"], data["r"])


class PipeDream:
    """A set of crosses in the positive quadrant.

    >>> PipeDream([(1, 1), (1, 2), (2, 1)]).word()
    (2, 1, 2)
    >>> str(PipeDream([(1, 1), (1, 2), (2, 1)]).perm())
    '3,2,1'
    """

    __slots__ = ("crosses",)

    def __init__(self, crosses: Iterable[tuple[int, int]] = ()):
        cs = frozenset((int(r), int(c)) for r, c in crosses)
        for r, c in cs:
            if r < 1 or c < 1:
                raise ValueError(f"cross out of the positive quadrant: {(r, c)}")
        self.crosses = cs

    def sorted_crosses(self) -> list[tuple[int, int]]:
        return sorted(self.crosses, key=grid_key)

    def word(self) -> tuple[int, ...]:
        return tuple(r + c - 1 for r, c in self.sorted_crosses())

    def rows(self) -> tuple[int, ...]:
        return tuple(r for r, _ in self.sorted_crosses())

    def product_perm(self) -> Permutation:
        out = Permutation.identity()
        for i in self.word():
            out = out.right_s(i)
        return out

    def is_reduced(self) -> bool:
        cur = Permutation.identity()
        for i in self.word():
            nxt = cur.right_s(i)
            if nxt.length() != cur.length() + 1:
                return False
            cur = nxt
        return True

    def perm(self) -> Permutation:
        """The permutation of the diagram; raises if a pair crosses twice."""
        if not self.is_reduced():
            raise InvalidDiagramError(
                f"pipe dream {sorted(self.crosses)} is not reduced"
            )
        return self.product_perm()

    def weight(self) -> SparsePolynomial:
        exp: list[int] = []
        for r, _ in self.crosses:
            while len(exp) < r:
                exp.append(0)
            exp[r - 1] += 1
        return SparsePolynomial.monomial(exp)

    def to_compatible(self) -> CompatibleSequence:
        self.perm()
        return CompatibleSequence(self.word(), self.rows())

    @classmethod
    def from_compatible(cls, cs: CompatibleSequence) -> "PipeDream":
        return cs.to_pipe_dream()

    def pop(self) -> tuple[tuple[int, int], "PipeDream"]:
        """Remove the first cross in the grid order.

        Returns ((a, r), rest) where a = row + col - 1 of the removed cross
        and r is its row; perm(rest) = s_a * perm(self).
        """
        if not self.crosses:
            raise EmptyDiagramError("cannot pop an empty pipe dream")
        first = self.sorted_crosses()[0]
        r, c = first
        return (r + c - 1, r), PipeDream(self.crosses - {first})

    def __eq__(self, other) -> bool:
        return isinstance(other, PipeDream) and self.crosses == other.crosses

    def __hash__(self) -> int:
        return hash(self.crosses)

    def __repr__(self) -> str:
        return f"PipeDream({self.sorted_crosses()!r})"

    def to_json(self) -> dict:
        return {
            "model": "pd",
            "crosses": [list(pos) for pos in self.sorted_crosses()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PipeDream":
        if data.get("model") != "pd":
            raise ValueError("not a pipe dream payload")
        return cls((r, c) for r, c in data["crosses"])


class PipeDreamTrace:
    """Geometric trace of the pipes of a cross set.

    Pipes are labeled by the column where they enter at the top of the grid;
    they travel south and west through crosses (straight) and elbows (turns)
    until they leave through the west border.
    """

    __slots__ = ("n", "exit_rows", "cross_pipes", "pair_crossings")

    def __init__(self, n, exit_rows, cross_pipes, pair_crossings):
        self.n = n
        self.exit_rows = exit_rows
        self.cross_pipes = cross_pipes
        self.pair_crossings = pair_crossings

    def traced_perm(self) -> Permutation:
        """The permutation sending exit row to entry column."""
        word = [0] * self.n
        for col, row in self.exit_rows.items():
            word[row - 1] = col
        return Permutation(word)


def trace_pipes(crosses: Iterable[tuple[int, int]], n: int | None = None) -> PipeDreamTrace:
    """Follow every pipe of the cross set through an n x n window.

    Works for non-reduced sets too; pair_crossings records where each pair
    of pipes crosses, so double crossings are visible to callers.
    """
    cs = frozenset(crosses)
    needed = max((r + c for r, c in cs), default=1)
    if n is None:
        n = needed
    if n < needed:
        raise ValueError(f"window {n} too small for crosses up to {needed}")
    exit_rows: dict[int, int] = {}
    cross_pipes: dict[tuple[int, int], list[int]] = {}
    for start in range(1, n + 1):
        i, j = 1, start
        heading = "S"
        for _ in range(4 * n * n):
            if (i, j) in cs:
                cross_pipes.setdefault((i, j), []).append(start)
                if heading == "S":
                    i += 1
                else:
                    j -= 1
            else:
                if heading == "S":
                    heading = "W"
                    j -= 1
                else:
                    heading = "S"
                    i += 1
            if j == 0:
                exit_rows[start] = i
                break
            assert i <= n, "pipe escaped through the south border"
        else:  # pragma: no cover
            raise AssertionError("pipe trace did not terminate")
    pair_crossings: dict[frozenset[int], list[tuple[int, int]]] = {}
    for pos, pipes in cross_pipes.items():
        assert len(pipes) == 2, f"cross {pos} not traversed by two pipes"
        pair_crossings.setdefault(frozenset(pipes), []).append(pos)
    return PipeDreamTrace(
        n,
        exit_rows,
        {pos: frozenset(p) for pos, p in cross_pipes.items()},
        {pair: tuple(sorted(ps)) for pair, ps in pair_crossings.items()},
    )


def _compatible_rows(word: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All row sequences r making (word, r) a compatible pair."""

    def rec(k: int, prev: int) -> Iterator[tuple[int, ...]]:
        if k == len(word):
            yield ()
            return
        lo = prev
        if k > 0 and word[k - 1] < word[k]:
            lo = prev + 1
        for r in range(lo, word[k] + 1):
            for rest in rec(k + 1, r):
                yield (r,) + rest

    yield from rec(0, 1)


def iter_pipe_dreams(pi: Permutation) -> Iterator[PipeDream]:
    """Lazily generate the reduced pipe dreams of pi via compatible sequences."""
    for word in sorted(reduced_words(pi)):
        for rows in _compatible_rows(word):
            yield CompatibleSequence(word, rows).to_pipe_dream()


def enumerate_pipe_dreams(pi: Permutation) -> frozenset[PipeDream]:
    """All reduced pipe dreams of pi.

    >>> len(enumerate_pipe_dreams(Permutation([3, 2, 1])))
    1
    """
    return frozenset(iter_pipe_dreams(pi))


if __name__ == "__main__":  # pragma: no cover
    import doctest

    doctest.testmod()
