"""Bumpless pipe dreams on square grids.

A diagram is a tuple of rows, each a string over the six-letter alphabet

    '.'  empty tile          '|'  vertical segment      '-'  horizontal
    'r'  turn south-to-east  'j'  turn west-to-north    '+'  crossing

plus the letter 'b' for a bump tile (two touching arcs, south-to-east and
west-to-north) that appears only in intermediate states of insertion moves.

Pipe k enters the south border at the bottom of column k heading north and
leaves through the east border; the diagram's permutation sends the exit row
of pipe k back to k.  Tiles are addressed (row, col), 1-indexed.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .errors import EmptyDiagramError, InvalidDiagramError, MoveError
from .perm import Permutation
from .poly import SparsePolynomial

_SEGMENTS = {
    ".": frozenset(),
    "|": frozenset({"NS"}),
    "-": frozenset({"EW"}),
    "r": frozenset({"SE"}),
    "j": frozenset({"NW"}),
    "+": frozenset({"NS", "EW"}),
    "b": frozenset({"SE", "NW"}),
}
_LETTER = {segs: letter for letter, segs in _SEGMENTS.items()}

# Which of the four cell edges each segment kind touches.
_EDGES = {
    "NS": ("N", "S"),
    "EW": ("E", "W"),
    "SE": ("S", "E"),
    "NW": ("N", "W"),
}


class _Editor:
    """Batched segment surgery on a grid of tiles.

    All queued removals are applied before all queued additions, so a batch of
    overlapping tile rewrites does not depend on ordering.  A removal of an
    absent segment, an addition of a present one, or a final tile whose
    segments share an edge all raise MoveError.
    """

    def __init__(self, rows: tuple[str, ...]):
        self.cells = [[set(_SEGMENTS[ch]) for ch in row] for row in rows]
        self.removals: list[tuple[int, int, str]] = []
        self.additions: list[tuple[int, int, str]] = []

    def remove(self, i: int, j: int, seg: str) -> None:
        self.removals.append((i, j, seg))

    def add(self, i: int, j: int, seg: str) -> None:
        self.additions.append((i, j, seg))

    def apply(self) -> tuple[str, ...]:
        for i, j, seg in self.removals:
            cell = self.cells[i - 1][j - 1]
            if seg not in cell:
                raise MoveError(f"no {seg} segment to remove at {(i, j)}")
            cell.discard(seg)
        for i, j, seg in self.additions:
            cell = self.cells[i - 1][j - 1]
            if seg in cell:
                raise MoveError(f"{seg} segment already present at {(i, j)}")
            used = {e for s in cell for e in _EDGES[s]}
            if any(e in used for e in _EDGES[seg]):
                raise MoveError(f"edge conflict adding {seg} at {(i, j)}")
            cell.add(seg)
        out = []
        for line in self.cells:
            chars = []
            for cell in line:
                letter = _LETTER.get(frozenset(cell))
                if letter is None:
                    raise MoveError(f"illegal tile {sorted(cell)}")
                chars.append(letter)
            out.append("".join(chars))
        return tuple(out)


class BpdTrace:
    """Paths and crossings of all pipes of a diagram."""

    __slots__ = ("n", "exit_rows", "paths", "strand", "pair_crossings")

    def __init__(self, n, exit_rows, paths, strand, pair_crossings):
        self.n = n
        self.exit_rows = exit_rows
        self.paths = paths
        self.strand = strand
        self.pair_crossings = pair_crossings

    def traced_perm(self) -> Permutation:
        word = [0] * self.n
        for col, row in self.exit_rows.items():
            word[row - 1] = col
        return Permutation(word)


def _trim_rows(rows: tuple[str, ...]) -> tuple[str, ...]:
    """Strip trailing identity rows and columns added by growth."""
    while len(rows) > 1:
        n = len(rows)
        last_row = rows[-1]
        last_col = "".join(row[-1] for row in rows)
        if last_row == "|" * (n - 1) + "r" and last_col == "-" * (n - 1) + "r":
            rows = tuple(row[:-1] for row in rows[:-1])
        else:
            break
    return rows


class BumplessPipeDream:
    """An n x n grid of tiles.

    Equality and hashing compare the trimmed form, so the same diagram drawn
    on grids of different sizes compares equal.

    >>> BumplessPipeDream.rothe(Permutation([2, 1])).rows
    ('.r', 'r+')
    >>> BumplessPipeDream.identity(2).rows
    ('r-', '|r')
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[str]):
        rs = tuple(str(row) for row in rows)
        if not rs:
            raise ValueError("empty grid")
        n = len(rs)
        for row in rs:
            if len(row) != n:
                raise ValueError("grid is not square")
            for ch in row:
                if ch not in _SEGMENTS:
                    raise ValueError(f"unknown tile letter {ch!r}")
        self.rows = rs

    @property
    def n(self) -> int:
        return len(self.rows)

    def tile(self, i: int, j: int) -> str:
        return self.rows[i - 1][j - 1]

    def _edges(self, i: int, j: int) -> set[str]:
        return {e for seg in _SEGMENTS[self.tile(i, j)] for e in _EDGES[seg]}

    @classmethod
    def identity(cls, n: int) -> "BumplessPipeDream":
        if n < 1:
            raise ValueError("size must be positive")
        return cls(
            "|" * i + "r" + "-" * (n - 1 - i) for i in range(n)
        )

    @classmethod
    def rothe(cls, pi: Permutation, n: int | None = None) -> "BumplessPipeDream":
        """The diagram with a blank at (i, j) exactly when j < pi(i) and
        i < pi^-1(j)."""
        if n is None:
            n = max(pi.size, 1)
        if n < max(pi.size, 1):
            raise ValueError("grid too small for the permutation")
        inv = pi.inverse()
        rows = []
        for r in range(1, n + 1):
            chars = []
            for c in range(1, n + 1):
                if pi(r) == c:
                    chars.append("r")
                elif r > inv(c) and c > pi(r):
                    chars.append("+")
                elif r > inv(c):
                    chars.append("|")
                elif c > pi(r):
                    chars.append("-")
                else:
                    chars.append(".")
            rows.append("".join(chars))
        return cls(rows)

    def grow_to(self, m: int) -> "BumplessPipeDream":
        """Embed into an m x m grid by appending identity rows and columns."""
        rows = self.rows
        while len(rows) < m:
            n = len(rows)
            rows = tuple(row + "-" for row in rows) + ("|" * n + "r",)
        return BumplessPipeDream(rows)

    def trim(self) -> "BumplessPipeDream":
        return BumplessPipeDream(_trim_rows(self.rows))

    def blanks(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(1, self.n + 1)
            if self.tile(i, j) == "."
        ]

    def cross_positions(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(1, self.n + 1)
            if self.tile(i, j) == "+"
        ]

    def weight(self) -> SparsePolynomial:
        exp: list[int] = []
        for i, _ in self.blanks():
            while len(exp) < i:
                exp.append(0)
            exp[i - 1] += 1
        return SparsePolynomial.monomial(exp)

    def trace(self, allow_bump: bool = False) -> BpdTrace:
        """Follow every pipe; raises InvalidDiagramError on malformed grids."""
        n = self.n
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                t = self.tile(i, j)
                if t == "b" and not allow_bump:
                    raise InvalidDiagramError(f"bump tile at {(i, j)}")
        # Border consistency: no segment may poke through the north or west
        # border, and every south and east border edge must carry a pipe.
        for j in range(1, n + 1):
            if "N" in self._edges(1, j):
                raise InvalidDiagramError(f"segment exits the top at column {j}")
            if "S" not in self._edges(n, j):
                raise InvalidDiagramError(f"no pipe enters at column {j}")
        for i in range(1, n + 1):
            if "W" in self._edges(i, 1):
                raise InvalidDiagramError(f"segment exits the left at row {i}")
            if "E" not in self._edges(i, n):
                raise InvalidDiagramError(f"no pipe leaves at row {i}")
        # Interior edge matching.
        for i in range(1, n + 1):
            for j in range(1, n):
                if ("E" in self._edges(i, j)) != ("W" in self._edges(i, j + 1)):
                    raise InvalidDiagramError(
                        f"mismatched edge between {(i, j)} and {(i, j + 1)}"
                    )
        for i in range(1, n):
            for j in range(1, n + 1):
                if ("S" in self._edges(i, j)) != ("N" in self._edges(i + 1, j)):
                    raise InvalidDiagramError(
                        f"mismatched edge between {(i, j)} and {(i + 1, j)}"
                    )
        exit_rows: dict[int, int] = {}
        paths: dict[int, list[tuple[int, int, str]]] = {}
        strand: dict[tuple[int, int, str], int] = {}
        for k in range(1, n + 1):
            i, j = n, k
            entering = "S"
            path = []
            for _ in range(2 * n * n + 2):
                t = self.tile(i, j)
                seg = self._segment_from(t, entering, (i, j))
                path.append((i, j, seg))
                strand[(i, j, seg)] = k
                # Leave through the segment's other edge.
                out = next(e for e in _EDGES[seg] if e != entering)
                if out == "N":
                    i -= 1
                    entering = "S"
                elif out == "E":
                    j += 1
                    entering = "W"
                else:  # pragma: no cover
                    raise AssertionError("pipe moved south or west")
                if i < 1:
                    raise InvalidDiagramError(
                        f"pipe {k} escaped through the top"
                    )
                if j > n:
                    exit_rows[k] = i
                    break
            else:  # pragma: no cover
                raise AssertionError("pipe trace did not terminate")
            paths[k] = path
        if len(set(exit_rows.values())) != n:
            raise InvalidDiagramError("two pipes exit through the same row")
        # Every segment of the grid must lie on some pipe.
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for seg in _SEGMENTS[self.tile(i, j)]:
                    if (i, j, seg) not in strand:
                        raise InvalidDiagramError(
                            f"untraced {seg} segment at {(i, j)}"
                        )
        pair_crossings: dict[frozenset[int], list[tuple[int, int]]] = {}
        for i, j in self.cross_positions():
            pair = frozenset({strand[(i, j, "NS")], strand[(i, j, "EW")]})
            pair_crossings.setdefault(pair, []).append((i, j))
        return BpdTrace(
            n,
            exit_rows,
            paths,
            strand,
            {p: tuple(sorted(v)) for p, v in pair_crossings.items()},
        )

    def _segment_from(self, tile: str, entering: str, pos) -> str:
        for seg in _SEGMENTS[tile]:
            if entering in _EDGES[seg]:
                return seg
        raise InvalidDiagramError(
            f"pipe meets tile {tile!r} at {pos} with no {entering} edge"
        )

    def validate(self, allow_bump: bool = False) -> Permutation:
        """Check well-formedness and return the permutation of the diagram.

        Requires no pair of pipes to cross more than once; bump tiles are
        rejected unless allow_bump is set.
        """
        trace = self.trace(allow_bump=allow_bump)
        for pair, positions in trace.pair_crossings.items():
            if len(positions) > 1:
                raise InvalidDiagramError(
                    f"pipes {sorted(pair)} cross twice at {positions}"
                )
        pi = trace.traced_perm()
        if not allow_bump:
            count = len(self.blanks())
            if count != pi.length():
                raise InvalidDiagramError(
                    f"{count} blanks but permutation length {pi.length()}"
                )
        return pi

    def perm(self) -> Permutation:
        return self.validate()

    def droop(self, corner: tuple[int, int], dest: tuple[int, int]) -> "BumplessPipeDream":
        """Move the turn at corner to the blank dest strictly southeast of it.

        The rectangle they span may contain no other turn of the moving pipe;
        violations surface as MoveError.
        """
        (a, b), (c, d) = corner, dest
        if not (c > a and d > b):
            raise MoveError("destination must be strictly southeast of corner")
        if self.tile(a, b) != "r":
            raise MoveError(f"no turn to droop at {(a, b)}")
        if self.tile(c, d) != ".":
            raise MoveError(f"destination {(c, d)} is not blank")
        ed = _Editor(self.rows)
        ed.remove(a, b, "SE")
        for t in range(a + 1, c):
            ed.remove(t, b, "NS")
        ed.remove(c, b, "NS")
        ed.add(c, b, "SE")
        for j in range(b + 1, d):
            ed.remove(a, j, "EW")
        ed.remove(a, d, "EW")
        ed.add(a, d, "SE")
        for j in range(b + 1, d):
            ed.add(c, j, "EW")
        for t in range(a + 1, c):
            ed.add(t, d, "NS")
        ed.add(c, d, "NW")
        result = BumplessPipeDream(ed.apply())
        try:
            new_pi = result.validate()
        except InvalidDiagramError as exc:
            raise MoveError(f"droop breaks the diagram: {exc}") from exc
        if new_pi != self.validate():
            raise MoveError("droop changed the permutation")
        return result

    def undroop(self, corner: tuple[int, int], dest: tuple[int, int]) -> "BumplessPipeDream":
        """Inverse of droop: corner is the 'j' tile, dest the blank northwest."""
        (c, d), (a, b) = corner, dest
        if not (c > a and d > b):
            raise MoveError("destination must be strictly northwest of corner")
        if self.tile(c, d) != "j":
            raise MoveError(f"no turn to undroop at {(c, d)}")
        if self.tile(a, b) != ".":
            raise MoveError(f"destination {(a, b)} is not blank")
        ed = _Editor(self.rows)
        ed.remove(c, d, "NW")
        for t in range(a + 1, c):
            ed.remove(t, d, "NS")
        for j in range(b + 1, d):
            ed.remove(c, j, "EW")
        ed.remove(c, b, "SE")
        ed.add(c, b, "NS")
        ed.remove(a, d, "SE")
        ed.add(a, d, "EW")
        for j in range(b + 1, d):
            ed.add(a, j, "EW")
        for t in range(a + 1, c):
            ed.add(t, b, "NS")
        ed.add(a, b, "SE")
        result = BumplessPipeDream(ed.apply())
        try:
            new_pi = result.validate()
        except InvalidDiagramError as exc:
            raise MoveError(f"undroop breaks the diagram: {exc}") from exc
        if new_pi != self.validate():
            raise MoveError("undroop changed the permutation")
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, BumplessPipeDream) and _trim_rows(
            self.rows
        ) == _trim_rows(other.rows)

    def __hash__(self) -> int:
        return hash(_trim_rows(self.rows))

    def __repr__(self) -> str:
        return f"BumplessPipeDream({list(self.rows)!r})"

    def to_json(self) -> dict:
        return {
            "model": "bpd",
            "n": self.n,
            "tiles": [list(row) for row in self.rows],
        }

    @classmethod
    def from_json(cls, data: dict) -> "BumplessPipeDream":
        if data.get("model") != "bpd":
            raise ValueError("not a bumpless pipe dream payload")
        tiles = data["tiles"]
        if len(tiles) != data.get("n", len(tiles)):
            raise ValueError("tile grid does not match declared size")
        return cls("".join(row) for row in tiles)


class PopResult:
    """Outcome of one pop step on a bumpless diagram.

    a and r satisfy perm(result) = s_a * perm(input), the weight drops by
    x_r, and footprints lists the southeast corner of every non-terminal
    rectangle the marked blank moved through.
    """

    __slots__ = ("a", "r", "result", "footprints")

    def __init__(self, a, r, result, footprints):
        self.a = a
        self.r = r
        self.result = result
        self.footprints = footprints

    def __repr__(self) -> str:
        return (
            f"PopResult(a={self.a}, r={self.r}, result={self.result!r}, "
            f"footprints={self.footprints!r})"
        )


def bpd_pop(diagram: BumplessPipeDream) -> PopResult:
    """One step of the column-move cascade that removes the top blank.

    The marked blank starts as the rightmost blank of the topmost row that
    has one and slides east through column moves until the two pipes around
    it are forced to uncross; that crossing position yields the letter a.
    """
    pi = diagram.validate()
    if pi.is_identity():
        raise EmptyDiagramError("cannot pop the identity diagram")
    blanks = diagram.blanks()
    r = min(i for i, _ in blanks)
    x = r
    y = max(j for i, j in blanks if i == r)
    a = None
    footprints: list[tuple[int, int]] = []
    cur = diagram
    for _ in range(2 * cur.n * cur.n + 2):
        n = cur.n
        # Slide east to the end of the contiguous blank block.
        while y + 1 <= n and cur.tile(x, y + 1) == ".":
            y += 1
        assert y + 1 <= n, "blank block touched the east border"
        neighbor = cur.tile(x, y + 1)
        assert neighbor in ("|", "r"), (
            f"unexpected tile {neighbor!r} east of the marked blank"
        )
        # Scan down column y+1 for the end of the neighboring pipe's run.
        x2 = None
        t = x + 1
        while t <= n and "NS" in _SEGMENTS[cur.tile(t, y + 1)]:
            t += 1
        if t <= n and cur.tile(t, y + 1) in ("j",):
            x2 = t
            terminal = False
        else:
            assert t == n + 1, (
                f"column scan stopped at {(t, y + 1)} on {cur.tile(t, y + 1)!r}"
            )
            terminal = True
            trace = cur.trace()
            positions = trace.pair_crossings.get(frozenset({y, y + 1}), ())
            assert len(positions) == 1, (
                f"pipes {y} and {y + 1} cross at {positions}"
            )
            x2 = positions[0][0]
            assert positions[0][1] == y + 1 and x2 > x
        ed = _Editor(cur.rows)
        # Kinks: pipes crossing from column y into column y+1 inside the
        # rectangle get pushed one column east.
        for z in range(x + 1, x2):
            if "SE" in _SEGMENTS[cur.tile(z, y)] and "EW" in _SEGMENTS[
                cur.tile(z, y + 1)
            ]:
                z2 = z + 1
                while "NS" in _SEGMENTS[cur.tile(z2, y)]:
                    z2 += 1
                assert "NW" in _SEGMENTS[cur.tile(z2, y)] and z2 < x2
                ed.remove(z, y, "SE")
                ed.remove(z, y + 1, "EW")
                ed.add(z, y + 1, "SE")
                for t2 in range(z + 1, z2):
                    ed.remove(t2, y, "NS")
                    ed.add(t2, y + 1, "NS")
                ed.remove(z2, y, "NW")
                ed.add(z2, y, "EW")
                ed.add(z2, y + 1, "NW")
        # The neighboring pipe's vertical run moves one column west.
        for t2 in range(x + 1, x2):
            if "NS" in _SEGMENTS[cur.tile(t2, y + 1)]:
                ed.remove(t2, y + 1, "NS")
                ed.add(t2, y, "NS")
        if "SE" in _SEGMENTS[neighbor]:
            ed.remove(x, y + 1, "SE")
            ed.add(x, y + 1, "EW")
        else:
            ed.remove(x, y + 1, "NS")
            ed.add(x, y + 1, "NW")
        ed.add(x, y, "SE")
        if terminal:
            ed.remove(x2, y + 1, "NS")
            ed.remove(x2, y + 1, "EW")
            ed.add(x2, y + 1, "SE")
            ed.remove(x2, y, "SE")
            ed.add(x2, y, "NS")
        else:
            ed.remove(x2, y + 1, "NW")
            bottom = cur.tile(x2, y)
            assert bottom in ("-", "r"), (
                f"unexpected tile {bottom!r} at the rectangle's far corner"
            )
            if bottom == "-":
                ed.remove(x2, y, "EW")
                ed.add(x2, y, "NW")
            else:
                ed.remove(x2, y, "SE")
                ed.add(x2, y, "NS")
        cur = BumplessPipeDream(ed.apply())
        if terminal:
            a = y
            break
        footprints.append((x2, y + 1))
        x, y = x2, y + 1
    else:  # pragma: no cover
        raise AssertionError("pop cascade did not terminate")
    result = cur.trim()
    out_pi = result.validate()
    assert out_pi == pi.left_s(a), "pop changed the permutation incorrectly"
    return PopResult(a, r, result, tuple(footprints))


def bpd_insert(diagram: BumplessPipeDream, a: int, r: int) -> Optional[BumplessPipeDream]:
    """Partial inverse of bpd_pop.

    Returns the diagram D with bpd_pop(D) = (a, r, diagram, ...) if one
    exists, and None otherwise.
    """
    if a < 1 or r < 1:
        raise ValueError("a and r must be positive")
    diagram.validate()
    grown = diagram.grow_to(max(diagram.n, a + 1))
    n = grown.n
    trace = grown.trace()
    if trace.pair_crossings.get(frozenset({a, a + 1})):
        return None
    def first_turn_row(pipe: int, col: int) -> Optional[int]:
        for i, j, seg in trace.paths[pipe]:
            if seg == "SE":
                assert j == col, f"pipe {pipe} turns outside column {col}"
                return i
        return None

    x = first_turn_row(a, a)
    x2 = first_turn_row(a + 1, a + 1)
    assert x is not None and x2 is not None, "pipe without a turn"
    if x >= x2:
        return None
    try:
        cur = _reverse_terminal(grown, a, x, x2)
    except MoveError:
        return None
    bx, by = x, a
    for _ in range(2 * n * n + 2):
        if bx == r:
            break
        if bx < r:
            return None
        while by - 1 >= 1 and cur.tile(bx, by - 1) == ".":
            by -= 1
        if by - 1 < 1:
            return None
        try:
            cur, bx, by = _reverse_column_move(cur, bx, by)
        except MoveError:
            return None
    else:  # pragma: no cover
        raise AssertionError("insert cascade did not terminate")
    try:
        cur.validate()
        check = bpd_pop(cur)
    except (InvalidDiagramError, EmptyDiagramError):
        return None
    if (check.a, check.r) == (a, r) and check.result == diagram:
        return cur.trim()
    return None


def _reverse_terminal(g: BumplessPipeDream, a: int, x: int, x2: int) -> BumplessPipeDream:
    """Recross pipes a and a+1 at (x2, a+1) and open a blank at (x, a)."""
    ed = _Editor(g.rows)
    for z in range(x + 1, x2):
        if "SE" in _SEGMENTS[g.tile(z, a + 1)] and "EW" not in _SEGMENTS[
            g.tile(z, a + 1)
        ]:
            _queue_reverse_kink(ed, g, z, a + 1)
    for t in range(x + 1, x2):
        if "NS" in _SEGMENTS[g.tile(t, a)]:
            ed.remove(t, a, "NS")
            ed.add(t, a + 1, "NS")
    top = g.tile(x, a + 1)
    if top == "-":
        ed.remove(x, a + 1, "EW")
        ed.add(x, a + 1, "SE")
    elif top == "j":
        ed.remove(x, a + 1, "NW")
        ed.add(x, a + 1, "NS")
    else:
        raise MoveError(f"unexpected tile {top!r} above the recrossing")
    if g.tile(x2, a + 1) != "r":
        raise MoveError("no turn to recross at the rectangle's corner")
    ed.remove(x2, a + 1, "SE")
    ed.add(x2, a + 1, "NS")
    ed.add(x2, a + 1, "EW")
    if g.tile(x2, a) != "|":
        raise MoveError("left edge of the recrossing is not vertical")
    ed.remove(x2, a, "NS")
    ed.add(x2, a, "SE")
    ed.remove(x, a, "SE")
    return BumplessPipeDream(ed.apply())


def _queue_reverse_kink(ed: _Editor, g: BumplessPipeDream, z: int, d: int) -> None:
    """Push a kink one column west, from column d back into column d-1."""
    z2 = z + 1
    while "NS" in _SEGMENTS[g.tile(z2, d)]:
        z2 += 1
    if "NW" not in _SEGMENTS[g.tile(z2, d)]:
        raise MoveError("kink has no terminating turn")
    ed.add(z, d - 1, "SE")
    ed.add(z, d, "EW")
    ed.remove(z, d, "SE")
    for t in range(z + 1, z2):
        ed.add(t, d - 1, "NS")
        ed.remove(t, d, "NS")
    ed.add(z2, d - 1, "NW")
    ed.remove(z2, d - 1, "EW")
    ed.remove(z2, d, "NW")


def _reverse_column_move(
    g: BumplessPipeDream, bx: int, by: int
) -> tuple[BumplessPipeDream, int, int]:
    """Undo one column move: the blank at (bx, by) came from (x0, by-1)."""
    d = by
    left = g.tile(bx, d - 1)
    if left not in ("j", "|"):
        raise MoveError(f"unexpected tile {left!r} west of the blank")
    x0 = bx - 1
    while x0 >= 1 and "NS" in _SEGMENTS[g.tile(x0, d - 1)]:
        x0 -= 1
    if x0 < 1 or g.tile(x0, d - 1) != "r":
        raise MoveError("no plain turn above the blank's column")
    top = g.tile(x0, d)
    if top not in ("-", "j"):
        raise MoveError(f"unexpected tile {top!r} northeast of the blank")
    ed = _Editor(g.rows)
    for z in range(x0 + 1, bx):
        if "SE" in _SEGMENTS[g.tile(z, d)] and "EW" not in _SEGMENTS[
            g.tile(z, d)
        ]:
            _queue_reverse_kink(ed, g, z, d)
    for t in range(x0 + 1, bx):
        if "NS" in _SEGMENTS[g.tile(t, d - 1)]:
            ed.remove(t, d - 1, "NS")
            ed.add(t, d, "NS")
    if top == "-":
        ed.remove(x0, d, "EW")
        ed.add(x0, d, "SE")
    else:
        ed.remove(x0, d, "NW")
        ed.add(x0, d, "NS")
    ed.add(bx, d, "NW")
    if left == "j":
        ed.remove(bx, d - 1, "NW")
        ed.add(bx, d - 1, "EW")
    else:
        ed.remove(bx, d - 1, "NS")
        ed.add(bx, d - 1, "SE")
    ed.remove(x0, d - 1, "SE")
    return BumplessPipeDream(ed.apply()), x0, d - 1


def iter_bpds(pi: Permutation) -> Iterator[BumplessPipeDream]:
    """Generate all bumpless pipe dreams of pi by closing Rothe under droops."""
    n = max(pi.size, 1)
    start = BumplessPipeDream.rothe(pi, n)
    seen = {start.rows}
    queue = [start]
    while queue:
        cur = queue.pop()
        yield cur
        corners = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(1, n + 1)
            if cur.tile(i, j) == "r"
        ]
        for corner in corners:
            for dest in cur.blanks():
                if dest[0] > corner[0] and dest[1] > corner[1]:
                    try:
                        nxt = cur.droop(corner, dest)
                    except MoveError:
                        continue
                    if nxt.rows not in seen:
                        seen.add(nxt.rows)
                        queue.append(nxt)


def enumerate_bpds(pi: Permutation) -> frozenset[BumplessPipeDream]:
    """All bumpless pipe dreams of pi.

    >>> len(enumerate_bpds(Permutation([3, 2, 1])))
    1
    """
    return frozenset(iter_bpds(pi))


if __name__ == "__main__":  # pragma: no cover
    import doctest

    doctest.testmod()
