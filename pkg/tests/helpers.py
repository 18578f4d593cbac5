"""Independent brute-force oracles for the test suite.

Everything here is deliberately written from scratch against the tile
definitions, without reusing the library's tracing, enumeration, or
polynomial code, so that agreement between the two is evidence rather
than tautology.  Only the plain data containers (tuples, dicts) are
shared with the library.
"""

from itertools import combinations

# Total number of n x n grids over the six bumpless tiles with closed
# north/west borders and fully used south/east borders.  These equal the
# alternating sign matrix numbers; used as a self-check on the brute
# enumerator.
GRID_TOTALS = {1: 1, 2: 2, 3: 7, 4: 42, 5: 429}


def staircase_cells(n):
    """Cells (i, j) with i + j <= n, the support of S_n pipe dreams."""
    return [(i, j) for i in range(1, n) for j in range(1, n - i + 1)]


def word_of(crosses):
    """Reading word of a cross set in grid order (rows top-down,
    each row right to left)."""
    ordered = sorted(crosses, key=lambda rc: (rc[0], -rc[1]))
    return tuple(r + c - 1 for r, c in ordered)


def apply_word(word, size):
    """Multiply out a word of adjacent swaps acting on positions.

    Returns (one_line, reduced): the resulting window permutation and
    whether every swap increased the inversion count.
    """
    w = list(range(1, size + 1))
    reduced = True
    for a in word:
        if w[a - 1] > w[a]:
            reduced = False
        w[a - 1], w[a] = w[a], w[a - 1]
    while len(w) > 1 and w[-1] == len(w):
        w.pop()
    if w == [1]:
        return (), reduced
    return tuple(w), reduced


def trim_word(one_line):
    w = list(one_line)
    while len(w) > 1 and w[-1] == len(w):
        w.pop()
    if w == [1]:
        return ()
    return tuple(w)


def brute_pipe_dreams(n):
    """All reduced cross subsets of the S_n staircase, grouped by the
    trimmed one-line word of their product."""
    cells = staircase_cells(n)
    grouped = {}
    for k in range(len(cells) + 1):
        for chosen in combinations(cells, k):
            word, reduced = apply_word(word_of(chosen), n)
            if not reduced:
                continue
            grouped.setdefault(trim_word(word), set()).add(frozenset(chosen))
    return grouped


# Tile edge usage as (N, E, S, W) bits.
_TILE_EDGES = {
    ".": (0, 0, 0, 0),
    "|": (1, 0, 1, 0),
    "-": (0, 1, 0, 1),
    "r": (0, 1, 1, 0),
    "j": (1, 0, 0, 1),
    "+": (1, 1, 1, 1),
}


def _row_fills(n, north):
    """All legal fillings of one grid row given its north edge profile."""
    results = []

    def go(j, west, row, south):
        if j == n:
            results.append(("".join(row), tuple(south)))
            return
        for tile, (tn, te, ts, tw) in _TILE_EDGES.items():
            if tn != north[j] or tw != west:
                continue
            if j == n - 1 and te != 1:
                continue
            go(j + 1, te, row + [tile], south + [ts])

    go(0, 0, [], [])
    return results


def brute_grids(n):
    """All legal n x n grids over the six tiles."""
    frontier = [((), (0,) * n)]
    for _ in range(n):
        nxt = []
        for rows, profile in frontier:
            for row, south in _row_fills(n, profile):
                nxt.append((rows + (row,), south))
        frontier = nxt
    grids = [rows for rows, south in frontier if all(south)]
    assert len(grids) == GRID_TOTALS[n], (n, len(grids))
    return grids


def trace_grid(rows):
    """Trace every pipe of a legal grid.

    Returns (exit_rows, pair_cells): the map entry column -> exit row,
    and for each pair of pipes the list of cross tiles they share.
    """
    n = len(rows)
    visitors = {}
    exit_rows = {}
    for c in range(1, n + 1):
        i, j, heading = n, c, "N"
        for _ in range(2 * n * n + 2):
            tile = rows[i - 1][j - 1]
            if heading == "N":
                assert tile in "|+r", (rows, i, j)
                if tile == "+":
                    visitors.setdefault((i, j), []).append(c)
                if tile == "r":
                    heading = "E"
                    j += 1
                else:
                    i -= 1
            else:
                assert tile in "-+j", (rows, i, j)
                if tile == "+":
                    visitors.setdefault((i, j), []).append(c)
                if tile == "j":
                    heading = "N"
                    i -= 1
                else:
                    j += 1
            if j > n:
                exit_rows[c] = i
                break
            assert i >= 1
        else:
            raise AssertionError("pipe walk did not terminate")
    pair_cells = {}
    for cell, who in visitors.items():
        assert len(who) == 2, (rows, cell, who)
        pair_cells.setdefault(frozenset(who), []).append(cell)
    return exit_rows, pair_cells


def trim_grid(rows):
    """Strip trailing identity rows and columns."""
    rows = list(rows)
    n = len(rows)
    while n > 1:
        last_row = rows[n - 1]
        last_col = "".join(r[n - 1] for r in rows)
        if last_row == "|" * (n - 1) + "r" and last_col == "-" * (n - 1) + "r":
            rows = [r[: n - 1] for r in rows[: n - 1]]
            n -= 1
        else:
            break
    return tuple(rows)


def brute_bpds(n):
    """All reduced legal grids, grouped by trimmed one-line word,
    stored as trimmed row tuples."""
    grouped = {}
    for rows in brute_grids(n):
        exit_rows, pair_cells = trace_grid(rows)
        if any(len(cells) > 1 for cells in pair_cells.values()):
            continue
        one_line = tuple(
            next(c for c in exit_rows if exit_rows[c] == i)
            for i in range(1, n + 1)
        )
        grouped.setdefault(trim_word(one_line), set()).add(trim_grid(rows))
    return grouped


# Schubert polynomials of S_3, exponent tuple -> coefficient.
S3_SCHUBERT = {
    (1, 2, 3): {(): 1},
    (1, 3, 2): {(1,): 1, (0, 1): 1},
    (2, 1, 3): {(1,): 1},
    (2, 3, 1): {(1, 1): 1},
    (3, 1, 2): {(2,): 1},
    (3, 2, 1): {(2, 1): 1},
}
