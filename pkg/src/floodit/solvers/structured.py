"""Row-oriented upper-bound strategies for square (or rectangular) boards."""
from __future__ import annotations

import math

from ..board import Board, FloodState, MoveSequence, RegionGraph, build_region_graph


class _Player:
    def __init__(self, b: Board, graph: RegionGraph | None):
        self.board = b
        self.graph = graph or build_region_graph(b)
        self.state = FloodState.initial(self.graph)
        self.colours: list[int] = []

    def play(self, k: int):
        self.colours.append(k)
        self.state = self.state.play(k)

    def flooded(self, i: int, j: int) -> bool:
        return bool(self.state.flooded >> self.graph.labels[i - 1][j - 1] & 1)

    def flood_line(self, tiles):
        """Repeatedly play the colour of the first unflooded tile of ``tiles``."""
        for t in tiles:
            while not self.flooded(*t):
                self.play(self.board[t])

    def done(self) -> bool:
        return self.state.is_flooded()

    def result(self) -> MoveSequence:
        return MoveSequence.anchored(self.colours)


def flood_row_by_row(b: Board, graph: RegionGraph | None = None) -> MoveSequence:
    """Flood row 1, then row 2, ... each time playing its leftmost unflooded colour.

    Uses at most c(n-1) moves on an n x n board.
    """
    p = _Player(b, graph)
    for i in range(1, b.h + 1):
        if p.done():
            break
        p.flood_line((i, j) for j in range(1, b.n + 1))
    return p.result()


def section_rows(n: int, c: int) -> tuple[int, list[int]]:
    """Number of middle sections and the last row of each section S_0..S_{l-1}.

    The board splits into S_0 (ceil(q/2) rows), r sections of q+1 rows,
    l-1-r sections of q rows and S_l (floor(q/2) rows), with
    l = ceil(sqrt(c/2)), q = n // l and r = n % l.
    """
    ell = max(1, math.ceil(math.sqrt(c / 2)))
    q, r = divmod(n, ell)
    heights = [math.ceil(q / 2)] + [q + 1] * r + [q] * (ell - 1 - r)
    ends = []
    row = 0
    for height in heights:
        row += height
        ends.append(row)
    return ell, ends


def flood_by_sections(b: Board, graph: RegionGraph | None = None) -> MoveSequence:
    """Flood column 1, then the last row of each section, then cycle 1..c.

    Within 2n + sqrt(2c) n + c moves on an n x n board.
    """
    p = _Player(b, graph)
    if p.done():
        return p.result()
    p.flood_line((i, 1) for i in range(1, b.h + 1))
    _, ends = section_rows(b.h, b.c)
    for y in ends:
        if 1 <= y <= b.h and not p.done():
            p.flood_line((y, j) for j in range(1, b.n + 1))
    while not p.done():
        for k in range(1, b.c + 1):
            p.play(k)
            if p.done():
                break
    return p.result()
