"""Board families: checkerboards, greedy traps, random and worst-case boards."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..board import Board
from .diamonds import DiamondSpec, audit_diamonds, embed_diamonds, filled


def gen_checkerboard(n: int, h: int | None = None) -> Board:
    h = n if h is None else h
    if n < 1 or h < 1:
        raise ValueError("checkerboard needs positive dimensions")
    return Board(tuple(tuple(1 + (i + j) % 2 for j in range(1, n + 1)) for i in range(1, h + 1)), 2)


def gen_greedy_adversarial(n: int) -> Board:
    """Three-colour n x n board on which both greedy strategies need n moves.

    Row 1 and row n span the board; rows 2..n-1 are stripes over columns
    2..n alternating colours 2 and 1, and column 1 of rows 2..n-1 is a solid
    bar of colour 3. Every stripe out-gains the bar, so greedy play takes the
    stripes one at a time; playing 3, 2, 1 floods the board in three moves.
    """
    if n < 10:
        raise ValueError("adversarial family is defined for n >= 10")
    rows = []
    for i in range(1, n + 1):
        stripe = 1 if i % 2 else 2
        if i in (1, n):
            rows.append([stripe] * n)
        else:
            rows.append([3] + [stripe] * (n - 1))
    return Board.from_rows(rows, 3)


def gen_random(n: int, c: int, seed: int, h: int | None = None) -> Board:
    """i.i.d. uniform colours drawn row-major from numpy's PCG64 stream."""
    h = n if h is None else h
    if c < 1:
        raise ValueError("need c >= 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    grid = rng.integers(1, c + 1, size=(h, n))
    return Board(tuple(tuple(int(k) for k in row) for row in grid), c)


@dataclass(frozen=True)
class WorstCaseLayout:
    n: int
    c: int
    r: int
    clamped: bool
    background: int
    diamonds: tuple[DiamondSpec, ...]

    @property
    def pairs(self) -> int:
        return self.c // 2

    def board(self) -> Board:
        return embed_diamonds(filled(self.n, self.n, self.background, self.c), self.diamonds, self.c)

    def guaranteed_moves(self) -> int:
        """r moves per distinct colour pair, since each pair needs its own moves."""
        return self.r * min(self.pairs, len(self.diamonds))

    def audit(self, b: Board | None = None) -> list[str]:
        b = b or self.board()
        problems = audit_diamonds(b, self.diamonds)
        if len(self.diamonds) < math.ceil(self.c / 2):
            problems.append(f"{len(self.diamonds)} diamonds < ceil(c/2) = {math.ceil(self.c / 2)}")
        for idx, d in enumerate(self.diamonds):
            if d.layer_of((1, 1)) is not None:
                problems.append(f"diamond {idx} covers the anchor tile")
        return problems


def packing_capacity(n: int, r: int) -> float:
    return (n * n - r * r) / (2 * r * r)


def _lattice_centres(n: int, r: int, oy: int, ox: int) -> list[tuple[int, int]]:
    # staggered lattice spanned by (r, r) and (0, 2r)
    out = []
    for a in range(-2, n // r + 3):
        y = oy + a * r
        if not 1 <= y <= n:
            continue
        x0 = ox + a * r
        for b in range(-(n // (2 * r)) - 3, n // (2 * r) + 3):
            x = x0 + 2 * r * b
            if 1 <= x <= n:
                out.append((y, x))
    return sorted(set(out))


def worst_case_radius(n: int, c: int) -> tuple[int, bool]:
    r = math.isqrt(n * n // c)
    clamped = False
    if 2 * r >= n:
        r = math.ceil(n / 2) - 1
        clamped = True
    return r, clamped


def worst_case_layout(n: int, c: int) -> WorstCaseLayout:
    """Pack good alternating r-diamonds D(1,2), D(3,4), ... with r = floor(n/sqrt c).

    Centres lie on a staggered lattice of pitch 2r across and r down, at the
    offset that fits the most diamonds while keeping tile (1,1) outside all
    of them. Pairs repeat once every pair has been placed. The background is
    colour c when c is odd, otherwise the colour of D(1,2) that is not on its
    outer layer, so the anchor never starts inside a diamond.
    """
    if c < 2 or c > n * n:
        raise ValueError("worst-case boards need 2 <= c <= n^2")
    r, clamped = worst_case_radius(n, c)
    if r < 1:
        raise ValueError(f"diamond radius r = {r} < 1 for n={n}, c={c}")
    best: list[tuple[int, int]] = []
    for oy in range(1, r + 1):
        for ox in range(1, 2 * r + 1):
            centres = _lattice_centres(n, r, oy, ox)
            if any(abs(y - 1) + abs(x - 1) < r for y, x in centres):
                continue
            if len(centres) > len(best):
                best = centres
    pairs = c // 2
    if len(best) < pairs:
        raise ValueError(f"only {len(best)} good {r}-diamonds fit, need {pairs}")
    diamonds = tuple(
        DiamondSpec.alternating(centre, r, 2 * (idx % pairs) + 1, 2 * (idx % pairs) + 2)
        for idx, centre in enumerate(best)
    )
    if c % 2:
        background = c
    else:
        background = 2 if r % 2 else 1
    return WorstCaseLayout(n, c, r, clamped, background, diamonds)


def gen_worst_case(n: int, c: int) -> Board:
    return worst_case_layout(n, c).board()
