"""Polynomial optimal solvers for two special cases: height-2 boards and
two-colour Free-Flood-It."""
from __future__ import annotations

from collections import deque

from ..board import (Board, FloodState, MoveSequence, RegionGraph, Tile, Variant,
                     build_region_graph, iter_bits)
from .result import SolveResult


def marked_tiles(b: Board) -> list[list[bool]]:
    """``marked[j][i-1]`` for column j: no column right of j has tile (i, j)'s colour."""
    marked = [[False, False] for _ in range(b.n + 1)]
    right: set[int] = set()
    for j in range(b.n, 0, -1):
        col = [b[1, j], b[2, j]]
        marked[j] = [k not in right for k in col]
        right.update(col)
    return marked


def _shortest_paths(s: FloodState) -> tuple[list[int], list[int]]:
    g = s.graph
    dist = [-1] * len(g)
    parent = [-1] * len(g)
    queue = deque()
    for r in iter_bits(s.flooded):
        dist[r] = 0
        queue.append(r)
    while queue:
        a = queue.popleft()
        for nb in sorted(g.adjacency[a]):
            if dist[nb] < 0:
                dist[nb] = dist[a] + 1
                parent[nb] = a
                queue.append(nb)
    return dist, parent


def _path_colours(s: FloodState, parent: list[int], target: int) -> list[int]:
    colours = []
    r = target
    while not s.flooded >> r & 1:
        colours.append(s.graph.colour(r))
        r = parent[r]
    colours.reverse()
    return colours


def solve_height2(b: Board, graph: RegionGraph | None = None) -> SolveResult:
    """Optimal anchored play on a 2 x n board via marked tiles.

    A tile is marked when its colour does not occur in any column to its
    right; flooding every marked tile floods the board. The leftmost column
    holding an unflooded marked tile is reached along a shortest flood path
    to the cheaper of its two tiles, following the case split below.
    """
    if b.h != 2:
        raise ValueError(f"height-2 solver needs h = 2, got h = {b.h}")
    g = graph or build_region_graph(b)
    s = FloodState.initial(g)
    marked = marked_tiles(b)
    colours: list[int] = []

    def play(seq):
        nonlocal s
        for k in seq:
            colours.append(k)
            s = s.play(k)

    def unflooded(t: Tile) -> bool:
        return not s.flooded >> g.label(t) & 1

    j = 1
    while not s.is_flooded():
        while j <= b.n and not any(marked[j][i - 1] and unflooded((i, j)) for i in (1, 2)):
            j += 1
        if j > b.n:
            break
        dist, parent = _shortest_paths(s)
        top, bottom = (1, j), (2, j)
        both_marked = marked[j][0] and marked[j][1]
        if not both_marked:
            t, t2 = (top, bottom) if marked[j][0] else (bottom, top)
            m, m2 = dist[g.label(t)], dist[g.label(t2)]
            if m <= m2:
                # case 1a
                play(_path_colours(s, parent, g.label(t)))
            else:
                # case 1b
                play(_path_colours(s, parent, g.label(t2)))
                if unflooded(t):
                    play([b[t]])
        else:
            # case 2: go to the nearer tile, then take the other one
            pending = [t for t in (top, bottom) if unflooded(t)]
            near = min(pending, key=lambda t: dist[g.label(t)])
            play(_path_colours(s, parent, g.label(near)))
            rest = [t for t in pending if unflooded(t)]
            if rest:
                play([b[rest[0]]])
    if not s.is_flooded():
        raise AssertionError("marked tiles flooded but board is not")
    return SolveResult(len(colours), MoveSequence.anchored(colours), True)


def solve_free_two_colors(b: Board, graph: RegionGraph | None = None) -> SolveResult:
    """Optimal two-colour Free-Flood-It: flood from the best single region.

    With two colours every move from a fixed region is forced, so the cost
    of anchoring at region r is its eccentricity in the region graph.
    """
    if b.c != 2:
        raise ValueError(f"two-colour free solver needs c = 2, got c = {b.c}")
    g = graph or build_region_graph(b)
    best, best_r = None, 0
    for r in range(len(g)):
        ecc = max(g.distances_from(1 << r))
        if best is None or ecc < best:
            best, best_r = ecc, r
    origin = g.regions[best_r].tiles[0]
    s = FloodState.initial(g, anchor=best_r)
    steps = []
    while not s.is_flooded():
        k = 3 - s.colour
        steps.append((origin, k))
        s = s.play(k)
    assert len(steps) == best
    return SolveResult(best, MoveSequence.free(steps), True, Variant.FREE)
