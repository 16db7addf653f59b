"""Greedy and approximation strategies for the anchored game."""
from __future__ import annotations

import numpy as np

from ..board import Board, FloodState, MoveSequence, RegionGraph, build_region_graph, iter_bits


def _greedy(b: Board, score, graph: RegionGraph | None = None) -> MoveSequence:
    g = graph or build_region_graph(b)
    s = FloodState.initial(g)
    colours: list[int] = []
    while not s.is_flooded():
        scores = score(s)
        # max score, smallest colour id on ties
        k = min(scores, key=lambda col: (-scores[col], col))
        colours.append(k)
        s = s.play(k)
    return MoveSequence.anchored(colours)


def _gain_scores(s: FloodState) -> dict[int, int]:
    g = s.graph
    sizes = g.sizes
    scores: dict[int, int] = {}
    for r in iter_bits(s.boundary):
        k = g.regions[r].colour
        scores[k] = scores.get(k, 0) + sizes[r]
    return scores


def _perimeter_scores(s: FloodState) -> dict[int, int]:
    g = s.graph
    b = g.board
    flooded = s.flooded
    labels = g.labels
    scores: dict[int, int] = {}
    for r in iter_bits(s.boundary):
        reg = g.regions[r]
        count = 0
        for t in reg.tiles:
            for i, j in b.neighbours(t):
                if flooded >> labels[i - 1][j - 1] & 1:
                    count += 1
                    break
        scores[reg.colour] = scores.get(reg.colour, 0) + count
    return scores


def greedy_max_gain(b: Board, graph: RegionGraph | None = None) -> MoveSequence:
    """Always play the colour that acquires the most tiles."""
    return _greedy(b, _gain_scores, graph)


def greedy_perimeter(b: Board, graph: RegionGraph | None = None) -> MoveSequence:
    """Always play the colour most common among unflooded tiles touching the flood."""
    return _greedy(b, _perimeter_scores, graph)


def _board_colours(s: FloodState) -> set[int]:
    g = s.graph
    unflooded = g.full_mask & ~s.flooded
    present = {k for k, mask in g.colour_masks.items() if mask & unflooded}
    present.add(s.colour)
    return present


def approx_cyclic(b: Board, graph: RegionGraph | None = None) -> MoveSequence:
    """The (c-1)-approximation: 1..c, then (c-1)..1 and 2..c alternately.

    As soon as only two colours remain on the board the strategy switches to
    alternating them. Cycle moves that absorb nothing are still emitted.
    """
    c = b.c
    if c < 2:
        if len(b.colours_present()) == 1:
            return MoveSequence()
        raise ValueError("cyclic strategy needs c >= 2")
    g = graph or build_region_graph(b)
    s = FloodState.initial(g)
    down = list(range(c - 1, 0, -1))
    up = list(range(2, c + 1))

    def cycle_colours():
        yield from range(1, c + 1)
        while True:
            yield from down
            yield from up

    colours: list[int] = []
    schedule = cycle_colours()
    while not s.is_flooded():
        present = _board_colours(s)
        if len(present) == 2:
            (k,) = present - {s.colour}
        else:
            k = next(schedule)
        colours.append(k)
        s = s.play(k)
    return MoveSequence.anchored(colours)


def approx_shuffle(b: Board, seed: int, graph: RegionGraph | None = None) -> MoveSequence:
    """Play random permutations of 1..c, stopping as soon as the board floods.

    Randomness comes from numpy's PCG64 generator seeded with ``seed``.
    """
    g = graph or build_region_graph(b)
    s = FloodState.initial(g)
    if s.is_flooded():
        return MoveSequence()
    if b.c < 2:
        raise ValueError("shuffle strategy needs c >= 2")
    rng = np.random.Generator(np.random.PCG64(seed))
    colours: list[int] = []
    while True:
        for k in rng.permutation(b.c) + 1:
            k = int(k)
            colours.append(k)
            s = s.play(k)
            if s.is_flooded():
                return MoveSequence.anchored(colours)
