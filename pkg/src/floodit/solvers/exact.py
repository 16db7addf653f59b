"""Exact solvers: IDA* for the anchored game, breadth-first for the free one."""
from __future__ import annotations

from ..board import (Board, FloodState, FreeState, MoveSequence, RegionGraph, Variant,
                     build_region_graph, iter_bits)
from ..bounds import distinct_colour_bound, eccentricity_bound
from .result import BudgetExceeded, NodeLimitExceeded, SolveResult

DEFAULT_FREE_BUDGET = 12


def anchored_lower_bound(s: FloodState) -> int:
    return max(distinct_colour_bound(s), eccentricity_bound(s))


def solve_exact_anchored(b: Board, budget: int | None = None, *, max_nodes: int | None = None,
                         graph: RegionGraph | None = None) -> SolveResult:
    """Minimum anchored flooding sequence by iterative-deepening A*.

    States are flooded-set bitmasks; only colours on the boundary are tried,
    so moves that absorb nothing never appear. Raises ``BudgetExceeded`` if
    the optimum exceeds ``budget`` and ``NodeLimitExceeded`` once more than
    ``max_nodes`` positions have been expanded.
    """
    g = graph or build_region_graph(b)
    start = FloodState.initial(g)
    if start.is_flooded():
        return SolveResult(0, MoveSequence(), True)

    h_cache: dict[int, int] = {}
    colour_masks = g.colour_masks
    sizes = g.sizes
    nodes = 0

    def h(s: FloodState) -> int:
        v = h_cache.get(s.flooded)
        if v is None:
            v = anchored_lower_bound(s)
            h_cache[s.flooded] = v
        return v

    path: list[int] = []

    def search(s: FloodState, depth: int, bound: int, seen: dict[int, int]) -> int:
        # returns -1 on success, otherwise the smallest f-value that overflowed
        nonlocal nodes
        f = depth + h(s)
        if f > bound:
            return f
        if s.flooded == g.full_mask:
            return -1
        prev = seen.get(s.flooded)
        if prev is not None and prev <= depth:
            return bound + 1
        seen[s.flooded] = depth
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise NodeLimitExceeded(f"exceeded {max_nodes} search nodes", budget)
        options = []
        for k, mask in colour_masks.items():
            absorbed = s.boundary & mask
            if absorbed:
                options.append((-sum(sizes[r] for r in iter_bits(absorbed)), k))
        options.sort()
        best = 1 << 60
        for _, k in options:
            path.append(k)
            t = search(s.play(k), depth + 1, bound, seen)
            if t < 0:
                return -1
            path.pop()
            best = min(best, t)
        return best

    bound = h(start)
    while True:
        if budget is not None and bound > budget:
            raise BudgetExceeded(f"m(B) exceeds budget {budget}", budget)
        t = search(start, 0, bound, {})
        if t < 0:
            return SolveResult(len(path), MoveSequence.anchored(path), True)
        bound = t


def solve_exact_free(b: Board, budget: int = DEFAULT_FREE_BUDGET, *, max_states: int | None = 2_000_000,
                     graph: RegionGraph | None = None) -> SolveResult:
    """Minimum free-variant flooding sequence by breadth-first search.

    A position is the tuple of current colours of the original regions,
    which identifies it exactly. Every (component, new colour) pair is tried
    except recolouring a component to its own colour.
    """
    g = graph or build_region_graph(b)
    start = FreeState.initial(g)
    if start.is_flooded():
        return SolveResult(0, MoveSequence((), Variant.FREE), True, Variant.FREE)
    c = b.c
    parent: dict[tuple[int, ...], tuple[tuple[int, ...], int, int] | None] = {start.colours: None}
    frontier = [start]
    for depth in range(1, budget + 1):
        nxt = []
        for s in frontier:
            for comp in s.components():
                rep = comp[0]
                own = s.colours[rep]
                for k in range(1, c + 1):
                    if k == own:
                        continue
                    colours = list(s.colours)
                    for r in comp:
                        colours[r] = k
                    key = tuple(colours)
                    if key in parent:
                        continue
                    parent[key] = (s.colours, rep, k)
                    child = FreeState(g, key, depth)
                    if child.is_flooded():
                        return _free_result(g, parent, key)
                    nxt.append(child)
            if max_states is not None and len(parent) > max_states:
                raise NodeLimitExceeded(f"exceeded {max_states} free-variant states", budget)
        frontier = nxt
        if not frontier:
            break
    raise BudgetExceeded(f"free optimum exceeds budget {budget}", budget)


def _free_result(g: RegionGraph, parent, key) -> SolveResult:
    steps = []
    while parent[key] is not None:
        prev, rep, k = parent[key]
        steps.append((g.regions[rep].tiles[0], k))
        key = prev
    steps.reverse()
    return SolveResult(len(steps), MoveSequence.free(steps), True, Variant.FREE)
