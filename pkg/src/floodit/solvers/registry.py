"""Strategy names as used on the command line and in experiment configs."""
from __future__ import annotations

from ..board import Board, RegionGraph, build_region_graph
from .exact import DEFAULT_FREE_BUDGET, solve_exact_anchored, solve_exact_free
from .heuristic import approx_cyclic, approx_shuffle, greedy_max_gain, greedy_perimeter
from .result import SolveResult
from .special import solve_free_two_colors, solve_height2
from .structured import flood_by_sections, flood_row_by_row

STRATEGIES = ("exact", "exact-free", "greedy-gain", "greedy-perim", "cyclic", "shuffle",
              "rows", "sections", "height2", "free2")

_SEQUENCE_STRATEGIES = {
    "greedy-gain": greedy_max_gain,
    "greedy-perim": greedy_perimeter,
    "cyclic": approx_cyclic,
    "rows": flood_row_by_row,
    "sections": flood_by_sections,
}


def run_strategy(name: str, b: Board, *, seed: int = 0, budget: int | None = None,
                 max_nodes: int | None = None, graph: RegionGraph | None = None) -> SolveResult:
    """Run strategy ``name`` on ``b``.

    Raises ``KeyError`` for unknown names, ``ValueError`` when the board does
    not fit the strategy and ``BudgetExceeded`` from the exact searches.
    """
    if name not in STRATEGIES:
        raise KeyError(f"unknown strategy {name!r}; choose from {', '.join(STRATEGIES)}")
    g = graph or build_region_graph(b)
    if name == "exact":
        return solve_exact_anchored(b, budget, max_nodes=max_nodes, graph=g)
    if name == "exact-free":
        return solve_exact_free(b, DEFAULT_FREE_BUDGET if budget is None else budget,
                                max_states=max_nodes or 2_000_000, graph=g)
    if name == "height2":
        return solve_height2(b, graph=g)
    if name == "free2":
        return solve_free_two_colors(b, graph=g)
    if name == "shuffle":
        return SolveResult.heuristic(approx_shuffle(b, seed, graph=g))
    return SolveResult.heuristic(_SEQUENCE_STRATEGIES[name](b, graph=g))
