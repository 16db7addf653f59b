from .exact import DEFAULT_FREE_BUDGET, anchored_lower_bound, solve_exact_anchored, solve_exact_free
from .heuristic import approx_cyclic, approx_shuffle, greedy_max_gain, greedy_perimeter
from .result import CSV_FIELDS, BudgetExceeded, NodeLimitExceeded, SolveResult
from .special import marked_tiles, solve_free_two_colors, solve_height2
from .structured import flood_by_sections, flood_row_by_row, section_rows
from .registry import STRATEGIES, run_strategy

__all__ = [
    "DEFAULT_FREE_BUDGET", "anchored_lower_bound", "solve_exact_anchored", "solve_exact_free",
    "approx_cyclic", "approx_shuffle", "greedy_max_gain", "greedy_perimeter",
    "CSV_FIELDS", "BudgetExceeded", "NodeLimitExceeded", "SolveResult",
    "marked_tiles", "solve_free_two_colors", "solve_height2",
    "flood_by_sections", "flood_row_by_row", "section_rows",
    "STRATEGIES", "run_strategy",
]
