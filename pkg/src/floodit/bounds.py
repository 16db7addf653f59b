"""Lower bounds on m(B), path counting and the analytic estimates."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .board import Board, FloodState, Tile

HALF_LN7 = 0.5 * math.log(7)


@dataclass(frozen=True)
class PathCostResult:
    cost: int
    path: tuple[Tile, ...]


def path_cost(b: Board, path) -> int:
    """Number of monochromatic runs along ``path`` minus one."""
    return sum(1 for t, u in zip(path, path[1:]) if b[t] != b[u])


def path_cost_lower_bound(b: Board, start: Tile = (1, 1), end: Tile | None = None) -> PathCostResult:
    """Cheapest path from ``start`` to the opposite corner, 0/1 BFS over tiles.

    A step between equal colours is free, a colour change costs one. The
    minimum never exceeds m(B) because some non-touching path achieves at
    most m(B), and the minimum here ranges over all simple paths.
    """
    end = end or (b.h, b.n)
    INF = math.inf
    dist = {start: 0}
    parent: dict[Tile, Tile | None] = {start: None}
    dq = deque([start])
    done = set()
    while dq:
        t = dq.popleft()
        if t in done:
            continue
        done.add(t)
        if t == end:
            break
        dt = dist[t]
        kt = b[t]
        for u in b.neighbours(t):
            w = 0 if b[u] == kt else 1
            if dt + w < dist.get(u, INF):
                dist[u] = dt + w
                parent[u] = t
                if w:
                    dq.append(u)
                else:
                    dq.appendleft(u)
    path = []
    t: Tile | None = end
    while t is not None:
        path.append(t)
        t = parent[t]
    path.reverse()
    return PathCostResult(dist[end], tuple(path))


def distinct_colour_bound(s: FloodState) -> int:
    """Distinct colours still present outside the flooded set.

    Every such colour has to be played at least once.
    """
    g = s.graph
    unflooded = g.full_mask & ~s.flooded
    return sum(1 for mask in g.colour_masks.values() if mask & unflooded)


def eccentricity_bound(s: FloodState) -> int:
    """Region-graph distance from the flooded set to its farthest region."""
    if s.is_flooded():
        return 0
    return max(s.graph.distances_from(s.flooded))


_STEPS = ((-1, 0), (1, 0), (0, -1), (0, 1))


def count_non_touching_paths(length: int, shape: tuple[int, int] | None = None,
                             start: Tile | None = None) -> int:
    """Count non-touching paths with ``length`` steps leaving ``start``.

    Non-touching here means no two path tiles are grid-adjacent unless they
    are consecutive on the path. With ``shape=None`` the lattice is
    unbounded; otherwise ``start`` must sit at least ``length`` tiles from
    every edge so the count is not clipped.
    """
    if length < 0:
        raise ValueError("length must be non-negative")
    if shape is not None:
        h, n = shape
        if start is None:
            start = ((h + 1) // 2, (n + 1) // 2)
        i, j = start
        margin = min(i - 1, h - i, j - 1, n - j)
        if margin < length:
            raise ValueError(f"start {start} has margin {margin} < path length {length}")
    on_path = {(0, 0)}

    def extend(tip, prev, remaining):
        if remaining == 0:
            return 1
        total = 0
        for di, dj in _STEPS:
            nxt = (tip[0] + di, tip[1] + dj)
            if nxt in on_path:
                continue
            ok = True
            for ei, ej in _STEPS:
                adj = (nxt[0] + ei, nxt[1] + ej)
                if adj != tip and adj in on_path:
                    ok = False
                    break
            if not ok:
                continue
            on_path.add(nxt)
            total += extend(nxt, tip, remaining - 1)
            on_path.discard(nxt)
        return total

    return extend((0, 0), None, length)


def non_touching_ceiling(length: int) -> float:
    """The 4 * 7**((l - 1) / 2) ceiling on non-touching path counts."""
    return 4 * 7 ** ((length - 1) / 2)


def expected_shuffle_moves(c: int, m: int) -> Fraction:
    """Upper estimate T(m) on the expected length of the shuffle strategy.

    T(1) = c, T(2) = 3c/2 and T(m) = c + T(m-1)/2 + T(m-2)/2.
    """
    if c < 2 or m < 1:
        raise ValueError("need c >= 2 and m >= 1")
    t1, t2 = Fraction(c), Fraction(3 * c, 2)
    if m == 1:
        return t1
    for _ in range(m - 2):
        t1, t2 = t2, c + t2 / 2 + t1 / 2
    return t2


def kl_divergence(x: float, y: float) -> float:
    """Bernoulli KL divergence D(x || y), with 0 ln 0 taken as 0."""
    if not (0 <= x <= 1) or not (0 < y < 1):
        raise ValueError(f"invalid probabilities x={x}, y={y}")
    total = 0.0
    if x > 0:
        total += x * math.log(x / y)
    if x < 1:
        total += (1 - x) * math.log((1 - x) / (1 - y))
    return total


def _union_exponent(length: int, c: int, k: float) -> float:
    x = 1 - k / length
    p = 1 / c
    divergence = kl_divergence(x, p) if x > p else 0.0
    return HALF_LN7 - divergence


def random_board_tail_bound(n: int, c: int, k: float, max_len: int | None = None) -> float:
    """Truncated union bound on Pr[some corner-to-corner path costs <= k].

    Sums ``2 exp((ln7/2 - D(1 - k/l || 1/c)) l)`` for l from 2(n-1) to
    ``max_len`` (default 20(n-1)); the divergence is floored at zero once
    1 - k/l drops to 1/c. See ``random_board_tail_remainder`` for the part
    beyond ``max_len``.
    """
    if c < 3:
        raise ValueError("the union bound needs c >= 3")
    lo = 2 * (n - 1)
    if max_len is None:
        max_len = 20 * (n - 1)
    if max_len < lo:
        raise ValueError(f"max_len must be >= {lo}")
    if k < 0:
        raise ValueError("k must be non-negative")
    total = 0.0
    for length in range(max(lo, 1), max_len + 1):
        total += 2 * math.exp(_union_exponent(length, c, k) * length)
    return total


def random_board_tail_remainder(n: int, c: int, k: float, max_len: int | None = None) -> float:
    """Geometric bound on the terms past ``max_len``; inf if they do not decay.

    The exponent coefficient only decreases as the path length grows, so the
    coefficient at ``max_len + 1`` dominates every later term.
    """
    if max_len is None:
        max_len = 20 * (n - 1)
    a = _union_exponent(max_len + 1, c, k)
    if a >= 0:
        return math.inf
    return 2 * math.exp(a * (max_len + 1)) / (1 - math.exp(a))


def rows_bound(n: int, c: int) -> int:
    return c * (n - 1)


def sections_bound(n: int, c: int) -> float:
    return 2 * n + math.sqrt(2 * c) * n + c


def worst_case_floor(n: int, c: int) -> int:
    """ceil(sqrt(c - 1) n / 2 - c / 2), the guaranteed cost of the worst boards."""
    return math.ceil(math.sqrt(c - 1) * n / 2 - c / 2 - 1e-12)


def cyclic_bound(c: int, m: int) -> int:
    return c + (c - 1) * (m - 2) + 1


__all__ = [
    "PathCostResult", "path_cost", "path_cost_lower_bound", "distinct_colour_bound",
    "eccentricity_bound", "count_non_touching_paths", "non_touching_ceiling",
    "expected_shuffle_moves", "kl_divergence", "random_board_tail_bound",
    "random_board_tail_remainder", "rows_bound", "sections_bound", "worst_case_floor",
    "cyclic_bound",
]
