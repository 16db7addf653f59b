"""Reference implementations that share no code with the package.

Each works directly on lists of colour rows (0-indexed internally) so a bug
in the region graph, the bitmask states or the DP cannot hide itself.
"""
from __future__ import annotations

import itertools
from collections import deque
from fractions import Fraction


def neighbours(h, n, i, j):
    for di, dj in ((-1, 0), (1, 0), (0, -1), (0, 1)):
        a, b = i + di, j + dj
        if 0 <= a < h and 0 <= b < n:
            yield a, b


def component(grid, i, j):
    """Tiles of the monochromatic component containing (i, j)."""
    h, n = len(grid), len(grid[0])
    k = grid[i][j]
    seen = {(i, j)}
    todo = [(i, j)]
    while todo:
        t = todo.pop()
        for u in neighbours(h, n, *t):
            if u not in seen and grid[u[0]][u[1]] == k:
                seen.add(u)
                todo.append(u)
    return seen


def flood(grid, colour, i=0, j=0):
    """Recolour the component of (i, j); returns a new grid (tuple of tuples)."""
    rows = [list(r) for r in grid]
    for a, b in component(grid, i, j):
        rows[a][b] = colour
    return tuple(tuple(r) for r in rows)


def monochrome(grid):
    return len({k for row in grid for k in row}) == 1


def bfs_min_moves(grid, c, limit=None):
    """Minimum anchored moves by plain BFS over whole-grid states."""
    grid = tuple(tuple(r) for r in grid)
    if monochrome(grid):
        return 0
    seen = {grid}
    frontier = [grid]
    depth = 0
    while frontier:
        depth += 1
        if limit is not None and depth > limit:
            return None
        nxt = []
        for g in frontier:
            for k in range(1, c + 1):
                if k == g[0][0]:
                    continue
                child = flood(g, k)
                if child in seen:
                    continue
                if monochrome(child):
                    return depth
                seen.add(child)
                nxt.append(child)
        frontier = nxt
    return None


def bfs_min_free_moves(grid, c, limit=12):
    """Minimum free-variant moves: any tile's component may be recoloured."""
    grid = tuple(tuple(r) for r in grid)
    if monochrome(grid):
        return 0
    h, n = len(grid), len(grid[0])
    seen = {grid}
    frontier = [grid]
    for depth in range(1, limit + 1):
        nxt = []
        for g in frontier:
            done = set()
            for i in range(h):
                for j in range(n):
                    if (i, j) in done:
                        continue
                    comp = component(g, i, j)
                    done |= comp
                    for k in range(1, c + 1):
                        if k == g[i][j]:
                            continue
                        rows = [list(r) for r in g]
                        for a, b in comp:
                            rows[a][b] = k
                        child = tuple(tuple(r) for r in rows)
                        if child in seen:
                            continue
                        if monochrome(child):
                            return depth
                        seen.add(child)
                        nxt.append(child)
        frontier = nxt
    return None


def replay(grid, colours):
    g = tuple(tuple(r) for r in grid)
    for k in colours:
        g = flood(g, k)
    return g


class Regions:
    """Region labelling and adjacency built from scratch by BFS."""

    def __init__(self, grid):
        h, n = len(grid), len(grid[0])
        self.label = {}
        self.colour = []
        for i in range(h):
            for j in range(n):
                if (i, j) in self.label:
                    continue
                rid = len(self.colour)
                self.colour.append(grid[i][j])
                for t in component(grid, i, j):
                    self.label[t] = rid
        self.adj = [set() for _ in self.colour]
        for (i, j), r in self.label.items():
            for u in neighbours(h, n, i, j):
                s = self.label[u]
                if s != r:
                    self.adj[r].add(s)
        self.anchor = self.label[(0, 0)]

    def play(self, flooded: frozenset, colour: int) -> frozenset:
        grown = set(flooded)
        for r in flooded:
            for s in self.adj[r]:
                if s not in grown and self.colour[s] == colour:
                    grown.add(s)
        return frozenset(grown)


def floods_within(grid, c, depth):
    """Exhaustive depth-limited anchored search over region sets.

    Returns a flooding colour sequence of at most ``depth`` moves, or None.
    """
    reg = Regions(grid)
    total = len(reg.colour)
    start = frozenset({reg.anchor})
    if total == 1:
        return []
    best = {}

    def go(flooded, current, left, seq):
        if len(flooded) == total:
            return list(seq)
        if left == 0 or best.get(flooded, -1) >= left:
            return None
        best[flooded] = left
        for k in range(1, c + 1):
            if k == current:
                continue
            nxt = reg.play(flooded, k)
            if nxt == flooded:
                continue
            seq.append(k)
            got = go(nxt, k, left - 1, seq)
            seq.pop()
            if got is not None:
                return got
        return None

    return go(start, reg.colour[reg.anchor], depth, [])


def brute_scs(strings, alphabet):
    """Shortest common supersequence length by enumerating candidate strings."""
    strings = [tuple(s) for s in strings if s]
    if not strings:
        return 0

    def contains(sup, t):
        it = iter(sup)
        return all(ch in it for ch in t)

    for length in itertools.count(max(len(s) for s in strings)):
        for cand in itertools.product(range(1, alphabet + 1), repeat=length):
            if all(contains(cand, s) for s in strings):
                return length


def shuffle_expectation_closed_form(c, m):
    """T(m) = (2c/3) m + 2c/9 - (2c/9)(-1/2)^m, solving the recurrence by hand."""
    c = Fraction(c)
    return 2 * c / 3 * m + 2 * c / 9 - 2 * c / 9 * Fraction(-1, 2) ** m


def non_touching_walks(length):
    """Count walks with ``length`` steps from the origin, by filtering all 4^length walks.

    A walk qualifies when its tiles are distinct and two tiles are grid
    neighbours only if they are consecutive on the walk.
    """
    steps = ((-1, 0), (1, 0), (0, -1), (0, 1))
    count = 0
    for choice in itertools.product(range(4), repeat=length):
        tiles = [(0, 0)]
        for d in choice:
            di, dj = steps[d]
            tiles.append((tiles[-1][0] + di, tiles[-1][1] + dj))
        if len(set(tiles)) != len(tiles):
            continue
        index = {t: i for i, t in enumerate(tiles)}
        ok = True
        for i, (a, b) in enumerate(tiles):
            for di, dj in steps:
                j = index.get((a + di, b + dj))
                if j is not None and abs(i - j) != 1:
                    ok = False
                    break
            if not ok:
                break
        count += ok
    return count


def cheapest_path_cost(grid, start=(0, 0), end=None):
    """Dijkstra over tiles with unit cost per colour change."""
    import heapq
    h, n = len(grid), len(grid[0])
    end = end or (h - 1, n - 1)
    dist = {start: 0}
    heap = [(0, start)]
    while heap:
        d, t = heapq.heappop(heap)
        if t == end:
            return d
        if d > dist[t]:
            continue
        for u in neighbours(h, n, *t):
            w = d + (grid[u[0]][u[1]] != grid[t[0]][t[1]])
            if w < dist.get(u, 1 << 30):
                dist[u] = w
                heapq.heappush(heap, (w, u))
    return None
