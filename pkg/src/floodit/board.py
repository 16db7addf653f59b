"""Boards, region graphs and flooding semantics.

Coordinates are 1-indexed ``(row, col)`` pairs throughout. Tiles connect
left/right/up/down only.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

Tile = tuple[int, int]


class BoardError(ValueError):
    """Invalid board contents."""


class BoardParseError(BoardError):
    pass


class HeaderError(BoardParseError):
    pass


class DimensionError(BoardParseError):
    pass


class ColourRangeError(BoardParseError):
    pass


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Board:
    """An ``h x n`` grid of colour ids in ``1..c``."""

    grid: tuple[tuple[int, ...], ...]
    c: int

    def __post_init__(self):
        if not self.grid or not self.grid[0]:
            raise BoardError("board must have at least one tile")
        width = len(self.grid[0])
        if any(len(row) != width for row in self.grid):
            raise BoardError("ragged grid")
        if self.c < 1:
            raise BoardError(f"colour count must be >= 1, got {self.c}")
        for row in self.grid:
            for k in row:
                if not 1 <= k <= self.c:
                    raise ColourRangeError(f"colour {k} outside 1..{self.c}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], c: int | None = None) -> "Board":
        grid = tuple(tuple(int(k) for k in row) for row in rows)
        if c is None:
            c = max((max(row) for row in grid if row), default=1)
        return cls(grid, c)

    @property
    def h(self) -> int:
        return len(self.grid)

    @property
    def n(self) -> int:
        return len(self.grid[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.h, self.n

    def __getitem__(self, tile: Tile) -> int:
        i, j = tile
        if not (1 <= i <= self.h and 1 <= j <= self.n):
            raise IndexError(f"tile {tile} outside {self.h}x{self.n} board")
        return self.grid[i - 1][j - 1]

    def in_bounds(self, tile: Tile) -> bool:
        return 1 <= tile[0] <= self.h and 1 <= tile[1] <= self.n

    def tiles(self) -> Iterator[Tile]:
        for i in range(1, self.h + 1):
            for j in range(1, self.n + 1):
                yield i, j

    def neighbours(self, tile: Tile) -> Iterator[Tile]:
        i, j = tile
        if i > 1:
            yield i - 1, j
        if i < self.h:
            yield i + 1, j
        if j > 1:
            yield i, j - 1
        if j < self.n:
            yield i, j + 1

    def colours_present(self) -> set[int]:
        return {k for row in self.grid for k in row}

    def with_tiles(self, updates: dict[Tile, int], c: int | None = None) -> "Board":
        rows = [list(row) for row in self.grid]
        for (i, j), k in updates.items():
            rows[i - 1][j - 1] = k
        return Board.from_rows(rows, self.c if c is None else c)

    def serialize(self) -> str:
        return serialize_board(self)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(k) for k in row) for row in self.grid)


def serialize_board(b: Board) -> str:
    lines = [f"{b.h} {b.n} {b.c}"]
    lines += [" ".join(str(k) for k in row) for row in b.grid]
    return "\n".join(lines) + "\n"


def parse_board(text: str) -> Board:
    """Parse the ``h n c`` header format; see ``serialize_board``."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise HeaderError("empty board file")
    header = lines[0].split()
    if len(header) != 3 or not all(tok.isdigit() for tok in header):
        raise HeaderError(f"malformed header {lines[0]!r}")
    h, n, c = (int(tok) for tok in header)
    if h < 1 or n < 1 or c < 1:
        raise HeaderError(f"non-positive header values {lines[0]!r}")
    body = lines[1:]
    if len(body) != h:
        raise DimensionError(f"expected {h} rows, found {len(body)}")
    rows = []
    for r, line in enumerate(body, start=1):
        toks = line.split()
        if len(toks) != n:
            raise DimensionError(f"row {r}: expected {n} colours, found {len(toks)}")
        try:
            row = [int(tok) for tok in toks]
        except ValueError as exc:
            raise BoardParseError(f"row {r}: non-integer colour") from exc
        for k in row:
            if not 1 <= k <= c:
                raise ColourRangeError(f"row {r}: colour {k} exceeds declared c={c}")
        rows.append(row)
    return Board.from_rows(rows, c)


@dataclass(frozen=True)
class Region:
    id: int
    colour: int
    size: int
    tiles: tuple[Tile, ...]


@dataclass(frozen=True, eq=False)
class RegionGraph:
    """Maximal monochromatic components of a board and their adjacency.

    Region ids follow the row-major order of each region's first tile, so the
    region holding (1, 1) is always id 0.
    """

    board: Board
    regions: tuple[Region, ...]
    adjacency: tuple[frozenset[int], ...]
    labels: tuple[tuple[int, ...], ...]
    anchor: int = 0

    def __len__(self) -> int:
        return len(self.regions)

    def label(self, tile: Tile) -> int:
        return self.labels[tile[0] - 1][tile[1] - 1]

    def colour(self, region: int) -> int:
        return self.regions[region].colour

    @property
    def edges(self) -> set[tuple[int, int]]:
        return {(a, b) for a, nbrs in enumerate(self.adjacency) for b in nbrs if a < b}

    @cached_property
    def full_mask(self) -> int:
        return (1 << len(self.regions)) - 1

    @cached_property
    def neighbour_masks(self) -> tuple[int, ...]:
        masks = []
        for nbrs in self.adjacency:
            m = 0
            for b in nbrs:
                m |= 1 << b
            masks.append(m)
        return tuple(masks)

    @cached_property
    def colour_masks(self) -> dict[int, int]:
        masks: dict[int, int] = {}
        for reg in self.regions:
            masks[reg.colour] = masks.get(reg.colour, 0) | (1 << reg.id)
        return masks

    @cached_property
    def sizes(self) -> tuple[int, ...]:
        return tuple(reg.size for reg in self.regions)

    def mask_size(self, mask: int) -> int:
        sizes = self.sizes
        return sum(sizes[r] for r in iter_bits(mask))

    def distances_from(self, sources: int) -> list[int]:
        """BFS distance (in region hops) from a bitmask of source regions."""
        dist = [-1] * len(self.regions)
        queue = deque()
        for r in iter_bits(sources):
            dist[r] = 0
            queue.append(r)
        adj = self.adjacency
        while queue:
            a = queue.popleft()
            da = dist[a] + 1
            for b in adj[a]:
                if dist[b] < 0:
                    dist[b] = da
                    queue.append(b)
        return dist


def build_region_graph(b: Board) -> RegionGraph:
    h, n = b.h, b.n
    grid = b.grid
    labels = [[-1] * n for _ in range(h)]
    regions: list[Region] = []
    adjacency: list[set[int]] = []
    for i0 in range(h):
        for j0 in range(n):
            if labels[i0][j0] >= 0:
                continue
            rid = len(regions)
            k = grid[i0][j0]
            labels[i0][j0] = rid
            members = [(i0, j0)]
            stack = [(i0, j0)]
            while stack:
                i, j = stack.pop()
                for ni, nj in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
                    if 0 <= ni < h and 0 <= nj < n and labels[ni][nj] < 0 and grid[ni][nj] == k:
                        labels[ni][nj] = rid
                        members.append((ni, nj))
                        stack.append((ni, nj))
            members.sort()
            regions.append(Region(rid, k, len(members), tuple((i + 1, j + 1) for i, j in members)))
            adjacency.append(set())
    for i in range(h):
        row = labels[i]
        below = labels[i + 1] if i + 1 < h else None
        for j in range(n):
            a = row[j]
            if j + 1 < n and row[j + 1] != a:
                adjacency[a].add(row[j + 1])
                adjacency[row[j + 1]].add(a)
            if below is not None and below[j] != a:
                adjacency[a].add(below[j])
                adjacency[below[j]].add(a)
    return RegionGraph(
        board=b,
        regions=tuple(regions),
        adjacency=tuple(frozenset(s) for s in adjacency),
        labels=tuple(tuple(row) for row in labels),
    )


class Variant(str, enum.Enum):
    ANCHORED = "anchored"
    FREE = "free"


@dataclass(frozen=True)
class Move:
    """A flood move; ``origin`` is set exactly for the free variant."""

    colour: int
    origin: Tile | None = None

    @property
    def variant(self) -> Variant:
        return Variant.ANCHORED if self.origin is None else Variant.FREE

    def __str__(self) -> str:
        if self.origin is None:
            return str(self.colour)
        return f"{self.origin[0]},{self.origin[1]}:{self.colour}"

    @classmethod
    def parse(cls, text: str) -> "Move":
        if ":" in text:
            where, colour = text.split(":")
            r, c = where.split(",")
            return cls(int(colour), (int(r), int(c)))
        return cls(int(text))


@dataclass(frozen=True)
class MoveSequence:
    moves: tuple[Move, ...] = ()
    variant: Variant = Variant.ANCHORED

    def __post_init__(self):
        if any(m.variant != self.variant for m in self.moves):
            raise ValueError("mixed-variant move sequence")

    @classmethod
    def anchored(cls, colours: Iterable[int]) -> "MoveSequence":
        return cls(tuple(Move(int(k)) for k in colours), Variant.ANCHORED)

    @classmethod
    def free(cls, moves: Iterable[tuple[Tile, int]]) -> "MoveSequence":
        return cls(tuple(Move(int(k), tuple(t)) for t, k in moves), Variant.FREE)

    @classmethod
    def parse(cls, text: str, variant: Variant | None = None) -> "MoveSequence":
        toks = [t for t in text.split(";") if t]
        moves = tuple(Move.parse(t) for t in toks)
        if variant is None:
            variant = moves[0].variant if moves else Variant.ANCHORED
        return cls(moves, Variant(variant))

    def colours(self) -> list[int]:
        return [m.colour for m in self.moves]

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self) -> Iterator[Move]:
        return iter(self.moves)

    def __getitem__(self, idx):
        return self.moves[idx]

    def __str__(self) -> str:
        return ";".join(str(m) for m in self.moves)


@dataclass(frozen=True)
class FloodState:
    """Anchored-variant position: flooded regions as a bitmask over region ids.

    ``boundary`` caches the unflooded regions adjacent to the flooded set.
    """

    graph: RegionGraph = field(repr=False, compare=False)
    flooded: int
    colour: int
    moves: int = 0
    boundary: int = field(default=-1, repr=False, compare=False)

    def __post_init__(self):
        if self.boundary < 0:
            nm = self.graph.neighbour_masks
            acc = 0
            for r in iter_bits(self.flooded):
                acc |= nm[r]
            object.__setattr__(self, "boundary", acc & ~self.flooded)

    @classmethod
    def initial(cls, graph: RegionGraph, anchor: int | None = None) -> "FloodState":
        anchor = graph.anchor if anchor is None else anchor
        return cls(graph, 1 << anchor, graph.colour(anchor))

    @property
    def variant(self) -> Variant:
        return Variant.ANCHORED

    def is_flooded(self) -> bool:
        return self.flooded == self.graph.full_mask

    def contains(self, tile: Tile) -> bool:
        return bool(self.flooded >> self.graph.label(tile) & 1)

    def flooded_regions(self) -> list[int]:
        return list(iter_bits(self.flooded))

    def flooded_tiles(self) -> set[Tile]:
        regions = self.graph.regions
        return {t for r in iter_bits(self.flooded) for t in regions[r].tiles}

    def flooded_size(self) -> int:
        return self.graph.mask_size(self.flooded)

    def absorbed_by(self, colour: int) -> int:
        """Bitmask of regions a move of ``colour`` would absorb."""
        return self.boundary & self.graph.colour_masks.get(colour, 0)

    def play(self, colour: int) -> "FloodState":
        absorbed = self.absorbed_by(colour)
        flooded = self.flooded | absorbed
        boundary = self.boundary
        nm = self.graph.neighbour_masks
        for r in iter_bits(absorbed):
            boundary |= nm[r]
        return FloodState(self.graph, flooded, colour, self.moves + 1, boundary & ~flooded)

    def colour_of(self, region: int) -> int:
        if self.flooded >> region & 1:
            return self.colour
        return self.graph.colour(region)

    def board(self) -> Board:
        """Current colouring of the board."""
        g = self.graph
        rows = [[self.colour_of(lab) for lab in row] for row in g.labels]
        return Board.from_rows(rows, g.board.c)


@dataclass(frozen=True)
class FreeState:
    """Free-variant position: the current colour of every original region."""

    graph: RegionGraph = field(repr=False, compare=False)
    colours: tuple[int, ...]
    moves: int = 0

    @classmethod
    def initial(cls, graph: RegionGraph) -> "FreeState":
        return cls(graph, tuple(reg.colour for reg in graph.regions))

    @property
    def variant(self) -> Variant:
        return Variant.FREE

    def component(self, region: int) -> list[int]:
        colours = self.colours
        k = colours[region]
        seen = {region}
        stack = [region]
        adj = self.graph.adjacency
        while stack:
            a = stack.pop()
            for b in adj[a]:
                if b not in seen and colours[b] == k:
                    seen.add(b)
                    stack.append(b)
        return sorted(seen)

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for r in range(len(self.colours)):
            if r not in seen:
                comp = self.component(r)
                seen.update(comp)
                out.append(comp)
        return out

    def is_flooded(self) -> bool:
        return len(set(self.colours)) == 1

    def recolour(self, region: int, colour: int) -> "FreeState":
        colours = list(self.colours)
        for r in self.component(region):
            colours[r] = colour
        return FreeState(self.graph, tuple(colours), self.moves + 1)

    def board(self) -> Board:
        rows = [[self.colours[lab] for lab in row] for row in self.graph.labels]
        return Board.from_rows(rows, self.graph.board.c)


def apply_move(s: FloodState | FreeState, m: Move) -> FloodState | FreeState:
    if m.variant != s.variant:
        raise ValueError(f"{m.variant.value} move applied to {s.variant.value} state")
    if isinstance(s, FloodState):
        return s.play(m.colour)
    if not s.graph.board.in_bounds(m.origin):
        raise ValueError(f"origin {m.origin} off the board")
    return s.recolour(s.graph.label(m.origin), m.colour)


def initial_state(graph: RegionGraph, variant: Variant = Variant.ANCHORED):
    if Variant(variant) is Variant.FREE:
        return FreeState.initial(graph)
    return FloodState.initial(graph)


def play_sequence(b: Board, seq: MoveSequence | Sequence[Move], graph: RegionGraph | None = None):
    """Replay ``seq`` from the initial position; returns ``(state, flooded)``."""
    if not isinstance(seq, MoveSequence):
        moves = tuple(seq)
        seq = MoveSequence(moves, moves[0].variant if moves else Variant.ANCHORED)
    graph = graph or build_region_graph(b)
    state = initial_state(graph, seq.variant)
    for m in seq:
        state = apply_move(state, m)
    return state, state.is_flooded()


def is_flooded(s: FloodState | FreeState) -> bool:
    return s.is_flooded()
