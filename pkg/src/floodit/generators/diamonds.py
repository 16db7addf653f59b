from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from ..board import Board, Tile


@dataclass(frozen=True)
class DiamondSpec:
    """An r-diamond: layer i holds the tiles at distance i-1 from ``centre``.

    ``layers[0]`` is the centre colour, ``layers[-1]`` the outermost layer.
    """

    centre: Tile
    layers: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(self.layers))
        if not self.layers:
            raise ValueError("diamond needs at least one layer")
        for a, b in zip(self.layers, self.layers[1:]):
            if a == b:
                raise ValueError(f"adjacent diamond layers share colour {a}")

    @property
    def radius(self) -> int:
        return len(self.layers)

    @classmethod
    def alternating(cls, centre: Tile, radius: int, odd: int, even: int) -> "DiamondSpec":
        return cls(centre, tuple(odd if i % 2 else even for i in range(1, radius + 1)))

    def layer_of(self, tile: Tile) -> int | None:
        d = abs(tile[0] - self.centre[0]) + abs(tile[1] - self.centre[1])
        return d + 1 if d < self.radius else None

    def tiles(self) -> Iterator[tuple[Tile, int]]:
        """All (tile, layer) pairs of the uncropped diamond."""
        ci, cj = self.centre
        r = self.radius
        for di in range(-(r - 1), r):
            span = r - 1 - abs(di)
            for dj in range(-span, span + 1):
                yield (ci + di, cj + dj), abs(di) + abs(dj) + 1

    def cropped_edges(self, h: int, n: int) -> int:
        ci, cj = self.centre
        ext = self.radius - 1
        return sum((ci - ext < 1, ci + ext > h, cj - ext < 1, cj + ext > n))


def embed_diamond(b: Board, spec: DiamondSpec, c: int | None = None) -> Board:
    """Recolour the diamond's tiles on ``b``; tiles beyond the edges are dropped."""
    if not b.in_bounds(spec.centre):
        raise ValueError(f"diamond centre {spec.centre} is off the board")
    if spec.cropped_edges(b.h, b.n) > 2:
        raise ValueError("diamond would be cropped by more than two board edges")
    updates = {t: spec.layers[layer - 1] for t, layer in spec.tiles() if b.in_bounds(t)}
    return b.with_tiles(updates, c=max(b.c, max(spec.layers)) if c is None else c)


def embed_diamonds(b: Board, specs: Iterable[DiamondSpec], c: int | None = None) -> Board:
    specs = list(specs)
    rows = [list(row) for row in b.grid]
    for spec in specs:
        if not b.in_bounds(spec.centre):
            raise ValueError(f"diamond centre {spec.centre} is off the board")
        if spec.cropped_edges(b.h, b.n) > 2:
            raise ValueError("diamond would be cropped by more than two board edges")
        for (i, j), layer in spec.tiles():
            if 1 <= i <= b.h and 1 <= j <= b.n:
                rows[i - 1][j - 1] = spec.layers[layer - 1]
    top = max([b.c] + [max(s.layers) for s in specs])
    return Board.from_rows(rows, top if c is None else c)


def filled(h: int, n: int, colour: int, c: int) -> Board:
    return Board(tuple(tuple([colour] * n) for _ in range(h)), c)


def audit_diamonds(b: Board, specs: Sequence[DiamondSpec]) -> list[str]:
    """Structural problems with diamonds embedded on ``b`` (empty if sound).

    Checks tile ownership (no overlaps), layer alternation, colours on the
    board matching each layer, and cropping by at most two edges.
    """
    problems = []
    owner: dict[Tile, int] = {}
    for idx, spec in enumerate(specs):
        if not b.in_bounds(spec.centre):
            problems.append(f"diamond {idx}: centre off board")
        if spec.cropped_edges(b.h, b.n) > 2:
            problems.append(f"diamond {idx}: cropped by more than two edges")
        if any(x == y for x, y in zip(spec.layers, spec.layers[1:])):
            problems.append(f"diamond {idx}: adjacent layers share a colour")
        for t, layer in spec.tiles():
            if not b.in_bounds(t):
                continue
            if t in owner:
                problems.append(f"diamonds {owner[t]} and {idx} overlap at {t}")
            owner[t] = idx
            if b[t] != spec.layers[layer - 1]:
                problems.append(f"diamond {idx}: tile {t} has colour {b[t]}, "
                                f"layer {layer} expects {spec.layers[layer - 1]}")
    return problems
