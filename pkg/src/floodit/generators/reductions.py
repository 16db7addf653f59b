"""Boards built from SCS instances, one per hardness reduction."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from ..board import Board
from ..scs import SCSInstance, is_ab_form
from .diamonds import DiamondSpec, embed_diamonds, filled


class Relation(str, enum.Enum):
    DOUBLE = "double"        # m(B) = 2 |SCS|
    THRESHOLD = "threshold"  # m(B) = 2l + 2  iff  |SCS| <= l
    EQUAL = "equal"          # m(B) = |SCS|

    def describe(self, target: int | None = None) -> str:
        if self is Relation.DOUBLE:
            return "m = 2|SCS|"
        if self is Relation.EQUAL:
            return "m = |SCS|"
        return f"m = {2 * target + 2} iff |SCS| <= {target}"


@dataclass(frozen=True)
class Placement:
    kind: str          # diamond | arch | half
    index: int         # string index (1-based), or copy index for arches
    row: int
    col: int
    size: int          # radius for diamonds, 1 for half diamonds, l for arches


@dataclass(frozen=True)
class ReductionCertificate:
    instance: SCSInstance
    board: Board
    relation: Relation
    placements: tuple[Placement, ...]
    target: int | None = None

    def claim(self) -> str:
        return self.relation.describe(self.target)


def _require_nonempty(inst: SCSInstance):
    if inst.k == 0:
        raise ValueError("empty SCS instance")


def interleave_four_colour(word, r: int) -> tuple[int, ...]:
    """b1 a_x b_x a_y b_y ..., with a_j -> colour j and b_j -> colour r + j."""
    out = [r + 1]
    for ch in word:
        out += [ch, r + ch]
    return tuple(out)


def _diamond_row(words, block: int, centre_row: int, col0: int = 0):
    specs, places = [], []
    for idx, word in enumerate(words, start=1):
        centre = (centre_row, col0 + (idx - 1) * block + (block + 1) // 2)
        spec = DiamondSpec(centre, tuple(reversed(word)))
        specs.append(spec)
        places.append(Placement("diamond", idx, centre[0], centre[1], spec.radius))
    return specs, places


def gen_reduction_4colour(inst: SCSInstance, free: bool = False) -> ReductionCertificate:
    """Diamond board with m(B) = 2 |SCS(inst)| over 2r colours.

    Each string becomes a diamond whose layers, read from the outside in,
    spell the string with b_j inserted after every a_j and b_1 in front. The
    diamonds sit side by side in blocks of width 4w+1 on a b_1 background.
    ``free=True`` tiles 2kw+1 copies of that board (padding with plain
    background blocks to a square).
    """
    _require_nonempty(inst)
    r = inst.alphabet
    w = max(inst.max_length, 1)
    block = 4 * w + 1
    n = inst.k * block
    words = [interleave_four_colour(s, r) for s in inst.strings]
    specs, places = _diamond_row(words, block, 2 * w + 1)
    background = r + 1
    if not free:
        board = embed_diamonds(filled(n, n, background, 2 * r), specs, 2 * r)
        return ReductionCertificate(inst, board, Relation.DOUBLE, tuple(places))
    copies = 2 * inst.k * w + 1
    side = math.ceil(math.sqrt(copies))
    all_specs, all_places = [], []
    for q in range(copies):
        dy, dx = (q // side) * n, (q % side) * n
        for spec, pl in zip(specs, places):
            moved = DiamondSpec((spec.centre[0] + dy, spec.centre[1] + dx), spec.layers)
            all_specs.append(moved)
            all_places.append(Placement("diamond", pl.index, moved.centre[0], moved.centre[1], pl.size))
    board = embed_diamonds(filled(side * n, side * n, background, 2 * r), all_specs, 2 * r)
    return ReductionCertificate(inst, board, Relation.DOUBLE, tuple(all_places))


def interleave_three_colour(word) -> tuple[int, ...]:
    out = [3]
    for ch in word:
        out += [ch, 3]
    return tuple(out)


def arch_colour(dy: int, dx: int) -> int:
    """Colour of the arch tile ``dy`` rows above and ``dx`` columns beside x."""
    arch = max(dy, dx) + 1
    if arch == 1:
        return 1
    if arch == 2:
        return 2
    if arch % 2:
        return 3
    return 1 if dx == 0 else 2


def arch_rectangle(ell: int) -> list[list[int]]:
    """The (2l+3) x (4l+5) rectangle of concentric arches around its bottom-middle tile."""
    height, width = 2 * ell + 3, 4 * ell + 5
    mid = width // 2
    return [[arch_colour(height - 1 - i, abs(j - mid)) for j in range(width)] for i in range(height)]


def gen_reduction_3colour(inst: SCSInstance, ell: int) -> ReductionCertificate:
    """Three-colour board with m(B) = 2l+2 exactly when |SCS(inst)| <= l.

    Strings over {1, 2} become diamonds spelling 3 s_1 3 s_2 3 ... from the
    outside in; 2l+3 arch rectangles run along the bottom edge and the rest
    of the square board is colour 3.
    """
    _require_nonempty(inst)
    if inst.symbols() - {1, 2}:
        raise ValueError("three-colour reduction needs a binary alphabet {1, 2}")
    if ell < 1:
        raise ValueError("target length l must be >= 1")
    w = max(inst.max_length, 1)
    block = 4 * w + 1
    height, width = 2 * ell + 3, 4 * ell + 5
    copies = 2 * ell + 3
    n = max(inst.k * block, copies * width, block + 1 + height)
    words = [interleave_three_colour(s) for s in inst.strings]
    specs, places = _diamond_row(words, block, 2 * w + 1)
    rows = [list(row) for row in embed_diamonds(filled(n, n, 3, 3), specs, 3).grid]
    rect = arch_rectangle(ell)
    top = n - height
    for q in range(copies):
        for i in range(height):
            for j in range(width):
                rows[top + i][q * width + j] = rect[i][j]
        places.append(Placement("arch", q + 1, n, q * width + width // 2 + 1, ell))
    board = Board.from_rows(rows, 3)
    return ReductionCertificate(SCSInstance(inst.strings, 2, ell), board, Relation.THRESHOLD,
                                tuple(places), target=ell)


def gen_reduction_height3(inst: SCSInstance, h: int = 3) -> ReductionCertificate:
    """h x (4k+1) board with m(B) = |SCS(inst)| for strings of the form ab, a != b.

    String i is a half diamond against the bottom edge: inner tile b at
    column 4i-1, outer tiles a on its left, right and top. Symbols keep their
    own colours; the background is colour r+1.
    """
    _require_nonempty(inst)
    if not is_ab_form(inst):
        raise ValueError("height-3 reduction needs every string of the form ab with a != b")
    if h < 3:
        raise ValueError("height must be at least 3")
    r = inst.alphabet
    background = r + 1
    n = 4 * inst.k + 1
    rows = [[background] * n for _ in range(h)]
    places = []
    for idx, (a, b) in enumerate(inst.strings, start=1):
        col = 4 * idx - 1
        rows[h - 1][col - 1] = b
        rows[h - 1][col - 2] = a
        rows[h - 1][col] = a
        rows[h - 2][col - 1] = a
        places.append(Placement("half", idx, h, col, 1))
    return ReductionCertificate(inst, Board.from_rows(rows, r + 1), Relation.EQUAL, tuple(places))
