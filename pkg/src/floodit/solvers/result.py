from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from ..board import Board, MoveSequence, Variant

CSV_FIELDS = ("variant", "h", "n", "c", "moves", "optimal", "witness")


class BudgetExceeded(RuntimeError):
    """The optimum lies beyond the move cap."""

    def __init__(self, message: str, budget: int | None = None):
        super().__init__(message)
        self.budget = budget


class NodeLimitExceeded(BudgetExceeded):
    """Search gave up after expanding too many positions."""


@dataclass(frozen=True)
class SolveResult:
    moves: int
    witness: MoveSequence
    optimal: bool
    variant: Variant = Variant.ANCHORED

    @classmethod
    def heuristic(cls, seq: MoveSequence) -> "SolveResult":
        return cls(len(seq), seq, False, seq.variant)

    def csv_row(self, b: Board) -> list[str]:
        return [self.variant.value, str(b.h), str(b.n), str(b.c), str(self.moves),
                "1" if self.optimal else "0", str(self.witness)]

    def to_csv(self, b: Board, header: bool = False) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(CSV_FIELDS)
        w.writerow(self.csv_row(b))
        return buf.getvalue()
