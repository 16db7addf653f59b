"""Shortest common supersequence: exact DP, verification, ab-form transforms."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace
from typing import Sequence

Word = tuple[int, ...]

DEFAULT_STATE_BUDGET = 10_000_000


class SCSBudgetExceeded(RuntimeError):
    pass


class SCSParseError(ValueError):
    pass


@dataclass(frozen=True)
class SCSInstance:
    """Strings over the alphabet ``1..alphabet``, with an optional target length."""

    strings: tuple[Word, ...]
    alphabet: int
    target: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "strings", tuple(tuple(int(ch) for ch in s) for s in self.strings))
        for s in self.strings:
            for ch in s:
                if not 1 <= ch <= self.alphabet:
                    raise ValueError(f"symbol {ch} outside alphabet 1..{self.alphabet}")

    @classmethod
    def of(cls, *strings, alphabet: int | None = None, target: int | None = None) -> "SCSInstance":
        """Build from words given as digit strings (``"12"``) or int sequences."""
        words = tuple(tuple(int(ch) for ch in s) for s in strings)
        if alphabet is None:
            alphabet = max((max(w) for w in words if w), default=1)
        return cls(words, alphabet, target)

    @property
    def k(self) -> int:
        return len(self.strings)

    @property
    def max_length(self) -> int:
        return max((len(s) for s in self.strings), default=0)

    def symbols(self) -> set[int]:
        return {ch for s in self.strings for ch in s}


def parse_scs(text: str) -> SCSInstance:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise SCSParseError("empty instance file")
    header = lines[0].split()
    if len(header) not in (2, 3) or not all(tok.isdigit() for tok in header):
        raise SCSParseError(f"malformed header {lines[0]!r}")
    k, r = int(header[0]), int(header[1])
    target = int(header[2]) if len(header) == 3 else None
    body = lines[1:]
    if len(body) != k:
        raise SCSParseError(f"expected {k} strings, found {len(body)}")
    try:
        strings = tuple(tuple(int(tok) for tok in line.split()) for line in body)
        return SCSInstance(strings, r, target)
    except ValueError as exc:
        raise SCSParseError(str(exc)) from exc


def serialize_scs(inst: SCSInstance) -> str:
    head = [str(inst.k), str(inst.alphabet)]
    if inst.target is not None:
        head.append(str(inst.target))
    lines = [" ".join(head)] + [" ".join(str(ch) for ch in s) for s in inst.strings]
    return "\n".join(lines) + "\n"


def is_supersequence(s: Sequence[int], t: Sequence[int]) -> bool:
    """True iff ``t`` is a subsequence of ``s``."""
    it = iter(s)
    return all(ch in it for ch in t)


def solve_scs_exact(inst: SCSInstance, budget: int = DEFAULT_STATE_BUDGET) -> tuple[int, Word]:
    """Length of a shortest common supersequence and the lexicographically
    smallest witness of that length.

    The DP runs over tuples of matched prefix lengths; a symbol advances every
    string whose next character it matches.
    """
    strings = [s for s in inst.strings if s]
    if not strings:
        return 0, ()
    n_states = math.prod(len(s) + 1 for s in strings)
    if n_states > budget:
        raise SCSBudgetExceeded(f"{n_states} DP states exceed budget {budget}")
    lengths = [len(s) for s in strings]
    final = tuple(lengths)

    def step(state, ch):
        return tuple(p + 1 if p < L and s[p] == ch else p
                     for p, L, s in zip(state, lengths, strings))

    def options(state):
        return sorted({s[p] for p, L, s in zip(state, lengths, strings) if p < L})

    remaining: dict[tuple[int, ...], int] = {final: 0}
    # successors are lexicographically larger, so descending order is a valid
    # evaluation order
    for state in reversed(list(itertools.product(*(range(L + 1) for L in lengths)))):
        if state == final:
            continue
        remaining[state] = 1 + min(remaining[step(state, ch)] for ch in options(state))
    state = tuple(0 for _ in strings)
    witness = []
    while state != final:
        need = remaining[state] - 1
        for ch in options(state):
            nxt = step(state, ch)
            if remaining[nxt] == need:
                witness.append(ch)
                state = nxt
                break
    return remaining[tuple(0 for _ in strings)], tuple(witness)


def scs_length(inst: SCSInstance) -> int:
    return solve_scs_exact(inst)[0]


def transform_drop_length1(inst: SCSInstance) -> tuple[SCSInstance, int]:
    """Remove the last length-1 string ``a``.

    Returns ``(reduced, delta)`` with |SCS(inst)| = |SCS(reduced)| + delta:
    delta is 0 when ``a`` occurs in a remaining string and 1 otherwise.
    """
    idx = next((i for i in range(inst.k - 1, -1, -1) if len(inst.strings[i]) == 1), None)
    if idx is None:
        raise ValueError("instance has no length-1 string")
    (a,) = inst.strings[idx]
    rest = inst.strings[:idx] + inst.strings[idx + 1:]
    delta = 0 if any(a in s for s in rest) else 1
    return replace(inst, strings=rest), delta


def fresh_symbol(inst: SCSInstance) -> int:
    """Smallest positive symbol outside both the alphabet and the strings."""
    used = set(range(1, inst.alphabet + 1)) | inst.symbols()
    return next(a for a in itertools.count(1) if a not in used)


def transform_split_aa(inst: SCSInstance) -> tuple[SCSInstance, int]:
    """Replace the first string ``aa`` by ``aa'`` and ``a'a`` with ``a'`` fresh.

    Returns ``(expanded, 1)``: |SCS(expanded)| = |SCS(inst)| + 1.
    """
    if any(len(s) != 2 for s in inst.strings):
        raise ValueError("split transform needs every string of length 2")
    idx = next((i for i, s in enumerate(inst.strings) if s[0] == s[1]), None)
    if idx is None:
        raise ValueError("instance has no string of the form aa")
    a = inst.strings[idx][0]
    fresh = fresh_symbol(inst)
    rest = inst.strings[:idx] + inst.strings[idx + 1:]
    strings = rest + ((a, fresh), (fresh, a))
    return SCSInstance(strings, max(inst.alphabet, fresh), inst.target), 1


def is_ab_form(inst: SCSInstance) -> bool:
    return all(len(s) == 2 and s[0] != s[1] for s in inst.strings)


def normalize_to_ab_form(inst: SCSInstance) -> tuple[SCSInstance, int]:
    """Rewrite strings of length <= 2 into distinct-pair form.

    Returns ``(normal, delta)`` with |SCS(inst)| = |SCS(normal)| + delta.
    """
    if any(len(s) > 2 for s in inst.strings):
        raise ValueError("normalisation needs strings of length <= 2")
    delta = 0
    inst = replace(inst, strings=tuple(s for s in inst.strings if s))
    while any(len(s) == 1 for s in inst.strings):
        inst, d = transform_drop_length1(inst)
        delta += d
    while not is_ab_form(inst):
        inst, d = transform_split_aa(inst)
        delta -= d
    return inst, delta
