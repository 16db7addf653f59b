"""Certificate sidecar files and their verification against the solvers."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..board import Board, build_region_graph
from ..scs import SCSBudgetExceeded, SCSInstance, solve_scs_exact
from ..solvers.exact import solve_exact_anchored
from ..solvers.result import BudgetExceeded, NodeLimitExceeded
from .diamonds import DiamondSpec, audit_diamonds
from .reductions import (Placement, ReductionCertificate, Relation, arch_rectangle,
                         interleave_four_colour, interleave_three_colour)

DEFAULT_MAX_NODES = 2_000_000
DEFAULT_MAX_REGIONS = 20_000


class CertificateParseError(ValueError):
    pass


def serialize_certificate(cert: ReductionCertificate) -> str:
    inst = cert.instance
    lines = [f"relation {cert.relation.value}", f"alphabet {inst.alphabet}"]
    if cert.target is not None:
        lines.append(f"target {cert.target}")
    lines.append(f"board {cert.board.h} {cert.board.n} {cert.board.c}")
    for s in inst.strings:
        lines.append("string " + " ".join(str(ch) for ch in s))
    for p in cert.placements:
        lines.append(f"{p.kind} {p.index} {p.row} {p.col} {p.size}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str, board: Board) -> ReductionCertificate:
    """Rebuild a certificate from its sidecar text and the board it describes."""
    relation = alphabet = target = shape = None
    strings, places = [], []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        key, *rest = line.split()
        try:
            if key == "relation":
                relation = Relation(rest[0])
                continue
            vals = [int(tok) for tok in rest]
            if key == "alphabet":
                (alphabet,) = vals
            elif key == "target":
                (target,) = vals
            elif key == "board":
                shape = tuple(vals)
            elif key == "string":
                strings.append(tuple(vals))
            elif key in ("diamond", "arch", "half"):
                places.append(Placement(key, *vals))
            else:
                raise CertificateParseError(f"line {lineno}: unknown key {key!r}")
        except (ValueError, TypeError, IndexError) as exc:
            if isinstance(exc, CertificateParseError):
                raise
            raise CertificateParseError(f"line {lineno}: malformed {line!r}") from exc
    if relation is None or alphabet is None:
        raise CertificateParseError("certificate needs relation and alphabet lines")
    if relation is Relation.THRESHOLD and target is None:
        raise CertificateParseError("threshold certificate needs a target line")
    if shape is not None and shape != (board.h, board.n, board.c):
        raise CertificateParseError(f"certificate is for a {shape} board, got {(board.h, board.n, board.c)}")
    try:
        inst = SCSInstance(tuple(strings), alphabet, target)
    except ValueError as exc:
        raise CertificateParseError(str(exc)) from exc
    return ReductionCertificate(inst, board, relation, tuple(places), target)


def _diamond_layers(cert: ReductionCertificate, index: int) -> tuple[int, ...]:
    s = cert.instance.strings[index - 1]
    if cert.relation is Relation.DOUBLE:
        return tuple(reversed(interleave_four_colour(s, cert.instance.alphabet)))
    return tuple(reversed(interleave_three_colour(s)))


def placement_problems(cert: ReductionCertificate) -> list[str]:
    """Check every placement against the board: colours, overlaps, size bounds."""
    b = cert.board
    inst = cert.instance
    problems = []
    specs = []
    for p in cert.placements:
        if p.kind == "diamond":
            if not 1 <= p.index <= inst.k:
                problems.append(f"diamond for unknown string {p.index}")
                continue
            spec = DiamondSpec((p.row, p.col), _diamond_layers(cert, p.index))
            if spec.radius != p.size:
                problems.append(f"diamond {p.index}: radius {p.size} != {spec.radius}")
            specs.append(spec)
    problems += audit_diamonds(b, specs)
    owned = {t for spec in specs for t, _ in spec.tiles() if b.in_bounds(t)}
    for p in cert.placements:
        if p.kind == "arch":
            rect = arch_rectangle(p.size)
            height, width = len(rect), len(rect[0])
            top, left = p.row - height + 1, p.col - width // 2
            for i in range(height):
                for j in range(width):
                    t = (top + i, left + j)
                    if not b.in_bounds(t):
                        problems.append(f"arch copy {p.index} leaves the board")
                        break
                    if t in owned:
                        problems.append(f"arch copy {p.index} overlaps another placement at {t}")
                    owned.add(t)
                    if b[t] != rect[i][j]:
                        problems.append(f"arch copy {p.index}: tile {t} has colour {b[t]}, expected {rect[i][j]}")
        elif p.kind == "half":
            if not 1 <= p.index <= inst.k:
                problems.append(f"half diamond for unknown string {p.index}")
                continue
            a, inner = inst.strings[p.index - 1]
            expect = {(p.row, p.col): inner, (p.row, p.col - 1): a, (p.row, p.col + 1): a,
                      (p.row - 1, p.col): a}
            for t, k in expect.items():
                if not b.in_bounds(t):
                    problems.append(f"half diamond {p.index} leaves the board")
                elif b[t] != k:
                    problems.append(f"half diamond {p.index}: tile {t} has colour {b[t]}, expected {k}")
                if t in owned:
                    problems.append(f"half diamond {p.index} overlaps another placement at {t}")
                owned.add(t)
    problems += size_problems(cert)
    return problems


def size_problems(cert: ReductionCertificate) -> list[str]:
    b, inst = cert.board, cert.instance
    w = max(inst.max_length, 1)
    k = inst.k
    if cert.relation is Relation.DOUBLE:
        copies = 2 * k * w + 1
        limit = k * (4 * w + 1) * (copies if b.n > k * (4 * w + 1) else 1)
    elif cert.relation is Relation.THRESHOLD:
        ell = max(cert.target or 0, k * w)
        limit = k * (4 * w + 1) + (2 * ell + 3) * (4 * ell + 5)
    else:
        if b.n != 4 * k + 1:
            return [f"board width {b.n} != 4k+1 = {4 * k + 1}"]
        return []
    if max(b.h, b.n) > limit:
        return [f"board side {max(b.h, b.n)} exceeds size bound {limit}"]
    return []


@dataclass
class VerificationReport:
    status: str                      # pass | fail | budget-exceeded
    relation: Relation
    claim: str
    scs_length: int | None = None
    scs_witness: tuple[int, ...] | None = None
    expected_moves: int | None = None
    board_moves: int | None = None
    witness: str | None = None
    counterexample: str | None = None
    problems: list[str] = field(default_factory=list)
    message: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def lines(self) -> list[str]:
        out = [f"status {self.status}", f"relation {self.relation.value}", f"claim {self.claim}"]
        for key in ("scs_length", "expected_moves", "board_moves", "witness", "counterexample"):
            val = getattr(self, key)
            if val is not None:
                out.append(f"{key} {val}")
        if self.scs_witness is not None:
            out.append("scs_witness " + "".join(str(ch) for ch in self.scs_witness))
        out += [f"problem {p}" for p in self.problems]
        if self.message:
            out.append(f"message {self.message}")
        return out


def verify_certificate(cert: ReductionCertificate, *, max_nodes: int = DEFAULT_MAX_NODES,
                       max_regions: int = DEFAULT_MAX_REGIONS,
                       scs_budget: int = 10_000_000) -> VerificationReport:
    """Check a certificate's claimed relation with the SCS oracle and exact search.

    The board is searched to exactly the depth the relation names: a shorter
    flooding sequence is reported as a counterexample, and a claimed length
    that search cannot reach is a failure. Threshold certificates pass when
    the board floods in 2l+2 moves exactly when |SCS| <= l.
    """
    report = VerificationReport("fail", cert.relation, cert.claim())
    try:
        length, scs_witness = solve_scs_exact(cert.instance, scs_budget)
    except SCSBudgetExceeded as exc:
        report.status, report.message = "budget-exceeded", str(exc)
        return report
    report.scs_length, report.scs_witness = length, scs_witness
    report.problems = placement_problems(cert)

    graph = build_region_graph(cert.board)
    if len(graph.regions) > max_regions:
        report.status = "budget-exceeded"
        report.message = f"{len(graph.regions)} regions exceed limit {max_regions}"
        return report

    if cert.relation is Relation.DOUBLE:
        expected = 2 * length
    elif cert.relation is Relation.EQUAL:
        expected = length
    else:
        expected = 2 * cert.target + 2
    report.expected_moves = expected
    should_flood = cert.relation is not Relation.THRESHOLD or length <= cert.target

    try:
        res = solve_exact_anchored(cert.board, budget=expected, max_nodes=max_nodes, graph=graph)
    except NodeLimitExceeded as exc:
        report.status, report.message = "budget-exceeded", str(exc)
        return report
    except BudgetExceeded:
        res = None

    if res is not None:
        report.board_moves = res.moves
        report.witness = str(res.witness)
    ok = True
    if res is None:
        if should_flood:
            ok = False
            report.message = f"no flooding sequence of {expected} moves exists"
    elif res.moves < expected:
        ok = False
        report.counterexample = str(res.witness)
        report.message = f"board floods in {res.moves} < {expected} moves"
    elif not should_flood:
        ok = False
        report.counterexample = str(res.witness)
        report.message = f"board floods in {expected} moves although |SCS| = {length} > {cert.target}"
    if report.problems:
        ok = False
    report.status = "pass" if ok else "fail"
    return report
