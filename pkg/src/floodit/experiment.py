"""Batch experiments: boards x strategies x seeds, written as one CSV."""
from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .board import Board, parse_board, play_sequence
from .bounds import path_cost_lower_bound, rows_bound, sections_bound
from .generators import gen_checkerboard, gen_greedy_adversarial, gen_random, gen_worst_case
from .solvers import STRATEGIES, BudgetExceeded, NodeLimitExceeded, run_strategy

GENERATORS = ("checker", "greedy-adv", "worst-case", "random", "file")
COLUMNS = ("run_id", "generator", "n", "c", "seed", "rep", "strategy", "moves", "path_cost",
           "upper_bound", "status", "witness")


class ConfigError(ValueError):
    pass


def _int_list(text: str) -> list[int]:
    """"1,2,5-8" -> [1, 2, 5, 6, 7, 8]."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        lo, sep, hi = part.partition("-")
        try:
            if sep:
                a, b = int(lo), int(hi)
                if b < a:
                    raise ConfigError(f"empty range {part!r}")
                out.extend(range(a, b + 1))
            else:
                out.append(int(part))
        except ValueError as exc:
            raise ConfigError(f"not an integer list: {text!r}") from exc
    return out


@dataclass
class ExperimentConfig:
    generator: str = "random"
    n: list[int] = field(default_factory=lambda: [10])
    c: list[int] = field(default_factory=lambda: [3])
    seeds: list[int] = field(default_factory=lambda: [0])
    strategies: list[str] = field(default_factory=list)
    reps: int = 1
    board: str | None = None
    output: str | None = None
    budget: int | None = None
    max_nodes: int | None = 1_000_000

    def validate(self):
        if not self.strategies:
            raise ConfigError("at least one strategy is required")
        for s in self.strategies:
            if s not in STRATEGIES:
                raise ConfigError(f"unknown strategy {s!r}")
        if self.generator not in GENERATORS:
            raise ConfigError(f"unknown generator {self.generator!r}")
        if self.generator == "file" and not self.board:
            raise ConfigError("generator=file needs board=<path>")
        if not self.seeds:
            raise ConfigError("seed range is empty")
        if self.reps < 1:
            raise ConfigError("reps must be >= 1")
        if not self.n or not self.c:
            raise ConfigError("n and c need at least one value")
        return self

    @classmethod
    def parse(cls, text: str) -> "ExperimentConfig":
        """Flat ``key=value`` lines; ``#`` starts a comment; lists are comma-separated."""
        cfg = cls()
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if not sep:
                raise ConfigError(f"line {lineno}: expected key=value, got {raw!r}")
            if key in ("n", "c", "seeds"):
                setattr(cfg, key, _int_list(value))
            elif key == "strategies":
                cfg.strategies = [s.strip() for s in value.split(",") if s.strip()]
            elif key in ("reps", "budget", "max_nodes"):
                try:
                    setattr(cfg, key, int(value))
                except ValueError as exc:
                    raise ConfigError(f"line {lineno}: {key} must be an integer") from exc
            elif key in ("generator", "board", "output"):
                setattr(cfg, key, value)
            else:
                raise ConfigError(f"line {lineno}: unknown key {key!r}")
        return cfg.validate()

    @classmethod
    def load(cls, path: str | Path) -> "ExperimentConfig":
        return cls.parse(Path(path).read_text())


@dataclass(frozen=True)
class RunSpec:
    run_id: int
    generator: str
    n: int
    c: int
    seed: int
    rep: int
    reps: int
    strategy: str
    board_text: str | None = None
    budget: int | None = None
    max_nodes: int | None = None


def make_board(spec: RunSpec) -> Board:
    if spec.generator == "file":
        return parse_board(spec.board_text)
    if spec.generator == "checker":
        return gen_checkerboard(spec.n)
    if spec.generator == "greedy-adv":
        return gen_greedy_adversarial(spec.n)
    if spec.generator == "worst-case":
        return gen_worst_case(spec.n, spec.c)
    return gen_random(spec.n, spec.c, spec.seed)


def expand(cfg: ExperimentConfig) -> list[RunSpec]:
    board_text = Path(cfg.board).read_text() if cfg.generator == "file" else None
    if board_text is not None:
        b = parse_board(board_text)
        sizes = [(b.n, b.c)]
    else:
        sizes = [(n, c) for n in cfg.n for c in cfg.c]
    runs = []
    for n, c in sizes:
        for seed in cfg.seeds:
            for rep in range(cfg.reps):
                for strategy in cfg.strategies:
                    runs.append(RunSpec(len(runs), cfg.generator, n, c, seed, rep, cfg.reps, strategy,
                                        board_text, cfg.budget, cfg.max_nodes))
    return runs


def _upper_bound(strategy: str, n: int, c: int) -> str:
    if strategy == "rows":
        return str(rows_bound(n, c))
    if strategy == "sections":
        return f"{sections_bound(n, c):.4f}"
    return ""


def execute(spec: RunSpec) -> dict:
    """One run; failures become a status value instead of an exception."""
    row = {"run_id": spec.run_id, "generator": spec.generator, "n": spec.n, "c": spec.c,
           "seed": spec.seed, "rep": spec.rep, "strategy": spec.strategy, "moves": "",
           "path_cost": "", "upper_bound": _upper_bound(spec.strategy, spec.n, spec.c),
           "status": "ok", "witness": ""}
    t0 = time.perf_counter()
    try:
        b = make_board(spec)
        row["n"], row["c"] = b.n, b.c
        row["path_cost"] = path_cost_lower_bound(b).cost
        res = run_strategy(spec.strategy, b, seed=spec.seed * spec.reps + spec.rep,
                           budget=spec.budget, max_nodes=spec.max_nodes)
        row["moves"] = res.moves
        row["witness"] = str(res.witness)
        _, flooded = play_sequence(b, res.witness)
        if not flooded:
            row["status"] = "not-flooded"
    except NodeLimitExceeded:
        row["status"] = "node-limit"
    except BudgetExceeded:
        row["status"] = "budget"
    except ValueError:
        row["status"] = "invalid"
    row["wall_ms"] = f"{(time.perf_counter() - t0) * 1000:.1f}"
    return row


def run_experiment(cfg: ExperimentConfig, jobs: int = 1) -> list[dict]:
    runs = expand(cfg)
    if jobs > 1 and len(runs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(execute, runs, chunksize=max(1, len(runs) // (4 * jobs))))
    else:
        rows = [execute(r) for r in runs]
    return sorted(rows, key=lambda r: r["run_id"])


def rows_to_csv(rows: list[dict], timing: bool = True) -> str:
    cols = COLUMNS + (("wall_ms",) if timing else ())
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()
