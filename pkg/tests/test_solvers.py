import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import boards
from floodit import Board, MoveSequence, Variant, play_sequence
from floodit.bounds import cyclic_bound
from floodit.generators import gen_checkerboard, gen_greedy_adversarial, gen_random
from floodit.solvers import (STRATEGIES, BudgetExceeded, NodeLimitExceeded, SolveResult,
                             approx_cyclic, approx_shuffle, flood_by_sections, flood_row_by_row,
                             greedy_max_gain, greedy_perimeter, marked_tiles, run_strategy,
                             section_rows, solve_exact_anchored, solve_exact_free,
                             solve_free_two_colors, solve_height2)

MONO = Board.from_rows([[2, 2], [2, 2]], 3)


@given(boards(max_h=4, max_n=4, max_c=3))
def test_exact_matches_bfs(b):
    res = solve_exact_anchored(b)
    assert res.optimal and res.moves == oracles.bfs_min_moves(b.grid, b.c)
    assert oracles.monochrome(oracles.replay(b.grid, res.witness.colours()))


def test_exact_known_values():
    assert solve_exact_anchored(MONO).moves == 0
    assert solve_exact_anchored(gen_checkerboard(2)).moves == 2
    assert solve_exact_anchored(gen_checkerboard(6)).moves == 10
    assert solve_exact_anchored(gen_greedy_adversarial(10)).witness.colours() == [3, 2, 1]


def test_exact_budget_and_node_limit():
    with pytest.raises(BudgetExceeded):
        solve_exact_anchored(gen_checkerboard(6), budget=9)
    assert solve_exact_anchored(gen_checkerboard(6), budget=10).moves == 10
    with pytest.raises(NodeLimitExceeded):
        solve_exact_anchored(gen_random(12, 6, 0), max_nodes=50)


@given(boards(max_h=3, max_n=3, max_c=3))
def test_exact_free_matches_bfs(b):
    res = solve_exact_free(b)
    assert res.variant is Variant.FREE
    assert res.moves == oracles.bfs_min_free_moves(b.grid, b.c)
    _, flooded = play_sequence(b, res.witness)
    assert flooded


def test_exact_free_examples():
    assert solve_exact_free(MONO).moves == 0
    assert solve_exact_free(Board.from_rows([[1, 2, 1]])).moves == 1
    for n in (3, 4):
        b = gen_checkerboard(n)
        assert solve_exact_free(b).moves <= 2 * (n - 1)
        assert solve_exact_free(b).moves == solve_free_two_colors(b).moves


def test_exact_free_budget():
    with pytest.raises(BudgetExceeded):
        solve_exact_free(gen_checkerboard(4), budget=2)


HEURISTICS = [greedy_max_gain, greedy_perimeter, approx_cyclic, flood_row_by_row, flood_by_sections,
              lambda b: approx_shuffle(b, 3)]


@pytest.mark.parametrize("strategy", HEURISTICS)
@given(b=boards(max_h=5, max_n=5, max_c=5))
def test_every_strategy_floods(strategy, b):
    seq = strategy(b)
    assert seq.variant is Variant.ANCHORED
    assert oracles.monochrome(oracles.replay(b.grid, seq.colours()))


@pytest.mark.parametrize("strategy", HEURISTICS)
def test_monochrome_gives_empty(strategy):
    assert len(strategy(MONO)) == 0


def test_greedy_family():
    for n in (10, 11, 14, 20):
        b = gen_greedy_adversarial(n)
        assert len(greedy_max_gain(b)) == n
        assert len(greedy_perimeter(b)) == n
        assert solve_exact_anchored(b).moves == 3
    with pytest.raises(ValueError):
        gen_greedy_adversarial(9)


def test_greedy_ties_take_smallest_colour():
    b = Board.from_rows([[1, 3, 1], [2, 1, 1]])
    assert greedy_max_gain(b).colours()[0] == 2


@given(boards(max_h=4, max_n=4, max_c=4))
def test_cyclic_bound(b):
    m = solve_exact_anchored(b).moves
    if m >= 2:
        assert len(approx_cyclic(b)) <= cyclic_bound(b.c, m)
        if b.c >= 3:
            assert len(approx_cyclic(b)) <= (b.c - 1) * m


def test_cyclic_plays_no_ops():
    # 1 is the flood's own colour and 2 is not on the frontier yet; both are
    # still played, then 3 leaves two colours and the remaining one finishes
    b = Board.from_rows([[1, 3, 2], [3, 3, 2]], 3)
    assert approx_cyclic(b).colours() == [1, 2, 3, 2]


def test_shuffle_deterministic_per_seed():
    b = gen_random(6, 4, 1)
    assert approx_shuffle(b, 5) == approx_shuffle(b, 5)
    assert len({str(approx_shuffle(b, s)) for s in range(20)}) > 1


def test_rows_examples():
    assert len(flood_row_by_row(gen_checkerboard(6))) == 10
    for seed in range(30):
        b = gen_random(10, 4, seed)
        assert len(flood_row_by_row(b)) <= 36


def test_section_rows():
    for n in range(1, 60):
        for c in range(1, 30):
            ell, ends = section_rows(n, c)
            assert ell == math.ceil(math.sqrt(c / 2))
            assert len(ends) == ell
            assert ends == sorted(ends)
            assert all(1 <= y <= n for y in ends if n >= ell)


def test_sections_examples():
    assert len(flood_by_sections(gen_checkerboard(6))) <= 26
    for seed in range(5):
        assert len(flood_by_sections(gen_random(50, 8, seed))) <= 308


def test_marked_tiles():
    b = Board.from_rows([[1, 2, 3], [3, 1, 2]])
    marked = marked_tiles(b)
    # column 3 is always marked; colour 1 in column 2 appears nowhere further right
    assert marked[3] == [True, True]
    assert marked[2] == [False, True]


def test_height2_exhaustive_2x5():
    for c in (2, 3):
        for cells in itertools.product(range(1, c + 1), repeat=10):
            b = Board((cells[:5], cells[5:]), c)
            res = solve_height2(b)
            assert res.moves == solve_exact_anchored(b).moves
            assert play_sequence(b, res.witness)[1]


def test_height2_rejects_other_heights():
    with pytest.raises(ValueError):
        solve_height2(gen_checkerboard(3))


def test_free2_exhaustive_small():
    for h, n in ((1, 4), (2, 3), (3, 3)):
        for cells in itertools.product((1, 2), repeat=h * n):
            b = Board(tuple(tuple(cells[i * n:(i + 1) * n]) for i in range(h)), 2)
            res = solve_free_two_colors(b)
            assert res.moves == solve_exact_free(b).moves
            assert play_sequence(b, res.witness)[1]


def test_free2_rejects_more_colours():
    with pytest.raises(ValueError):
        solve_free_two_colors(Board.from_rows([[1, 2, 3]]))


def test_csv_row():
    b = gen_checkerboard(2)
    res = solve_exact_anchored(b)
    assert res.to_csv(b, header=True) == "variant,h,n,c,moves,optimal,witness\nanchored,2,2,2,2,1,2;1\n"
    heur = SolveResult.heuristic(MoveSequence.anchored([2, 1]))
    assert heur.csv_row(b)[5] == "0"


@settings(max_examples=30)
@given(boards(max_h=2, max_n=6, max_c=4), st.sampled_from(STRATEGIES))
def test_registry(b, name):
    if name == "height2" and b.h != 2 or name == "free2" and b.c != 2:
        with pytest.raises(ValueError):
            run_strategy(name, b)
        return
    res = run_strategy(name, b, seed=1)
    assert play_sequence(b, res.witness)[1]
