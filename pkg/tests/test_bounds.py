import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import boards
from floodit import Board, FloodState, build_region_graph
from floodit.bounds import (HALF_LN7, count_non_touching_paths, distinct_colour_bound,
                            eccentricity_bound, expected_shuffle_moves, kl_divergence,
                            non_touching_ceiling, path_cost, path_cost_lower_bound,
                            random_board_tail_bound, random_board_tail_remainder, rows_bound,
                            sections_bound, worst_case_floor)
from floodit.generators import gen_checkerboard
from floodit.solvers import solve_exact_anchored

# frozen from oracles.non_touching_walks (brute force over all 4^l walks)
NON_TOUCHING = {1: 4, 2: 12, 3: 28, 4: 68, 5: 164, 6: 396, 7: 940, 8: 2244, 9: 5324, 10: 12668}


@given(boards(max_h=4, max_n=4, max_c=3))
def test_path_cost_is_lower_bound(b):
    res = path_cost_lower_bound(b)
    assert res.cost <= solve_exact_anchored(b).moves
    assert res.cost == oracles.cheapest_path_cost(b.grid)
    assert res.path[0] == (1, 1) and res.path[-1] == (b.h, b.n)
    assert path_cost(b, res.path) == res.cost
    for t, u in zip(res.path, res.path[1:]):
        assert abs(t[0] - u[0]) + abs(t[1] - u[1]) == 1


def test_path_cost_checkerboard():
    for n in range(1, 9):
        assert path_cost_lower_bound(gen_checkerboard(n)).cost == 2 * (n - 1)


@given(boards(max_h=4, max_n=4, max_c=4), st.lists(st.integers(1, 4), max_size=6))
def test_state_bounds_admissible(b, colours):
    g = build_region_graph(b)
    s = FloodState.initial(g)
    for k in colours:
        s = s.play(min(k, b.c))
    rest = oracles.bfs_min_moves(s.board().grid, b.c)
    assert distinct_colour_bound(s) <= rest
    assert eccentricity_bound(s) <= rest


def test_non_touching_counts():
    for length, count in NON_TOUCHING.items():
        assert count_non_touching_paths(length) == count
    assert count_non_touching_paths(0) == 1


def test_non_touching_against_brute_force():
    for length in range(1, 8):
        assert count_non_touching_paths(length) == oracles.non_touching_walks(length)


def test_non_touching_ceilings():
    for length in range(3, 11):
        v = count_non_touching_paths(length)
        assert v <= non_touching_ceiling(length)
        assert v <= 4 * 3 ** (length - 1)


def test_non_touching_shape_margin():
    assert count_non_touching_paths(3, shape=(7, 7)) == 28
    with pytest.raises(ValueError):
        count_non_touching_paths(4, shape=(7, 7))


def test_shuffle_expectation_values():
    assert expected_shuffle_moves(4, 1) == 4
    assert expected_shuffle_moves(4, 2) == 6
    for c in (3, 4, 6, 8):
        for m in range(1, 201):
            assert expected_shuffle_moves(c, m) == oracles.shuffle_expectation_closed_form(c, m)


def test_shuffle_expectation_growth():
    for c in (3, 4, 6, 8):
        prev = Fraction(0)
        for m in range(1, 201):
            t = expected_shuffle_moves(c, m)
            assert t >= prev
            assert abs(t - Fraction(2 * c, 3) * m) <= c
            prev = t
        assert abs(expected_shuffle_moves(c, 100) / (Fraction(2 * c, 3) * 100) - 1) < 0.05


def test_kl_divergence():
    assert kl_divergence(1, 1 / 3) == pytest.approx(math.log(3))
    assert kl_divergence(0.5, 0.5) == 0
    assert kl_divergence(43 / 44, 1 / 3) > 0.974 > HALF_LN7
    with pytest.raises(ValueError):
        kl_divergence(1.2, 0.5)
    with pytest.raises(ValueError):
        kl_divergence(0.5, 1)


def test_tail_bound_zero_k_decays():
    # with k = 0 each term is 2 exp((ln7/2 - ln c) l)
    n, c = 10, 3
    expect = sum(2 * math.exp((HALF_LN7 - math.log(c)) * l) for l in range(18, 181))
    assert random_board_tail_bound(n, c, 0) == pytest.approx(expect)


def test_tail_bound_monotone_in_n():
    for c in (3, 4, 5, 6):
        vals = []
        for n in range(20, 200, 20):
            k = (n - 1) / 22 if c == 3 else 2 * (3 / 10 - 1 / c) * (n - 1)
            vals.append(random_board_tail_bound(n, c, k) + random_board_tail_remainder(n, c, k))
        assert all(a >= b for a, b in zip(vals, vals[1:]))
        if c > 3:
            assert vals[-1] < 1e-3


def test_tail_bound_three_colours_decays_slowly():
    # the per-step exponent is only about -0.0014, so small n stays far above 1e-3
    tail = [random_board_tail_bound(n, 3, (n - 1) / 22) for n in (30, 3000, 10000)]
    assert tail[0] > 1 and tail[1] > 1e-3 > tail[2]


def test_tail_bound_domain():
    with pytest.raises(ValueError):
        random_board_tail_bound(10, 2, 1)
    with pytest.raises(ValueError):
        random_board_tail_bound(10, 3, 1, max_len=5)
    assert math.isinf(random_board_tail_remainder(10, 3, 100, max_len=20))


def test_closed_form_bounds():
    assert rows_bound(6, 2) == 10
    assert sections_bound(50, 8) == pytest.approx(308)
    assert worst_case_floor(9, 5) == 7
    assert worst_case_floor(4, 2) == 1


def test_one_by_one():
    b = Board.from_rows([[1]])
    assert path_cost_lower_bound(b).cost == 0
