from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from conftest import BLUE, RED, graph
from rainbowmatch.alpha import (
    AlphaExceeded,
    HardnessReport,
    UnsupportedMultiplicity,
    enumerate_noncm_rainbow_matchings,
    solve,
    solve_alpha_cm,
)
from rainbowmatch.gadgets import CnfFormula, build_2k2_instance
from rainbowmatch.generate import random_instance
from rainbowmatch.oracle import brute_max_rainbow_matching
from rainbowmatch.reduction import solve_strict_cm

TWO_K2 = [(0, 1, RED), (2, 3, RED)]


def test_enumerate_single_class():
    g = graph(4, TWO_K2)
    assert list(enumerate_noncm_rainbow_matchings(g, [RED])) == [(), (0,), (1,)]


def test_enumerate_rejects_shared_vertex():
    g = graph(3, [(0, 1, RED), (1, 2, BLUE)])
    assert list(enumerate_noncm_rainbow_matchings(g, [RED, BLUE])) == [(), (0,), (1,)]


def test_enumerate_empty_budget():
    assert list(enumerate_noncm_rainbow_matchings(graph(4, TWO_K2), [])) == [()]


def test_alpha_zero_is_strict():
    g = graph(3, [(0, 1, RED), (1, 2, BLUE)])
    assert len(solve_alpha_cm(g, 0)) == len(solve_strict_cm(g))


def test_disjoint_blue():
    assert len(solve_alpha_cm(graph(6, TWO_K2 + [(4, 5, BLUE)]), 1)) == 2


def test_blocking_blue():
    assert len(solve_alpha_cm(graph(4, TWO_K2 + [(1, 2, BLUE)]), 1)) == 1


def test_budget_and_multiplicity_errors():
    with pytest.raises(AlphaExceeded):
        solve_alpha_cm(graph(4, TWO_K2), 0)
    with pytest.raises(UnsupportedMultiplicity):
        solve_alpha_cm(graph(4, TWO_K2, {RED: 2}), 1)


def three_2k2():
    return graph(12, [(4 * c + a, 4 * c + b, c) for c in range(3) for a, b in ((0, 1), (2, 3))])


def test_solve_dispatch():
    assert isinstance(solve(graph(3, [(0, 1, RED), (1, 2, BLUE)]), 0), list)
    rep = solve(three_2k2(), 2)
    assert isinstance(rep, HardnessReport)
    assert rep.noncm_colors == (0, 1, 2) and set(rep.witnesses) == {0, 1, 2}


def test_gadget_needs_hardness_report():
    g = build_2k2_instance(CnfFormula(3, (((0, True), (1, True), (2, True)),))).graph
    rep = solve(g, 0)
    assert isinstance(rep, HardnessReport)
    assert len(rep.noncm_colors) == sum(1 for c in g.colors if len(g.edges_of_color(c)) > 1)


@given(st.integers(0, 10**6), st.sampled_from([1, 2]))
def test_alpha_optimal(seed, k):
    g = random_instance(random.Random(seed), noncm=k)
    sol = solve_alpha_cm(g, 2)
    assert len(sol) == brute_max_rainbow_matching(g)[0]


def test_parallel_workers_same_answer():
    for seed in range(20):
        g = random_instance(random.Random(seed), noncm=2)
        assert solve_alpha_cm(g, 2, workers=4) == solve_alpha_cm(g, 2)
