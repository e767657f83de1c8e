from __future__ import annotations

import random

import pytest

from conftest import graph
from rainbowmatch.generate import random_instance
from rainbowmatch.oracle import TooLarge, brute_max_rainbow_matching, naive_max_rainbow_matching


def test_empty_graph():
    assert brute_max_rainbow_matching(graph(0, []))[0] == 0


def test_k4_perfect_matching_colours():
    k4 = graph(4, [(0, 1, 0), (2, 3, 0), (0, 2, 1), (1, 3, 1), (0, 3, 2), (1, 2, 2)])
    assert brute_max_rainbow_matching(k4)[0] == 1


def test_limit():
    with pytest.raises(TooLarge):
        brute_max_rainbow_matching(graph(2, [(0, 1, 0)] * 5), limit=4)


@pytest.mark.parametrize("seed", range(60))
def test_search_agrees_with_subset_enumeration(seed):
    rng = random.Random(seed)
    g = random_instance(rng, max_vertices=8, max_edges=11, noncm=seed % 3 if seed % 3 else 0)
    size, edges = brute_max_rainbow_matching(g)
    assert size == naive_max_rainbow_matching(g) == len(edges)
