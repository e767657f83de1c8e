from __future__ import annotations

import random
from types import SimpleNamespace

import pytest
from hypothesis import given, strategies as st

from conftest import PETERSEN
from rainbowmatch.dcs import DegreeGraph, _cover_required, max_lu_matching, max_matching, verify_lu
from rainbowmatch.oracle import brute_max_lu_matching, brute_max_matching


def cycle(n):
    return [(i, (i + 1) % n) for i in range(n)]


@pytest.mark.parametrize("n, edges, size", [(4, cycle(4), 2), (5, cycle(5), 2), (10, PETERSEN, 5)])
def test_blossom_examples(n, edges, size):
    m = max_matching(n, edges)
    assert len(m) == size
    ends = [v for i in m for v in edges[i]]
    assert len(ends) == len(set(ends))


def test_blossom_parallel_and_empty():
    assert max_matching(3, []) == []
    assert len(max_matching(2, [(0, 1), (0, 1)])) == 1


edge_lists = st.integers(2, 9).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]), max_size=13),
    )
)


@given(edge_lists, st.integers(0, 2**16))
def test_blossom_matches_brute(inst, seed):
    n, edges = inst
    want = brute_max_matching(n, edges)
    assert len(max_matching(n, edges)) == want
    assert len(max_matching(n, edges, rng=random.Random(seed))) == want


def dg(n, edges, bounds):
    return DegreeGraph(n, tuple(edges), tuple(b[0] for b in bounds), tuple(b[1] for b in bounds))


@pytest.mark.parametrize(
    "inst, size",
    [
        (dg(3, [(0, 1), (1, 2)], [(0, 1), (1, 1), (0, 1)]), 1),
        (dg(3, cycle(3), [(1, 1)] * 3), None),
        (dg(4, cycle(4), [(1, 1)] * 4), 2),
        (dg(4, [(0, 1), (0, 2), (0, 3)], [(2, 2), (0, 1), (0, 1), (0, 1)]), 2),
        (dg(2, [(0, 1)], [(0, 1), (0, 1)]), 1),
    ],
)
def test_lu_examples(inst, size):
    sol = max_lu_matching(inst)
    if size is None:
        assert sol is None
    else:
        assert len(sol) == size and verify_lu(inst, sol)


def test_verify_lu_examples():
    c4 = dg(4, cycle(4), [(1, 1)] * 4)
    assert verify_lu(c4, [0, 2])
    assert not verify_lu(c4, [0, 1, 2])
    assert verify_lu(dg(3, cycle(3), [(0, 0)] * 3), [])


def test_cover_step_repairs_uncovering_matching():
    # required r1, r2 and optional o; the maximum matching r1-o leaves r2 bare
    g = SimpleNamespace(n=3, adj=[[2, 1], [0], [0]], required=[True, True, False])
    mate = [2, -1, 0]
    fixed = _cover_required(g, mate)
    assert fixed == [1, 0, -1]


def test_cover_step_reports_impossible():
    # two required vertices hanging off one optional hub
    g = SimpleNamespace(n=3, adj=[[2], [2], [0, 1]], required=[True, True, False])
    assert _cover_required(g, [2, -1, 0]) is None


bounds = st.tuples(st.integers(0, 3), st.integers(0, 3)).map(lambda t: (min(t), max(t)))
lu_instances = st.integers(1, 8).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]), max_size=14),
        st.lists(bounds, min_size=n, max_size=n),
    )
)


@given(lu_instances)
def test_lu_matches_brute(t):
    inst = dg(*t)
    want, _ = brute_max_lu_matching(inst, limit=14)
    sol = max_lu_matching(inst)
    assert (sol is None) == (want is None)
    if sol is not None:
        assert len(sol) == want and verify_lu(inst, sol)
