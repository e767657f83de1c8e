from __future__ import annotations

from itertools import combinations

from hypothesis import given, strategies as st

from conftest import BLUE, RED, graph
from rainbowmatch.cm import (
    CmDecomposition,
    ForbiddenWitness,
    WitnessKind,
    classify_graph,
    cm_decompose,
    decomposition_is_valid,
    witness_is_valid,
)
from rainbowmatch.gadgets import CnfFormula, build_2k2_instance
from rainbowmatch.graph import simple_class
from rainbowmatch.oracle import brute_cm_check


def test_k22_parts():
    res = cm_decompose(simple_class(RED, [(0, 2), (0, 3), (1, 2), (1, 3)]))
    assert isinstance(res, CmDecomposition)
    assert sorted(res.parts) == [(0, 1), (2, 3)]


def test_triangle_all_singletons():
    res = cm_decompose(simple_class(RED, [(0, 1), (1, 2), (0, 2)]))
    assert sorted(res.parts) == [(0,), (1,), (2,)]
    assert res.nontrivial_parts == ()


def test_2k2_witness():
    res = cm_decompose(simple_class(RED, [(0, 1), (2, 3)]))
    assert res == ForbiddenWitness(WitnessKind.TWO_K2, (0, 1, 2, 3))


def test_c5_gives_p4():
    view = simple_class(RED, [(i, (i + 1) % 5) for i in range(5)])
    res = cm_decompose(view)
    assert res.kind is WitnessKind.P4
    assert witness_is_valid(view, res)
    assert res.vertices == (0, 1, 2, 3)


def test_paw_witness():
    view = simple_class(RED, [(0, 1), (1, 2), (0, 2), (2, 3)])
    res = cm_decompose(view)
    assert res.kind is WitnessKind.PAW and witness_is_valid(view, res)


def test_classify_triangle_and_star():
    g = graph(8, [(0, 1, RED), (1, 2, RED), (0, 2, RED)] + [(3, v, BLUE) for v in range(4, 8)])
    assert classify_graph(g).noncm_colors == []


def test_classify_flags_2k2():
    g = graph(6, [(0, 1, RED), (2, 3, RED), (4, 5, BLUE)])
    rep = classify_graph(g)
    assert rep.noncm_colors == [RED]
    assert rep.witnesses()[RED].kind is WitnessKind.TWO_K2


def test_gadget_classes_non_cm():
    g = build_2k2_instance(CnfFormula(3, (((0, True), (1, True), (2, True)),))).graph
    rep = classify_graph(g)
    assert rep.noncm_colors == [c for c in g.colors if len(g.edges_of_color(c)) >= 2]


def test_single_edge_and_k22_brute():
    assert brute_cm_check(simple_class(RED, [(0, 1)]))
    assert brute_cm_check(simple_class(RED, [(0, 2), (0, 3), (1, 2), (1, 3)]))
    assert not brute_cm_check(simple_class(RED, [(0, 1), (2, 3)]))


all_pairs = list(combinations(range(6), 2))


@given(st.lists(st.sampled_from(all_pairs), min_size=1, unique=True))
def test_decompose_agrees_with_cherry_check(pairs):
    view = simple_class(BLUE, pairs)
    res = cm_decompose(view)
    assert isinstance(res, CmDecomposition) == brute_cm_check(view)
    if isinstance(res, CmDecomposition):
        assert decomposition_is_valid(view, res)
    else:
        assert witness_is_valid(view, res)


@given(st.lists(st.sampled_from(all_pairs), min_size=1, unique=True))
def test_decompose_ignores_parallel_copies(pairs):
    assert cm_decompose(simple_class(RED, pairs)) == cm_decompose(simple_class(RED, pairs + pairs[:2]))
