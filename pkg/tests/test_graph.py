from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from conftest import BLUE, RED, graph
from rainbowmatch.graph import (
    IdOutOfRange,
    IndexOutOfRange,
    LoopEdge,
    UnknownColor,
    color_class_view,
    is_restricted_matching,
    validate_matching,
)


def test_class_view_projects_vertices_and_edges():
    g = graph(4, [(0, 1, RED), (2, 3, RED), (1, 2, BLUE)])
    red = color_class_view(g, RED)
    assert red.vertices == (0, 1, 2, 3)
    assert len(red.edges) == 2
    blue = color_class_view(g, BLUE)
    assert blue.vertices == (1, 2) and len(blue.edges) == 1


def test_parallel_edges_collapse_in_simple_view():
    v = color_class_view(graph(2, [(0, 1, RED), (0, 1, RED)]), RED)
    assert len(v.simple_edges) == 1
    assert len(v.edges) == 2


def test_unknown_color_view():
    with pytest.raises(UnknownColor):
        color_class_view(graph(2, [(0, 1, RED)]), BLUE)


def test_validation_respects_multiplicity():
    rep = validate_matching(graph(4, [(0, 1, RED), (2, 3, RED)]), [0, 1])
    assert rep.is_matching and not rep.is_m_restricted
    rep = validate_matching(graph(4, [(0, 1, RED), (2, 3, RED)], {RED: 2}), [0, 1])
    assert rep.is_matching and rep.is_m_restricted


def test_shared_vertex_is_not_matching():
    rep = validate_matching(graph(3, [(0, 1, RED), (1, 2, BLUE)]), [0, 1])
    assert not rep.is_matching


def test_bad_index_raises():
    with pytest.raises(IndexOutOfRange):
        validate_matching(graph(2, [(0, 1, RED)]), [3])


@pytest.mark.parametrize(
    "edges, exc",
    [([(1, 1, RED)], LoopEdge), ([(0, 5, RED)], IdOutOfRange), ([(-1, 0, RED)], IdOutOfRange)],
)
def test_construction_errors(edges, exc):
    with pytest.raises(exc):
        graph(3, edges)


def test_multiplicity_for_absent_color():
    with pytest.raises(UnknownColor):
        graph(2, [(0, 1, RED)], {BLUE: 2})


pairs = st.lists(
    st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 2)).filter(lambda t: t[0] != t[1]),
    max_size=10,
)


@given(pairs, st.data())
def test_validation_matches_definition(edges, data):
    g = graph(6, edges)
    sub = data.draw(st.lists(st.sampled_from(range(len(edges))), unique=True) if edges else st.just([]))
    ends = [v for i in sub for v in edges[i][:2]]
    colors = [edges[i][2] for i in sub]
    expect = len(ends) == len(set(ends)) and len(colors) == len(set(colors))
    assert is_restricted_matching(g, sub) == expect
