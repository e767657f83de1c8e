from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, strategies as st

from rainbowmatch.dcs import max_matching
from rainbowmatch.gadgets import (
    BUILDERS,
    CnfFormula,
    InvalidFormula,
    all_single_clause_formulas,
    format_dimacs,
    parse_dimacs,
    random_formula,
    restrict_instance,
    sat_bruteforce,
    shape_violations,
)
from rainbowmatch.oracle import TooLarge, brute_max_rainbow_matching

PHI = CnfFormula(3, (((0, True), (1, True), (2, True)),))


def test_sizes_single_clause():
    inst = BUILDERS["2k2"](PHI)
    assert inst.graph.vertex_count == 28
    assert inst.target == 14


@pytest.mark.parametrize("shape", sorted(BUILDERS))
def test_shape_and_oracle(shape):
    inst = BUILDERS[shape](PHI)
    assert shape_violations(inst) == []
    assert brute_max_rainbow_matching(inst.graph, limit=200)[0] == inst.target


@pytest.mark.parametrize("shape", ["p4", "paw"])
def test_max_matchings_avoid_connectors(shape):
    inst = BUILDERS[shape](PHI)
    pairs = [e[:2] for e in inst.graph.edges]
    for seed in range(40):
        m = max_matching(inst.graph.vertex_count, pairs, rng=random.Random(seed))
        assert len(m) == inst.target
        assert not set(m) & set(inst.connectors)


def test_restriction_falsifying_assignment():
    inst = BUILDERS["paw"](PHI)
    r = restrict_instance(inst, {0: False, 1: False, 2: False})
    assert brute_max_rainbow_matching(r.graph, limit=200)[0] < r.target
    r = restrict_instance(inst, {0: False, 1: True, 2: False})
    assert brute_max_rainbow_matching(r.graph, limit=200)[0] == r.target


def test_sat_examples():
    assert sat_bruteforce(PHI)
    assert sat_bruteforce(CnfFormula(0, ()))
    two = CnfFormula(3, (((0, True), (1, True), (2, True)), ((0, False), (1, True), (2, True))))
    assert sat_bruteforce(two)


def test_sat_too_large():
    with pytest.raises(TooLarge):
        sat_bruteforce(CnfFormula(21, ()))


@pytest.mark.parametrize(
    "clauses",
    [
        (((0, True), (1, True)),),
        (((0, True), (0, False), (1, True)),),
        (((0, True), (1, True), (5, True)),),
        tuple(((0, True), (1, True), (2, True)) for _ in range(4)),
    ],
)
def test_invalid_formulas(clauses):
    with pytest.raises(InvalidFormula):
        CnfFormula(3, clauses)


def test_dimacs_roundtrip():
    text = "c demo\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n"
    phi = parse_dimacs(text)
    assert phi.clauses[0] == ((0, True), (1, False), (2, True))
    assert parse_dimacs(format_dimacs(phi)) == phi


def test_dimacs_errors():
    with pytest.raises(InvalidFormula):
        parse_dimacs("p cnf 3 2\n1 2 3 0\n")
    with pytest.raises(InvalidFormula):
        parse_dimacs("1 2 3 0\n")


def test_single_clause_enumeration():
    phis = all_single_clause_formulas()
    assert len(phis) == 48 and len(set(phis)) == 48


@given(st.integers(0, 10**6), st.sampled_from(sorted(BUILDERS)))
def test_structure_random_formulas(seed, shape):
    rng = random.Random(seed)
    n = rng.randint(3, 6)
    m = rng.randint(0, n)
    phi = random_formula(rng, n, m)
    inst = BUILDERS[shape](phi)
    assert inst.graph.vertex_count == 6 * n + 6 * m + 4
    assert shape_violations(inst) == []
    pairs = [e[:2] for e in inst.graph.edges]
    assert len(max_matching(inst.graph.vertex_count, pairs)) == 3 * n + 3 * m + 2


@pytest.mark.parametrize("shape", sorted(BUILDERS))
def test_equivalence_under_all_restrictions(shape):
    inst = BUILDERS[shape](PHI)
    for bits in itertools.product((False, True), repeat=3):
        fixed = dict(enumerate(bits))
        r = restrict_instance(inst, fixed)
        got = brute_max_rainbow_matching(r.graph, limit=200)[0]
        assert (got == r.target) == sat_bruteforce(PHI, fixed)
