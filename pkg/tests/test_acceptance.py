"""Acceptance criteria, one printed PASS/FAIL line each."""

from __future__ import annotations

import pytest

from rainbowmatch import experiments as ex

_RUNS: dict[str, ex.SuiteResult] = {}


def _run(key: str) -> ex.SuiteResult:
    if key not in _RUNS:
        if key.startswith("gadget"):
            _RUNS["gadget-equivalence"], _RUNS["gadget-structure"] = ex.run_gadget_suite()
        else:
            _RUNS[key] = {
                "strict": ex.run_strict_suite,
                "alpha": ex.run_alpha_suite,
                "dcs": ex.run_dcs_suite,
                "blossom": ex.run_blossom_suite,
                "scale": ex.run_scale,
            }[key]()
    return _RUNS[key]


@pytest.fixture
def report(capsys):
    def emit(number: int, title: str, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\ncriterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}")
        assert ok, detail

    return emit


def test_criterion_1_strict_optimality(report):
    r = _run("strict")
    ok = r.cases >= 500 and r.failures == 0 and r.elapsed < 300
    report(1, "strict-CM optimality", ok, f"{r.agree}/{r.cases} agree with oracle in {r.elapsed:.1f}s (< 300s)")


def test_criterion_2_alpha_optimality(report):
    r = _run("alpha")
    ok = r.cases >= 300 and r.failures == 0
    report(2, "alpha-CM optimality", ok, f"{r.agree}/{r.cases} agree with oracle")


def test_criterion_3_dcs(report):
    r = _run("dcs")
    ok = r.cases >= 500 and r.failures == 0
    detail = f"{r.agree}/{r.cases} agree on feasibility and optimum ({r.stats.get('infeasible', 0)} infeasible)"
    report(3, "(l,u)-matching correctness", ok, detail)


def test_criterion_4_blossom(report):
    r = _run("blossom")
    ok = r.cases >= 1002 and r.failures == 0
    report(4, "blossom correctness", ok, f"{r.agree}/{r.cases} agree (random connected + Petersen + C5)")


def test_criterion_5_sat_equivalence(report):
    r = _run("gadget-equivalence")
    ok = (
        r.stats["formulas"] >= 50
        and r.stats.get("unsat_controls", 0) >= 1
        and r.failures == 0
        and r.elapsed < 900
    )
    detail = (
        f"{r.agree}/{r.cases} checks over {r.stats['formulas']} formulas x 3 shapes, "
        f"{r.stats.get('unsat_controls', 0)} unsat restricted controls, {r.elapsed:.1f}s (< 900s)"
    )
    report(5, "SAT iff rainbow optimum hits target", ok, detail)


def test_criterion_6_gadget_structure(report):
    r = _run("gadget-structure")
    ok = r.failures == 0 and r.stats.get("blossom_runs", 0) > 0
    detail = f"{r.agree}/{r.cases} instances pass shape/size checks, {r.stats.get('blossom_runs', 0)} randomized blossom runs avoid connectors"
    report(6, "gadget structure", ok, detail)


def test_criterion_7_reduction_invariants(report):
    runs = [_run("strict"), _run("alpha")]
    traces = sum(r.stats.get("traces", 0) for r in runs)
    bad = sum(r.stats.get("trace_failures", 0) for r in runs)
    ok = traces >= 800 and bad == 0
    report(7, "reduction invariants", ok, f"{traces - bad}/{traces} traced solves satisfy structure and cardinality identities")


def test_criterion_8_scale(report):
    r = _run("scale")
    ok = r.failures == 0 and r.elapsed < 60
    report(8, "scale", ok, f"{r.log[0]} in {r.elapsed:.1f}s (< 60s)")


def test_criterion_9_determinism(report):
    first = {k: _run(k).digest() for k in ("strict", "alpha", "dcs", "blossom", "gadget-equivalence", "gadget-structure", "scale")}
    second = {k: r.digest() for k, r in ex.run_all().items()}
    diff = sorted(k for k in first if first[k] != second[k])
    report(9, "determinism", not diff, "identical reports across two runs" if not diff else f"differ: {diff}")
