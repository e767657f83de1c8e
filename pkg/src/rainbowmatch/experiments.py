"""Seeded oracle-comparison experiments.

Each runner returns a :class:`SuiteResult` whose ``log`` is a deterministic
text record (no timings), so two runs with the same config can be compared
byte for byte.
"""

from __future__ import annotations

import hashlib
import itertools
import random
import time
from dataclasses import dataclass, field

from .alpha import solve_alpha_cm
from .cm import classify_graph
from .dcs import DegreeGraph, max_lu_matching, max_matching, verify_lu
from .gadgets import (
    BUILDERS,
    CnfFormula,
    all_single_clause_formulas,
    random_formula,
    restrict_instance,
    sat_bruteforce,
    shape_violations,
)
from .generate import random_instance, random_scale_instance
from .graph import is_restricted_matching
from .oracle import brute_max_lu_matching, brute_max_matching, brute_max_rainbow_matching
from .reduction import StrictTrace, SolverInvariantViolation, check_structure, solve_strict_cm_traced


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: int = 0
    elapsed: float = 0.0
    log: list[str] = field(default_factory=list)
    stats: dict[str, int] = field(default_factory=dict)

    @property
    def agree(self) -> int:
        return self.cases - self.failures

    def record(self, ok: bool, line: str) -> None:
        self.cases += 1
        self.failures += not ok
        self.log.append(("ok " if ok else "FAIL ") + line)

    def bump(self, key: str, by: int = 1) -> None:
        self.stats[key] = self.stats.get(key, 0) + by

    def digest(self) -> str:
        body = "\n".join(self.log + [f"{k}={v}" for k, v in sorted(self.stats.items())])
        return hashlib.sha256(body.encode()).hexdigest()


def _rng(seed: int, k: int) -> random.Random:
    return random.Random(seed * 1_000_003 + k)


def trace_invariants(tr: StrictTrace) -> str | None:
    """None if the (l,u) solution inside ``tr`` has the required structure."""
    try:
        states = check_structure(tr.rmap, tr.lu_solution)
    except SolverInvariantViolation as exc:
        return str(exc)
    if not verify_lu(tr.instance, tr.lu_solution):
        return "solution violates degree intervals"
    chosen = sum(1 for s in states.values() if s.half_edges)
    const = sum(2 * cg.n - 1 for cg in tr.rmap.classes.values())
    if len(tr.lu_solution) != const + chosen:
        return f"|M'|={len(tr.lu_solution)} but sum(2n_i-1)+chosen={const + chosen}"
    if tr.rmap.half_edge_count(tr.lu_solution) != 2 * len(tr.matching):
        return "h(M') != 2|M|"
    return None


@dataclass(frozen=True)
class RandomSuiteConfig:
    instances: int = 500
    seed: int = 1
    max_vertices: int = 10
    max_edges: int = 14
    max_colors: int = 6
    multiplicities: tuple[int, ...] = (1, 2)


def _check_traces(res: SuiteResult, traces: list[StrictTrace], tag: str) -> None:
    for tr in traces:
        res.bump("traces")
        why = trace_invariants(tr)
        if why:
            res.bump("trace_failures")
            res.log.append(f"TRACE {tag} {why}")


def run_strict_suite(cfg: RandomSuiteConfig = RandomSuiteConfig()) -> SuiteResult:
    res = SuiteResult("strict")
    t0 = time.perf_counter()
    for k in range(cfg.instances):
        g = random_instance(
            _rng(cfg.seed, k),
            max_vertices=cfg.max_vertices,
            max_edges=cfg.max_edges,
            max_colors=cfg.max_colors,
            multiplicities=cfg.multiplicities,
        )
        assert classify_graph(g).noncm_count == 0
        tr = solve_strict_cm_traced(g)
        want, _ = brute_max_rainbow_matching(g)
        ok = len(tr.matching) == want and is_restricted_matching(g, tr.matching)
        res.record(ok, f"#{k} n={g.vertex_count} m={len(g.edges)} got={len(tr.matching)} oracle={want}")
        _check_traces(res, [tr], f"#{k}")
    res.elapsed = time.perf_counter() - t0
    return res


def run_alpha_suite(cfg: RandomSuiteConfig = RandomSuiteConfig(instances=300, seed=2)) -> SuiteResult:
    res = SuiteResult("alpha")
    t0 = time.perf_counter()
    for k in range(cfg.instances):
        noncm = 1 + k % 2
        g = random_instance(
            _rng(cfg.seed, k),
            max_vertices=cfg.max_vertices,
            max_edges=cfg.max_edges,
            max_colors=cfg.max_colors,
            noncm=noncm,
            multiplicities=cfg.multiplicities,
        )
        assert classify_graph(g).noncm_count == noncm
        traces: list[StrictTrace] = []
        sol = solve_alpha_cm(g, 2, traces=traces)
        want, _ = brute_max_rainbow_matching(g)
        ok = len(sol) == want and is_restricted_matching(g, sol)
        res.record(ok, f"#{k} noncm={noncm} got={len(sol)} oracle={want}")
        _check_traces(res, traces, f"#{k}")
    res.elapsed = time.perf_counter() - t0
    return res


@dataclass(frozen=True)
class DcsSuiteConfig:
    instances: int = 500
    seed: int = 3
    max_vertices: int = 8
    max_edges: int = 14
    max_bound: int = 3


def random_degree_graph(rng: random.Random, cfg: DcsSuiteConfig) -> DegreeGraph:
    n = rng.randint(2, cfg.max_vertices)
    m = rng.randint(0, cfg.max_edges)
    edges = []
    for _ in range(m):
        a, b = rng.sample(range(n), 2)
        edges.append((a, b))
    lower, upper = [], []
    for _ in range(n):
        lo, hi = sorted((rng.randint(0, cfg.max_bound), rng.randint(0, cfg.max_bound)))
        lower.append(lo)
        upper.append(hi)
    return DegreeGraph(n, tuple(edges), tuple(lower), tuple(upper))


def run_dcs_suite(cfg: DcsSuiteConfig = DcsSuiteConfig()) -> SuiteResult:
    res = SuiteResult("dcs")
    t0 = time.perf_counter()
    for k in range(cfg.instances):
        inst = random_degree_graph(_rng(cfg.seed, k), cfg)
        want, _ = brute_max_lu_matching(inst, limit=cfg.max_edges)
        sol = max_lu_matching(inst)
        got = None if sol is None else len(sol)
        if want is None:
            res.bump("infeasible")
        ok = got == want and (sol is None or verify_lu(inst, sol))
        res.record(ok, f"#{k} n={inst.vertex_count} m={len(inst.edges)} got={got} oracle={want}")
    res.elapsed = time.perf_counter() - t0
    return res


@dataclass(frozen=True)
class BlossomSuiteConfig:
    instances: int = 1000
    seed: int = 4
    max_vertices: int = 10
    max_edges: int = 12


def random_connected_graph(rng: random.Random, cfg: BlossomSuiteConfig) -> tuple[int, list[tuple[int, int]]]:
    n = rng.randint(2, min(cfg.max_vertices, cfg.max_edges + 1))
    order = list(range(n))
    rng.shuffle(order)
    edges = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    for _ in range(rng.randint(0, cfg.max_edges - len(edges))):
        a, b = rng.sample(range(n), 2)
        edges.append((a, b))
    rng.shuffle(edges)
    return n, edges


PETERSEN = [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)] + [
    (5 + i, 5 + (i + 2) % 5) for i in range(5)
]


def run_blossom_suite(cfg: BlossomSuiteConfig = BlossomSuiteConfig()) -> SuiteResult:
    res = SuiteResult("blossom")
    t0 = time.perf_counter()
    named = [("petersen", 10, PETERSEN, 5), ("c5", 5, [(i, (i + 1) % 5) for i in range(5)], 2)]
    for name, n, edges, size in named:
        got = len(max_matching(n, edges))
        res.record(got == size == brute_max_matching(n, edges), f"{name} got={got} expected={size}")
    for k in range(cfg.instances):
        n, edges = random_connected_graph(_rng(cfg.seed, k), cfg)
        want = brute_max_matching(n, edges)
        m = max_matching(n, edges)
        ends = [v for i in m for v in edges[i]]
        ok = len(m) == want and len(ends) == len(set(ends))
        res.record(ok, f"#{k} n={n} m={len(edges)} got={len(m)} oracle={want}")
    res.elapsed = time.perf_counter() - t0
    return res


@dataclass(frozen=True)
class GadgetSuiteConfig:
    seed: int = 5
    random_two_clause: int = 12
    blossom_runs: int = 25
    oracle_limit: int = 400


def gadget_formulas(cfg: GadgetSuiteConfig) -> list[CnfFormula]:
    rng = random.Random(cfg.seed)
    out = [CnfFormula(3, ())]
    out += all_single_clause_formulas(3)
    out += [random_formula(rng, 3, 2) for _ in range(cfg.random_two_clause)]
    return out


def run_gadget_suite(cfg: GadgetSuiteConfig = GadgetSuiteConfig()) -> tuple[SuiteResult, SuiteResult]:
    """Equivalence with SAT (plain and restricted) and structural checks.

    The first result covers the satisfiability equivalence, the second the
    shape, plain matching size and connector-avoidance checks.
    """
    eq, st = SuiteResult("gadget-equivalence"), SuiteResult("gadget-structure")
    t0 = time.perf_counter()
    for fi, phi in enumerate(gadget_formulas(cfg)):
        n, m = phi.variable_count, len(phi.clauses)
        sat = sat_bruteforce(phi)
        eq.bump("formulas")
        for shape, build in BUILDERS.items():
            inst = build(phi)
            got, _ = brute_max_rainbow_matching(inst.graph, limit=cfg.oracle_limit)
            eq.record((got == inst.target) == sat, f"phi{fi} {shape} sat={sat} oracle={got} target={inst.target}")
            for bits in itertools.product((False, True), repeat=n):
                fixed = dict(enumerate(bits))
                r = restrict_instance(inst, fixed)
                want = sat_bruteforce(phi, fixed)
                got_r, _ = brute_max_rainbow_matching(r.graph, limit=cfg.oracle_limit)
                if not want:
                    eq.bump("unsat_controls")
                tag = "".join("1" if b else "0" for b in bits)
                eq.record((got_r == r.target) == want, f"phi{fi} {shape} fix={tag} sat={want} oracle={got_r}")

            bad = shape_violations(inst)
            pairs = [e[:2] for e in inst.graph.edges]
            size = len(max_matching(inst.graph.vertex_count, pairs))
            ok = not bad and size == 3 * n + 3 * m + 2
            if m == 1 and inst.connectors:
                conn = set(inst.connectors)
                for s in range(cfg.blossom_runs):
                    mm = max_matching(inst.graph.vertex_count, pairs, rng=random.Random(s))
                    st.bump("blossom_runs")
                    if len(mm) != size or conn & set(mm):
                        ok = False
            st.record(ok, f"phi{fi} {shape} bad_classes={len(bad)} matching={size}")
    eq.elapsed = st.elapsed = time.perf_counter() - t0
    return eq, st


@dataclass(frozen=True)
class ScaleConfig:
    seed: int = 8
    vertices: int = 2000
    edges: int = 10000
    colors: int = 500


def run_scale(cfg: ScaleConfig = ScaleConfig()) -> SuiteResult:
    res = SuiteResult("scale")
    g = random_scale_instance(cfg.seed, cfg.vertices, cfg.edges, cfg.colors)
    t0 = time.perf_counter()
    tr = solve_strict_cm_traced(g)
    res.elapsed = time.perf_counter() - t0
    ok = is_restricted_matching(g, tr.matching) and trace_invariants(tr) is None
    res.record(
        ok,
        f"n={g.vertex_count} m={len(g.edges)} k={len(g.colors)} "
        f"lu_vertices={tr.instance.vertex_count} size={len(tr.matching)}",
    )
    return res


def run_all() -> dict[str, SuiteResult]:
    eq, st = run_gadget_suite()
    return {
        "strict": run_strict_suite(),
        "alpha": run_alpha_suite(),
        "dcs": run_dcs_suite(),
        "blossom": run_blossom_suite(),
        "gadget-equivalence": eq,
        "gadget-structure": st,
        "scale": run_scale(),
    }
