"""Rainbow matching when all but a few colour classes are CM.

Every rainbow matching on the non-CM classes is tried as a fixed part; its
vertices and the non-CM classes are deleted, and the CM remainder is solved
exactly. Vertex deletion keeps a CM class CM, so the remainder always qualifies.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from .cm import ClassReport, ForbiddenWitness, classify_graph
from .graph import EdgeColoredMultigraph
from .reduction import StrictTrace, solve_strict_cm_traced


class AlphaExceeded(ValueError):
    pass


class UnsupportedMultiplicity(ValueError):
    pass


def enumerate_noncm_rainbow_matchings(
    graph: EdgeColoredMultigraph, noncm_colors: Sequence[int]
) -> Iterator[tuple[int, ...]]:
    """Matchings with at most one edge from each listed class, the empty one first.

    Candidates come by size, then lexicographically by class order and input
    edge order.
    """
    classes = [graph.edges_of_color(c) for c in sorted(noncm_colors)]
    by_size: list[list[tuple[int, ...]]] = [[] for _ in range(len(classes) + 1)]

    def walk(k: int, picked: list[int], used: set[int]) -> None:
        if k == len(classes):
            by_size[len(picked)].append(tuple(picked))
            return
        walk(k + 1, picked, used)
        for i in classes[k]:
            a, b, _ = graph.edges[i]
            if a in used or b in used:
                continue
            picked.append(i)
            walk(k + 1, picked, used | {a, b})
            picked.pop()

    walk(0, [], set())
    rank = {c: k for k, c in enumerate(sorted(noncm_colors))}
    for group in by_size:
        yield from sorted(group, key=lambda t: [(rank[graph.edges[i][2]], i) for i in t])


@dataclass(frozen=True)
class AlphaPlan:
    noncm_colors: tuple[int, ...]
    candidate: tuple[int, ...]
    residual: EdgeColoredMultigraph
    residual_edges: tuple[int, ...]  # residual edge index -> original edge index


def residual_plan(
    graph: EdgeColoredMultigraph, noncm_colors: Sequence[int], candidate: Sequence[int]
) -> AlphaPlan:
    drop = set(noncm_colors)
    covered = {v for i in candidate for v in graph.edges[i][:2]}
    keep = [
        i
        for i, (a, b, c) in enumerate(graph.edges)
        if c not in drop and a not in covered and b not in covered
    ]
    kept_colors = {graph.edges[i][2] for i in keep}
    residual = EdgeColoredMultigraph(
        graph.vertex_count,
        tuple(graph.edges[i] for i in keep),
        {c: m for c, m in graph.multiplicity.items() if c in kept_colors},
    )
    return AlphaPlan(tuple(sorted(drop)), tuple(candidate), residual, tuple(keep))


def _solve_candidate(
    graph: EdgeColoredMultigraph, noncm: Sequence[int], cand: tuple[int, ...]
) -> tuple[list[int], StrictTrace]:
    plan = residual_plan(graph, noncm, cand)
    trace = solve_strict_cm_traced(plan.residual)
    rest = [plan.residual_edges[i] for i in trace.matching]
    touched = {v for i in cand for v in graph.edges[i][:2]}
    assert not touched & {v for i in rest for v in graph.edges[i][:2]}, "candidate overlaps residual"
    return sorted(cand + tuple(rest)), trace


def solve_alpha_cm(
    graph: EdgeColoredMultigraph,
    alpha_budget: int,
    report: ClassReport | None = None,
    workers: int = 1,
    traces: list[StrictTrace] | None = None,
) -> list[int]:
    """Maximum rainbow matching of an α-CM-colored graph with α <= ``alpha_budget``.

    If ``traces`` is given, the trace of every residual strict solve is appended.
    """
    report = report if report is not None else classify_graph(graph)
    noncm = report.noncm_colors
    if len(noncm) > alpha_budget:
        raise AlphaExceeded(f"{len(noncm)} non-CM classes exceed budget {alpha_budget}")
    bad = [c for c in noncm if graph.m(c) != 1]
    if bad:
        raise UnsupportedMultiplicity(f"non-CM classes with multiplicity > 1: {bad}")
    if not noncm:
        trace = solve_strict_cm_traced(graph)
        if traces is not None:
            traces.append(trace)
        return trace.matching
    candidates = list(enumerate_noncm_rainbow_matchings(graph, noncm))
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            solved = list(pool.map(lambda c: _solve_candidate(graph, noncm, c), candidates))
    else:
        solved = [_solve_candidate(graph, noncm, c) for c in candidates]
    if traces is not None:
        traces.extend(t for _, t in solved)
    results = [r for r, _ in solved]
    # first candidate wins ties
    best = max(range(len(results)), key=lambda k: (len(results[k]), -k))
    return results[best]


@dataclass(frozen=True)
class HardnessReport:
    noncm_colors: tuple[int, ...]
    witnesses: dict[int, ForbiddenWitness]
    alpha_budget: int


def solve(graph: EdgeColoredMultigraph, alpha_budget: int = 2) -> list[int] | HardnessReport:
    """Polynomial solve within the CM budget, a hardness report beyond it."""
    report = classify_graph(graph)
    if report.noncm_count > alpha_budget:
        return HardnessReport(tuple(report.noncm_colors), report.witnesses(), alpha_budget)
    return solve_alpha_cm(graph, alpha_budget, report)
