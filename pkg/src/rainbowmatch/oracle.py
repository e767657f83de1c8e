"""Exponential ground-truth solvers for small instances."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .dcs import DegreeGraph
from .graph import ColorClassView, EdgeColoredMultigraph


class TooLarge(ValueError):
    pass


def brute_max_rainbow_matching(
    graph: EdgeColoredMultigraph, limit: int = 48
) -> tuple[int, list[int]]:
    """Exact maximum m-restricted matching by depth-first search.

    Branching follows the lowest free vertex that still has an admissible edge:
    either one of its edges is taken, or all of them are excluded and the vertex
    stays unmatched. A branch is cut when the current size plus
    ``min(colour capacity still usable, free covered vertices // 2)`` cannot
    beat the incumbent.
    """
    if len(graph.edges) > limit:
        raise TooLarge(f"{len(graph.edges)} edges exceed limit {limit}")
    n = graph.vertex_count
    inc: list[list[int]] = [[] for _ in range(n)]
    for i, (a, b, _) in enumerate(graph.edges):
        inc[a].append(i)
        inc[b].append(i)
    edges = graph.edges
    cap = {c: graph.m(c) for c in graph.colors}
    matched = bytearray(n)
    closed = bytearray(n)
    chosen: list[int] = []
    best: list[int] = []
    ceiling = n // 2

    def bound() -> int:
        live_vertices = 0
        per_color: dict[int, int] = {}
        for v in range(n):
            if matched[v] or closed[v]:
                continue
            hit = False
            for i in inc[v]:
                a, b, c = edges[i]
                w = b if a == v else a
                if cap[c] and not matched[w] and not closed[w]:
                    hit = True
                    if v < w:
                        per_color[c] = per_color.get(c, 0) + 1
            if hit:
                live_vertices += 1
        colour_room = sum(min(cap[c], k) for c, k in per_color.items())
        return min(colour_room, live_vertices // 2)

    def dfs(start: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
            if len(best) == ceiling:
                return
        if len(chosen) + bound() <= len(best):
            return
        v = start
        while v < n and (matched[v] or closed[v]):
            v += 1
        if v == n:
            return
        for i in inc[v]:
            a, b, c = edges[i]
            w = b if a == v else a
            if cap[c] and not matched[w] and not closed[w]:
                matched[v] = matched[w] = 1
                cap[c] -= 1
                chosen.append(i)
                dfs(v + 1)
                chosen.pop()
                cap[c] += 1
                matched[v] = matched[w] = 0
                if len(best) == ceiling:
                    return
        closed[v] = 1
        dfs(v + 1)
        closed[v] = 0

    dfs(0)
    return len(best), sorted(best)


def naive_max_rainbow_matching(graph: EdgeColoredMultigraph, limit: int = 12) -> int:
    """Full subset enumeration; only a check on the search above."""
    if len(graph.edges) > limit:
        raise TooLarge(f"{len(graph.edges)} edges exceed limit {limit}")
    from .graph import validate_matching

    for k in range(len(graph.edges), 0, -1):
        for sub in combinations(range(len(graph.edges)), k):
            if validate_matching(graph, sub).ok:
                return k
    return 0


def brute_max_lu_matching(instance: DegreeGraph, limit: int = 20) -> tuple[int | None, list[int]]:
    """Exact maximum (l, u)-matching, or ``(None, [])`` when infeasible."""
    m = len(instance.edges)
    if m > limit:
        raise TooLarge(f"{m} edges exceed limit {limit}")
    n = instance.vertex_count
    lo, hi = instance.lower, instance.upper
    deg = [0] * n
    left = list(instance.degrees())
    chosen: list[int] = []
    best: list[int] | None = None

    def dfs(i: int) -> None:
        nonlocal best
        if best is not None and len(chosen) + (m - i) <= len(best):
            return
        if i == m:
            if all(lo[v] <= deg[v] for v in range(n)):
                best = list(chosen)
            return
        a, b = instance.edges[i]
        left[a] -= 1
        left[b] -= 1
        if deg[a] < hi[a] and deg[b] < hi[b]:
            deg[a] += 1
            deg[b] += 1
            chosen.append(i)
            dfs(i + 1)
            chosen.pop()
            deg[a] -= 1
            deg[b] -= 1
        if deg[a] + left[a] >= lo[a] and deg[b] + left[b] >= lo[b]:
            dfs(i + 1)
        left[a] += 1
        left[b] += 1

    dfs(0)
    if best is None:
        return None, []
    return len(best), best


def brute_max_matching(vertex_count: int, edges: Sequence[tuple[int, int]]) -> int:
    """Maximum matching size by include/exclude recursion over edges."""
    used = bytearray(vertex_count)
    m = len(edges)
    best = 0

    def dfs(i: int, size: int) -> None:
        nonlocal best
        if size + (m - i) <= best:
            return
        if i == m:
            best = size
            return
        a, b = edges[i]
        if not used[a] and not used[b] and a != b:
            used[a] = used[b] = 1
            dfs(i + 1, size + 1)
            used[a] = used[b] = 0
        dfs(i + 1, size)

    dfs(0, 0)
    return best


def brute_cm_check(view: ColorClassView, limit: int = 12) -> bool:
    if len(view.vertices) > limit:
        raise TooLarge(f"{len(view.vertices)} vertices exceed limit {limit}")
    adj = view.adjacency()
    for trio in combinations(view.vertices, 3):
        k = sum(1 for x, y in combinations(trio, 2) if y in adj[x])
        if k == 1:
            return False
    return True
