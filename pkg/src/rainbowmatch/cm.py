"""Complete multipartite recognition with forbidden-subgraph witnesses.

A graph without isolated vertices is complete multipartite (CM) exactly when no
three vertices induce a single edge. When that fails we extend such a triple to
an induced 2K2, P4 or paw on four vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import ColorClassView, EdgeColoredMultigraph, color_class_view


class EmptyClass(ValueError):
    pass


class WitnessKind(str, Enum):
    TWO_K2 = "2K2"
    P4 = "P4"
    PAW = "paw"


# Edge patterns on positions 0..3 of a witness tuple.
WITNESS_EDGES: dict[WitnessKind, frozenset[tuple[int, int]]] = {
    WitnessKind.TWO_K2: frozenset({(0, 1), (2, 3)}),
    WitnessKind.P4: frozenset({(0, 1), (1, 2), (2, 3)}),
    WitnessKind.PAW: frozenset({(0, 1), (1, 2), (0, 2), (2, 3)}),
}


@dataclass(frozen=True)
class CmDecomposition:
    parts: tuple[tuple[int, ...], ...]

    @property
    def nontrivial_parts(self) -> tuple[int, ...]:
        return tuple(j for j, p in enumerate(self.parts) if len(p) >= 2)

    def part_of(self) -> dict[int, int]:
        return {v: j for j, p in enumerate(self.parts) for v in p}


@dataclass(frozen=True)
class ForbiddenWitness:
    kind: WitnessKind
    vertices: tuple[int, int, int, int]


def induced_pattern(adj: dict[int, set[int]], quad: tuple[int, ...]) -> frozenset[tuple[int, int]]:
    return frozenset(
        (i, j) for i in range(4) for j in range(i + 1, 4) if quad[j] in adj[quad[i]]
    )


def witness_is_valid(view: ColorClassView, w: ForbiddenWitness) -> bool:
    if len(set(w.vertices)) != 4 or not set(w.vertices) <= set(view.vertices):
        return False
    return induced_pattern(view.adjacency(), w.vertices) == WITNESS_EDGES[w.kind]


def decomposition_is_valid(view: ColorClassView, d: CmDecomposition) -> bool:
    """Exhaustive pairwise check of the CM part invariants."""
    adj = view.adjacency()
    flat = [v for p in d.parts for v in p]
    if sorted(flat) != list(view.vertices):
        return False
    part = d.part_of()
    for i, u in enumerate(view.vertices):
        for v in view.vertices[i + 1:]:
            if (v in adj[u]) == (part[u] == part[v]):
                return False
    return True


def _complement_components(vertices: tuple[int, ...], adj: dict[int, set[int]]) -> list[tuple[int, ...]]:
    unseen = set(vertices)
    parts = []
    for s in vertices:
        if s not in unseen:
            continue
        unseen.discard(s)
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            nxt = [y for y in unseen if y not in adj[x]]
            for y in nxt:
                unseen.discard(y)
                comp.append(y)
                stack.append(y)
        parts.append(tuple(sorted(comp)))
    parts.sort()
    return parts


def _find_witness(view: ColorClassView, adj: dict[int, set[int]]) -> ForbiddenWitness:
    for u, v in view.simple_edges:
        for w in view.vertices:
            if w == u or w == v or w in adj[u] or w in adj[v]:
                continue
            x = min(adj[w])
            xu, xv = x in adj[u], x in adj[v]
            if xu and xv:
                return ForbiddenWitness(WitnessKind.PAW, (u, v, x, w))
            if xv:
                return ForbiddenWitness(WitnessKind.P4, (u, v, x, w))
            if xu:
                return ForbiddenWitness(WitnessKind.P4, (v, u, x, w))
            return ForbiddenWitness(WitnessKind.TWO_K2, (u, v, w, x))
    raise AssertionError("no induced co-P3 in a graph that failed CM verification")


def cm_decompose(view: ColorClassView) -> CmDecomposition | ForbiddenWitness:
    """Return the part decomposition of a CM class, or a 4-vertex witness.

    Candidate parts are the components of the complement; they are accepted only
    if each is independent and every cross pair is adjacent. Otherwise the first
    edge ``uv`` (lexicographic) with a vertex ``w`` missing both endpoints is
    extended by the lowest-id neighbour ``x`` of ``w``.
    """
    if not view.edges:
        raise EmptyClass(view.color)
    adj = view.adjacency()
    parts = _complement_components(view.vertices, adj)
    part = {v: j for j, p in enumerate(parts) for v in p}
    ok = all(part[a] != part[b] for a, b in view.simple_edges)
    if ok:
        sizes = [len(p) for p in parts]
        # cross pairs adjacent <=> simple edge count equals the multipartite count
        n = len(view.vertices)
        cross = (n * n - sum(s * s for s in sizes)) // 2
        ok = cross == len(view.simple_edges)
    if ok:
        return CmDecomposition(tuple(parts))
    return _find_witness(view, adj)


@dataclass(frozen=True)
class ClassReport:
    results: dict[int, CmDecomposition | ForbiddenWitness]

    @property
    def noncm_colors(self) -> list[int]:
        return [c for c, r in self.results.items() if isinstance(r, ForbiddenWitness)]

    @property
    def noncm_count(self) -> int:
        return len(self.noncm_colors)

    def decompositions(self) -> dict[int, CmDecomposition]:
        return {c: r for c, r in self.results.items() if isinstance(r, CmDecomposition)}

    def witnesses(self) -> dict[int, ForbiddenWitness]:
        return {c: r for c, r in self.results.items() if isinstance(r, ForbiddenWitness)}

    def is_alpha_cm(self, alpha: int) -> bool:
        return self.noncm_count <= alpha


def classify_graph(graph: EdgeColoredMultigraph) -> ClassReport:
    return ClassReport({c: cm_decompose(color_class_view(graph, c)) for c in graph.colors})
