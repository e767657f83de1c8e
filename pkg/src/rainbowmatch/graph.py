"""Edge-colored multigraphs, color-class views and matching validation."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping


class GraphError(ValueError):
    """Base class for malformed-instance errors."""


class LoopEdge(GraphError):
    pass


class IdOutOfRange(GraphError):
    pass


class UnknownColor(KeyError):
    pass


class IndexOutOfRange(IndexError):
    pass


Edge = tuple[int, int, int]


@dataclass(frozen=True)
class EdgeColoredMultigraph:
    """Loopless multigraph on vertices ``0..vertex_count-1``.

    ``edges`` holds ``(a, b, color)`` triples in input order; edge identity is the
    index into this tuple. ``multiplicity`` maps a color to its bound m_i; absent
    colors default to 1.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    multiplicity: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple((int(a), int(b), int(c)) for a, b, c in self.edges))
        object.__setattr__(self, "multiplicity", dict(self.multiplicity))
        if self.vertex_count < 0:
            raise GraphError("vertex_count must be nonnegative")
        for a, b, c in self.edges:
            if a == b:
                raise LoopEdge(f"loop at vertex {a}")
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise IdOutOfRange(f"edge ({a}, {b}) outside 0..{self.vertex_count - 1}")
            if c < 0:
                raise GraphError(f"negative color {c}")
        used = {c for _, _, c in self.edges}
        for c, m in self.multiplicity.items():
            if c not in used:
                raise UnknownColor(c)
            if m < 1:
                raise GraphError(f"multiplicity of color {c} must be positive, got {m}")

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[tuple[int, int, int]],
        multiplicity: Mapping[int, int] | None = None,
    ) -> EdgeColoredMultigraph:
        return cls(vertex_count, tuple(edges), dict(multiplicity or {}))

    @property
    def colors(self) -> list[int]:
        return list(self.color_index)

    def m(self, color: int) -> int:
        return self.multiplicity.get(color, 1)

    def edges_of_color(self, color: int) -> list[int]:
        return list(self.color_index.get(color, ()))

    @cached_property
    def color_index(self) -> dict[int, tuple[int, ...]]:
        """Edge indices grouped by color, colors ascending, edges in input order."""
        groups: dict[int, list[int]] = {}
        for i, (_, _, c) in enumerate(self.edges):
            groups.setdefault(c, []).append(i)
        return {c: tuple(groups[c]) for c in sorted(groups)}


@dataclass(frozen=True)
class ColorClassView:
    color: int
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    simple_edges: tuple[tuple[int, int], ...]

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for a, b in self.simple_edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj


def simple_class(color: int, pairs: Iterable[tuple[int, int]]) -> ColorClassView:
    """Build a view directly from endpoint pairs (edge indices are positional)."""
    pairs = list(pairs)
    g = EdgeColoredMultigraph.from_edges(
        1 + max((max(p) for p in pairs), default=-1), [(a, b, color) for a, b in pairs]
    )
    return color_class_view(g, color)


def color_class_view(graph: EdgeColoredMultigraph, color: int) -> ColorClassView:
    idx = graph.edges_of_color(color)
    if not idx:
        raise UnknownColor(color)
    verts: set[int] = set()
    simple: set[tuple[int, int]] = set()
    for i in idx:
        a, b, _ = graph.edges[i]
        verts.update((a, b))
        simple.add((min(a, b), max(a, b)))
    return ColorClassView(color, tuple(sorted(verts)), tuple(idx), tuple(sorted(simple)))


@dataclass(frozen=True)
class ValidationReport:
    is_matching: bool
    is_m_restricted: bool
    per_color_counts: dict[int, int]

    @property
    def ok(self) -> bool:
        return self.is_matching and self.is_m_restricted


def validate_matching(graph: EdgeColoredMultigraph, edge_indices: Iterable[int]) -> ValidationReport:
    chosen = list(edge_indices)
    for i in chosen:
        if not 0 <= i < len(graph.edges):
            raise IndexOutOfRange(i)
    seen: set[int] = set()
    is_matching = len(set(chosen)) == len(chosen)
    counts: Counter[int] = Counter()
    for i in set(chosen):
        a, b, c = graph.edges[i]
        if a in seen or b in seen:
            is_matching = False
        seen.update((a, b))
        counts[c] += 1
    restricted = all(n <= graph.m(c) for c, n in counts.items())
    return ValidationReport(is_matching, restricted, dict(sorted(counts.items())))


def is_restricted_matching(graph: EdgeColoredMultigraph, edge_indices: Iterable[int]) -> bool:
    """True for a matching that respects every multiplicity bound."""
    return validate_matching(graph, edge_indices).ok
