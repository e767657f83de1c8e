"""Seeded random instance generators."""

from __future__ import annotations

import random
from itertools import combinations

from .cm import ForbiddenWitness, cm_decompose
from .graph import EdgeColoredMultigraph, simple_class


def random_cm_class(
    rng: random.Random, vertex_count: int, max_edges: int, parallel_prob: float = 0.1
) -> list[tuple[int, int]]:
    """Edges of a random complete multipartite graph with at most ``max_edges`` edges."""
    while True:
        k = rng.randint(2, min(vertex_count, 6))
        verts = rng.sample(range(vertex_count), k)
        q = rng.randint(2, k)
        label = [rng.randrange(q) for _ in verts]
        # ensure at least two non-empty parts
        label[0], label[1] = 0, 1
        pairs = [
            (verts[i], verts[j])
            for i, j in combinations(range(k), 2)
            if label[i] != label[j]
        ]
        if len(pairs) <= max_edges:
            break
    rng.shuffle(pairs)
    pairs = [(b, a) if rng.random() < 0.5 else (a, b) for a, b in pairs]
    extra = [p for p in pairs if rng.random() < parallel_prob]
    return pairs + extra[: max_edges - len(pairs)]


def random_noncm_class(
    rng: random.Random, vertex_count: int, max_edges: int
) -> list[tuple[int, int]]:
    """Edges of a random graph that is not complete multipartite."""
    assert vertex_count >= 4 and max_edges >= 2
    while True:
        k = rng.randint(4, min(vertex_count, 7))
        verts = rng.sample(range(vertex_count), k)
        pairs = [p for p in combinations(verts, 2) if rng.random() < 0.45]
        if not 2 <= len(pairs) <= max_edges:
            continue
        if isinstance(cm_decompose(simple_class(0, pairs)), ForbiddenWitness):
            rng.shuffle(pairs)
            return pairs


def random_instance(
    rng: random.Random,
    *,
    max_vertices: int = 10,
    max_edges: int = 14,
    max_colors: int = 6,
    noncm: int = 0,
    multiplicities: tuple[int, ...] = (1, 2),
) -> EdgeColoredMultigraph:
    """Random edge-colored graph with exactly ``noncm`` non-CM classes.

    Non-CM classes always carry multiplicity 1; the CM classes draw theirs from
    ``multiplicities``.
    """
    n = rng.randint(max(4, 2 * noncm + 2) if noncm else 2, max_vertices)
    k = rng.randint(max(1, noncm), max_colors)
    edges: list[tuple[int, int, int]] = []
    mult: dict[int, int] = {}
    for c in range(k):
        room = max_edges - len(edges)
        if c < noncm:
            cls = random_noncm_class(rng, n, min(room, 6))
        elif room >= 1:
            cls = random_cm_class(rng, n, min(room, 6))
            m = rng.choice(multiplicities)
            if m != 1:
                mult[c] = m
        else:
            break
        edges += [(a, b, c) for a, b in cls]
    g = EdgeColoredMultigraph.from_edges(n, edges, mult)
    return g


def random_scale_instance(
    seed: int, vertices: int = 2000, edges: int = 10000, colors: int = 500
) -> EdgeColoredMultigraph:
    """Large strictly CM-colored instance: every class is a complete multipartite graph."""
    rng = random.Random(seed)
    per = edges // colors
    out: list[tuple[int, int, int]] = []
    for c in range(colors):
        target = per if c < colors - 1 else edges - len(out)
        pairs: list[tuple[int, int]] = []
        while len(pairs) < target:
            k = rng.randint(2, 8)
            verts = rng.sample(range(vertices), k)
            q = rng.randint(2, k)
            label = [0, 1] + [rng.randrange(q) for _ in range(k - 2)]
            block = [
                (verts[i], verts[j]) for i, j in combinations(range(k), 2) if label[i] != label[j]
            ]
            if len(block) <= target:
                pairs = block
                break
        while len(pairs) < target:
            pairs.append(pairs[rng.randrange(len(pairs))])
        out += [(a, b, c) for a, b in pairs]
    return EdgeColoredMultigraph.from_edges(vertices, out)
