from __future__ import annotations

from hypothesis import settings

from rainbowmatch.graph import EdgeColoredMultigraph

settings.register_profile("default", deadline=None, max_examples=150, derandomize=True)
settings.load_profile("default")

RED, BLUE, GREEN = 0, 1, 2


def graph(n, edges, mult=None) -> EdgeColoredMultigraph:
    return EdgeColoredMultigraph.from_edges(n, edges, mult)


PETERSEN = [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)] + [
    (5 + i, 5 + (i + 2) % 5) for i in range(5)
]
