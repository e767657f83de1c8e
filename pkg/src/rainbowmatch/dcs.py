"""Maximum matching and maximum (l, u)-matching.

``max_matching`` is Edmonds' blossom algorithm (one alternating tree at a time,
contracting odd cycles through a base map). Trees that fail to reach a free
vertex are Hungarian and are dropped from the graph for the rest of the run.

``max_lu_matching`` reduces the degree-constrained problem to matchings on an
auxiliary graph. Every edge ``e = (v, w)`` gets a port at each endpoint; vertex
``v`` is expanded either into ``u(v)`` interchangeable *copies* (a port matched
to a copy means ``e`` is taken at ``v``), or, for exact bounds where it is
cheaper, into ``deg(v) - u(v)`` *absorbers* (a port matched to an absorber means
``e`` is not taken at ``v``). Ports, absorbers and the first ``l(v)`` copies are
required. Any matching covering the required set encodes a feasible edge set
with ``2|M| = const + 2|X|``, so a maximum matching that covers the required set
is an optimum.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class _Blossom:
    """Cardinality matching state on adjacency lists."""

    def __init__(self, adj: list[list[int]], mate: list[int] | None = None) -> None:
        self.adj = adj
        self.n = len(adj)
        self.mate = mate if mate is not None else [-1] * self.n
        self.dead = bytearray(self.n)

    def greedy(self, order: Iterable[int]) -> None:
        mate, adj = self.mate, self.adj
        for v in order:
            if mate[v] != -1:
                continue
            for w in adj[v]:
                if mate[w] == -1 and w != v:
                    mate[v] = w
                    mate[w] = v
                    break

    def run(self, order: Iterable[int]) -> list[int]:
        """Search from each free vertex of ``order``; return roots that stay free."""
        failed = []
        for r in order:
            if self.mate[r] == -1 and not self.dead[r]:
                if not self.augment_from(r):
                    failed.append(r)
        return failed

    def augment_from(self, root: int) -> bool:
        mate, adj, dead = self.mate, self.adj, self.dead
        parent: dict[int, int] = {}
        base: dict[int, int] = {}
        outer = {root}
        tree = [root]
        queue = deque([root])

        def b(x: int) -> int:
            return base.get(x, x)

        def lca(x: int, y: int) -> int:
            seen = set()
            while True:
                x = b(x)
                seen.add(x)
                if mate[x] == -1:
                    break
                x = parent[mate[x]]
            while True:
                y = b(y)
                if y in seen:
                    return y
                y = parent[mate[y]]

        def mark(x: int, stop: int, child: int, hit: set[int]) -> None:
            while b(x) != stop:
                hit.add(b(x))
                hit.add(b(mate[x]))
                parent[x] = child
                child = mate[x]
                x = parent[mate[x]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if dead[to]:
                    continue
                bv, bt = b(v), b(to)
                if bv == bt or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and mate[to] in parent):
                    top = lca(v, to)
                    hit: set[int] = set()
                    mark(v, top, to, hit)
                    mark(to, top, v, hit)
                    for i in tree:
                        if b(i) in hit:
                            base[i] = top
                            if i not in outer:
                                outer.add(i)
                                queue.append(i)
                elif to not in parent:
                    parent[to] = v
                    tree.append(to)
                    if mate[to] == -1:
                        x = to
                        while x != -1:
                            px = parent[x]
                            nxt = mate[px]
                            mate[x] = px
                            mate[px] = x
                            x = nxt
                        return True
                    m = mate[to]
                    outer.add(m)
                    tree.append(m)
                    queue.append(m)
        for i in tree:
            dead[i] = 1
        return False


def _simple_adjacency(
    vertex_count: int, edges: Sequence[tuple[int, int]]
) -> tuple[list[list[int]], dict[tuple[int, int], int]]:
    adj: list[list[int]] = [[] for _ in range(vertex_count)]
    first: dict[tuple[int, int], int] = {}
    for i, (a, b) in enumerate(edges):
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        if key in first:
            continue
        first[key] = i
        adj[a].append(b)
        adj[b].append(a)
    return adj, first


def max_matching(
    vertex_count: int, edges: Sequence[tuple[int, int]], rng: random.Random | None = None
) -> list[int]:
    """Indices of a maximum-cardinality matching of a multigraph.

    With ``rng`` the vertex and neighbour orders are shuffled, so repeated calls
    can land on different maximum matchings.
    """
    adj, first = _simple_adjacency(vertex_count, edges)
    order = list(range(vertex_count))
    if rng is not None:
        rng.shuffle(order)
        for lst in adj:
            rng.shuffle(lst)
    else:
        order.sort(key=lambda v: len(adj[v]))
    bl = _Blossom(adj)
    bl.greedy(order)
    bl.run(order)
    mate = bl.mate
    out = []
    for v in range(vertex_count):
        w = mate[v]
        if w > v:
            out.append(first[(v, w)])
    return sorted(out)


@dataclass(frozen=True)
class DegreeGraph:
    """Multigraph with a degree interval ``[lower[v], upper[v]]`` per vertex."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple((int(a), int(b)) for a, b in self.edges))
        object.__setattr__(self, "lower", tuple(self.lower))
        object.__setattr__(self, "upper", tuple(self.upper))
        if len(self.lower) != self.vertex_count or len(self.upper) != self.vertex_count:
            raise ValueError("one interval per vertex required")
        for v, (lo, hi) in enumerate(zip(self.lower, self.upper)):
            if lo < 0 or lo > hi:
                raise ValueError(f"bad interval [{lo}, {hi}] at vertex {v}")
        for a, b in self.edges:
            if a == b or not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise ValueError(f"bad edge ({a}, {b})")

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg


def verify_lu(instance: DegreeGraph, edge_set: Iterable[int]) -> bool:
    chosen = list(edge_set)
    if len(set(chosen)) != len(chosen):
        return False
    deg = [0] * instance.vertex_count
    for i in chosen:
        if not 0 <= i < len(instance.edges):
            raise IndexError(i)
        a, b = instance.edges[i]
        deg[a] += 1
        deg[b] += 1
    return all(lo <= d <= hi for d, lo, hi in zip(deg, instance.lower, instance.upper))


class _Gadget:
    """The auxiliary matching graph for one (l, u) instance."""

    def __init__(self, inst: DegreeGraph) -> None:
        deg = inst.degrees()
        n = 0
        adj: list[list[int]] = []
        required: list[bool] = []

        def new(req: bool) -> int:
            nonlocal n
            adj.append([])
            required.append(req)
            n += 1
            return n - 1

        def link(a: int, b: int) -> None:
            adj[a].append(b)
            adj[b].append(a)

        self.feasible = True
        tutte = [False] * inst.vertex_count
        anchors: list[list[int]] = []
        for v in range(inst.vertex_count):
            d = deg[v]
            lo, hi = inst.lower[v], min(inst.upper[v], d)
            if lo > hi:
                self.feasible = False
            if lo == hi and d - hi < hi:
                tutte[v] = True
                anchors.append([new(True) for _ in range(d - hi)])
            else:
                anchors.append([new(k < lo) for k in range(hi)])

        # decode[e] = (port, selected_if_mate_in) for reading the edge set back
        self.decode: list[tuple[int, object]] = []
        for a, b in inst.edges:
            ta, tb = tutte[a], tutte[b]
            if ta == tb:
                pa, pb = new(True), new(True)
                link(pa, pb)
                for x in anchors[a]:
                    link(pa, x)
                for x in anchors[b]:
                    link(pb, x)
                # Direct pair: taken when not paired together; Tutte pair: taken when paired.
                self.decode.append((pa, ("tt", pb) if ta else ("dd", pb)))
            else:
                d_end, t_end = (a, b) if tb else (b, a)
                p = new(True)
                for x in anchors[d_end]:
                    link(p, x)
                for x in anchors[t_end]:
                    link(p, x)
                self.decode.append((p, ("dt", frozenset(anchors[d_end]))))
        self.n = n
        self.adj = adj
        self.required = required

    def edge_set(self, mate: list[int]) -> list[int]:
        out = []
        for e, (port, (kind, ref)) in enumerate(self.decode):
            m = mate[port]
            if kind == "dd":
                taken = m != ref
            elif kind == "tt":
                taken = m == ref
            else:
                taken = m in ref
            if taken:
                out.append(e)
        return out

    def covers_required(self, mate: list[int]) -> bool:
        return all(mate[v] != -1 for v in range(self.n) if self.required[v])


def _cover_required(g: _Gadget, mate: list[int]) -> list[int] | None:
    """Matching of the gadget covering every required vertex, or None.

    Works on two disjoint copies of the gadget whose optional vertices are joined
    to their twins: perfect matchings there restrict to covering matchings here.
    """
    n = g.n
    adj = [list(nb) for nb in g.adj] + [[w + n for w in nb] for nb in g.adj]
    dmate = mate + [(w + n if w != -1 else -1) for w in mate]
    for v in range(n):
        if not g.required[v]:
            adj[v].append(v + n)
            adj[v + n].append(v)
            if mate[v] == -1:
                dmate[v] = v + n
                dmate[v + n] = v
    bl = _Blossom(adj, dmate)
    for r in range(2 * n):
        if bl.mate[r] == -1 and not bl.augment_from(r):
            return None
    return [w if w < n else -1 for w in bl.mate[:n]]


def max_lu_matching(instance: DegreeGraph) -> list[int] | None:
    """Maximum edge set with every degree inside its interval; None if infeasible."""
    g = _Gadget(instance)
    if not g.feasible:
        return None
    order = sorted(range(g.n), key=lambda v: (not g.required[v], len(g.adj[v])))
    bl = _Blossom(g.adj)
    bl.greedy(order)
    bl.run(order)
    if not g.covers_required(bl.mate):
        covering = _cover_required(g, bl.mate)
        if covering is None:
            return None
        bl = _Blossom(g.adj, covering)
        bl.run(order)
    x = g.edge_set(bl.mate)
    assert verify_lu(instance, x), "gadget decoding produced an infeasible edge set"
    return x
