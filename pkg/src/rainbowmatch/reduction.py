"""Strictly CM-colored rainbow matching via maximum (l, u)-matching.

Each edge ``{p, q}`` of colour ``i`` becomes ``p - s_pq - s_qp - q``: two
half-edges around one eliminator, both subdivision vertices with interval
``[1, 1]``. Every non-trivial part ``K_j`` of the class gets a local vertex
joined to the subdivision vertices next to ``K_j`` (interval ``[deg - 1,
deg - 1]``), and a universal vertex joined to all ``2 n_i`` subdivision
vertices takes up the remaining ``2 n_i - sum(local bounds) - 2``. A feasible
set then holds, per class, either one eliminator or two half-edges from
different parts, and two half-edges decode to one edge of that colour.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cm import CmDecomposition, ForbiddenWitness, cm_decompose
from .dcs import DegreeGraph, max_lu_matching
from .graph import EdgeColoredMultigraph, color_class_view, validate_matching


class NotStrictlyCm(ValueError):
    pass


class SolverInvariantViolation(RuntimeError):
    pass


class InvalidMatching(ValueError):
    pass


@dataclass(frozen=True)
class Normalized:
    """All-``m = 1`` copy of a graph plus the way back to it."""

    graph: EdgeColoredMultigraph
    color_origin: dict[int, int]  # new colour -> original colour
    edge_origin: tuple[int, ...]  # new edge index -> original edge index


def normalize_multiplicities(graph: EdgeColoredMultigraph) -> Normalized:
    """Replace a colour with bound m by ``min(m, n_i, |V| // 2)`` unit-bound copies.

    Graphs with every bound equal to 1 come back unchanged (same edges, same
    colour ids). Otherwise colours are renumbered densely, copies of one colour
    adjacent, and each copy repeats the class's edges in input order.
    """
    index = graph.color_index
    copies = {
        c: 1 if graph.m(c) == 1 else min(graph.m(c), len(idx), graph.vertex_count // 2)
        for c, idx in index.items()
    }
    if all(k == 1 for k in copies.values()):
        return Normalized(
            EdgeColoredMultigraph(graph.vertex_count, graph.edges, {}),
            {c: c for c in index},
            tuple(range(len(graph.edges))),
        )
    edges: list[tuple[int, int, int]] = []
    color_origin: dict[int, int] = {}
    edge_origin: list[int] = []
    for c, idx in index.items():
        for _ in range(copies[c]):
            new_color = len(color_origin)
            color_origin[new_color] = c
            for i in idx:
                a, b, _ = graph.edges[i]
                edges.append((a, b, new_color))
                edge_origin.append(i)
    return Normalized(
        EdgeColoredMultigraph(graph.vertex_count, tuple(edges), {}),
        color_origin,
        tuple(edge_origin),
    )


@dataclass
class ClassGadget:
    color: int
    edge_ids: tuple[int, ...]  # graph edge indices of this class, input order
    parts: tuple[tuple[int, ...], ...]
    # per class edge k: (s_pq, s_qp) subdivision vertices
    subdivision: list[tuple[int, int]] = field(default_factory=list)
    # per class edge k: (half-edge at p, eliminator, half-edge at q) DegreeGraph edge ids
    chain: list[tuple[int, int, int]] = field(default_factory=list)
    local_vertices: list[int] = field(default_factory=list)
    local_part: list[int] = field(default_factory=list)  # part index for each local vertex
    local_edges: list[int] = field(default_factory=list)
    universal: int = -1
    universal_edges: list[int] = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.edge_ids)


@dataclass
class ReductionMap:
    vertex_count: int  # original vertices keep ids 0..vertex_count-1
    classes: dict[int, ClassGadget]
    # DegreeGraph edge id -> (color, class edge position, original endpoint) for half-edges
    half_edges: dict[int, tuple[int, int, int]] = field(default_factory=dict)
    eliminators: dict[int, tuple[int, int]] = field(default_factory=dict)

    def half_edge_count(self, edge_set) -> int:
        return sum(1 for e in edge_set if e in self.half_edges)


def build_lu_instance(
    graph: EdgeColoredMultigraph, decompositions: dict[int, CmDecomposition]
) -> tuple[DegreeGraph, ReductionMap]:
    edges: list[tuple[int, int]] = []
    lower = [0] * graph.vertex_count
    upper = [1] * graph.vertex_count
    rmap = ReductionMap(graph.vertex_count, {})

    def vertex(lo: int, hi: int) -> int:
        lower.append(lo)
        upper.append(hi)
        return len(lower) - 1

    def edge(a: int, b: int) -> int:
        edges.append((a, b))
        return len(edges) - 1

    for c, idx in graph.color_index.items():
        dec = decompositions.get(c)
        if not isinstance(dec, CmDecomposition):
            raise NotStrictlyCm(f"colour {c} has no CM decomposition")
        cg = ClassGadget(c, tuple(idx), dec.parts)
        for k, i in enumerate(idx):
            p, q, _ = graph.edges[i]
            sp, sq = vertex(1, 1), vertex(1, 1)
            cg.subdivision.append((sp, sq))
            hp, el, hq = edge(p, sp), edge(sp, sq), edge(sq, q)
            cg.chain.append((hp, el, hq))
            rmap.half_edges[hp] = (c, k, p)
            rmap.half_edges[hq] = (c, k, q)
            rmap.eliminators[el] = (c, k)
        part = dec.part_of()
        local_total = 0
        for j in dec.nontrivial_parts:
            members = []
            for k, i in enumerate(idx):
                p, q, _ = graph.edges[i]
                sp, sq = cg.subdivision[k]
                if part[p] == j:
                    members.append(sp)
                if part[q] == j:
                    members.append(sq)
            bound = len(members) - 1
            u = vertex(bound, bound)
            cg.local_vertices.append(u)
            cg.local_part.append(j)
            cg.local_edges.extend(edge(s, u) for s in members)
            local_total += bound
        uni = 2 * cg.n - local_total - 2
        assert uni >= 0, "universal bound must be nonnegative"
        cg.universal = vertex(uni, uni)
        for sp, sq in cg.subdivision:
            cg.universal_edges.append(edge(sp, cg.universal))
            cg.universal_edges.append(edge(sq, cg.universal))
        rmap.classes[c] = cg
    inst = DegreeGraph(len(lower), tuple(edges), tuple(lower), tuple(upper))
    return inst, rmap


@dataclass(frozen=True)
class ClassState:
    color: int
    eliminators: int
    half_edges: tuple[tuple[int, int], ...]  # (class edge position, original endpoint)


def class_states(rmap: ReductionMap, edge_set) -> dict[int, ClassState]:
    chosen = set(edge_set)
    out = {}
    for c, cg in rmap.classes.items():
        elim = sum(1 for _, el, _ in cg.chain if el in chosen)
        halves = []
        for hp, _, hq in cg.chain:
            for h in (hp, hq):
                if h in chosen:
                    _, k, x = rmap.half_edges[h]
                    halves.append((k, x))
        out[c] = ClassState(c, elim, tuple(halves))
    return out


def check_structure(rmap: ReductionMap, edge_set) -> dict[int, ClassState]:
    """Per-class states; raises if one eliminator xor two cross-part half-edges fails."""
    states = class_states(rmap, edge_set)
    for c, st in states.items():
        shape = (st.eliminators, len(st.half_edges))
        if shape not in ((0, 2), (1, 0)):
            raise SolverInvariantViolation(
                f"colour {c}: {st.eliminators} eliminators, {len(st.half_edges)} half-edges"
            )
        if shape == (0, 2):
            cg = rmap.classes[c]
            (_, x), (_, y) = st.half_edges
            part = {v: j for j, p in enumerate(cg.parts) for v in p}
            if x == y or (part[x] == part[y] and len(cg.parts[part[x]]) >= 2):
                raise SolverInvariantViolation(f"colour {c}: half-edges at {x}, {y} share a part")
    return states


def decode_solution(rmap: ReductionMap, graph: EdgeColoredMultigraph, edge_set) -> list[int]:
    """Rainbow matching (edge indices of ``graph``) encoded by a feasible edge set."""
    states = check_structure(rmap, edge_set)
    out = []
    for c, st in states.items():
        if not st.half_edges:
            continue
        (_, x), (_, y) = st.half_edges
        cg = rmap.classes[c]
        pick = next(
            (i for i in cg.edge_ids if {graph.edges[i][0], graph.edges[i][1]} == {x, y}), None
        )
        if pick is None:
            raise SolverInvariantViolation(f"colour {c}: no edge between {x} and {y}")
        out.append(pick)
    return sorted(out)


def encode_matching(
    rmap: ReductionMap, inst: DegreeGraph, graph: EdgeColoredMultigraph, matching
) -> list[int]:
    """Feasible edge set of ``inst`` with ``h = 2|M|`` for a rainbow matching ``M``."""
    matching = list(matching)
    rep = validate_matching(graph, matching)
    if not rep.is_matching or any(n > 1 for n in rep.per_color_counts.values()):
        raise InvalidMatching("not a rainbow matching")
    by_color = {graph.edges[i][2]: i for i in matching}
    out: list[int] = []
    for c, cg in rmap.classes.items():
        taken: set[int] = set()  # subdivision vertices already saturated
        if c in by_color:
            k = cg.edge_ids.index(by_color[c])
            hp, _, hq = cg.chain[k]
            out += [hp, hq]
            taken.update(cg.subdivision[k])
        else:
            _, el, _ = cg.chain[0]
            out.append(el)
            taken.update(cg.subdivision[0])
        for u in cg.local_vertices:
            need = inst.lower[u]
            for e in cg.local_edges:
                if need == 0:
                    break
                s, t = inst.edges[e]
                if t == u and s not in taken:
                    out.append(e)
                    taken.add(s)
                    need -= 1
            if need:
                raise SolverInvariantViolation(f"colour {c}: local vertex {u} left unsaturated")
        rest = [e for e in cg.universal_edges if inst.edges[e][0] not in taken]
        if len(rest) != inst.lower[cg.universal]:
            raise SolverInvariantViolation(
                f"colour {c}: {len(rest)} free subdivision vertices for universal bound "
                f"{inst.lower[cg.universal]}"
            )
        out += rest
    return sorted(out)


@dataclass
class StrictTrace:
    normalized: Normalized
    decompositions: dict[int, CmDecomposition]
    instance: DegreeGraph
    rmap: ReductionMap
    lu_solution: list[int]
    matching: list[int]


def solve_strict_cm_traced(graph: EdgeColoredMultigraph) -> StrictTrace:
    norm = normalize_multiplicities(graph)
    g = norm.graph
    decs: dict[int, CmDecomposition] = {}
    for c in g.colors:
        res = cm_decompose(color_class_view(g, c))
        if isinstance(res, ForbiddenWitness):
            raise NotStrictlyCm(f"colour {norm.color_origin[c]} is not CM ({res.kind.value})")
        decs[c] = res
    inst, rmap = build_lu_instance(g, decs)
    sol = max_lu_matching(inst)
    if sol is None:
        raise SolverInvariantViolation("reduction instance reported infeasible")
    local = decode_solution(rmap, g, sol)
    matching = sorted(norm.edge_origin[i] for i in local)
    return StrictTrace(norm, decs, inst, rmap, sol, matching)


def solve_strict_cm(graph: EdgeColoredMultigraph) -> list[int]:
    """Maximum m-restricted matching of a graph whose colour classes are all CM."""
    return solve_strict_cm_traced(graph).matching
