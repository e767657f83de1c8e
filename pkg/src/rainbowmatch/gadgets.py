"""Rainbow matching instances built from 3-occurrence 3SAT formulas.

Variable ``x_i`` is a 6-cycle ``a u v b v' u'`` whose edges alternate between a
positive and a negative perfect matching; clause ``C_j`` is a 6-cycle ``r1 r2
r3 r3' r2' r1'`` plus the chord ``r1 r3'``, with ``r1 r1'``, ``r1 r3'`` and
``r3 r3'`` standing for its three literals. A literal edge shares a colour with
the variable edge of the *opposite* matching for that occurrence, so using it
forces the variable's matching. Four extra vertices ``s1..s4`` pad every class
to two disjoint edges. Perfect rainbow matchings exist iff the formula is
satisfiable.

The ``p4`` and ``paw`` shapes add same-coloured connector edges turning every
class into an induced P4 (or paw). No maximum matching uses a connector.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field, replace

from .graph import EdgeColoredMultigraph
from .oracle import TooLarge


class InvalidFormula(ValueError):
    pass


Literal = tuple[int, bool]  # (0-based variable, is_positive)


@dataclass(frozen=True)
class CnfFormula:
    variable_count: int
    clauses: tuple[tuple[Literal, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "clauses", tuple(tuple((int(v), bool(p)) for v, p in c) for c in self.clauses)
        )
        seen = [0] * self.variable_count
        for j, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise InvalidFormula(f"clause {j + 1} has {len(clause)} literals, need 3")
            vars_ = [v for v, _ in clause]
            if len(set(vars_)) != 3:
                raise InvalidFormula(f"clause {j + 1} repeats a variable")
            for v in vars_:
                if not 0 <= v < self.variable_count:
                    raise InvalidFormula(f"clause {j + 1} uses unknown variable {v + 1}")
                seen[v] += 1
                if seen[v] > 3:
                    raise InvalidFormula(f"variable {v + 1} occurs more than three times")

    def satisfied_by(self, assignment: dict[int, bool] | tuple[bool, ...]) -> bool:
        return all(any(assignment[v] == p for v, p in c) for c in self.clauses)

    def occurrence_index(self) -> dict[tuple[int, int], int]:
        """(clause, literal position) -> 1-based occurrence number of its variable."""
        count = [0] * self.variable_count
        out = {}
        for j, clause in enumerate(self.clauses):
            for k, (v, _) in enumerate(clause):
                count[v] += 1
                out[(j, k)] = count[v]
        return out


def parse_dimacs(text: str) -> CnfFormula:
    n = None
    declared = None
    clauses: list[tuple[Literal, ...]] = []
    pending: list[int] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise InvalidFormula(f"line {lineno}: bad header {line!r}")
            n, declared = int(parts[2]), int(parts[3])
            continue
        if n is None:
            raise InvalidFormula(f"line {lineno}: clause before header")
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(tuple((abs(x) - 1, x > 0) for x in pending))
                pending = []
            else:
                pending.append(lit)
    if pending:
        raise InvalidFormula("last clause not terminated by 0")
    if n is None:
        raise InvalidFormula("missing 'p cnf' header")
    if declared != len(clauses):
        raise InvalidFormula(f"header declares {declared} clauses, found {len(clauses)}")
    return CnfFormula(n, tuple(clauses))


def format_dimacs(phi: CnfFormula) -> str:
    lines = [f"p cnf {phi.variable_count} {len(phi.clauses)}"]
    for clause in phi.clauses:
        lines.append(" ".join(str(v + 1 if p else -(v + 1)) for v, p in clause) + " 0")
    return "\n".join(lines) + "\n"


def sat_bruteforce(phi: CnfFormula, fixed: dict[int, bool] | None = None) -> bool:
    if phi.variable_count > 20:
        raise TooLarge(f"{phi.variable_count} variables exceed 20")
    fixed = fixed or {}
    free = [v for v in range(phi.variable_count) if v not in fixed]
    for bits in itertools.product((False, True), repeat=len(free)):
        z = dict(fixed)
        z.update(zip(free, bits))
        if phi.satisfied_by(z):
            return True
    return False


# Variable gadget: cycle positions and their (occurrence d, in positive matching).
_VAR_NAMES = ("a", "u", "v", "b", "vbar", "ubar")
_VAR_EDGE_COLORS = ((1, True), (2, False), (3, True), (3, False), (2, True), (1, False))
# For the cycle edge at position t: index (into the 6 vertices) of the endpoint that
# receives the connector, and of the endpoint that closes the paw triangle.
_VAR_CONNECT = {0: (1, 0), 1: (2, 1), 2: (3, 2), 3: (3, 4), 4: (4, 5), 5: (5, 0)}
_CLAUSE_NAMES = ("r1", "r2", "r3", "r3'", "r2'", "r1'")


@dataclass(frozen=True)
class GadgetInstance:
    graph: EdgeColoredMultigraph
    target: int
    roles: tuple[str, ...]
    shape: str
    formula: CnfFormula
    connectors: tuple[int, ...] = ()  # edges outside the plain 2K2 construction
    variable_edges: dict[int, tuple[int, ...]] = field(default_factory=dict)
    positive_edges: dict[int, tuple[int, ...]] = field(default_factory=dict)
    negative_edges: dict[int, tuple[int, ...]] = field(default_factory=dict)


def _s_vertices(n: int, m: int) -> tuple[int, int, int, int]:
    base = 6 * n + 6 * m
    return base, base + 1, base + 2, base + 3


def build_2k2_instance(phi: CnfFormula) -> GadgetInstance:
    n, m = phi.variable_count, len(phi.clauses)
    roles = [f"{name}_{i + 1}" for i in range(n) for name in _VAR_NAMES]
    roles += [f"{name}_{j + 1}" for j in range(m) for name in _CLAUSE_NAMES]
    roles += ["s1", "s2", "s3", "s4"]
    edges: list[tuple[int, int, int]] = []
    next_color = 0

    def fresh() -> int:
        nonlocal next_color
        next_color += 1
        return next_color - 1

    var_color: dict[tuple[int, int, bool], int] = {}
    variable_edges, positive, negative = {}, {}, {}
    for i in range(n):
        cyc = [6 * i + t for t in range(6)]
        ids = []
        for t, (d, pos) in enumerate(_VAR_EDGE_COLORS):
            c = fresh()
            var_color[(i, d, pos)] = c
            ids.append(len(edges))
            edges.append((cyc[t], cyc[(t + 1) % 6], c))
        variable_edges[i] = tuple(ids)
        positive[i] = tuple(ids[t] for t in range(6) if _VAR_EDGE_COLORS[t][1])
        negative[i] = tuple(ids[t] for t in range(6) if not _VAR_EDGE_COLORS[t][1])

    occ = phi.occurrence_index()
    for j, clause in enumerate(phi.clauses):
        r1, r2, r3, r3p, r2p, r1p = (6 * n + 6 * j + t for t in range(6))
        literal_edge = {0: (r1, r1p), 1: (r1, r3p), 2: (r3, r3p)}
        lit_color = {}
        for k, (v, positive_lit) in enumerate(clause):
            # a positive literal shares its colour with the negative matching
            lit_color[k] = var_color[(v, occ[(j, k)], not positive_lit)]
        for a, b in ((r1, r2), (r2, r3)):
            edges.append((a, b, fresh()))
        edges.append((*literal_edge[2], lit_color[2]))
        for a, b in ((r3p, r2p), (r2p, r1p)):
            edges.append((a, b, fresh()))
        edges.append((*literal_edge[0], lit_color[0]))
        edges.append((*literal_edge[1], lit_color[1]))

    s1, s2, s3, s4 = _s_vertices(n, m)
    for _ in range(2):
        c = fresh()
        edges += [(s1, s2, c), (s3, s4, c)]
    counts: dict[int, int] = {}
    for _, _, c in edges:
        counts[c] = counts.get(c, 0) + 1
    for c in sorted(counts):
        if counts[c] == 1:
            edges.append((s1, s3, c))
    g = EdgeColoredMultigraph.from_edges(len(roles), edges)
    for c, idx in g.color_index.items():
        ends = {v for i in idx for v in g.edges[i][:2]}
        assert len(idx) == 2 and len(ends) == 4, f"colour {c} is not two disjoint edges"
    return GadgetInstance(
        g, 3 * (n + m) + 2, tuple(roles), "2k2", phi, (), variable_edges, positive, negative
    )


def _class_pairs(inst: GadgetInstance):
    """Yield (colour, edge ids) with the two base edges of every class."""
    g = inst.graph
    base = set(range(len(g.edges))) - set(inst.connectors)
    for c, idx in g.color_index.items():
        yield c, [i for i in idx if i in base]


def _connector_edges(inst: GadgetInstance, paw: bool) -> list[tuple[int, int, int]]:
    n, m = inst.formula.variable_count, len(inst.formula.clauses)
    s1, s2, s3, s4 = _s_vertices(n, m)
    g = inst.graph
    var_pos = {e: (i, t) for i, ids in inst.variable_edges.items() for t, e in enumerate(ids)}
    out = []
    for c, (e1, e2) in _class_pairs(inst):
        a1, b1, _ = g.edges[e1]
        a2, b2, _ = g.edges[e2]
        if {a1, b1} == {s1, s2}:  # the two padding classes
            out.append((s1, s3, c) if paw else (s2, s3, c))
            continue
        if (a2, b2) == (s1, s3):  # a single edge padded with s1 s3
            out.append((b1, s3, c) if paw else (b1, s1, c))
            continue
        i, t = var_pos[e1]
        y_idx, x_idx = _VAR_CONNECT[t]
        y, x = 6 * i + y_idx, 6 * i + x_idx
        r = a2  # r1 for both literal edges at r1, r3 for r3 r3'
        out.append((x, r, c) if paw else (y, r, c))
    return out


def build_p4_instance(phi: CnfFormula) -> GadgetInstance:
    base = build_2k2_instance(phi)
    extra = _connector_edges(base, paw=False)
    g = base.graph
    edges = list(g.edges) + extra
    conn = tuple(range(len(g.edges), len(edges)))
    return replace(base, graph=EdgeColoredMultigraph.from_edges(g.vertex_count, edges),
                   shape="p4", connectors=conn)


def build_paw_instance(phi: CnfFormula) -> GadgetInstance:
    p4 = build_p4_instance(phi)
    extra = _connector_edges(replace(p4, connectors=p4.connectors), paw=True)
    g = p4.graph
    edges = list(g.edges) + extra
    conn = p4.connectors + tuple(range(len(g.edges), len(edges)))
    return replace(p4, graph=EdgeColoredMultigraph.from_edges(g.vertex_count, edges),
                   shape="paw", connectors=conn)


BUILDERS = {"2k2": build_2k2_instance, "p4": build_p4_instance, "paw": build_paw_instance}


def restrict_instance(inst: GadgetInstance, fixed: dict[int, bool]) -> GadgetInstance:
    """Fix variables by deleting the variable-gadget matching of the other value.

    The gadget of a fixed variable keeps a single perfect matching, so perfect
    rainbow matchings of the result correspond to satisfying assignments that
    extend ``fixed``.
    """
    drop = set()
    for v, value in fixed.items():
        drop.update(inst.negative_edges[v] if value else inst.positive_edges[v])
    keep = [i for i in range(len(inst.graph.edges)) if i not in drop]
    new_id = {old: k for k, old in enumerate(keep)}

    def remap(ids):
        return tuple(new_id[i] for i in ids if i in new_id)

    g = EdgeColoredMultigraph.from_edges(
        inst.graph.vertex_count, [inst.graph.edges[i] for i in keep]
    )
    return replace(
        inst,
        graph=g,
        connectors=remap(inst.connectors),
        variable_edges={v: remap(e) for v, e in inst.variable_edges.items()},
        positive_edges={v: remap(e) for v, e in inst.positive_edges.items()},
        negative_edges={v: remap(e) for v, e in inst.negative_edges.items()},
    )


def random_formula(rng: random.Random, n: int, m: int, tries: int = 1000) -> CnfFormula:
    """Uniform-ish 3-occurrence formula with ``m`` clauses on ``n`` variables."""
    for _ in range(tries):
        left = [3] * n
        clauses = []
        ok = True
        for _ in range(m):
            avail = [v for v in range(n) if left[v] > 0]
            if len(avail) < 3:
                ok = False
                break
            vs = rng.sample(avail, 3)
            for v in vs:
                left[v] -= 1
            clauses.append(tuple((v, rng.random() < 0.5) for v in vs))
        if ok:
            return CnfFormula(n, tuple(clauses))
    raise InvalidFormula(f"no 3-occurrence formula with n={n}, m={m}")


def all_single_clause_formulas(n: int = 3) -> list[CnfFormula]:
    """Every one-clause formula on ``n`` variables (ordered variables, all signs)."""
    out = []
    for vs in itertools.permutations(range(n), 3):
        for signs in itertools.product((True, False), repeat=3):
            out.append(CnfFormula(n, (tuple(zip(vs, signs)),)))
    return out


_SHAPES = {(1, 1, 1, 1): "2k2", (1, 1, 2, 2): "p4", (1, 2, 2, 3): "paw"}


def class_shape(graph: EdgeColoredMultigraph, color: int) -> str | None:
    """``"2k2"``, ``"p4"`` or ``"paw"`` if the class is that graph, else None.

    On four vertices the degree sequence already separates these three.
    """
    idx = graph.edges_of_color(color)
    pairs = {frozenset(graph.edges[i][:2]) for i in idx}
    if len(pairs) != len(idx):
        return None
    deg: dict[int, int] = {}
    for p in pairs:
        for v in p:
            deg[v] = deg.get(v, 0) + 1
    if len(deg) != 4:
        return None
    return _SHAPES.get(tuple(sorted(deg.values())))


def shape_violations(inst: GadgetInstance) -> list[int]:
    """Colours whose class is not of the instance's shape."""
    return [c for c in inst.graph.colors if class_shape(inst.graph, c) != inst.shape]
