"""Line-oriented text formats for instances, degree graphs and matchings.

Instance::

    p rbm <n> <m> <k>
    e <u> <v> <color>      # 1-based vertices and colours
    m <color> <value>

Degree graph::

    p dcs <n> <m>
    e <u> <v>
    b <v> <l> <u>

Matching::

    size=<K>
    edge <index>           # 1-based, input edge order

Lines starting with ``#`` or ``c`` are comments.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .dcs import DegreeGraph
from .graph import EdgeColoredMultigraph, GraphError, IdOutOfRange, LoopEdge


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _records(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] in "#c":
            continue
        yield lineno, line.split()


def _ints(lineno: int, toks: list[str], count: int) -> list[int]:
    if len(toks) != count:
        raise ParseError(lineno, f"expected {count} fields after {toks[0]!r}" if toks else "empty")
    try:
        return [int(t) for t in toks[1:]]
    except ValueError:
        raise ParseError(lineno, "non-integer field") from None


def parse_instance(text: str) -> EdgeColoredMultigraph:
    header = None
    edges: list[tuple[int, int, int]] = []
    mult: dict[int, int] = {}
    for lineno, toks in _records(text):
        tag = toks[0]
        if tag == "p":
            if header is not None:
                raise ParseError(lineno, "duplicate header")
            if len(toks) != 5 or toks[1] != "rbm":
                raise ParseError(lineno, "header must be 'p rbm <n> <m> <k>'")
            header = _ints(lineno, toks[1:], 4)
            if min(header) < 0:
                raise ParseError(lineno, "negative header count")
            continue
        if header is None:
            raise ParseError(lineno, "record before header")
        n, _, k = header
        if tag == "e":
            u, v, c = _ints(lineno, toks, 4)
            if u == v:
                raise LoopEdge(f"line {lineno}: loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise IdOutOfRange(f"line {lineno}: vertex outside 1..{n}")
            if not 1 <= c <= k:
                raise IdOutOfRange(f"line {lineno}: colour {c} outside 1..{k}")
            edges.append((u - 1, v - 1, c - 1))
        elif tag == "m":
            c, value = _ints(lineno, toks, 3)
            if not 1 <= c <= k:
                raise IdOutOfRange(f"line {lineno}: colour {c} outside 1..{k}")
            if value < 1:
                raise ParseError(lineno, f"multiplicity must be positive, got {value}")
            if c - 1 in mult:
                raise ParseError(lineno, f"duplicate multiplicity for colour {c}")
            mult[c - 1] = value
        else:
            raise ParseError(lineno, f"unknown record {tag!r}")
    if header is None:
        raise ParseError(0, "missing 'p rbm' header")
    if len(edges) != header[1]:
        raise ParseError(0, f"header declares {header[1]} edges, found {len(edges)}")
    try:
        return EdgeColoredMultigraph.from_edges(header[0], edges, mult)
    except GraphError as exc:
        raise ParseError(0, str(exc)) from None
    except KeyError as exc:
        raise ParseError(0, f"multiplicity for colour {exc.args[0] + 1} without edges") from None


def serialize_instance(graph: EdgeColoredMultigraph, comments: Iterable[str] = ()) -> str:
    k = 1 + max((c for _, _, c in graph.edges), default=-1)
    lines = [f"# {c}" for c in comments]
    lines.append(f"p rbm {graph.vertex_count} {len(graph.edges)} {k}")
    lines += [f"e {a + 1} {b + 1} {c + 1}" for a, b, c in graph.edges]
    lines += [f"m {c + 1} {m}" for c, m in sorted(graph.multiplicity.items())]
    return "\n".join(lines) + "\n"


def serialize_degree_graph(inst: DegreeGraph) -> str:
    lines = [f"p dcs {inst.vertex_count} {len(inst.edges)}"]
    lines += [f"e {a + 1} {b + 1}" for a, b in inst.edges]
    lines += [f"b {v + 1} {lo} {hi}" for v, (lo, hi) in enumerate(zip(inst.lower, inst.upper))]
    return "\n".join(lines) + "\n"


def parse_degree_graph(text: str) -> DegreeGraph:
    header = None
    edges: list[tuple[int, int]] = []
    bounds: dict[int, tuple[int, int]] = {}
    for lineno, toks in _records(text):
        tag = toks[0]
        if tag == "p":
            if len(toks) != 4 or toks[1] != "dcs":
                raise ParseError(lineno, "header must be 'p dcs <n> <m>'")
            header = _ints(lineno, toks[1:], 3)
            continue
        if header is None:
            raise ParseError(lineno, "record before header")
        n = header[0]
        if tag == "e":
            u, v = _ints(lineno, toks, 3)
            if not (1 <= u <= n and 1 <= v <= n):
                raise IdOutOfRange(f"line {lineno}: vertex outside 1..{n}")
            edges.append((u - 1, v - 1))
        elif tag == "b":
            v, lo, hi = _ints(lineno, toks, 4)
            if not 1 <= v <= n:
                raise IdOutOfRange(f"line {lineno}: vertex outside 1..{n}")
            bounds[v - 1] = (lo, hi)
        else:
            raise ParseError(lineno, f"unknown record {tag!r}")
    if header is None:
        raise ParseError(0, "missing 'p dcs' header")
    n = header[0]
    lower = tuple(bounds.get(v, (0, 0))[0] for v in range(n))
    upper = tuple(bounds.get(v, (0, 0))[1] for v in range(n))
    try:
        return DegreeGraph(n, tuple(edges), lower, upper)
    except ValueError as exc:
        raise ParseError(0, str(exc)) from None


@dataclass(frozen=True)
class MatchingFile:
    size: int
    edges: tuple[int, ...]  # 0-based


def serialize_matching(edges: Iterable[int]) -> str:
    edges = sorted(edges)
    return "\n".join([f"size={len(edges)}"] + [f"edge {i + 1}" for i in edges]) + "\n"


def parse_matching(text: str) -> MatchingFile:
    size = None
    edges: list[int] = []
    for lineno, toks in _records(text):
        if toks[0].startswith("size="):
            try:
                size = int(toks[0][5:])
            except ValueError:
                raise ParseError(lineno, "bad size line") from None
        elif toks[0] == "edge":
            (i,) = _ints(lineno, toks, 2)
            if i < 1:
                raise ParseError(lineno, "edge indices are 1-based")
            edges.append(i - 1)
        else:
            raise ParseError(lineno, f"unknown record {toks[0]!r}")
    if size is None:
        raise ParseError(0, "missing size line")
    if size != len(edges):
        raise ParseError(0, f"size={size} but {len(edges)} edge lines")
    return MatchingFile(size, tuple(edges))
