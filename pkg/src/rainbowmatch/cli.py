"""``rainbowmatch`` command line.

Exit status: 0 solved, 2 hardness report, 1 error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any, Sequence

from .alpha import AlphaExceeded, HardnessReport, UnsupportedMultiplicity, solve
from .cm import CmDecomposition, classify_graph
from .formats import (
    ParseError,
    parse_instance,
    parse_matching,
    serialize_degree_graph,
    serialize_instance,
    serialize_matching,
)
from .gadgets import BUILDERS, InvalidFormula, parse_dimacs
from .generate import random_instance
from .graph import GraphError, UnknownColor, validate_matching
from .oracle import TooLarge, brute_max_rainbow_matching
from .reduction import (
    NotStrictlyCm,
    SolverInvariantViolation,
    build_lu_instance,
    normalize_multiplicities,
)

EXIT_OK, EXIT_ERROR, EXIT_HARD = 0, 1, 2

DOMAIN_ERRORS = (
    ParseError,
    GraphError,
    UnknownColor,
    InvalidFormula,
    TooLarge,
    NotStrictlyCm,
    AlphaExceeded,
    UnsupportedMultiplicity,
    SolverInvariantViolation,
)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(args: argparse.Namespace, text: str, tree: dict[str, Any]) -> None:
    if args.json_style:
        sys.stdout.write(json.dumps(tree, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text)


def _witness_text(w) -> str:
    return f"{w.kind.value} " + " ".join(str(v + 1) for v in w.vertices)


def _matching_tree(edges: list[int]) -> dict[str, Any]:
    return {"size": len(edges), "edges": [i + 1 for i in sorted(edges)]}


def cmd_classify(args: argparse.Namespace) -> int:
    g = parse_instance(_read(args.instance))
    report = classify_graph(g)
    lines, tree = [], {"colors": {}, "noncm": report.noncm_count}
    for c, res in report.results.items():
        if isinstance(res, CmDecomposition):
            parts = [[v + 1 for v in p] for p in res.parts]
            lines.append(f"color {c + 1} cm parts=" + "|".join(",".join(map(str, p)) for p in parts))
            tree["colors"][str(c + 1)] = {"cm": True, "parts": parts}
        else:
            lines.append(f"color {c + 1} noncm {_witness_text(res)}")
            tree["colors"][str(c + 1)] = {
                "cm": False,
                "witness": {"kind": res.kind.value, "vertices": [v + 1 for v in res.vertices]},
            }
    lines.append(f"noncm={report.noncm_count}")
    _emit(args, "\n".join(lines) + "\n", tree)
    return EXIT_OK


def _hardness(args: argparse.Namespace, rep: HardnessReport) -> int:
    lines = [
        f"hardness noncm={len(rep.noncm_colors)} alpha={rep.alpha_budget}",
        *(f"witness color {c + 1} {_witness_text(w)}" for c, w in rep.witnesses.items()),
    ]
    tree = {
        "hardness": True,
        "alpha": rep.alpha_budget,
        "noncm": len(rep.noncm_colors),
        "witnesses": {
            str(c + 1): {"kind": w.kind.value, "vertices": [v + 1 for v in w.vertices]}
            for c, w in rep.witnesses.items()
        },
    }
    _emit(args, "\n".join(lines) + "\n", tree)
    return EXIT_HARD


def cmd_solve(args: argparse.Namespace) -> int:
    g = parse_instance(_read(args.instance))
    res = solve(g, args.alpha)
    if isinstance(res, HardnessReport):
        return _hardness(args, res)
    _emit(args, serialize_matching(res), _matching_tree(res))
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    g = parse_instance(_read(args.instance))
    _, edges = brute_max_rainbow_matching(g, limit=args.limit)
    _emit(args, serialize_matching(edges), _matching_tree(edges))
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    g = parse_instance(_read(args.instance))
    norm = normalize_multiplicities(g)
    report = classify_graph(norm.graph)
    if report.noncm_count:
        c = report.noncm_colors[0]
        raise NotStrictlyCm(f"colour {norm.color_origin[c] + 1} is not CM")
    inst, _ = build_lu_instance(norm.graph, report.decompositions())
    tree = {
        "vertices": inst.vertex_count,
        "edges": [[a + 1, b + 1] for a, b in inst.edges],
        "bounds": [[lo, hi] for lo, hi in zip(inst.lower, inst.upper)],
    }
    _emit(args, serialize_degree_graph(inst), tree)
    return EXIT_OK


def cmd_gen_sat(args: argparse.Namespace) -> int:
    phi = parse_dimacs(_read(args.cnf))
    inst = BUILDERS[args.shape](phi)
    text = serialize_instance(inst.graph, [f"shape={inst.shape} target={inst.target}"])
    tree = {
        "shape": inst.shape,
        "target": inst.target,
        "instance": serialize_instance(inst.graph).splitlines(),
    }
    _emit(args, text, tree)
    return EXIT_OK


def cmd_gen_random(args: argparse.Namespace) -> int:
    rng = random.Random(args.seed)
    g = random_instance(
        rng,
        max_vertices=args.vertices,
        max_edges=args.edges,
        max_colors=args.colors,
        noncm=args.noncm,
    )
    text = serialize_instance(g, [f"seed={args.seed}"])
    _emit(args, text, {"seed": args.seed, "instance": serialize_instance(g).splitlines()})
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = parse_instance(_read(args.instance))
    mf = parse_matching(_read(args.matching))
    bad = [i for i in mf.edges if i >= len(g.edges)]
    if bad:
        raise ParseError(0, f"edge {bad[0] + 1} outside 1..{len(g.edges)}")
    rep = validate_matching(g, mf.edges)
    tree = {
        "valid": rep.ok,
        "is_matching": rep.is_matching,
        "is_m_restricted": rep.is_m_restricted,
        "size": mf.size,
    }
    if rep.ok:
        text = f"valid size={mf.size}\n"
    else:
        why = "not a matching" if not rep.is_matching else "colour bound exceeded"
        text = f"invalid: {why}\n"
    _emit(args, text, tree)
    return EXIT_OK if rep.ok else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rainbowmatch", description=__doc__.splitlines()[0])
    p.add_argument("--json-style", action="store_true", help="structured JSON report")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json-style", action="store_true", default=argparse.SUPPRESS)
        sp.set_defaults(fn=fn)
        return sp

    add("classify", cmd_classify, "per-colour CM report").add_argument("instance")
    sp = add("solve", cmd_solve, "maximum rainbow matching")
    sp.add_argument("instance")
    sp.add_argument("--alpha", type=int, default=2, help="non-CM class budget")
    sp = add("oracle", cmd_oracle, "brute-force maximum")
    sp.add_argument("instance")
    sp.add_argument("--limit", type=int, default=200, help="edge limit for the search")
    add("reduce", cmd_reduce, "emit the (l,u)-matching instance").add_argument("instance")
    sp = add("gen-sat", cmd_gen_sat, "hardness gadget from a DIMACS CNF file")
    sp.add_argument("cnf")
    sp.add_argument("--shape", choices=sorted(BUILDERS), default="2k2")
    sp = add("gen-random", cmd_gen_random, "seeded random CM-coloured instance")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--vertices", type=int, default=10)
    sp.add_argument("--edges", type=int, default=14)
    sp.add_argument("--colors", type=int, default=6)
    sp.add_argument("--noncm", type=int, default=0)
    sp = add("verify", cmd_verify, "check a matching file against an instance")
    sp.add_argument("instance")
    sp.add_argument("matching")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except DOMAIN_ERRORS as exc:
        msg = str(exc.args[0]) if isinstance(exc, KeyError) and exc.args else str(exc)
        sys.stderr.write(f"error: {type(exc).__name__}: {msg}\n")
        return EXIT_ERROR
    except OSError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
