#!/usr/bin/env python3
"""Time the strict solver on large seeded CM instances."""

from __future__ import annotations

import argparse
import time

from rainbowmatch.generate import random_scale_instance
from rainbowmatch.graph import is_restricted_matching
from rainbowmatch.reduction import solve_strict_cm_traced


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, nargs="+", default=[8, 9, 10])
    ap.add_argument("--vertices", type=int, default=2000)
    ap.add_argument("--edges", type=int, nargs="+", default=[2500, 5000, 10000])
    ap.add_argument("--colors", type=int, default=500)
    args = ap.parse_args()
    print("seed  edges  lu_vertices  lu_edges  size   secs")
    for m in args.edges:
        for seed in args.seeds:
            g = random_scale_instance(seed, args.vertices, m, args.colors)
            t0 = time.perf_counter()
            tr = solve_strict_cm_traced(g)
            secs = time.perf_counter() - t0
            assert is_restricted_matching(g, tr.matching)
            print(
                f"{seed:>4} {m:>6} {tr.instance.vertex_count:>12} {len(tr.instance.edges):>9} "
                f"{len(tr.matching):>5} {secs:>6.2f}"
            )


if __name__ == "__main__":
    main()
