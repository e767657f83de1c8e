#!/usr/bin/env python3
"""Run every oracle-comparison suite and print a summary table.

    python3 scripts/run_experiments.py [--out digests.json]

The digests only depend on the seeds, so two runs can be diffed.
"""

from __future__ import annotations

import argparse
import json

from rainbowmatch.experiments import run_all


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", help="write per-suite digests as JSON")
    args = ap.parse_args()
    results = run_all()
    print(f"{'suite':<20} {'cases':>6} {'fail':>5} {'secs':>7}  digest")
    for name, r in results.items():
        print(f"{name:<20} {r.cases:>6} {r.failures:>5} {r.elapsed:>7.2f}  {r.digest()[:16]}")
        for line in r.log:
            if not line.startswith("ok "):
                print("   ", line)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump({k: r.digest() for k, r in results.items()}, fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
