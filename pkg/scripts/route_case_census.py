#!/usr/bin/env python3
"""Tally how the blow-down route decides every gamma multiset in range.

Example:
    python scripts/route_case_census.py --r 3 --max-denominator 12
"""

import argparse
from collections import Counter
from itertools import combinations_with_replacement

from sfiber.blowdown import decide_route
from sfiber.sweeps import gamma_values


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--r", type=int, default=3)
    parser.add_argument("--max-denominator", type=int, default=10)
    args = parser.parse_args()

    cases = Counter()
    stages = Counter()
    total = 0
    for combo in combinations_with_replacement(gamma_values(args.max_denominator), args.r):
        verdict = decide_route(combo)
        total += 1
        if verdict.kind == "realizable":
            cases[verdict.case_tag] += 1
        elif verdict.kind == "obstructed":
            cases[f"obstructed:{verdict.reason}"] += 1
            stages[verdict.stage] += 1
        else:
            cases["inconclusive"] += 1

    print(f"{total} gamma multisets (r={args.r}, denominators <= {args.max_denominator})")
    for tag, count in sorted(cases.items(), key=lambda kv: -kv[1]):
        print(f"  {tag:30s} {count:8d}  ({100 * count / total:.1f}%)")
    if stages:
        print("obstruction stages:")
        for stage, count in sorted(stages.items()):
            print(f"  stage {stage:2d} {count:8d}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
