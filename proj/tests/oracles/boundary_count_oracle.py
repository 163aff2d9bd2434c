#!/usr/bin/env python3
"""Hand enumeration of boundary divisors of pointed hyperelliptic moduli.

Each divisor is modelled by its two-component stable curve: genera and the
markings carried by each side. Compact-type splits join the components at
one point (genera sum to g); the eta splits join two components at two
conjugate points (genera sum to g - 1). With symmetric identification the
pair of sides is unordered.
"""

import argparse
import itertools
import json
import subprocess
import sys


def subsets(n):
    marks = range(1, n + 1)
    for size in range(n + 1):
        for s in itertools.combinations(marks, size):
            yield frozenset(s)


def count_boundary(g, n, dedup=True):
    everything = frozenset(range(1, n + 1))
    found = {("irr",)}
    for s in subsets(n):
        rest = everything - s
        if len(s) >= 2:
            found.add(("tail", s))
        for h in range(1, g):
            if h > g - h:
                continue
            sides = ((h, s), (g - h, rest))
            found.add(("sep", frozenset(sides)) if dedup else ("sep", sides))
        for h in range(1, g - 1):
            if h > g - 1 - h:
                continue
            sides = ((h, s), (g - 1 - h, rest))
            found.add(("two", frozenset(sides)) if dedup else ("two", sides))
    return len(found)


def cli_rank(exe, g, n):
    out = subprocess.run([exe, "rank", str(g), str(n)], check=True, capture_output=True, text=True).stdout
    return json.loads(out)["result"]["rank_cl"]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--check", metavar="EXE", help="compare against the CLI rank command")
    args = parser.parse_args()

    spot = {(2, 1): 3, (3, 1): 5, (3, 2): 10}
    failures = 0
    for (g, n), expected in spot.items():
        got = n + count_boundary(g, n)
        print(f"rank_cl({g},{n}) = {got}")
        if got != expected:
            print(f"  expected {expected}")
            failures += 1
    for g in range(2, 9):
        if count_boundary(g, 0) != g:
            print(f"n = 0 count at g = {g} is not g")
            failures += 1
    if args.check:
        for g in range(2, 7):
            for n in range(1, 7):
                want = n + count_boundary(g, n)
                got = cli_rank(args.check, g, n)
                if got != want:
                    print(f"cli rank_cl({g},{n}) = {got}, oracle {want}")
                    failures += 1
    for g in range(2, 7):
        print(g, [count_boundary(g, n) for n in range(7)], [count_boundary(g, n, False) for n in range(7)])
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
