#!/usr/bin/env python3
"""Run every verification suite over a seeded random corpus and print a
one-line summary per check group.  Exits nonzero if anything fails."""

import argparse
import sys
import time

from gradedlc import generate_corpus
from gradedlc.verify import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--count", type=int, default=50, help="corpus size")
    ap.add_argument("--suites", nargs="*", default=sorted(SUITES))
    args = ap.parse_args()

    corpus = generate_corpus(args.seed, args.count)
    print(f"corpus: seed {args.seed}, {len(corpus)} ideals")

    failed = False
    for name in args.suites:
        start = time.perf_counter()
        reports = run_suite(name, corpus, args.seed)
        elapsed = time.perf_counter() - start
        checked = sum(r.checked for r in reports)
        bad = [r for r in reports if not r.passed]
        status = "PASS" if not bad else "FAIL"
        print(f"{name:<12} {status}  {len(reports):4d} groups  "
              f"{checked:6d} checks  {elapsed:6.1f}s")
        for r in bad:
            failed = True
            print(f"  FAIL {r.name}: {r.failures[:3]}")

    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
