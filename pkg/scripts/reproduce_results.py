#!/usr/bin/env python3
"""Run the full reproduction catalog and write a JSON report.

The quick suites (paper, properties) finish in seconds; --long adds the
minutes-scale stretch cases (two-row depth drops and the 4x4 board).
"""

import argparse
import json
import sys
import time

from rookideal.verify import run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--long", action="store_true", help="include the stretch cases")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--out", default=None, help="write the JSON report here")
    args = parser.parse_args()

    suites = ["paper", "properties"] + (["long"] if args.long else [])
    report = {"suites": {}, "failures": 0}
    start = time.perf_counter()
    for suite in suites:
        cases = run_suite(suite, threads=args.threads)
        report["suites"][suite] = [
            {
                "id": c.id,
                "status": c.status,
                "expected": c.expected,
                "computed": c.computed,
                "seconds": round(c.seconds, 3),
            }
            for c in cases
        ]
        for c in cases:
            mark = {"pass": "PASS", "fail": "FAIL", "skipped-long": "skip"}[c.status]
            print(f"[{mark:>4}] {suite}/{c.id} ({c.seconds:.2f}s)")
            if c.status == "fail":
                report["failures"] += 1
                print(f"       expected {c.expected} got {c.computed}")
    report["total_seconds"] = round(time.perf_counter() - start, 2)
    print(f"done in {report['total_seconds']}s with {report['failures']} failures")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            json.dump(report, handle, indent=2, sort_keys=True)
        print(f"report written to {args.out}")
    return 2 if report["failures"] else 0


if __name__ == "__main__":
    sys.exit(main())
