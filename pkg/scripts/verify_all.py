"""Run every verification suite and write a JSON report.

    python scripts/verify_all.py [--jobs N] [--out report.json]
"""
import argparse
import json
import sys

from cylindric.verify import SUITES, SuiteParams, run_suites


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="write the full JSON report here")
    args = p.parse_args()
    reports = run_suites(list(SUITES), SuiteParams(seed=args.seed), args.jobs)
    for r in reports:
        print(f"{'PASS' if r['pass'] else 'FAIL'}  {r['check']:<26} {r['seconds']:7.2f}s  {len(r['claims'])} claims")
    ok = all(r["pass"] for r in reports)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump({"pass": ok, "suites": reports}, fh, indent=2)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
