"""Run the acceptance criteria and write a JSON summary.

    python scripts/verify_corpus.py --out results.json
"""
import argparse
import json
import sys

from moycalc.acceptance import CRITERIA, run_criterion


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", help="write a JSON summary here")
    ap.add_argument("--only", type=int, nargs="*")
    args = ap.parse_args()
    results = []
    for num, *_ in CRITERIA:
        if args.only and num not in args.only:
            continue
        res = run_criterion(num)
        print(res.line(), flush=True)
        results.append(res)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump([{"criterion": r.number, "name": r.name, "passed": r.ok,
                        "seconds": round(r.seconds, 3), "detail": r.detail} for r in results], fh, indent=2)
    sys.exit(0 if all(r.ok for r in results) else 1)


if __name__ == "__main__":
    main()
