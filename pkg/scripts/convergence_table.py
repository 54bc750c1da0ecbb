"""Normalized degree ratios of P_N for small braid closures over a range of N.

    python scripts/convergence_table.py --max-N 8
"""
import argparse

from moycalc import corpus
from moycalc.bounds import mfw_report
from moycalc.braid import ColoredBraid


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-N", type=int, default=7)
    ap.add_argument("--colors", type=int, nargs="+", default=[1, 2])
    args = ap.parse_args()
    braids = {
        "trefoil": lambda m: corpus.trefoil(m),
        "mirror trefoil": lambda m: corpus.trefoil(m, sign=-1),
        "figure eight": lambda m: corpus.figure_eight(m),
        "(s1 s2)^2": lambda m: corpus.power_braid(2, m),
        "unknot": lambda m: ColoredBraid.uniform(1, m, ()),
    }
    for name, make in braids.items():
        for m in args.colors:
            Ns = range(m + 1, args.max_N + 1)
            table = mfw_report(make(m), Ns)
            print(f"== {name}")
            print(table.render())
            print(f"ratios inside [w-b, w+b]: {table.ratios_within_limit_window()}; "
                  f"corrections shrink: {table.corrections_shrink()}\n")


if __name__ == "__main__":
    main()
