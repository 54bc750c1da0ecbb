"""Extreme degrees of P_N for the m = 1 trefoil against the finite-N window.

The top degree grows like 5N - 1, so max/(N - 1) = 5 + 4/(N - 1) approaches
w + b = 5 from above while the bottom ratio stays at w - b = 1.
"""
from fractions import Fraction

from moycalc import corpus
from moycalc.bounds import mfw_window
from moycalc.braid import invariant


def main(max_N: int = 9):
    D = corpus.trefoil(1)
    print(f"{'N':>3} {'min':>5} {'max':>5} {'max/(N-1)':>10} {'window':>14}")
    for N in range(2, max_N + 1):
        lo, hi = invariant(D, N).degree_range()
        win = mfw_window(D, N)
        print(f"{N:>3} {str(lo):>5} {str(hi):>5} {str(hi / (N - 1)):>10} "
              f"{'[' + str(win[0]) + ', ' + str(win[1]) + ']':>14}")
        assert hi == 5 * N - 1 and lo == N - 1
        assert hi / (N - 1) == 5 + Fraction(4, N - 1)


if __name__ == "__main__":
    main()
