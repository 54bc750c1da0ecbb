"""Acceptance criteria, runnable from the CLI (``moycalc selftest``) and from
pytest.  Each criterion returns a ``CriterionResult``; time budgets are part
of the verdict."""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from . import corpus
from .bounds import (
    chain_level_bounds_check,
    mfw_report,
    polynomial_bounds_check,
    track_degree_bounds,
)
from .braid import (
    ColoredBraid,
    braid_stats,
    cyclic_shift,
    euler_check,
    invariant,
    k_range,
    crossing_euler_identity,
)
from .composition import check_state_splitting, verify_composition
from .kauffman import jones_sl2
from .laurent import HalfLaurent, quantum_binomial
from .statesum import bracket, bracket_naive, enumerate_states, trace_circles
from .web import RungSlice, TrackWeb, circle, empty_web, rotation_number

NAIVE_STATE_LIMIT = 10 ** 5


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    seconds: float
    budget: Optional[float]
    detail: str = ""

    @property
    def within_budget(self) -> bool:
        return self.budget is None or self.seconds < self.budget

    @property
    def ok(self) -> bool:
        return self.passed and self.within_budget

    def line(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        budget = f" (budget {self.budget:g}s)" if self.budget is not None else ""
        text = f"[{verdict}] {self.number:>2}. {self.name}: {self.seconds:.2f}s{budget}"
        if self.detail:
            text += f" -- {self.detail}"
        return text


def _first_failure(failures: List[str]) -> str:
    if not failures:
        return ""
    more = f" (+{len(failures) - 1} more)" if len(failures) > 1 else ""
    return failures[0] + more


# 1 --------------------------------------------------------------------------
def circle_oracle() -> Tuple[bool, str]:
    failures = []
    for N in range(1, 7):
        for m in range(1, N + 1):
            if bracket(circle(m), N) != quantum_binomial(N, m):
                failures.append(f"circle m={m} N={N}")
    return not failures, _first_failure(failures)


# 2 --------------------------------------------------------------------------
def degenerate_cases() -> Tuple[bool, str]:
    failures = []
    for N in range(1, 4):
        for m in range(N + 1, N + 3):
            if bracket(circle(m), N):
                failures.append(f"circle m={m} N={N} nonzero")
        if bracket(corpus.theta(N + 1, 1), N):
            failures.append(f"theta colored {N + 1} at N={N} nonzero")
        if bracket(empty_web(), N) != HalfLaurent.one():
            failures.append(f"empty web at N={N}")
    for w in corpus.corpus_webs():
        for N in range(1, 4):
            base = bracket(w, N)
            padded = TrackWeb(w.b, w.top_colors,
                              tuple(s for t in w.slices for s in (RungSlice(t.pos, "left", 0), t)))
            if w.b >= 2 and bracket(padded, N) != base:
                failures.append(f"inserting 0-rungs changed {w.to_json()} at N={N}")
            if bracket(w.drop_zero_rungs(), N) != base:
                failures.append(f"deleting 0-rungs changed {w.to_json()} at N={N}")
    return not failures, _first_failure(failures)


# 3 --------------------------------------------------------------------------
def composition_product() -> Tuple[bool, str]:
    failures = []
    webs = corpus.corpus_webs()
    checked = 0
    for w in webs:
        for M in range(1, 5):
            for N in range(1, 6 - M):
                checked += 1
                if not verify_composition(w, M, N).holds:
                    failures.append(f"{w.to_json()} M={M} N={N}")
    return not failures, _first_failure(failures) or f"{checked} (web, M, N) cases"


# 4 --------------------------------------------------------------------------
def state_splitting() -> Tuple[bool, str]:
    failures = []
    states = 0
    for w in corpus.corpus_webs():
        for M in range(1, 4):
            for N in range(1, 5 - M):
                rep = check_state_splitting(w, M, N)
                states += rep.states
                if not rep.ok:
                    failures.append(f"{w.to_json()} M={M} N={N}: {rep.failures[0]}")
    return not failures, _first_failure(failures) or f"{states} states split"


# 5 --------------------------------------------------------------------------
def oracle_equivalence() -> Tuple[bool, str]:
    failures = []
    compared = 0
    for w in corpus.corpus_webs():
        for N in range(1, 6):
            fast = bracket(w, N)
            # every state contributes +q^k, so q = 1 counts states
            if fast.evaluate_at_one() > NAIVE_STATE_LIMIT:
                continue
            compared += 1
            if bracket_naive(w, N, cap=NAIVE_STATE_LIMIT) != fast:
                failures.append(f"{w.to_json()} N={N}")
    return not failures, _first_failure(failures) or f"{compared} (web, N) pairs"


# 6 --------------------------------------------------------------------------
def total_rotation() -> Tuple[bool, str]:
    failures = []
    states = 0
    for w in corpus.corpus_webs():
        rot = rotation_number(w)
        for N in range(1, 5):
            for phi in enumerate_states(w, N, cap=NAIVE_STATE_LIMIT):
                states += 1
                circles = trace_circles(w, phi)
                if sum(c.turning for c in circles) != rot:
                    failures.append(f"{w.to_json()} N={N} state {phi}")
    return not failures, _first_failure(failures) or f"{states} states traced"


# 7 --------------------------------------------------------------------------
def _rii_variants(D: ColoredBraid):
    for pos in range(len(D.word) + 1):
        for i in range(1, D.b):
            for pair in ((i, -i), (-i, i)):
                yield ColoredBraid(D.b, D.colors, D.word[:pos] + pair + D.word[pos:])


RIII_PAIRS = (
    ((1, 2, 1), (2, 1, 2)),
    ((-1, -2, -1), (-2, -1, -2)),
    ((1, 2, -1), (-2, 1, 2)),
    ((-1, 2, 1), (2, 1, -2)),
)


def invariance() -> Tuple[bool, str]:
    failures = []
    checks = 0
    for m in (1, 2):
        braids = corpus.invariance_braids(m)
        for N in range(1, 5):
            for D in braids:
                base = invariant(D, N)
                for V in _rii_variants(D):
                    checks += 1
                    if invariant(V, N) != base:
                        failures.append(f"RII {V.word} vs {D.word} m={m} N={N}")
                for r in range(1, len(D.word)):
                    checks += 1
                    if invariant(cyclic_shift(D, r), N) != base:
                        failures.append(f"conjugation {D.word} by {r} m={m} N={N}")
                if D.b == 3:
                    for left, right in RIII_PAIRS:
                        checks += 1
                        a = ColoredBraid.uniform(3, m, D.word + left)
                        b = ColoredBraid.uniform(3, m, D.word + right)
                        if invariant(a, N) != invariant(b, N):
                            failures.append(f"RIII {a.word} vs {b.word} m={m} N={N}")
    return not failures, _first_failure(failures) or f"{checks} comparisons"


# 8 --------------------------------------------------------------------------
def euler_characteristic() -> Tuple[bool, str]:
    failures = []
    for m in (1, 2):
        for N in range(1, 5):
            for n in (1, 2):
                for sign in (1, -1):
                    for k in k_range(m, n):
                        if not crossing_euler_identity(sign, m, n, k, N):
                            failures.append(f"crossing sign={sign} m={m} n={n} k={k} N={N}")
            for D in corpus.invariance_braids(m):
                if not euler_check(D, N):
                    failures.append(f"{D.word} m={m} N={N}")
    return not failures, _first_failure(failures)


# 9 --------------------------------------------------------------------------
M1_BRAIDS = (
    (1, ()),
    (2, (1,)),
    (2, (1, 1)),
    (2, (-1, -1)),
    (2, (1, 1, 1)),
    (2, (-1, -1, -1)),
    (2, (1, 1, 1, 1)),
    (3, (1, -2, 1, -2)),
    (3, (1, 2, 1, 2)),
    (3, (1, 1, 2, -1)),
    (3, (-1, 2, 2)),
)


def kauffman_cross_check() -> Tuple[bool, str]:
    failures = []
    for b, word in M1_BRAIDS:
        P = invariant(ColoredBraid.uniform(b, 1, word), 2)
        if P != jones_sl2(b, word, chirality=1):
            failures.append(f"{word} on {b} strands")
    mirror_agrees = invariant(corpus.trefoil(), 2) == jones_sl2(2, (1, 1, 1), chirality=-1)
    detail = "right-handed trefoil matches with A^2 = -q^-1"
    if mirror_agrees:
        failures.append("trefoil also matches the mirrored substitution")
    return not failures, _first_failure(failures) or detail


# 10 -------------------------------------------------------------------------
def track_bounds() -> Tuple[bool, str]:
    failures = []
    for w in corpus.corpus_webs():
        for N in range(1, 6):
            if w.max_color() > N:
                continue
            lo, hi = track_degree_bounds(w, N)
            obs = bracket(w, N).degree_range()
            if obs is not None and not (lo <= obs[0] and obs[1] <= hi):
                failures.append(f"{w.to_json()} N={N}: {obs} outside ({lo}, {hi})")
            if w.b == 1 and not w.slices and obs != (lo, hi):
                failures.append(f"circle {w.top_colors} N={N} not sharp")
    return not failures, _first_failure(failures)


# 11 -------------------------------------------------------------------------
def chain_level_bounds() -> Tuple[bool, str]:
    failures = []
    braids = [("trefoil", lambda m: corpus.trefoil(m))] + [
        (f"(s1 s2)^{k}", (lambda k: lambda m: corpus.power_braid(k, m))(k)) for k in (1, 2, 3)
    ]
    rows = 0
    for name, make in braids:
        for m in (1, 2):
            D = make(m)
            for N in range(m + 1, 6):
                chain = chain_level_bounds_check(D, N)
                rows += len(chain.rows)
                if not chain.holds:
                    failures.append(f"chain-level {name} m={m} N={N}")
                if not polynomial_bounds_check(D, N).holds:
                    failures.append(f"polynomial-level {name} m={m} N={N}")
    return not failures, _first_failure(failures) or f"{rows} shifted resolutions"


# 12 -------------------------------------------------------------------------
def convergence() -> Tuple[bool, str]:
    D = corpus.trefoil(1)
    table = mfw_report(D, range(2, 7))
    b, w, _, _ = braid_stats(D)
    problems = []
    if not table.holds:
        problems.append("a finite-N window failed")
    if not table.corrections_shrink():
        problems.append("correction terms grow")
    outside = [
        f"N={r.N}: [{r.ratios[0]}, {r.ratios[1]}]"
        for r in table.rows
        if r.ratios is not None and not (w - b <= r.ratios[0] and r.ratios[1] <= w + b)
    ]
    if outside:
        problems.append(f"ratios outside [{w - b}, {w + b}]: " + ", ".join(outside))
    return not problems, "; ".join(problems)


CRITERIA: List[Tuple[int, str, Callable[[], Tuple[bool, str]], Optional[float]]] = [
    (1, "circle brackets equal quantum binomials", circle_oracle, 1.0),
    (2, "degenerate cases (big colors, 0-rungs, empty web)", degenerate_cases, 1.0),
    (3, "composition product on the corpus, M+N <= 5", composition_product, 60.0),
    (4, "state splitting: partition, bijection, rotation and weights, M+N <= 4", state_splitting, 60.0),
    (5, "sweep equals naive state sum", oracle_equivalence, 60.0),
    (6, "traced circles turn rot(web) in total", total_rotation, None),
    (7, "Reidemeister II/III and conjugation invariance", invariance, 120.0),
    (8, "graded Euler sum equals P_N", euler_characteristic, None),
    (9, "m = 1, N = 2 agrees with the Kauffman bracket", kauffman_cross_check, 10.0),
    (10, "track degree bounds", track_bounds, None),
    (11, "chain-level and P_N windows for braid closures", chain_level_bounds, 300.0),
    (12, "trefoil ratios in [w-b, w+b], corrections shrink", convergence, None),
]


def run_criterion(number: int) -> CriterionResult:
    for num, name, fn, budget in CRITERIA:
        if num == number:
            start = time.perf_counter()
            passed, detail = fn()
            return CriterionResult(num, name, passed, time.perf_counter() - start, budget, detail)
    raise KeyError(number)


def run_all(echo: Optional[Callable[[str], None]] = None) -> List[CriterionResult]:
    results = []
    for num, *_ in CRITERIA:
        res = run_criterion(num)
        if echo:
            echo(res.line())
        results.append(res)
    return results
