"""Degree windows for track brackets and for colored braid closures.

Everything is exact rational arithmetic.  Checks on P_N are consequences of
the chain-level windows (each term of the alternating resolution sum lies in
its window, so the sum does too); they cannot see cancellations in homology
and are reported separately from the per-resolution checks.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .braid import ColoredBraid, braid_stats, invariant, resolution_brackets
from .laurent import format_degree
from .web import (
    TrackWeb,
    complement_labelling,
    enumerate_labellings,
    ensure_valid,
    rho,
    rotation_number,
    vertex_pairing,
    vertex_rho,
)

Window = Tuple[Fraction, Fraction]


def _contains(window: Window, observed: Optional[Window]) -> bool:
    if observed is None:
        return True
    return window[0] <= observed[0] and observed[1] <= window[1]


def track_degree_bounds(w: TrackWeb, N: int) -> Window:
    """+-(rot (N - rot/b) + rho); ``b`` is the strand count of ``w``."""
    ensure_valid(w)
    if w.max_color() > N:
        raise ValueError(f"colors must not exceed N={N}")
    r = rotation_number(w)
    spread = (r * (N - Fraction(r, w.b)) if w.b else Fraction(0)) + rho(w)
    return -spread, spread


def pairing_within_rho(w: TrackWeb) -> bool:
    """For every labelling and vertex:
    |[v|f]| <= rho(v) - rho_f(v) - rho_fbar(v)."""
    colors = w.colors
    for f in enumerate_labellings(w):
        fbar = complement_labelling(w, f)
        for v in w.vertices:
            slack = vertex_rho(v, colors) - vertex_rho(v, f) - vertex_rho(v, fbar)
            if abs(vertex_pairing(v, f, colors)) > slack:
                return False
    return True


@dataclass
class ResolutionRow:
    kvec: Tuple[int, ...]
    s_q: int
    observed: Optional[Window]
    intermediate: Window
    holds: bool

    def to_json(self) -> dict:
        return {
            "kvec": list(self.kvec),
            "s_q": self.s_q,
            "observed": _window_json(self.observed),
            "intermediate_window": _window_json(self.intermediate),
            "holds": self.holds,
        }


@dataclass
class BoundsReport:
    kind: str  # "chain-level" | "polynomial-level"
    m: int
    N: int
    b: int
    w: int
    l: int
    window: Window
    observed: Optional[Window]
    holds: bool
    rows: List[ResolutionRow] = field(default_factory=list)
    note: str = ""

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "parameters": {"m": self.m, "N": self.N, "b": self.b, "w": self.w, "l": self.l},
            "window": _window_json(self.window),
            "observed": _window_json(self.observed),
            "holds": self.holds,
        }
        if self.rows:
            out["resolutions"] = [r.to_json() for r in self.rows]
        if self.note:
            out["note"] = self.note
        return out


def _window_json(win: Optional[Window]):
    if win is None:
        return None
    return [format_degree(win[0]), format_degree(win[1])]


def _uniform_color(D: ColoredBraid) -> int:
    D.validate()
    if not D.is_uniform():
        raise ValueError("bounds need a uniformly colored braid")
    return D.colors[0]


def chain_level_window(D: ColoredBraid, N: int) -> Window:
    m = _uniform_color(D)
    b, w, lp, lm = braid_stats(D)
    l = lp + lm
    d = m * (N - m)
    return Fraction((w - b) * d - l * m * m + w * m), Fraction((w + b) * d + l * m * m + w * m)


def chain_level_bounds_check(D: ColoredBraid, N: int) -> BoundsReport:
    """Every shifted resolution q^(s_q) <Gamma>_N must sit inside the window
    of the crossing count, and inside the finer per-resolution window
    (w -+ b) m (N - m) -+ sum k_i (2m - k_i -+ eps_i)."""
    m = _uniform_color(D)
    if N <= m:
        raise ValueError(f"need N > m (got N={N}, m={m})")
    b, w, lp, lm = braid_stats(D)
    l = lp + lm
    d = m * (N - m)
    window = chain_level_window(D, N)
    rows = []
    lo_all = hi_all = None
    for r, value in resolution_brackets(D, N):
        poly = value.shift(r.s_q)
        obs = poly.degree_range()
        eps = D.signs
        inter = (
            Fraction((w - b) * d - sum(k * (2 * m - k - e) for k, e in zip(r.kvec, eps))),
            Fraction((w + b) * d + sum(k * (2 * m - k + e) for k, e in zip(r.kvec, eps))),
        )
        ok = _contains(window, obs) and _contains(inter, obs)
        rows.append(ResolutionRow(r.kvec, r.s_q, obs, inter, ok))
        if obs is not None:
            lo_all = obs[0] if lo_all is None else min(lo_all, obs[0])
            hi_all = obs[1] if hi_all is None else max(hi_all, obs[1])
    observed = None if lo_all is None else (lo_all, hi_all)
    return BoundsReport(
        "chain-level", m, N, b, w, l, window, observed, all(r.holds for r in rows), rows,
        note="per-resolution windows of the shifted chain groups; a genuine test of the inequalities",
    )


def mfw_window(D: ColoredBraid, N: int) -> Window:
    """Normalized bounds on deg/(m(N-m)):
    w - b + (w - m l)/(N - m)  and  w + b + (w + m l)/(N - m)."""
    m = _uniform_color(D)
    if N <= m:
        raise ValueError(f"need N > m (got N={N}, m={m})")
    b, w, lp, lm = braid_stats(D)
    l = lp + lm
    return w - b + Fraction(w - m * l, N - m), w + b + Fraction(w + m * l, N - m)


def correction_terms(D: ColoredBraid, N: int) -> Tuple[Fraction, Fraction]:
    m = _uniform_color(D)
    _, w, lp, lm = braid_stats(D)
    l = lp + lm
    return Fraction(w - m * l, N - m), Fraction(w + m * l, N - m)


def polynomial_bounds_check(D: ColoredBraid, N: int) -> BoundsReport:
    m = _uniform_color(D)
    b, w, lp, lm = braid_stats(D)
    d = m * (N - m)
    lo, hi = mfw_window(D, N)
    window = (lo * d, hi * d)
    obs = invariant(D, N).degree_range()
    return BoundsReport(
        "polynomial-level", m, N, b, w, lp + lm, window, obs, _contains(window, obs),
        note="degrees of P_N only; cancellation means this cannot test the homological bound",
    )


@dataclass
class ConvergenceRow:
    N: int
    window: Window  # normalized
    ratios: Optional[Window]
    holds: bool

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "window": _window_json(self.window),
            "ratios": _window_json(self.ratios),
            "holds": self.holds,
        }


@dataclass
class ConvergenceTable:
    m: int
    b: int
    w: int
    l: int
    rows: List[ConvergenceRow]
    reports: List[BoundsReport]

    @property
    def holds(self) -> bool:
        return all(r.holds for r in self.rows)

    def ratios_within_limit_window(self) -> bool:
        """Whether every observed ratio lies in [w - b, w + b]."""
        return all(r.ratios is None or (self.w - self.b <= r.ratios[0] and r.ratios[1] <= self.w + self.b)
                   for r in self.rows)

    def corrections_shrink(self) -> bool:
        """|w -+ m l| / (N - m) is non-increasing along the table."""
        mags = [(abs(r.window[0] - (self.w - self.b)), abs(r.window[1] - (self.w + self.b)))
                for r in self.rows]
        return all(a[0] >= b_[0] and a[1] >= b_[1] for a, b_ in zip(mags, mags[1:]))

    def to_json(self) -> dict:
        return {
            "m": self.m, "b": self.b, "w": self.w, "l": self.l,
            "limit_window": [self.w - self.b, self.w + self.b],
            "rows": [r.to_json() for r in self.rows],
            "corrections_shrink": self.corrections_shrink(),
        }

    def render(self) -> str:
        head = f"{'N':>3}  {'window':>22}  {'min/m(N-m)':>12}  {'max/m(N-m)':>12}  {'~min':>7}  {'~max':>7}  holds"
        lines = [f"m={self.m} b={self.b} w={self.w} l={self.l}  limit window [{self.w - self.b}, {self.w + self.b}]",
                 head]
        for r in self.rows:
            win = f"[{format_degree(r.window[0])}, {format_degree(r.window[1])}]"
            if r.ratios is None:
                lo = hi = "-"
                flo = fhi = "-"
            else:
                lo, hi = format_degree(r.ratios[0]), format_degree(r.ratios[1])
                flo, fhi = f"{float(r.ratios[0]):.3f}", f"{float(r.ratios[1]):.3f}"
            lines.append(f"{r.N:>3}  {win:>22}  {lo:>12}  {hi:>12}  {flo:>7}  {fhi:>7}  {r.holds}")
        return "\n".join(lines)


def mfw_report(D: ColoredBraid, Ns: Sequence[int]) -> ConvergenceTable:
    m = _uniform_color(D)
    if any(N <= m for N in Ns):
        raise ValueError("every N must exceed m")
    b, w, lp, lm = braid_stats(D)
    rows, reports = [], []
    for N in Ns:
        rep = polynomial_bounds_check(D, N)
        reports.append(rep)
        d = m * (N - m)
        ratios = None if rep.observed is None else (rep.observed[0] / d, rep.observed[1] / d)
        rows.append(ConvergenceRow(N, mfw_window(D, N), ratios, rep.holds))
    return ConvergenceTable(m, b, w, lp + lm, rows, reports)
