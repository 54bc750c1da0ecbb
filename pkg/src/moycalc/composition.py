"""Splitting rank-(M+N) states into rank-M and rank-N pieces, and the
resulting product formula for the MOY bracket."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .laurent import HalfLaurent
from .statesum import (
    _vertex_weight_half,
    alphabet,
    bracket,
    enumerate_states,
    is_state,
    state_rotation,
)
from .web import (
    TrackWeb,
    complement_labelling,
    enumerate_labellings,
    ensure_valid,
    is_labelling,
    rotation_number,
    sigma,
    vertex_pairing,
)


@dataclass(frozen=True)
class SplitState:
    base_labelling: Tuple[int, ...]
    left_state: Tuple[FrozenSet[int], ...]  # rank M, on the web recolored by f
    right_state: Tuple[FrozenSet[int], ...]  # rank N, on the web recolored by fbar


def lower_block(M: int, N: int) -> List[int]:
    """The M smallest elements of the rank-(M+N) alphabet."""
    return alphabet(M + N)[:M]


def split_state(w: TrackWeb, phi: Sequence[FrozenSet[int]], M: int, N: int) -> SplitState:
    low = set(lower_block(M, N))
    left = tuple(frozenset(a + N for a in s if a in low) for s in phi)
    right = tuple(frozenset(a - M for a in s if a not in low) for s in phi)
    f = tuple(len(s) for s in left)
    return SplitState(f, left, right)


def merge_state(left: Sequence[FrozenSet[int]], right: Sequence[FrozenSet[int]],
                M: int, N: int) -> Tuple[FrozenSet[int], ...]:
    """Inverse of ``split_state``."""
    return tuple(frozenset({a - N for a in l} | {a + M for a in r}) for l, r in zip(left, right))


@dataclass
class LabellingTerm:
    labelling: Tuple[int, ...]
    sigma: Fraction
    left: HalfLaurent
    right: HalfLaurent

    @property
    def value(self) -> HalfLaurent:
        return (self.left * self.right).shift(self.sigma)

    def to_json(self) -> dict:
        return {
            "labelling": list(self.labelling),
            "sigma": str(self.sigma),
            "bracket_M": self.left.to_json(),
            "bracket_N": self.right.to_json(),
            "term": self.value.to_json(),
        }


@dataclass
class CompositionReport:
    M: int
    N: int
    holds: bool
    lhs: HalfLaurent
    rhs: HalfLaurent
    terms: List[LabellingTerm] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "M": self.M,
            "N": self.N,
            "holds": self.holds,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "terms": [t.to_json() for t in self.terms if t.value],
        }


def composition_terms(w: TrackWeb, M: int, N: int, workers: int = 1) -> List[LabellingTerm]:
    ensure_valid(w)
    terms = []
    for f in enumerate_labellings(w):
        fbar = complement_labelling(w, f)
        left = bracket(w.recolor(f), M, workers=workers)
        right = bracket(w.recolor(fbar), N, workers=workers)
        terms.append(LabellingTerm(f, sigma(w, f, M, N), left, right))
    return terms


def composition_rhs(w: TrackWeb, M: int, N: int, workers: int = 1) -> HalfLaurent:
    total = HalfLaurent.zero()
    for t in composition_terms(w, M, N, workers):
        total = total + t.value
    return total


def verify_composition(w: TrackWeb, M: int, N: int, workers: int = 1) -> CompositionReport:
    if M < 1 or N < 1:
        raise ValueError("M and N must be positive")
    terms = composition_terms(w, M, N, workers)
    rhs = HalfLaurent.zero()
    for t in terms:
        rhs = rhs + t.value
    lhs = bracket(w, M + N, workers=workers)
    return CompositionReport(M, N, lhs == rhs, lhs, rhs, terms)


# -- state-level checks ----------------------------------------------------

@dataclass
class SplitCheck:
    states: int = 0
    partition_ok: bool = True
    bijection_ok: bool = True
    rotation_ok: bool = True
    weight_ok: bool = True
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.partition_ok and self.bijection_ok and self.rotation_ok and self.weight_ok


def check_state_splitting(w: TrackWeb, M: int, N: int) -> SplitCheck:
    """Exhaustively check, for every rank-(M+N) state: the labelling blocks,
    the block bijection onto pairs of smaller states, and the per-state
    rotation and per-vertex weight identities."""
    report = SplitCheck()
    colors = w.colors
    states = enumerate_states(w, M + N, cap=None)
    report.states = len(states)
    blocks: Dict[Tuple[int, ...], List[SplitState]] = {}
    for phi in states:
        sp = split_state(w, phi, M, N)
        f = sp.base_labelling
        if not is_labelling(w, f):
            report.partition_ok = False
            report.failures.append(f"f_phi={f} is not a labelling")
            continue
        fbar = complement_labelling(w, f)
        wf, wfbar = w.recolor(f), w.recolor(fbar)
        if not (is_state(wf, sp.left_state, M) and is_state(wfbar, sp.right_state, N)):
            report.bijection_ok = False
            report.failures.append(f"split of {phi} is not a pair of states")
        if merge_state(sp.left_state, sp.right_state, M, N) != tuple(phi):
            report.bijection_ok = False
            report.failures.append(f"split of {phi} does not merge back")
        blocks.setdefault(f, []).append(sp)

        lhs = state_rotation(w, phi)
        rhs = (state_rotation(wf, sp.left_state) + state_rotation(wfbar, sp.right_state)
               - N * rotation_number(w, f) + M * rotation_number(w, fbar))
        if lhs != rhs:
            report.rotation_ok = False
            report.failures.append(f"rot mismatch at {phi}: {lhs} != {rhs}")
        for v in w.vertices:
            total = _vertex_weight_half(v, phi)
            parts = (_vertex_weight_half(v, sp.left_state) + _vertex_weight_half(v, sp.right_state)
                     + 2 * vertex_pairing(v, f, colors))
            if total != parts:
                report.weight_ok = False
                report.failures.append(f"weight mismatch at vertex {v.id}, state {phi}")

    labellings = set(enumerate_labellings(w))
    if not set(blocks) <= labellings:
        report.partition_ok = False
        report.failures.append("a block is indexed by an unknown labelling")
    for f in labellings:
        fbar = complement_labelling(w, f)
        members = blocks.get(f, [])
        pairs = Counter((sp.left_state, sp.right_state) for sp in members)
        if any(c > 1 for c in pairs.values()):
            report.bijection_ok = False
            report.failures.append(f"split map not injective on block {f}")
        left_states = enumerate_states(w.recolor(f), M, cap=None)
        right_states = enumerate_states(w.recolor(fbar), N, cap=None)
        if len(members) != len(left_states) * len(right_states):
            report.partition_ok = False
            report.failures.append(
                f"block {f} has {len(members)} states, expected "
                f"{len(left_states)} * {len(right_states)}")
        elif set(pairs) != {(a, b) for a in left_states for b in right_states}:
            report.bijection_ok = False
            report.failures.append(f"split map not onto on block {f}")
    return report
