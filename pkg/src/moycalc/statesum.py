"""The sl(N) MOY state sum on closed tracks.

Two evaluators live here.  ``bracket`` sweeps the track top to bottom with a
transfer matrix over cross-sections; ``bracket_naive`` enumerates states edge
by edge, knowing nothing about slices, and sums the definition literally.

Subsets of the alphabet are handled internally as bitmasks: bit ``j`` stands
for the element ``2j - N + 1``.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .laurent import HalfLaurent
from .web import RIGHT, RungSlice, TrackWeb, Vertex, ensure_valid

DEFAULT_STATE_CAP = int(os.environ.get("MOYCALC_STATE_CAP", 10 ** 5))
DEFAULT_SECTION_CAP = int(os.environ.get("MOYCALC_SECTION_CAP", 2 * 10 ** 6))

State = Tuple[FrozenSet[int], ...]  # indexed by edge id


class CapExceeded(RuntimeError):
    pass


_caps = {"state": DEFAULT_STATE_CAP, "section": DEFAULT_SECTION_CAP}


def set_caps(state_cap: Optional[int] = None, section_cap: Optional[int] = None) -> None:
    """Override the process-wide caps used when a call passes none."""
    for key, val in (("state", state_cap), ("section", section_cap)):
        if val is not None:
            if val < 1:
                raise ValueError(f"{key} cap must be positive")
            _caps[key] = int(val)


def get_caps() -> Dict[str, int]:
    return dict(_caps)


class EmbeddingError(AssertionError):
    """A traced circle did not turn exactly once counterclockwise."""


def alphabet(N: int) -> List[int]:
    if N < 1:
        raise ValueError("N must be a positive integer")
    return [2 * k - N + 1 for k in range(N)]


def pi_count(A1: Iterable[int], A2: Iterable[int]) -> int:
    """Number of pairs (a1, a2) in A1 x A2 with a1 > a2."""
    A2 = list(A2)
    return sum(1 for a1 in A1 for a2 in A2 if a1 > a2)


# -- bitmask helpers -----------------------------------------------------

def _popcount(x: int) -> int:
    return bin(x).count("1")


def _pi_mask(m1: int, m2: int) -> int:
    total = 0
    while m1:
        low = m1 & -m1
        total += _popcount(m2 & (low - 1))
        m1 ^= low
    return total


def _mask_sum(mask: int, N: int) -> int:
    total = 0
    j = 0
    while mask:
        if mask & 1:
            total += 2 * j - N + 1
        mask >>= 1
        j += 1
    return total


def _subsets_of(mask: int, k: int) -> List[int]:
    bits = [1 << j for j in range(mask.bit_length()) if mask >> j & 1]
    return [sum(c) for c in combinations(bits, k)]


def _to_mask(subset: Iterable[int], N: int) -> int:
    m = 0
    for a in subset:
        j, r = divmod(a + N - 1, 2)
        if r or not 0 <= j < N:
            raise ValueError(f"{a} is not in the alphabet for N={N}")
        m |= 1 << j
    return m


def _from_mask(mask: int, N: int) -> FrozenSet[int]:
    return frozenset(2 * j - N + 1 for j in range(N) if mask >> j & 1)


# -- states --------------------------------------------------------------

def is_state(w: TrackWeb, phi: Sequence[FrozenSet[int]], N: int) -> bool:
    sigma_n = set(alphabet(N))
    edges = w.edges
    if len(phi) != len(edges):
        return False
    for e in edges:
        if len(phi[e.id]) != e.color or not set(phi[e.id]) <= sigma_n:
            return False
    for v in w.vertices:
        a1, a2 = phi[v.e1], phi[v.e2]
        if a1 & a2 or (a1 | a2) != phi[v.e]:
            return False
    return True


def enumerate_states(w: TrackWeb, N: int, cap: Optional[int] = None) -> List[State]:
    """Every state, by backtracking over edges in id order and checking each
    vertex as soon as its three edges are assigned."""
    ensure_valid(w)
    edges = w.edges
    if any(e.color > N for e in edges):
        return []
    n = len(edges)
    # vertices become checkable once their largest edge id is assigned
    ready: Dict[int, List[Vertex]] = {}
    for v in w.vertices:
        ready.setdefault(max(v.e, v.e1, v.e2), []).append(v)
    choices = [[sum(c) for c in combinations([1 << j for j in range(N)], e.color)] for e in edges]
    masks = [0] * n
    out: List[State] = []

    def go(i):
        if i == n:
            if cap is not None and len(out) >= cap:
                raise CapExceeded(f"more than {cap} states")
            out.append(tuple(_from_mask(m, N) for m in masks))
            return
        for m in choices[i]:
            masks[i] = m
            ok = True
            for v in ready.get(i, ()):
                m1, m2 = masks[v.e1], masks[v.e2]
                if m1 & m2 or (m1 | m2) != masks[v.e]:
                    ok = False
                    break
            if ok:
                go(i + 1)

    go(0)
    return out


def vertex_weight(v: Vertex, phi: Sequence[FrozenSet[int]]) -> HalfLaurent:
    a1, a2 = phi[v.e1], phi[v.e2]
    return HalfLaurent.from_half_units(len(a1) * len(a2) - 2 * pi_count(a1, a2))


def _vertex_weight_half(v: Vertex, phi) -> int:
    a1, a2 = phi[v.e1], phi[v.e2]
    return len(a1) * len(a2) - 2 * pi_count(a1, a2)


@dataclass(frozen=True)
class CircleTrace:
    element: int
    edges: Tuple[int, ...]
    turning: int


_HEADINGS = {"S": 0, "E": 1, "W": -1}  # quarter turns counterclockwise from south


def _edge_heading(w: TrackWeb, eid: int) -> str:
    e = w.edges[eid]
    if e.kind != "rung":
        return "S"
    idx = next(i for i in range(len(w.slices)) if w.rung_edge(i) == eid)
    return "E" if w.slices[idx].dir == RIGHT else "W"


def trace_circles(w: TrackWeb, phi: Sequence[FrozenSet[int]]) -> List[CircleTrace]:
    """Split the state into one circle per (element, connected path) and
    accumulate each circle's turning in quarter turns."""
    edges = w.edges
    head: Dict[int, Vertex] = {}
    for v in w.vertices:
        if v.kind == "split":
            head[v.e] = v
        else:
            head[v.e1] = v
            head[v.e2] = v
    headings = [_edge_heading(w, e.id) for e in edges]

    def turn(h_from, h_to):
        return _HEADINGS[h_to] - _HEADINGS[h_from]

    seen = set()
    traces: List[CircleTrace] = []
    for e in edges:
        for a in sorted(phi[e.id]):
            if (e.id, a) in seen:
                continue
            path = []
            quarter = 0
            cur = e.id
            while (cur, a) not in seen:
                seen.add((cur, a))
                path.append(cur)
                if edges[cur].kind == "outer":
                    quarter += 4  # closure arc: one full counterclockwise turn
                v = head.get(cur)
                if v is None:
                    nxt = cur  # vertex-free strand closes on itself
                elif v.kind == "split":
                    nxt = v.e1 if a in phi[v.e1] else v.e2
                    if a not in phi[nxt]:
                        raise ValueError(f"element {a} lost at vertex {v.id}")
                else:
                    nxt = v.e
                quarter += turn(headings[cur], headings[nxt])
                cur = nxt
            if cur != e.id:
                raise ValueError(f"trace of element {a} from edge {e.id} did not close")
            if quarter % 4:
                raise EmbeddingError(f"circle {path} has fractional turning {quarter}/4")
            traces.append(CircleTrace(a, tuple(path), quarter // 4))
    return traces


def state_rotation(w: TrackWeb, phi: Sequence[FrozenSet[int]], method: str = "both") -> int:
    """rot(phi).  ``local`` sums outer-edge elements, ``global`` sums
    element * turning over traced circles; ``both`` checks they agree."""
    local = sum(sum(phi[i]) for i in range(w.b))
    if method == "local":
        return local
    glob = sum(c.element * c.turning for c in trace_circles(w, phi))
    if method == "global":
        return glob
    if local != glob:
        raise EmbeddingError(f"local rotation {local} != traced rotation {glob}")
    return local


def state_term(w: TrackWeb, phi: Sequence[FrozenSet[int]]) -> HalfLaurent:
    half = sum(_vertex_weight_half(v, phi) for v in w.vertices)
    half += 2 * state_rotation(w, phi, method="local")
    return HalfLaurent.from_half_units(half)


def bracket_naive(w: TrackWeb, N: int, cap: Optional[int] = None) -> HalfLaurent:
    ensure_valid(w)
    if cap is None:
        cap = _caps["state"]
    alphabet(N)
    total: Dict[int, int] = {}
    for phi in enumerate_states(w, N, cap=cap):
        half = sum(_vertex_weight_half(v, phi) for v in w.vertices)
        half += 2 * state_rotation(w, phi, method="global")
        total[half] = total.get(half, 0) + 1
    return HalfLaurent(total)


# -- transfer-matrix sweep -----------------------------------------------
#
# A layer maps (start section, current section) to a polynomial stored as a
# {half-exponent: coeff} dict.  Sections are tuples of bitmasks, one per
# strand.  Only entries whose current section equals their start survive
# the closure.

def rung_step(s: RungSlice) -> tuple:
    """Sweep data for one rung: (src index, dst index, color, rung is e1 at
    the split, rung is e1 at the merge)."""
    right = s.dir == RIGHT
    return s.source - 1, s.target - 1, s.color, right, not right


def _slice_plan(w: TrackWeb):
    plan = []
    for idx, s in enumerate(w.slices):
        step = rung_step(s)
        split, merge = w.vertices[2 * idx], w.vertices[2 * idx + 1]
        rung = w.rung_edge(idx)
        # the sweep's left/right reading must match the web's vertex roles
        assert step[3] == (split.e1 == rung) and step[4] == (merge.e1 == rung)
        plan.append(step)
    return tuple(plan)


@lru_cache(maxsize=None)
def _transitions(a_src: int, a_dst: int, k: int, rung_e1_split: bool,
                 rung_e1_merge: bool) -> Tuple[Tuple[int, int, int], ...]:
    """(new src mask, new dst mask, weight in half units) for every way of
    sending ``k`` elements of ``a_src`` across a rung onto ``a_dst``."""
    c_src, c_dst = _popcount(a_src), _popcount(a_dst)
    out = []
    for s in _subsets_of(a_src, k):
        if s & a_dst:
            continue  # merge needs disjoint inputs
        rest = a_src ^ s
        half = k * (c_src - k) + c_dst * k
        half -= 2 * (_pi_mask(s, rest) if rung_e1_split else _pi_mask(rest, s))
        half -= 2 * (_pi_mask(s, a_dst) if rung_e1_merge else _pi_mask(a_dst, s))
        out.append((rest, a_dst | s, half))
    return tuple(out)


def _add_shifted(acc: Dict[int, int], poly: Dict[int, int], shift: int, sign: int = 1) -> None:
    for e, c in poly.items():
        key = e + shift
        acc[key] = acc.get(key, 0) + sign * c


def initial_layer(starts: Iterable[tuple]) -> Dict[tuple, Dict[int, int]]:
    return {(st, st): {0: 1} for st in starts}


def step_layer(layer: Dict[tuple, Dict[int, int]], step: tuple,
               section_cap: Optional[int] = None) -> Dict[tuple, Dict[int, int]]:
    if section_cap is None:
        section_cap = _caps["section"]
    src, dst, k, e1_split, e1_merge = step
    nxt: Dict[tuple, Dict[int, int]] = {}
    for (start, section), poly in layer.items():
        for rest, new_dst, half in _transitions(section[src], section[dst], k, e1_split, e1_merge):
            new = list(section)
            new[src], new[dst] = rest, new_dst
            key = (start, tuple(new))
            acc = nxt.get(key)
            if acc is None:
                acc = nxt[key] = {}
            _add_shifted(acc, poly, half)
    if len(nxt) > section_cap:
        raise CapExceeded(f"cross-section count {len(nxt)} exceeds cap {section_cap}")
    return nxt


def merge_layers(layers, coefficients) -> Dict[tuple, Dict[int, int]]:
    """Sum of layers, each multiplied by a signed monomial (sign, half units)."""
    out: Dict[tuple, Dict[int, int]] = {}
    for layer, (sign, shift) in zip(layers, coefficients):
        for key, poly in layer.items():
            acc = out.get(key)
            if acc is None:
                acc = out[key] = {}
            _add_shifted(acc, poly, shift, sign)
    return out


def close_layer(layer: Dict[tuple, Dict[int, int]], N: int) -> Dict[int, int]:
    total: Dict[int, int] = {}
    for (start, section), poly in layer.items():
        if start == section:
            closure = 2 * sum(_mask_sum(m, N) for m in start)
            _add_shifted(total, poly, closure)
    return {e: c for e, c in total.items() if c}


def start_sections(top_colors: Sequence[int], N: int) -> List[tuple]:
    sections: List[tuple] = [()]
    for c in top_colors:
        options = _subsets_of((1 << N) - 1, c)
        sections = [sec + (m,) for sec in sections for m in options]
    return sections


def _sweep(args) -> Dict[int, int]:
    starts, plan, N, section_cap = args
    layer = initial_layer(starts)
    for step in plan:
        layer = step_layer(layer, step, section_cap)
    return close_layer(layer, N)


def bracket(w: TrackWeb, N: int, workers: int = 1,
            section_cap: Optional[int] = None) -> HalfLaurent:
    """<w>_N by a top-to-bottom transfer-matrix sweep.

    The admissible top sections can be split across ``workers`` processes;
    the partial sums are added exactly, so the result does not depend on the
    split.
    """
    ensure_valid(w)
    alphabet(N)
    if any(c > N for c in w.colors):
        return HalfLaurent.zero()
    if section_cap is None:
        section_cap = _caps["section"]
    plan = _slice_plan(w)
    starts = start_sections(w.top_colors, N)
    if len(starts) > section_cap:
        raise CapExceeded(f"top cross-section count {len(starts)} exceeds cap {section_cap}")
    if workers > 1 and len(starts) > 1:
        chunks = [starts[i::workers] for i in range(workers)]
        jobs = [(chunk, plan, N, section_cap) for chunk in chunks if chunk]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_sweep, jobs))
    else:
        parts = [_sweep((starts, plan, N, section_cap))]
    total: Dict[int, int] = {}
    for part in parts:
        _add_shifted(total, part, 0)
    return HalfLaurent(total)


def state_to_masks(phi: Sequence[FrozenSet[int]], N: int) -> Tuple[int, ...]:
    return tuple(_to_mask(a, N) for a in phi)
