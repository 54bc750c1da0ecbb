"""Built-in test corpus: small tracks and braids, all generated
deterministically so the self-test needs no external data."""
from __future__ import annotations

import random
from itertools import product
from typing import Dict, List, Optional, Tuple

from .braid import ColoredBraid, resolutions
from .web import LEFT, RIGHT, RungSlice, TrackWeb, circle, theta, validate_web

RANDOM_TRACK_SEED = 20240611


def circles(max_color: int = 3) -> List[TrackWeb]:
    return [circle(m) for m in range(1, max_color + 1)]


def thetas() -> List[TrackWeb]:
    return [theta(2, 1), theta(3, 1), theta(3, 2), theta(4, 2),
            TrackWeb(2, (0, 2), (RungSlice(1, LEFT, 1), RungSlice(1, RIGHT, 1)))]


def words(b: int, max_len: int, min_len: int = 0) -> List[Tuple[int, ...]]:
    gens = [s * i for i in range(1, b) for s in (1, -1)]
    out = []
    for n in range(min_len, max_len + 1):
        out.extend(product(gens, repeat=n))
    return out


def resolution_webs(b: int, max_len: int, colors=(1, 2)) -> List[TrackWeb]:
    """Distinct MOY resolutions of all uniformly colored words; a resolution
    does not depend on crossing signs, so positive words cover them all."""
    seen: Dict[TrackWeb, None] = {}
    for m in colors:
        for word in words(b, max_len):
            if any(g < 0 for g in word):
                continue
            for r in resolutions(ColoredBraid.uniform(b, m, word)):
                seen.setdefault(r.web, None)
    return list(seen)


def random_track(rng: random.Random, b: int = 3, max_color: int = 3, n_slices: int = 4,
                 tries: int = 1000) -> TrackWeb:
    """A random valid track: random rungs, then the flow is pushed back to the
    top colors left to right; draws that cannot close are rejected."""
    for _ in range(tries):
        top = tuple(rng.randint(0, max_color) for _ in range(b))
        if not any(top):
            continue
        cur = list(top)
        slices = []
        for _ in range(n_slices):
            pos = rng.randint(1, b - 1)
            d = rng.choice((RIGHT, LEFT))
            src = pos - 1 if d == RIGHT else pos
            dst = pos if d == RIGHT else pos - 1
            if cur[src] == 0:
                continue
            k = rng.randint(1, cur[src])
            if cur[dst] + k > max_color:
                continue
            cur[src] -= k
            cur[dst] += k
            slices.append(RungSlice(pos, d, k))
        for pos in range(1, b):
            diff = cur[pos - 1] - top[pos - 1]
            if diff > 0:
                slices.append(RungSlice(pos, RIGHT, diff))
            elif diff < 0:
                slices.append(RungSlice(pos, LEFT, -diff))
            cur[pos - 1] -= diff
            cur[pos] += diff
        w = TrackWeb(b, top, tuple(slices))
        if len(slices) >= 2 and not validate_web(w) and max(w.colors) <= max_color:
            return w
    raise RuntimeError("could not draw a valid random track")


def random_tracks(count: int = 10, seed: int = RANDOM_TRACK_SEED) -> List[TrackWeb]:
    rng = random.Random(seed)
    return [random_track(rng) for _ in range(count)]


def corpus_webs() -> List[TrackWeb]:
    """Circles, thetas, resolutions of 2-strand words up to 3 crossings with
    m <= 2, and ten seeded random 3-strand tracks."""
    return circles(3) + thetas() + resolution_webs(2, 3) + random_tracks(10)


def invariance_braids(m: int) -> List[ColoredBraid]:
    """Uniformly colored 2- and 3-strand braids with at most 4 crossings."""
    U = ColoredBraid.uniform
    return [
        U(1, m, ()),
        U(2, m, (1,)),
        U(2, m, (1, 1)),
        U(2, m, (1, 1, 1)),
        U(2, m, (-1, -1, -1)),
        U(2, m, (1, -1, 1)),
        U(2, m, (1, 1, 1, 1)),
        U(3, m, (1, 2)),
        U(3, m, (1, -2)),
        U(3, m, (1, -2, 1, -2)),
        U(3, m, (1, 2, 1, 2)),
        U(3, m, (1, 1, 2)),
    ]


def mixed_braids() -> List[ColoredBraid]:
    """Braids whose strands carry different colors."""
    return [
        ColoredBraid(2, (1, 2), (1, 1)),
        ColoredBraid(2, (2, 1), (1, -1)),
        ColoredBraid(3, (1, 2, 1), (1, 2, 2, 1)),
        ColoredBraid(3, (2, 1, 1), (2, 1, 1, 2)),
    ]


def power_braid(k: int, m: int) -> ColoredBraid:
    """Closure of (sigma_1 sigma_2)^k, uniformly colored."""
    return ColoredBraid.uniform(3, m, (1, 2) * k)


def trefoil(m: int = 1, sign: int = 1) -> ColoredBraid:
    return ColoredBraid.uniform(2, m, (sign,) * 3)


def figure_eight(m: int = 1) -> ColoredBraid:
    return ColoredBraid.uniform(3, m, (1, -2, 1, -2))


def named_braids() -> Dict[str, ColoredBraid]:
    return {
        "unknot": ColoredBraid.uniform(1, 1, ()),
        "trefoil": trefoil(),
        "mirror_trefoil": trefoil(sign=-1),
        "figure_eight": figure_eight(),
        "hopf": ColoredBraid.uniform(2, 1, (1, 1)),
    }


def find(name: str) -> Optional[ColoredBraid]:
    return named_braids().get(name)
