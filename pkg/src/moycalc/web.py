"""Closed MOY tracks: vertical strands with horizontal rungs, closed on the right.

Geometry used throughout the package:

* strands sit at positions ``1..b`` (left to right) and point downward;
* slices are read top to bottom, each one a rung between positions ``pos`` and
  ``pos + 1`` carrying ``color`` eastward (``dir="right"``) or westward;
* the segment below the last vertex at a position and the segment above the
  first vertex there are one edge (the "outer" edge), joined by a closure
  arc that runs around the right side of the picture.

With this embedding every closure arc turns a full counterclockwise turn and
rungs turn zero net, so rotation numbers are sums over outer edges.

Edge ids are a function of the slice layout only (not of the colors), so a
labelling recolors a web without renumbering anything.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

RIGHT = "right"
LEFT = "left"


class InvalidWeb(ValueError):
    """Raised when an operation needs a valid track and gets an invalid one."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


@dataclass(frozen=True)
class RungSlice:
    pos: int
    dir: str
    color: int

    def __post_init__(self):
        if self.dir not in (RIGHT, LEFT):
            raise ValueError(f"rung direction must be {RIGHT!r} or {LEFT!r}, got {self.dir!r}")

    @property
    def source(self) -> int:
        return self.pos if self.dir == RIGHT else self.pos + 1

    @property
    def target(self) -> int:
        return self.pos + 1 if self.dir == RIGHT else self.pos


def Rung(pos: int, dir: str, color: int) -> RungSlice:
    return RungSlice(pos, dir, color)


@dataclass(frozen=True)
class Violation:
    slice_index: Optional[int]
    rule: str
    message: str

    def __str__(self):
        if self.slice_index is None:
            return f"[{self.rule}] {self.message}"
        return f"slice {self.slice_index}: [{self.rule}] {self.message}"


@dataclass(frozen=True)
class Edge:
    id: int
    color: int
    kind: str  # "outer" | "vertical" | "rung"
    pos: int  # strand position for verticals/outer edges, left position for rungs


@dataclass(frozen=True)
class Vertex:
    """A trivalent vertex.  ``e`` is the thick edge; ``e1`` lies to the left
    of ``e2`` when looking along the orientation of ``e``."""

    id: int
    kind: str  # "split" | "merge"
    e: int
    e1: int
    e2: int
    slice_index: int
    pos: int


@dataclass(frozen=True)
class TrackWeb:
    b: int
    top_colors: Tuple[int, ...]
    slices: Tuple[RungSlice, ...] = ()
    _structure: tuple = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "top_colors", tuple(int(c) for c in self.top_colors))
        object.__setattr__(self, "slices", tuple(self.slices))

    # -- derived structure (cached; depends only on the layout) --------
    def _build(self):
        if self._structure is None:
            object.__setattr__(self, "_structure", _build_structure(self))
        return self._structure

    @property
    def edges(self) -> List[Edge]:
        return self._build()[0]

    @property
    def vertices(self) -> List[Vertex]:
        return self._build()[1]

    @property
    def outer_edges(self) -> List[int]:
        """Outer edge id at each position (index 0 is position 1)."""
        return list(range(self.b))

    @property
    def colors(self) -> Tuple[int, ...]:
        return tuple(e.color for e in self.edges)

    def recolor(self, values: Sequence[int]) -> "TrackWeb":
        """The same layout with edge colors ``values`` (indexed by edge id)."""
        rung_ids = self._build()[2]
        return TrackWeb(
            self.b,
            tuple(values[i] for i in range(self.b)),
            tuple(RungSlice(s.pos, s.dir, values[r]) for s, r in zip(self.slices, rung_ids)),
        )

    def rung_edge(self, slice_index: int) -> int:
        return self._build()[2][slice_index]

    def drop_zero_rungs(self) -> "TrackWeb":
        return TrackWeb(self.b, self.top_colors, tuple(s for s in self.slices if s.color))

    def max_color(self) -> int:
        return max(self.colors, default=0)

    def to_json(self) -> dict:
        return {
            "strands": self.b,
            "top_colors": list(self.top_colors),
            "slices": [{"pos": s.pos, "dir": s.dir, "color": s.color} for s in self.slices],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TrackWeb":
        try:
            b = data["strands"]
            top = data["top_colors"]
            raw = data.get("slices", [])
            slices = tuple(RungSlice(int(s["pos"]), str(s["dir"]), int(s["color"])) for s in raw)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed web JSON: {exc!r}") from None
        if not isinstance(b, int) or not isinstance(top, list):
            raise ValueError("malformed web JSON: 'strands' must be an int and 'top_colors' a list")
        return cls(b, tuple(top), slices)


def circle(m: int) -> TrackWeb:
    return TrackWeb(1, (m,), ())


def empty_web() -> TrackWeb:
    return TrackWeb(0, (), ())


def theta(m: int = 2, k: int = 1) -> TrackWeb:
    """Theta web: an ``m``-colored strand sheds ``k`` onto an empty neighbour and
    takes it back."""
    return TrackWeb(2, (m, 0), (Rung(1, RIGHT, k), Rung(1, LEFT, k)))


def validate_web(w: TrackWeb) -> List[Violation]:
    out: List[Violation] = []
    if not isinstance(w.b, int) or w.b < 0:
        return [Violation(None, "strands", f"strand count {w.b!r} must be a nonnegative integer")]
    if len(w.top_colors) != w.b:
        return [Violation(None, "top_colors", f"expected {w.b} top colors, got {len(w.top_colors)}")]
    for i, c in enumerate(w.top_colors):
        if c < 0:
            out.append(Violation(None, "nonnegative", f"top color at position {i + 1} is {c}"))
    running = list(w.top_colors)
    for idx, s in enumerate(w.slices):
        if s.dir not in (RIGHT, LEFT):
            out.append(Violation(idx, "direction", f"dir must be 'right' or 'left', got {s.dir!r}"))
            continue
        if not 1 <= s.pos <= w.b - 1:
            out.append(Violation(idx, "position", f"pos {s.pos} outside 1..{w.b - 1}"))
            continue
        if s.color < 0:
            out.append(Violation(idx, "nonnegative", f"rung color {s.color} is negative"))
            continue
        src, dst = s.source - 1, s.target - 1
        thick_in = running[src]
        running[src] -= s.color
        running[dst] += s.color
        if running[src] < 0:
            out.append(Violation(idx, "nonnegative",
                                 f"color at pos {src + 1} becomes {running[src]}"))
        # MOY coloring at both new vertices: thick = thin + thin
        if thick_in != running[src] + s.color:
            out.append(Violation(idx, "moy-coloring", "split vertex colors do not add up"))
    if not out and tuple(running) != w.top_colors:
        out.append(Violation(None, "closure",
                             f"bottom colors {tuple(running)} != top colors {w.top_colors}"))
    return out


def ensure_valid(w: TrackWeb) -> None:
    problems = validate_web(w)
    if problems:
        raise InvalidWeb(problems)


def _build_structure(w: TrackWeb):
    ensure_valid(w)
    b = w.b
    last_touch = {}
    for idx, s in enumerate(w.slices):
        last_touch[s.source] = idx
        last_touch[s.target] = idx

    edges: List[Edge] = [Edge(i, w.top_colors[i], "outer", i + 1) for i in range(b)]
    vertices: List[Vertex] = []
    rung_ids: List[int] = []
    current = list(range(b))
    colors = list(w.top_colors)

    def new_edge(color, kind, pos, slice_idx):
        # the segment leaving the last vertex at a position is the outer edge
        if kind == "vertical" and last_touch.get(pos) == slice_idx:
            return pos - 1
        edges.append(Edge(len(edges), color, kind, pos))
        return len(edges) - 1

    for idx, s in enumerate(w.slices):
        src, dst = s.source, s.target
        k = s.color
        rung = new_edge(k, "rung", s.pos, idx)
        rung_ids.append(rung)

        thick_in = current[src - 1]
        colors[src - 1] -= k
        cont = new_edge(colors[src - 1], "vertical", src, idx)
        if s.dir == RIGHT:
            e1, e2 = rung, cont
        else:
            e1, e2 = cont, rung
        vertices.append(Vertex(len(vertices), "split", thick_in, e1, e2, idx, src))
        current[src - 1] = cont

        thin_in = current[dst - 1]
        colors[dst - 1] += k
        out = new_edge(colors[dst - 1], "vertical", dst, idx)
        if s.dir == RIGHT:
            e1, e2 = thin_in, rung
        else:
            e1, e2 = rung, thin_in
        vertices.append(Vertex(len(vertices), "merge", out, e1, e2, idx, dst))
        current[dst - 1] = out

    return edges, vertices, rung_ids


def edge_set(w: TrackWeb) -> List[Edge]:
    return list(w.edges)


# -- labellings ----------------------------------------------------------

Labelling = Tuple[int, ...]  # indexed by edge id


def is_labelling(w: TrackWeb, f: Sequence[int]) -> bool:
    edges = w.edges
    if len(f) != len(edges):
        return False
    if any(not 0 <= f[e.id] <= e.color for e in edges):
        return False
    return all(f[v.e] == f[v.e1] + f[v.e2] for v in w.vertices)


def full_labelling(w: TrackWeb) -> Labelling:
    return w.colors


def complement_labelling(w: TrackWeb, f: Sequence[int]) -> Labelling:
    if not is_labelling(w, f):
        raise ValueError("not a labelling of this web")
    return tuple(c - x for c, x in zip(w.colors, f))


def enumerate_labellings(w: TrackWeb) -> List[Labelling]:
    """All labellings, found by choosing the top values and each rung value and
    pushing them down the strands."""
    ensure_valid(w)
    edges = w.edges
    n_edges = len(edges)
    results: List[Labelling] = []

    # per slice: (rung id, source idx, target idx, cont id, out id)
    plan = []
    for idx, s in enumerate(w.slices):
        vs = w.vertices[2 * idx], w.vertices[2 * idx + 1]
        split, merge = vs
        cont = split.e2 if s.dir == RIGHT else split.e1
        plan.append((w.rung_edge(idx), s.source - 1, s.target - 1, cont, merge.e))

    values = [0] * n_edges

    def descend(idx, running):
        if idx == len(plan):
            if tuple(running) == tuple(values[: w.b]):
                results.append(tuple(values))
            return
        rung, src, dst, cont, out = plan[idx]
        cap = min(edges[rung].color, running[src])
        for x in range(cap + 1):
            a, bb = running[src] - x, running[dst] + x
            if a > edges[cont].color or bb > edges[out].color:
                continue
            # cont/out may be an outer edge whose value is already fixed
            if cont < w.b and values[cont] != a:
                continue
            if out < w.b and values[out] != bb:
                continue
            values[rung], values[cont], values[out] = x, a, bb
            nxt = list(running)
            nxt[src], nxt[dst] = a, bb
            descend(idx + 1, nxt)

    def choose_top(i):
        if i == w.b:
            descend(0, list(values[: w.b]))
            return
        for x in range(edges[i].color + 1):
            values[i] = x
            choose_top(i + 1)

    choose_top(0)
    return results


# -- scalar quantities ---------------------------------------------------

def rotation_number(w: TrackWeb, f: Optional[Sequence[int]] = None) -> int:
    """rot of the web (or of the web recolored by ``f``): the sum of the outer
    edge colors, each closure arc being one counterclockwise turn."""
    ensure_valid(w)
    if f is None:
        return sum(w.top_colors)
    if not is_labelling(w, f):
        raise ValueError("not a labelling of this web")
    return sum(f[i] for i in range(w.b))


def vertex_rho(v: Vertex, colors: Sequence[int]) -> Fraction:
    return Fraction(colors[v.e1] * colors[v.e2], 2)


def rho(w: TrackWeb, colors: Optional[Sequence[int]] = None) -> Fraction:
    colors = w.colors if colors is None else colors
    return sum((vertex_rho(v, colors) for v in w.vertices), Fraction(0))


def vertex_pairing(v: Vertex, f: Sequence[int], colors: Sequence[int]) -> Fraction:
    """(f(e1) fbar(e2) - fbar(e1) f(e2)) / 2."""
    f1, f2 = f[v.e1], f[v.e2]
    g1, g2 = colors[v.e1] - f1, colors[v.e2] - f2
    return Fraction(f1 * g2 - g1 * f2, 2)


def sigma(w: TrackWeb, f: Sequence[int], M: int, N: int) -> Fraction:
    colors = w.colors
    fbar = complement_labelling(w, f)
    pair = sum((vertex_pairing(v, f, colors) for v in w.vertices), Fraction(0))
    return M * rotation_number(w, fbar) - N * rotation_number(w, f) + pair
