"""Colored braid closures, their MOY resolutions and the sl(N) link polynomial.

A braid word is read top to bottom, in the same direction the track strands
point.  ``colors`` is the color vector of the cross-section above the first
crossing; for a closed braid it equals the one below the last crossing.

Crossing ``+i`` is the positive crossing between positions ``i`` and ``i+1``.
With colors ``(m, n)`` entering at ``(i, i+1)``, its ``k``-resolution is the
square

    Rung(i, right, k)          -> colors (m - k, n + k)
    Rung(i, left, n + k - m)   -> colors (n, m)

for ``max(0, m - n) <= k <= m``; the negative crossing resolves to the same
squares with the mirrored coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .laurent import HalfLaurent
from .statesum import (
    alphabet,
    close_layer,
    initial_layer,
    merge_layers,
    rung_step,
    start_sections,
    step_layer,
)
from .web import LEFT, RIGHT, RungSlice, TrackWeb


class InvalidBraid(ValueError):
    pass


@dataclass(frozen=True)
class ColoredBraid:
    b: int
    colors: Tuple[int, ...]
    word: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        object.__setattr__(self, "word", tuple(int(g) for g in self.word))

    @classmethod
    def uniform(cls, b: int, m: int, word: Sequence[int] = ()) -> "ColoredBraid":
        return cls(b, (m,) * b, tuple(word))

    def crossing_colors(self) -> List[Tuple[int, int]]:
        """Colors ``(m, n)`` entering each crossing at positions ``(i, i+1)``."""
        cur = list(self.colors)
        out = []
        for g in self.word:
            i = abs(g) - 1
            out.append((cur[i], cur[i + 1]))
            cur[i], cur[i + 1] = cur[i + 1], cur[i]
        return out

    def final_colors(self) -> Tuple[int, ...]:
        cur = list(self.colors)
        for g in self.word:
            i = abs(g) - 1
            cur[i], cur[i + 1] = cur[i + 1], cur[i]
        return tuple(cur)

    @property
    def signs(self) -> List[int]:
        return [1 if g > 0 else -1 for g in self.word]

    def validate(self) -> None:
        if self.b < 1:
            raise InvalidBraid("a braid needs at least one strand")
        if len(self.colors) != self.b:
            raise InvalidBraid(f"expected {self.b} colors, got {len(self.colors)}")
        if any(c < 0 for c in self.colors):
            raise InvalidBraid("colors must be nonnegative")
        for j, g in enumerate(self.word):
            if g == 0 or not 1 <= abs(g) <= self.b - 1:
                raise InvalidBraid(f"generator {g} at word index {j} outside +-1..{self.b - 1}")
        final = self.final_colors()
        if final != self.colors:
            raise InvalidBraid(f"closure mismatch: colors {self.colors} become {final}")

    def is_uniform(self) -> bool:
        return len(set(self.colors)) <= 1

    def to_json(self) -> dict:
        if self.is_uniform() and self.b:
            return {"strands": self.b, "color": self.colors[0], "word": list(self.word)}
        return {"strands": self.b, "colors": list(self.colors), "word": list(self.word)}

    @classmethod
    def from_json(cls, data: dict) -> "ColoredBraid":
        try:
            b = int(data["strands"])
            word = tuple(int(g) for g in data.get("word", []))
            if "colors" in data:
                colors = tuple(int(c) for c in data["colors"])
            else:
                colors = (int(data["color"]),) * b
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidBraid(f"malformed braid JSON: {exc!r}") from None
        return cls(b, colors, word)


def cyclic_shift(D: ColoredBraid, r: int) -> ColoredBraid:
    """Move the first ``r`` letters to the end (conjugation).  The colors are
    those of the cross-section the new word starts from."""
    D.validate()
    r %= max(len(D.word), 1)
    cur = list(D.colors)
    for g in D.word[:r]:
        i = abs(g) - 1
        cur[i], cur[i + 1] = cur[i + 1], cur[i]
    return ColoredBraid(D.b, tuple(cur), D.word[r:] + D.word[:r])


def braid_stats(D: ColoredBraid) -> Tuple[int, int, int, int]:
    """``(b, writhe, l_plus, l_minus)``."""
    D.validate()
    lp = sum(1 for g in D.word if g > 0)
    lm = len(D.word) - lp
    return D.b, lp - lm, lp, lm


def k_range(m: int, n: int) -> range:
    return range(max(0, m - n), m + 1)


def crossing_square(i: int, m: int, n: int, k: int) -> Tuple[RungSlice, RungSlice]:
    if k not in k_range(m, n):
        raise ValueError(f"k={k} outside {max(0, m - n)}..{m} for colors ({m}, {n})")
    return RungSlice(i, RIGHT, k), RungSlice(i, LEFT, n + k - m)


def skein_coefficient(sign: int, m: int, k: int) -> HalfLaurent:
    """(-1)^(m-k) q^(k-m) for a positive crossing, (-1)^(k-m) q^(m-k) otherwise."""
    s = -1 if (m - k) % 2 else 1
    return HalfLaurent.monomial(sign * (k - m), s)


def shift_factor(sign: int, m: int, n: int, N: int) -> HalfLaurent:
    if m != n:
        return HalfLaurent.one()
    s = -1 if m % 2 else 1
    return HalfLaurent.monomial(sign * m * (N + 1 - m), s)


def h_shift(sign: int, m: int, n: int, k: int) -> int:
    if sign > 0:
        return -k if m == n else m - k
    return k if m == n else k - m


def q_shift(sign: int, m: int, n: int, k: int, N: int) -> int:
    if sign > 0:
        return k - m + m * (N + 1 - m) if m == n else k - m
    return m - k - m * (N + 1 - m) if m == n else m - k


@dataclass(frozen=True)
class ResolvedDiagram:
    web: TrackWeb
    kvec: Tuple[int, ...]
    coefficient: HalfLaurent
    s_h: int
    s_q: int


def resolve(D: ColoredBraid, kvec: Sequence[int], N: Optional[int] = None) -> ResolvedDiagram:
    """The MOY resolution picked by ``kvec``.  ``s_q`` needs ``N`` and is 0
    when ``N`` is omitted."""
    D.validate()
    kvec = tuple(kvec)
    if len(kvec) != len(D.word):
        raise ValueError(f"need {len(D.word)} resolution choices, got {len(kvec)}")
    slices: List[RungSlice] = []
    coeff = HalfLaurent.one()
    s_h = s_q = 0
    for g, (m, n), k in zip(D.word, D.crossing_colors(), kvec):
        sign = 1 if g > 0 else -1
        slices.extend(crossing_square(abs(g), m, n, k))
        coeff = coeff * skein_coefficient(sign, m, k)
        s_h += h_shift(sign, m, n, k)
        if N is not None:
            s_q += q_shift(sign, m, n, k, N)
    return ResolvedDiagram(TrackWeb(D.b, D.colors, tuple(slices)), kvec, coeff, s_h, s_q)


def resolutions(D: ColoredBraid, N: Optional[int] = None) -> Iterator[ResolvedDiagram]:
    D.validate()
    ranges = [k_range(m, n) for m, n in D.crossing_colors()]
    for kvec in product(*ranges):
        yield resolve(D, kvec, N)


def _crossing_steps(g: int, m: int, n: int, k: int) -> Tuple[tuple, tuple]:
    first, second = crossing_square(abs(g), m, n, k)
    return rung_step(first), rung_step(second)


def _signed_half(c: HalfLaurent) -> Tuple[int, int]:
    (half, coeff), = c.items()
    return coeff, half


def resolution_brackets(D: ColoredBraid, N: int) -> Iterator[Tuple[ResolvedDiagram, HalfLaurent]]:
    """Every resolution with its bracket.  Resolutions are visited depth
    first and share the sweep layers of their common crossing prefix."""
    D.validate()
    alphabet(N)
    colors = D.crossing_colors()
    starts = start_sections(D.colors, N)

    def descend(depth, layer, kvec):
        if depth == len(D.word):
            yield resolve(D, kvec, N), HalfLaurent(close_layer(layer, N))
            return
        g = D.word[depth]
        m, n = colors[depth]
        for k in k_range(m, n):
            nxt = layer
            for step in _crossing_steps(g, m, n, k):
                nxt = step_layer(nxt, step)
            yield from descend(depth + 1, nxt, kvec + (k,))

    yield from descend(0, initial_layer(starts), ())


def unnormalized_invariant(D: ColoredBraid, N: int, method: str = "sweep") -> HalfLaurent:
    """<D>_N.

    ``sweep`` folds the skein sum into the transfer matrix: after each
    crossing the layers of its resolutions are added with their skein
    coefficients.  ``resolutions`` sums coefficient * bracket over the
    resolutions one by one.
    """
    D.validate()
    alphabet(N)
    if method == "resolutions":
        total = HalfLaurent.zero()
        for r, value in resolution_brackets(D, N):
            total = total + r.coefficient * value
        return total
    if method != "sweep":
        raise ValueError(f"unknown method {method!r}")
    layer = initial_layer(start_sections(D.colors, N))
    for g, (m, n) in zip(D.word, D.crossing_colors()):
        sign = 1 if g > 0 else -1
        parts, coeffs = [], []
        for k in k_range(m, n):
            branch = layer
            for step in _crossing_steps(g, m, n, k):
                branch = step_layer(branch, step)
            parts.append(branch)
            coeffs.append(_signed_half(skein_coefficient(sign, m, k)))
        layer = merge_layers(parts, coeffs)
    return HalfLaurent(close_layer(layer, N))


def shift_product(D: ColoredBraid, N: int) -> HalfLaurent:
    D.validate()
    out = HalfLaurent.one()
    for g, (m, n) in zip(D.word, D.crossing_colors()):
        out = out * shift_factor(1 if g > 0 else -1, m, n, N)
    return out


def invariant(D: ColoredBraid, N: int, method: str = "sweep") -> HalfLaurent:
    """Normalized sl(N) polynomial P_N of the closure."""
    return unnormalized_invariant(D, N, method) * shift_product(D, N)


def graded_euler_sum(D: ColoredBraid, N: int) -> HalfLaurent:
    """Sum over resolutions of (-1)^s_h q^s_q <Gamma>_N."""
    total = HalfLaurent.zero()
    for r, value in resolution_brackets(D, N):
        sign = -1 if r.s_h % 2 else 1
        total = total + HalfLaurent.monomial(r.s_q, sign) * value
    return total


def crossing_euler_identity(sign: int, m: int, n: int, k: int, N: int) -> bool:
    lhs = skein_coefficient(sign, m, k) * shift_factor(sign, m, n, N)
    h = h_shift(sign, m, n, k)
    rhs = HalfLaurent.monomial(q_shift(sign, m, n, k, N), -1 if h % 2 else 1)
    return lhs == rhs


def euler_check(D: ColoredBraid, N: int) -> bool:
    local = all(
        crossing_euler_identity(1 if g > 0 else -1, m, n, k, N)
        for g, (m, n) in zip(D.word, D.crossing_colors())
        for k in k_range(m, n)
    )
    return local and graded_euler_sum(D, N) == invariant(D, N)


def uniform_sq_formula(D: ColoredBraid, kvec: Sequence[int], N: int) -> int:
    """w m (N - m) + sum eps_i k_i for a uniformly colored braid."""
    m = D.colors[0]
    _, w, _, _ = braid_stats(D)
    return w * m * (N - m) + sum(e * k for e, k in zip(D.signs, kvec))


def resolution_rho(D: ColoredBraid, kvec: Sequence[int]) -> Fraction:
    """sum k_i (2m - k_i) for a uniformly colored braid."""
    m = D.colors[0]
    return Fraction(sum(k * (2 * m - k) for k in kvec))
