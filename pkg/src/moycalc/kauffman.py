"""Kauffman bracket of uncolored braid closures.

Independent of the MOY machinery: each crossing is smoothed into either the
identity or a cup-cap pair, loops of the closed Temperley-Lieb diagram are
counted with a union-find, and polynomials in A are plain ``{exp: coeff}``
dicts.  Used as the m = 1, N = 2 cross-check.
"""
from __future__ import annotations

from itertools import product
from typing import Dict, Sequence

from .laurent import HalfLaurent


def _loops(b: int, word: Sequence[int], smoothing: Sequence[int]) -> int:
    L = len(word)
    parent = list(range((L + 1) * b))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    node = lambda t, p: t * b + p
    for t, (g, s) in enumerate(zip(word, smoothing)):
        i = abs(g) - 1
        for p in range(b):
            if p not in (i, i + 1):
                union(node(t, p), node(t + 1, p))
        if s == 0:
            union(node(t, i), node(t + 1, i))
            union(node(t, i + 1), node(t + 1, i + 1))
        else:
            union(node(t, i), node(t, i + 1))
            union(node(t + 1, i), node(t + 1, i + 1))
    for p in range(b):
        union(node(L, p), node(0, p))
    return len({find(x) for x in range(len(parent))})


def _mul(p: Dict[int, int], r: Dict[int, int]) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for a, x in p.items():
        for c, y in r.items():
            out[a + c] = out.get(a + c, 0) + x * y
    return {k: v for k, v in out.items() if v}


def kauffman_bracket(b: int, word: Sequence[int]) -> Dict[int, int]:
    """<D> in A with the one-loop diagram normalized to 1."""
    delta = {2: -1, -2: -1}
    total: Dict[int, int] = {}
    for smoothing in product((0, 1), repeat=len(word)):
        # identity smoothing of a crossing of sign e carries A^e
        exp = sum((1 if g > 0 else -1) * (1 if s == 0 else -1) for g, s in zip(word, smoothing))
        term = {exp: 1}
        for _ in range(_loops(b, word, smoothing) - 1):
            term = _mul(term, delta)
        for k, v in term.items():
            total[k] = total.get(k, 0) + v
    return {k: v for k, v in total.items() if v}


def normalized_bracket(b: int, word: Sequence[int]) -> Dict[int, int]:
    """(-A^3)^(-writhe) <D>."""
    w = sum(1 if g > 0 else -1 for g in word)
    factor = {-3 * w: -1 if w % 2 else 1}
    return _mul(kauffman_bracket(b, word), factor)


def jones_sl2(b: int, word: Sequence[int], chirality: int = 1) -> HalfLaurent:
    """The unnormalized Jones value (q + 1/q) f(D) under A^2 = -q^(-chirality).

    All A-exponents of f(D) are even, so the substitution is exact in q.
    """
    f = normalized_bracket(b, word)
    out: Dict[int, int] = {}
    for a, c in f.items():
        if a % 2:
            raise ValueError("odd A-exponent in normalized bracket")
        j = a // 2
        sign = -1 if j % 2 else 1
        key = -chirality * j * 2  # half units of q
        out[key] = out.get(key, 0) + sign * c
    return HalfLaurent(out) * HalfLaurent({2: 1, -2: 1})
