"""Exact Laurent polynomials in q with half-integer exponents.

Exponents are stored as integers counting powers of q^(1/2), so ``q**3``
is stored under key 6 and ``q**(1/2)`` under key 1.  Coefficients are Python
ints, which never overflow.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Optional, Tuple, Union

Exponent = Union[int, Fraction]


def _half_units(exp: Exponent) -> int:
    twice = Fraction(exp) * 2
    if twice.denominator != 1:
        raise ValueError(f"exponent {exp} is not a multiple of 1/2")
    return int(twice)


class HalfLaurent:
    """An element of Z[q^(1/2), q^(-1/2)].

    Instances are treated as immutable values: every arithmetic operation
    returns a new polynomial and the term map is never mutated in place.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[int, int]] = None):
        self._terms = {k: v for k, v in (terms or {}).items() if v}
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls) -> "HalfLaurent":
        return cls()

    @classmethod
    def one(cls) -> "HalfLaurent":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: Exponent = 0, coeff: int = 1) -> "HalfLaurent":
        """``coeff * q**exp``; ``exp`` may be an int or a half-integer Fraction."""
        return cls({_half_units(exp): coeff})

    @classmethod
    def from_half_units(cls, half_exp: int, coeff: int = 1) -> "HalfLaurent":
        return cls({half_exp: coeff})

    # -- accessors ----------------------------------------------------
    @property
    def terms(self) -> dict:
        """A copy of the ``{2*exponent: coefficient}`` map."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coefficient(self, exp: Exponent) -> int:
        return self._terms.get(_half_units(exp), 0)

    def degree_range(self) -> Optional[Tuple[Fraction, Fraction]]:
        """Exact ``(min_deg, max_deg)``, or ``None`` for the zero polynomial."""
        if not self._terms:
            return None
        return Fraction(min(self._terms), 2), Fraction(max(self._terms), 2)

    def evaluate_at_one(self) -> int:
        return sum(self._terms.values())

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return HalfLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return HalfLaurent({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for k1, v1 in self._terms.items():
            for k2, v2 in other._terms.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + v1 * v2
        return HalfLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials can be inverted")
            (k, v), = self._terms.items()
            if v not in (1, -1):
                raise ValueError("monomial coefficient must be a unit to invert")
            return HalfLaurent({-k * (-n): v ** (-n)})
        result = HalfLaurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, exp: Exponent) -> "HalfLaurent":
        """Multiply by ``q**exp``."""
        h = _half_units(exp)
        return HalfLaurent({k + h: v for k, v in self._terms.items()})

    def substitute_q_inverse(self) -> "HalfLaurent":
        """The bar involution q -> q^(-1)."""
        return HalfLaurent({-k: v for k, v in self._terms.items()})

    # -- comparison / hashing ----------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- serialization -----------------------------------------------
    def to_json(self) -> list:
        """``[[2*exponent, coefficient], ...]`` sorted by exponent."""
        return [[k, self._terms[k]] for k in sorted(self._terms)]

    @classmethod
    def from_json(cls, data: Iterable) -> "HalfLaurent":
        out: dict = {}
        for pair in data:
            k, v = pair
            if not isinstance(k, int) or not isinstance(v, int):
                raise ValueError(f"bad term {pair!r}: expected two integers")
            out[k] = out.get(k, 0) + v
        return cls(out)

    def __repr__(self):
        return f"HalfLaurent({self.to_json()})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k in sorted(self._terms):
            c = self._terms[k]
            if k == 0:
                mono = ""
            elif k % 2 == 0:
                mono = "q" if k == 2 else f"q^{k // 2}"
            else:
                mono = f"q^({k}/2)"
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _coerce(x):
    if isinstance(x, HalfLaurent):
        return x
    if isinstance(x, int):
        return HalfLaurent({0: x})
    return NotImplemented


def combine(a: HalfLaurent, b: HalfLaurent, op: str) -> HalfLaurent:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def degree_range(p: HalfLaurent) -> Optional[Tuple[Fraction, Fraction]]:
    return p.degree_range()


def q(exp: Exponent = 1) -> HalfLaurent:
    return HalfLaurent.monomial(exp)


def quantum_integer(n: int) -> HalfLaurent:
    """[n] = q^(n-1) + q^(n-3) + ... + q^(1-n); [0] = 0."""
    if n < 0:
        return -quantum_integer(-n)
    return HalfLaurent({2 * (n - 1 - 2 * j): 1 for j in range(n)})


def quantum_binomial(N: int, m: int) -> HalfLaurent:
    """Balanced Gaussian binomial, by summing q^(sum A) over m-subsets of
    {2k - N + 1 : 0 <= k < N}.
    """
    if N < 1:
        raise ValueError("N must be positive")
    if m < 0 or m > N:
        raise ValueError(f"m={m} outside 0..{N}")
    alphabet = [2 * k - N + 1 for k in range(N)]
    out: dict = {}
    for subset in combinations(alphabet, m):
        key = 2 * sum(subset)
        out[key] = out.get(key, 0) + 1
    return HalfLaurent(out)


def format_degree(d: Fraction) -> str:
    """Exact rendering: ``"3"`` or ``"-5/2"``."""
    d = Fraction(d)
    return str(d.numerator) if d.denominator == 1 else f"{d.numerator}/{d.denominator}"
