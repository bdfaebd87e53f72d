"""Supernatural numbers of divisor sequences and the K0-order criterion.

Infinite sequences can only be handled through finite prefixes.  Every
verdict here is a statement about the prefixes actually given, and
supernatural numbers computed from a prefix carry ``from_prefix=True``.
Infinite exponents only appear when a user writes them explicitly.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from sympy import factorint

from .errors import DivisibilityError
from .words import dimension_d

__all__ = [
    "INF",
    "DivisorSequence",
    "SupernaturalNumber",
    "K0Order",
    "supernatural_from_sequence",
    "supernatural_eq",
    "d_divides_iff",
    "expansion_witness",
    "k0_order",
    "k0_isomorphic",
]

INF = math.inf


@dataclass(frozen=True)
class DivisorSequence:
    terms: tuple[int, ...]

    def __post_init__(self):
        terms = tuple(int(t) for t in self.terms)
        if not terms:
            raise DivisibilityError("a divisor sequence needs at least one term")
        if terms[0] < 1:
            raise DivisibilityError(f"terms must be positive, got {terms[0]}")
        for a, b in zip(terms, terms[1:]):
            if b <= a or b % a:
                raise DivisibilityError(f"consecutive terms ({a}, {b}) violate n_k | n_(k+1) with n_k < n_(k+1)")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def parse(cls, text: str) -> DivisorSequence:
        return cls(tuple(int(x) for x in text.replace(" ", "").split(",") if x))

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)


def _seq(x) -> DivisorSequence:
    return x if isinstance(x, DivisorSequence) else DivisorSequence(tuple(x))


@dataclass(frozen=True)
class SupernaturalNumber:
    exponents: Mapping[int, float] = field(default_factory=dict)
    from_prefix: bool = False

    def __post_init__(self):
        clean = {int(p): e for p, e in sorted(self.exponents.items()) if e != 0}
        object.__setattr__(self, "exponents", clean)

    @classmethod
    def parse(cls, text: str) -> SupernaturalNumber:
        """Read factored form such as ``"2^3 * 3^inf"`` or ``"2^3 · 3^∞"``."""
        text = text.strip()
        if text == "1":
            return cls({})
        exps = {}
        for part in re.split(r"\s*[·*]\s*", text):
            base, _, exp = part.partition("^")
            exp = exp.strip() or "1"
            exps[int(base)] = INF if exp in ("∞", "inf", "oo") else int(exp)
        return cls(exps)

    def __eq__(self, other):
        if not isinstance(other, SupernaturalNumber):
            return NotImplemented
        return dict(self.exponents) == dict(other.exponents)

    def __hash__(self):
        return hash(tuple(self.exponents.items()))

    def __str__(self):
        if not self.exponents:
            return "1"
        return " · ".join(f"{p}^{'∞' if e == INF else e}" for p, e in self.exponents.items())


def supernatural_from_sequence(seq) -> SupernaturalNumber:
    """Largest power of each prime dividing some term of the prefix."""
    seq = _seq(seq)
    exps: dict[int, int] = {}
    for term in seq:
        for p, e in factorint(term).items():
            exps[p] = max(exps.get(p, 0), e)
    return SupernaturalNumber(exps, from_prefix=True)


def _mutually_divisible(a: Iterable[int], b: Iterable[int]) -> bool:
    a, b = list(a), list(b)
    return all(any(y % x == 0 for y in b) for x in a) and all(any(x % y == 0 for x in a) for y in b)


def supernatural_eq(a, b) -> bool:
    """Every term of each prefix divides some term of the other."""
    return _mutually_divisible(_seq(a), _seq(b))


def d_divides_iff(n_letters: int, n: int, m: int) -> tuple[bool, bool]:
    """``(d(N,n) | d(N,m), n | m)``; the two agree for every N >= 2."""
    if n_letters < 2:
        raise ValueError("the divisibility criterion needs N >= 2")
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    return dimension_d(n_letters, m) % dimension_d(n_letters, n) == 0, m % n == 0


def expansion_witness(n_letters: int, n: int, m: int) -> tuple[int, ...]:
    """Base ``N**n`` digits (least significant first) of ``d(N,m) / d(N,n)``.

    When ``n | m`` every digit is 1 and there are ``m / n`` of them.
    """
    if n < 1 or m < 1 or m % n:
        raise DivisibilityError(f"{n} does not divide {m}")
    quotient, rem = divmod(dimension_d(n_letters, m), dimension_d(n_letters, n))
    if rem:
        raise ArithmeticError(f"d({n_letters},{n}) does not divide d({n_letters},{m})")
    base = n_letters**n
    digits = []
    c = quotient
    while c:
        c, r = divmod(c, base)
        digits.append(r)
    digits = tuple(digits)
    if digits != (1,) * (m // n):
        raise ArithmeticError(f"unexpected digits {digits} for N={n_letters}, n={n}, m={m}")
    return digits


@dataclass(frozen=True)
class K0Order:
    n: int
    k: int
    order: int


def k0_order(n_letters: int, k: int) -> K0Order:
    """Order ``N**k - 1`` of K0 of the Cuntz algebra on ``N**k`` generators."""
    if n_letters < 2 or k < 1:
        raise ValueError("need N >= 2 and k >= 1")
    return K0Order(n_letters, k, n_letters**k - 1)


def k0_isomorphic(n_letters: int, a, b) -> bool:
    """Mutual divisibility of the K0 orders ``N**n_k - 1`` over both prefixes."""
    orders_a = [k0_order(n_letters, t).order for t in _seq(a)]
    orders_b = [k0_order(n_letters, t).order for t in _seq(b)]
    return _mutually_divisible(orders_a, orders_b)
