"""Non-commutative weighted shifts ``T_i xi_w = lambda_{i,w} xi_{iw}``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

import numpy as np

from .errors import AlphabetError, NotBoundedBelow, TruncationError, WeightError
from .fock import FockSpace, Operator
from .scalars import Gaussian, exact_sqrt, to_scalar
from .words import Word, word_from_index, word_index, words_up_to

__all__ = [
    "WeightFunction",
    "DiagonalUnitary",
    "Normalization",
    "NormValue",
    "BoundedBelow",
    "build_shift",
    "normalize_weights",
    "weight_operator",
    "shift_norm",
    "row_norm",
    "largest_singular_value",
    "is_bounded_below",
    "recover_creation",
]


@dataclass(frozen=True)
class WeightFunction:
    """Evaluation rule ``(i, w) -> lambda_{i,w}``.

    ``depth`` is the largest word length with a defined weight; periodic
    weight functions have ``depth == math.inf`` and carry their tree top.
    """

    n: int
    rule: Callable[[int, Word], object]
    depth: float = math.inf
    top: object = None

    def __call__(self, i: int, w: Word):
        if not 1 <= i <= self.n:
            raise AlphabetError(f"letter {i} outside 1..{self.n}")
        if len(w) > self.depth:
            raise WeightError(f"weight ({i}, {w}) requested beyond defined depth {self.depth}")
        return self.rule(i, w)

    @classmethod
    def explicit(cls, n: int, table: Mapping[tuple[int, Word], object]) -> WeightFunction:
        """Weights from a finite table; it must cover every (i, w) up to its depth."""
        values = {(i, w): to_scalar(v) for (i, w), v in table.items()}
        depth = max((len(w) for _, w in values), default=-1)
        for w in words_up_to(n, depth):
            for i in range(1, n + 1):
                if (i, w) not in values:
                    raise WeightError(f"missing weight ({i}, {w})")
        return cls(n, lambda i, w: values[(i, w)], depth)

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int, Word], object], depth: float = math.inf) -> WeightFunction:
        return cls(n, lambda i, w: to_scalar(fn(i, w)), depth)

    @classmethod
    def constant(cls, n: int, value=1) -> WeightFunction:
        v = to_scalar(value)
        return cls(n, lambda i, w: v)

    def items(self, max_length: int):
        """Yield ``((i, w), value)`` for every word of length <= max_length."""
        for w in words_up_to(self.n, max_length):
            for i in range(1, self.n + 1):
                yield (i, w), self(i, w)


def build_shift(weights: WeightFunction, space: FockSpace) -> list[Operator]:
    if weights.n != space.n:
        raise AlphabetError(f"weights over {weights.n} letters, space over {space.n}")
    if weights.depth < space.max_length - 1:
        raise WeightError(
            f"weights defined to depth {weights.depth}, need {space.max_length - 1} for L={space.max_length}"
        )
    ops = []
    for i in range(1, space.n + 1):
        entries = {}
        for w in words_up_to(space.n, space.max_length - 1):
            entries[(word_index(w.prepend(i)), word_index(w))] = weights(i, w)
        ops.append(Operator.on(space, entries))
    return ops


@dataclass(frozen=True)
class DiagonalUnitary:
    phases: Mapping[Word, object]
    exact: bool = True

    def __getitem__(self, w: Word):
        return self.phases[w]

    def matrix(self, space: FockSpace) -> Operator:
        return Operator.on(space, {(word_index(w), word_index(w)): self.phases[w] for w in space.words()})

    def is_unimodular(self, tol: float = 1e-12) -> bool:
        for mu in self.phases.values():
            if isinstance(mu, Gaussian):
                if mu.abs2() != 1:
                    return False
            elif isinstance(mu, (int, Fraction)):
                if abs(mu) != 1:
                    return False
            elif abs(abs(mu) - 1) > tol:
                return False
        return True


@dataclass(frozen=True)
class Normalization:
    unitary: DiagonalUnitary
    canonical: WeightFunction
    exact: bool


def _exact_polar(lam):
    """Return (|lam|, conj(lam)/|lam|) exactly, or None if |lam| is irrational."""
    if isinstance(lam, Gaussian):
        r = exact_sqrt(lam.abs2())
        if r is None:
            return None
        phase = lam.conjugate() / r
        return r, (phase.re if phase.im == 0 else phase)
    lam = Fraction(lam)
    return abs(lam), Fraction(1 if lam > 0 else -1)


def normalize_weights(raw: WeightFunction, depth: int) -> Normalization:
    """Diagonal unitary making every weight nonnegative.

    Phases are chosen level by level: ``mu_e = 1`` and, for each weight,
    ``mu_{iw} = mu_w * conj(lambda_{i,w}) / |lambda_{i,w}|`` so that
    ``conj(mu_w) * lambda_{i,w} * mu_{iw} = |lambda_{i,w}|``.  A zero weight
    leaves the constraint vacuous and ``mu_{iw} = 1`` is used.

    The result is exact when every ``|lambda_{i,w}|`` is rational; otherwise
    the whole run falls back to floating complex phases and ``exact`` is False.
    """
    if raw.depth < depth:
        raise WeightError(f"raw weights defined to depth {raw.depth}, requested {depth}")
    table = {key: value for key, value in raw.items(depth)}
    polar = {key: (_exact_polar(v) if v != 0 else (Fraction(0), Fraction(1))) for key, v in table.items()}
    exact = all(p is not None for p in polar.values())
    if not exact:
        polar = {}
        for key, v in table.items():
            z = complex(v)
            polar[key] = (abs(z), z.conjugate() / abs(z)) if z != 0 else (0.0, 1.0 + 0j)
    unit = Word.unit(raw.n)
    phases = {unit: Fraction(1) if exact else 1.0 + 0j}
    for w in words_up_to(raw.n, depth):
        for i in range(1, raw.n + 1):
            modulus, phase = polar[(i, w)]
            phases[w.prepend(i)] = phases[w] * phase if modulus != 0 else phase
    moduli = {key: p[0] for key, p in polar.items()}
    canonical = WeightFunction(raw.n, lambda i, w: moduli[(i, w)], depth)
    return Normalization(DiagonalUnitary(phases, exact), canonical, exact)


def _infer_letter(op: Operator) -> int | None:
    space = op.space
    for (r, c) in op.entries:
        row_word = word_from_index(space.n, r)
        if len(row_word):
            return row_word[0]
    return None


def weight_operator(t: Operator, letter: int | None = None) -> Operator:
    """Diagonal ``W_i`` with ``W_i xi_w = (T_i xi_w, xi_{iw}) xi_w``."""
    space = t.space
    if space is None:
        raise TruncationError("weight_operator needs an operator on a truncated Fock space")
    i = letter if letter is not None else _infer_letter(t)
    diag = {}
    for (r, c), v in t.entries.items():
        w = word_from_index(space.n, c)
        if i is None or len(w) >= space.max_length or r != word_index(w.prepend(i)):
            raise WeightError(f"entry ({r}, {c}) breaks the weighted-shift pattern for letter {i}")
        diag[(c, c)] = v
    return Operator.on(space, diag)


@dataclass(frozen=True)
class NormValue:
    """A supremum of weights; ``lower_bound`` flags a depth-limited sup."""

    value: object
    lower_bound: bool
    depth: float

    def __float__(self):
        return float(self.value)


def _norm_support(weights: WeightFunction):
    top = weights.top
    if top is not None:
        return top.k - 1, False
    if math.isinf(weights.depth):
        raise WeightError("non-periodic weights need a finite depth to take a supremum")
    return int(weights.depth), True


def shift_norm(weights: WeightFunction, i: int) -> NormValue:
    """``||T_i|| = sup_w lambda_{i,w}``; exact for periodic weights (sup over the tree top)."""
    depth, partial = _norm_support(weights)
    value = max(weights(i, w) for w in words_up_to(weights.n, depth))
    return NormValue(value, partial, weights.depth)


def row_norm(weights: WeightFunction) -> NormValue:
    """``||T|| = sup_{i,w} lambda_{i,w}``."""
    norms = [shift_norm(weights, i) for i in range(1, weights.n + 1)]
    return NormValue(max(n.value for n in norms), norms[0].lower_bound, weights.depth)


def largest_singular_value(t: Operator, iterations: int = 500, seed: int = 0) -> float:
    """Power iteration on ``T* T`` in floating point."""
    a = t.to_float()
    gram = a.conj().T @ a
    rng = np.random.default_rng(seed)
    x = rng.standard_normal(gram.shape[0])
    x /= np.linalg.norm(x)
    value = 0.0
    for _ in range(iterations):
        y = gram @ x
        ny = np.linalg.norm(y)
        if ny == 0:
            return 0.0
        x = y / ny
        value = ny
    return math.sqrt(float(np.real(value)))


@dataclass(frozen=True)
class BoundedBelow:
    """Truth value of ``inf lambda_{i,w} > 0``; ``depth_limited`` for finite explicit weights."""

    value: bool
    minimum: object
    depth_limited: bool

    def __bool__(self):
        return self.value


def is_bounded_below(weights: WeightFunction) -> BoundedBelow:
    depth, partial = _norm_support(weights)
    minimum = min(weights(i, w) for w in words_up_to(weights.n, depth) for i in range(1, weights.n + 1))
    return BoundedBelow(minimum > 0, minimum, partial)


def recover_creation(t: Operator, letter: int | None = None) -> Operator:
    """``L_i = T_i W_i^{-1}`` on the levels below the truncation edge."""
    space = t.space
    i = letter if letter is not None else _infer_letter(t)
    if i is None:
        raise NotBoundedBelow(letter, Word.unit(space.n))
    w_op = weight_operator(t, i)
    inverse = {}
    for w in words_up_to(space.n, space.max_length - 1):
        j = word_index(w)
        lam = w_op[(j, j)]
        if lam == 0:
            raise NotBoundedBelow(i, w)
        inverse[(j, j)] = 1 / lam
    return t @ Operator.on(space, inverse)
