"""Period-k weights generated by a remainder tree top, and Fock tree export."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import DivisibilityError, WeightError
from .scalars import format_scalar, to_scalar
from .shift import WeightFunction
from .words import Word, periodic_decompose, words_up_to

__all__ = [
    "WeightTop",
    "FockTree",
    "periodic_weight",
    "detect_period",
    "verify_containment",
    "distinct_path_tuples",
    "path_tuples",
    "export_tree",
    "random_top",
    "example_top",
]


@dataclass(frozen=True)
class WeightTop:
    """Weights ``lambda_{i,u}`` for every letter ``i`` and every ``|u| < k``."""

    n: int
    k: int
    table: Mapping[tuple[int, Word], Fraction]

    def __post_init__(self):
        if self.k < 1:
            raise WeightError(f"period must be >= 1, got {self.k}")
        table = {}
        for (i, u), v in self.table.items():
            if isinstance(u, str):
                u = Word.parse(u, self.n)
            if len(u) >= self.k or not 1 <= i <= self.n or u.n != self.n:
                raise WeightError(f"entry ({i}, {u}) does not belong to a period-{self.k} top over {self.n} letters")
            v = to_scalar(v)
            if v < 0:
                raise WeightError(f"weight ({i}, {u}) = {v} is negative")
            table[(i, u)] = v
        for u in words_up_to(self.n, self.k - 1):
            for i in range(1, self.n + 1):
                if (i, u) not in table:
                    raise WeightError(f"missing weight ({i}, {u})")
        object.__setattr__(self, "table", table)

    def __getitem__(self, key):
        i, u = key
        if isinstance(u, str):
            u = Word.parse(u, self.n)
        return self.table[(i, u)]

    def __len__(self):
        return len(self.table)

    def keys(self):
        """Canonical order: words level-then-lex, then letter."""
        return [(i, u) for u in words_up_to(self.n, self.k - 1) for i in range(1, self.n + 1)]

    def replace(self, updates: Mapping) -> WeightTop:
        table = dict(self.table)
        for (i, u), v in updates.items():
            table[(i, Word.parse(u, self.n) if isinstance(u, str) else u)] = v
        return WeightTop(self.n, self.k, table)


def example_top() -> WeightTop:
    """The N=2, k=2 top with a=b=1, c=1/2, d=1/4, e=1/8, f=1/16."""
    F = Fraction
    return WeightTop(2, 2, {
        (1, "e"): F(1), (1, "1"): F(1, 2), (1, "2"): F(1, 8),
        (2, "e"): F(1), (2, "1"): F(1, 4), (2, "2"): F(1, 16),
    })


def random_top(n: int, k: int, rng: random.Random, max_denominator: int = 8,
               allow_zero: bool = False) -> WeightTop:
    table = {}
    for u in words_up_to(n, k - 1):
        for i in range(1, n + 1):
            lo = 0 if allow_zero else 1
            table[(i, u)] = Fraction(rng.randint(lo, 2 * max_denominator), rng.randint(1, max_denominator))
    return WeightTop(n, k, table)


def periodic_weight(top: WeightTop) -> WeightFunction:
    k = top.k
    table = top.table

    def rule(i, w):
        u, _ = periodic_decompose(w, k)
        return table[(i, u)]

    return WeightFunction(top.n, rule, math.inf, top)


def _satisfies_period(weights: WeightFunction, k: int, depth: int) -> bool:
    for w in words_up_to(weights.n, depth):
        u, _ = periodic_decompose(w, k)
        for i in range(1, weights.n + 1):
            if weights(i, w) != weights(i, u):
                return False
    return True


def detect_period(samples: WeightFunction, k_max: int, depth: int | None = None) -> int | None:
    """Smallest k <= k_max whose periodicity predicate holds on every sampled weight."""
    if depth is None:
        depth = samples.depth if not math.isinf(samples.depth) else 2 * k_max
    if depth > samples.depth:
        raise WeightError(f"samples only defined to depth {samples.depth}, asked for {depth}")
    if depth < 2 * k_max:
        raise WeightError(f"depth {depth} cannot resolve periods up to {k_max}; need at least {2 * k_max}")
    for k in range(1, k_max + 1):
        if _satisfies_period(samples, k, depth):
            return k
    return None


def verify_containment(top: WeightTop, n2: int, depth: int | None = None) -> bool:
    """Check that a period-``top.k`` weight function also has period ``n2``."""
    n1 = top.k
    if n2 < 1 or n2 % n1:
        raise DivisibilityError(f"{n1} does not divide {n2}")
    if depth is None:
        depth = n2 + 2
    return _satisfies_period(periodic_weight(top), n2, depth)


def path_tuples(top: WeightTop) -> dict[Word, tuple]:
    """Weights read along the root-to-leaf path ending at each word of length k."""
    weights = periodic_weight(top)
    out = {}
    for w in words_up_to(top.n, top.k):
        if len(w) != top.k:
            continue
        # the path to i_1...i_k passes e -> i_k -> i_{k-1} i_k -> ...
        out[w] = tuple(weights(w[j], w[j + 1:]) for j in range(top.k - 1, -1, -1))
    return out


def distinct_path_tuples(top: WeightTop) -> bool:
    tuples = list(path_tuples(top).values())
    return len(set(tuples)) == len(tuples)


@dataclass(frozen=True)
class FockTree:
    n: int
    depth: int
    vertices: tuple[Word, ...]
    # (parent, child, letter, weight)
    edges: tuple[tuple[Word, Word, int, object], ...]

    def to_dot(self) -> str:
        lines = ["digraph fock_tree {", "  ordering=out;"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for parent, child, _, weight in self.edges:
            lines.append(f'  "{parent}" -> "{child}" [label="{format_scalar(weight)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def export_tree(weights: WeightFunction, depth: int) -> FockTree:
    if depth > weights.depth + 1:
        raise WeightError(f"weights defined to depth {weights.depth}; tree of depth {depth} needs {depth - 1}")
    vertices = tuple(words_up_to(weights.n, depth))
    edges = []
    for w in words_up_to(weights.n, depth - 1):
        for i in range(1, weights.n + 1):
            edges.append((w, w.prepend(i), i, weights(i, w)))
    return FockTree(weights.n, depth, vertices, tuple(edges))
