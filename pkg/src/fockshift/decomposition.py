"""Block decomposition of period-k shifts over the N**k-letter Fock space.

Fock space splits as the orthogonal sum of ``K_w = span{xi_{wv} : k | |v|}``
over the words ``|w| < k``.  Each ``K_w`` is a copy of ``K_e``, and ``K_e`` is
identified with the Fock space on ``N**k`` letters by reading its words in
blocks of ``k`` letters (:func:`fockshift.words.phi_extended`).  Conjugating a
period-k shift by these identifications produces a ``d(N,k) x d(N,k)`` grid of
operators that are either scalar multiples of the identity or scalar multiples
of creation operators.

Truncation is aligned so that every ``K_w`` keeps exactly ``m + 1`` levels:
H_N is cut at ``L = k(m + 1) - 1`` and H_{N**k} at ``m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .errors import TruncationError
from .fock import FockSpace, Operator, creation_operator, export_operator, identity
from .periodicity import WeightTop, periodic_weight
from .scalars import format_scalar
from .shift import build_shift
from .words import Word, dimension_d, phi, phi_inverse, word_index, words_up_to

__all__ = [
    "aligned_length",
    "SubspacePartition",
    "subspace_partition",
    "BlockMatrix",
    "DecompositionUnitaries",
    "build_unitaries",
    "conjugate_shift",
    "predicted_blocks",
    "TheoremReport",
    "compare_blocks",
    "verify_theorem",
]


def aligned_length(k: int, m: int) -> int:
    return k * (m + 1) - 1


def _levels_for(k: int, max_length: int) -> int:
    """Recover m from an aligned truncation level, or raise."""
    if (max_length + 1) % k:
        valid = ", ".join(str(aligned_length(k, j)) for j in range(4))
        raise TruncationError(f"L={max_length} is not of the form k(m+1)-1 for k={k}; valid L: {valid}, ...")
    return (max_length + 1) // k - 1


def _grid_words(n: int, k: int) -> list[Word]:
    return list(words_up_to(n, k - 1))


def _ke_words(n: int, k: int, m: int) -> list[Word]:
    """Basis of the truncated K_e: words of length 0, k, ..., km in index order."""
    return [w for w in words_up_to(n, k * m) if len(w) % k == 0]


@dataclass(frozen=True)
class SubspacePartition:
    n: int
    k: int
    max_length: int
    blocks: Mapping[Word, tuple[int, ...]]

    def __getitem__(self, w):
        if isinstance(w, str):
            w = Word.parse(w, self.n)
        return self.blocks[w]


def subspace_partition(n: int, k: int, max_length: int) -> SubspacePartition:
    m = _levels_for(k, max_length)
    tails = _ke_words(n, k, m)
    blocks = {w: tuple(word_index(w + v) for v in tails) for w in _grid_words(n, k)}
    return SubspacePartition(n, k, max_length, blocks)


@dataclass
class BlockMatrix:
    """A d x d grid of operators on the truncated N**k-letter Fock space.

    Keys are ``(row_word, col_word)`` with both words of length < k; missing
    keys are zero blocks.
    """

    n: int
    k: int
    m: int
    blocks: dict[tuple[Word, Word], Operator] = field(default_factory=dict)

    @property
    def grid(self) -> list[Word]:
        return _grid_words(self.n, self.k)

    @property
    def target(self) -> FockSpace:
        return FockSpace(self.n**self.k, self.m)

    def __getitem__(self, key) -> Operator:
        row, col = (Word.parse(x, self.n) if isinstance(x, str) else x for x in key)
        return self.blocks.get((row, col), Operator.on(self.target))

    def nonzero_positions(self) -> set[tuple[Word, Word]]:
        return {key for key, op in self.blocks.items() if op.entries}

    def to_dict(self) -> dict:
        return {
            "N": self.n,
            "k": self.k,
            "m": self.m,
            "blocks": [
                {"row": str(r), "col": str(c), "op": export_operator(op)}
                for (r, c), op in sorted(self.blocks.items(), key=lambda kv: (kv[0][0], kv[0][1]))
                if op.entries
            ],
        }

    def __eq__(self, other):
        if not isinstance(other, BlockMatrix):
            return NotImplemented
        return (self.n, self.k, self.m) == (other.n, other.k, other.m) and all(
            self[key] == other[key] for key in self.nonzero_positions() | other.nonzero_positions()
        )


@dataclass(frozen=True)
class DecompositionUnitaries:
    """Permutation matrices ``U`` (coordinate copies of K_e -> H_N) and ``V``.

    The coordinate space of the direct sums is laid out grid word by grid
    word: the basis element ``(w-copy, j)`` sits at ``g(w) * D + j`` where
    ``g`` is the grid position and ``D`` the dimension of one copy.  In the
    copies of K_e, ``j`` counts K_e basis words in index order; in the copies
    of H_{N**k}, ``j`` is the ordinary word index.
    """

    n: int
    k: int
    m: int
    U: Operator
    V: Operator

    @property
    def block_dimension(self) -> int:
        return dimension_d(self.n**self.k, self.m + 1)


def build_unitaries(n: int, k: int, m: int) -> DecompositionUnitaries:
    if m < 0:
        raise TruncationError("m must be nonnegative")
    grid = _grid_words(n, k)
    tails = _ke_words(n, k, m)
    block = len(tails)
    big = FockSpace(n**k, m)
    assert big.dimension == block
    total = len(grid) * block
    h_n = FockSpace(n, aligned_length(k, m))
    tail_pos = {u: j for j, u in enumerate(tails)}

    u_entries = {}
    for g, w in enumerate(grid):
        for j, u in enumerate(tails):
            u_entries[(word_index(w + u), g * block + j)] = Fraction(1)

    v_entries = {}
    for g in range(len(grid)):
        for x in big.words():
            u = phi_inverse(x, k, n)
            v_entries[(g * block + tail_pos[u], g * block + word_index(x))] = Fraction(1)

    U = Operator((h_n.dimension, total), u_entries)
    V = Operator((total, total), v_entries)
    return DecompositionUnitaries(n, k, m, U, V)


def conjugate_shift(t: Operator, unitaries: DecompositionUnitaries) -> BlockMatrix:
    """``V* U* T U V`` cut into the grid of blocks."""
    n, k, m = unitaries.n, unitaries.k, unitaries.m
    space = t.space
    if space is None or space.n != n or space.max_length != aligned_length(k, m):
        raise TruncationError(
            f"operator must act on H_{n} truncated at L={aligned_length(k, m)} to match k={k}, m={m}"
        )
    uv = unitaries.U @ unitaries.V
    conj = uv.adjoint() @ t @ uv
    grid = _grid_words(n, k)
    size = unitaries.block_dimension
    target = FockSpace(n**k, m)
    parts: dict[tuple[int, int], dict] = {}
    for (r, c), v in conj.entries.items():
        gr, jr = divmod(r, size)
        gc, jc = divmod(c, size)
        parts.setdefault((gr, gc), {})[(jr, jc)] = v
    blocks = {(grid[gr], grid[gc]): Operator.on(target, e) for (gr, gc), e in parts.items()}
    return BlockMatrix(n, k, m, blocks)


def predicted_blocks(top: WeightTop, i: int, m: int) -> BlockMatrix:
    """Block form of ``T_i``: ``lambda_{i,w} I`` at ``(iw, w)`` for ``|w| < k-1`` and
    ``lambda_{i,w} L_{phi(iw)}`` at ``(e, w)`` for ``|w| = k-1``."""
    n, k = top.n, top.k
    target = FockSpace(n**k, m)
    blocks = {}
    for w in _grid_words(n, k):
        lam = top[(i, w)]
        if len(w) < k - 1:
            blocks[(w.prepend(i), w)] = identity(target).scale(lam)
        else:
            blocks[(Word.unit(n), w)] = creation_operator(phi(w.prepend(i), k), target).scale(lam)
    return BlockMatrix(n, k, m, blocks)


@dataclass
class TheoremReport:
    passed: bool
    n: int
    k: int
    m: int
    max_length: int
    # per grid column word: largest H_{N**k} word length compared
    compared_levels: dict[str, int]
    letter: int | None = None
    block: tuple[str, str] | None = None
    entry: tuple[int, int] | None = None
    expected: object = None
    actual: object = None

    def to_dict(self) -> dict:
        out = {
            "check": "theorem",
            "passed": self.passed,
            "N": self.n,
            "k": self.k,
            "m": self.m,
            "L": self.max_length,
            "compared_levels": self.compared_levels,
        }
        if not self.passed:
            out.update(
                letter=self.letter,
                block=list(self.block),
                entry=list(self.entry),
                expected=format_scalar(self.expected),
                actual=format_scalar(self.actual),
            )
        return out


def _column_levels(n: int, k: int, m: int) -> dict[Word, int]:
    # shift-to-creation columns raise the H_{N**k} level, so their top level is left out
    return {w: (m - 1 if len(w) == k - 1 else m) for w in _grid_words(n, k)}


def compare_blocks(actual: BlockMatrix, predicted: BlockMatrix, letter: int | None = None) -> TheoremReport:
    n, k, m = actual.n, actual.k, actual.m
    levels = _column_levels(n, k, m)
    target = actual.target
    base = dict(n=n, k=k, m=m, max_length=aligned_length(k, m),
                compared_levels={str(w): lv for w, lv in levels.items()})
    for col in actual.grid:
        ncols = target.cutoff(levels[col])
        for row in actual.grid:
            a = actual[(row, col)].restrict_columns(ncols)
            p = predicted[(row, col)].restrict_columns(ncols)
            if a.entries != p.entries:
                keys = sorted(set(a.entries) | set(p.entries), key=lambda rc: (rc[1], rc[0]))
                bad = next(key for key in keys if a[key] != p[key])
                return TheoremReport(False, letter=letter, block=(str(row), str(col)), entry=bad,
                                     expected=p[bad], actual=a[bad], **base)
    return TheoremReport(True, letter=letter, **base)


def verify_theorem(
    top: WeightTop,
    m: int,
    predictor: Callable[[WeightTop, int, int], BlockMatrix] = predicted_blocks,
) -> TheoremReport:
    """Compare ``Ad_{UV}(T_i)`` with the predicted block form for every letter."""
    if m < 1:
        raise TruncationError("verification needs m >= 1")
    n, k = top.n, top.k
    space = FockSpace(n, aligned_length(k, m))
    shifts = build_shift(periodic_weight(top), space)
    unitaries = build_unitaries(n, k, m)
    report = None
    for i, t in enumerate(shifts, start=1):
        report = compare_blocks(conjugate_shift(t, unitaries), predictor(top, i, m), letter=i)
        if not report.passed:
            return report
    report.letter = None
    return report
