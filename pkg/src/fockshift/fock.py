"""Truncated Fock space and exact sparse operators on it.

The truncated space keeps every word of length <= L.  Operators that raise
word length (creation operators, weighted shifts) send the top level to zero,
so identities from the full Fock space hold exactly on the span of words of
length <= L - 1.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import AlphabetError, DimensionMismatch
from .scalars import format_scalar, parse_scalar
from .words import Word, dimension_d, word_from_index, word_index, words_up_to

__all__ = [
    "FockSpace",
    "Operator",
    "identity",
    "zero",
    "creation_operator",
    "creation_operators",
    "vacuum_projection",
    "basis_vector",
    "apply_to_vector",
    "equality_on_subspace",
    "RelationReport",
    "check_ct_relations",
    "export_operator",
    "import_operator",
]


@dataclass(frozen=True)
class FockSpace:
    n: int
    max_length: int

    def __post_init__(self):
        if self.n < 1:
            raise AlphabetError(f"alphabet size must be >= 1, got {self.n}")
        if self.max_length < 0:
            raise ValueError("max_length must be nonnegative")

    @property
    def dimension(self) -> int:
        return dimension_d(self.n, self.max_length + 1)

    def index(self, w: Word) -> int:
        if w.n != self.n:
            raise AlphabetError(f"{w!r} is not a word over {self.n} letters")
        if len(w) > self.max_length:
            raise IndexError(f"{w} is longer than the truncation level {self.max_length}")
        return word_index(w)

    def word(self, index: int) -> Word:
        if not 0 <= index < self.dimension:
            raise IndexError(index)
        return word_from_index(self.n, index)

    def words(self) -> Iterable[Word]:
        return words_up_to(self.n, self.max_length)

    def cutoff(self, max_word_length: int) -> int:
        """Number of basis vectors indexed by words of length <= max_word_length."""
        return dimension_d(self.n, min(max_word_length, self.max_length) + 1) if max_word_length >= 0 else 0


@dataclass(frozen=True, eq=False)
class Operator:
    """Sparse exact matrix; ``entries`` maps (row, col) to a nonzero scalar.

    ``space`` is set when the matrix is an endomorphism of a truncated Fock
    space; the unitaries of the block decomposition are plain rectangular
    matrices and leave it as None.
    """

    shape: tuple[int, int]
    entries: Mapping[tuple[int, int], object] = field(default_factory=dict)
    space: FockSpace | None = None

    def __post_init__(self):
        rows, cols = self.shape
        clean = {}
        for (r, c), v in self.entries.items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"entry ({r}, {c}) outside shape {self.shape}")
            if v != 0:
                clean[(r, c)] = v
        object.__setattr__(self, "entries", clean)

    @classmethod
    def on(cls, space: FockSpace, entries=None) -> Operator:
        d = space.dimension
        return cls((d, d), entries or {}, space)

    def _check_same_shape(self, other: Operator):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def _join_space(self, other: Operator):
        return self.space if self.space == other.space else None

    def __add__(self, other: Operator) -> Operator:
        self._check_same_shape(other)
        out = dict(self.entries)
        for key, v in other.entries.items():
            out[key] = out.get(key, 0) + v
        return Operator(self.shape, out, self._join_space(other))

    def __neg__(self) -> Operator:
        return self.scale(-1)

    def __sub__(self, other: Operator) -> Operator:
        return self + (-other)

    def scale(self, c) -> Operator:
        return Operator(self.shape, {key: c * v for key, v in self.entries.items()}, self.space)

    def __matmul__(self, other: Operator) -> Operator:
        if self.shape[1] != other.shape[0]:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        by_row = defaultdict(list)
        for (r, c), v in other.entries.items():
            by_row[r].append((c, v))
        out: dict = {}
        for (r, mid), a in self.entries.items():
            for c, b in by_row.get(mid, ()):
                out[(r, c)] = out.get((r, c), 0) + a * b
        return Operator((self.shape[0], other.shape[1]), out, self._join_space(other))

    def adjoint(self) -> Operator:
        return Operator(
            (self.shape[1], self.shape[0]),
            {(c, r): v.conjugate() for (r, c), v in self.entries.items()},
            self.space,
        )

    @property
    def H(self) -> Operator:
        return self.adjoint()

    def __eq__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    __hash__ = None

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def column(self, c: int) -> dict[int, object]:
        return {r: v for (r, cc), v in self.entries.items() if cc == c}

    def restrict_columns(self, ncols: int) -> Operator:
        """Zero out every column with index >= ncols."""
        return Operator(self.shape, {k: v for k, v in self.entries.items() if k[1] < ncols}, self.space)

    def is_diagonal(self) -> bool:
        return all(r == c for r, c in self.entries)

    def diagonal(self) -> list:
        return [self.entries.get((j, j), 0) for j in range(min(self.shape))]

    def to_dense(self):
        import numpy as np

        out = np.zeros(self.shape, dtype=object)
        out[...] = Fraction(0)
        for (r, c), v in self.entries.items():
            out[r, c] = v
        return out

    def to_float(self):
        import numpy as np

        dtype = complex if any(isinstance(v, complex) or hasattr(v, "im") for v in self.entries.values()) else float
        out = np.zeros(self.shape, dtype=dtype)
        for (r, c), v in self.entries.items():
            out[r, c] = complex(v) if dtype is complex else float(v)
        return out

    def __repr__(self):
        return f"Operator(shape={self.shape}, nnz={len(self.entries)})"


def identity(space: FockSpace) -> Operator:
    return Operator.on(space, {(j, j): Fraction(1) for j in range(space.dimension)})


def zero(space: FockSpace) -> Operator:
    return Operator.on(space)


def creation_operator(i: int, space: FockSpace) -> Operator:
    """Left creation operator ``xi_w -> xi_{iw}``, killing the top level."""
    if not 1 <= i <= space.n:
        raise AlphabetError(f"letter {i} outside 1..{space.n}")
    entries = {}
    for w in words_up_to(space.n, space.max_length - 1):
        entries[(word_index(w.prepend(i)), word_index(w))] = Fraction(1)
    return Operator.on(space, entries)


def creation_operators(space: FockSpace) -> list[Operator]:
    return [creation_operator(i, space) for i in range(1, space.n + 1)]


def vacuum_projection(space: FockSpace) -> Operator:
    return Operator.on(space, {(0, 0): Fraction(1)})


def basis_vector(space: FockSpace, w: Word) -> dict[int, object]:
    return {space.index(w): Fraction(1)}


def apply_to_vector(op: Operator, vector: Mapping[int, object]) -> dict[int, object]:
    """Apply ``op`` to a sparse vector given as ``{index: value}``."""
    out: dict[int, object] = {}
    for (r, c), v in op.entries.items():
        x = vector.get(c)
        if x:
            out[r] = out.get(r, 0) + v * x
    return {r: v for r, v in out.items() if v != 0}


def equality_on_subspace(a: Operator, b: Operator, max_word_length: int, space: FockSpace | None = None) -> bool:
    """Compare ``a`` and ``b`` on every column indexed by a word of length <= cutoff."""
    a._check_same_shape(b)
    space = space or a.space or b.space
    if space is None:
        raise DimensionMismatch("equality_on_subspace needs a Fock space to interpret word lengths")
    ncols = space.cutoff(max_word_length)
    return a.restrict_columns(ncols).entries == b.restrict_columns(ncols).entries


@dataclass
class RelationReport:
    passed: bool
    checked_max_length: int
    relation: str | None = None
    letters: tuple[int, ...] | None = None
    entry: tuple[int, int] | None = None
    expected: object = None
    actual: object = None

    def to_dict(self) -> dict:
        out = {"check": "relations", "passed": self.passed, "max_word_length": self.checked_max_length}
        if not self.passed:
            out.update(
                relation=self.relation,
                letters=list(self.letters),
                entry=list(self.entry),
                expected=format_scalar(self.expected),
                actual=format_scalar(self.actual),
            )
        return out


def _first_difference(actual: Operator, expected: Operator, ncols: int):
    keys = {k for k in actual.entries if k[1] < ncols} | {k for k in expected.entries if k[1] < ncols}
    for key in sorted(keys, key=lambda rc: (rc[1], rc[0])):
        if actual[key] != expected[key]:
            return key
    return None


def check_ct_relations(ops: list[Operator]) -> RelationReport:
    """Check ``L_i* L_j = delta_ij I`` and ``sum L_i L_i* = I - P_e`` below the top level."""
    if not ops:
        raise ValueError("need at least one operator")
    space = ops[0].space
    if space is None or any(op.space != space for op in ops):
        raise DimensionMismatch("all operators must act on one truncated Fock space")
    top = space.max_length - 1
    ncols = space.cutoff(top)
    ident = identity(space)
    empty = zero(space)
    for i, li in enumerate(ops, start=1):
        for j, lj in enumerate(ops, start=1):
            product = li.adjoint() @ lj
            target = ident if i == j else empty
            bad = _first_difference(product, target, ncols)
            if bad is not None:
                return RelationReport(False, top, "a", (i, j), bad, target[bad], product[bad])
    total = empty
    for li in ops:
        total = total + li @ li.adjoint()
    target = ident - vacuum_projection(space)
    bad = _first_difference(total, target, ncols)
    if bad is not None:
        return RelationReport(False, top, "b", tuple(range(1, len(ops) + 1)), bad, target[bad], total[bad])
    return RelationReport(True, top)


def export_operator(op: Operator, exact: bool = True) -> dict:
    """JSON-ready export with rows/cols as canonical word indices."""
    if op.space is None:
        raise DimensionMismatch("only Fock-space operators can be exported")
    # float export is only meaningful for real entries
    fmt = format_scalar if exact else float
    return {
        "N": op.space.n,
        "L": op.space.max_length,
        "entries": [[r, c, fmt(v)] for (r, c), v in sorted(op.entries.items())],
    }


def import_operator(doc: Mapping) -> Operator:
    space = FockSpace(int(doc["N"]), int(doc["L"]))
    return Operator.on(space, {(int(r), int(c)): parse_scalar(str(v)) for r, c, v in doc["entries"]})
