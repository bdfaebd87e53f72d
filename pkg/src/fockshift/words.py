"""Words in the unital free semigroup on N letters.

Letters are the integers 1..N and the unit ``e`` is the empty word.  Words
are ranked in level-then-lexicographic order, so the words of length ``l``
occupy the contiguous index range ``[d(N, l), d(N, l + 1))``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterator

from .errors import AlphabetError

__all__ = [
    "Word",
    "dimension_d",
    "word_index",
    "word_from_index",
    "enumerate_words",
    "words_up_to",
    "periodic_decompose",
    "phi",
    "phi_extended",
    "phi_inverse",
]


@total_ordering
@dataclass(frozen=True)
class Word:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise AlphabetError(f"alphabet size must be >= 1, got {self.n}")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if not 1 <= x <= self.n:
                raise AlphabetError(f"letter {x} outside 1..{self.n}")

    @classmethod
    def unit(cls, n: int) -> Word:
        return cls(n, ())

    @classmethod
    def parse(cls, text: str, n: int) -> Word:
        """Read ``"e"``, a dotted string ``"2.1.1"`` or compact digits ``"211"``."""
        text = text.strip()
        if text in ("e", ""):
            return cls(n, ())
        if "." in text:
            letters = [int(part) for part in text.split(".")]
        elif n <= 9:
            letters = [int(ch) for ch in text]
        else:
            letters = [int(text)]
        return cls(n, tuple(letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.n, self.letters[item])
        return self.letters[item]

    def __add__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        if other.n != self.n:
            raise AlphabetError(f"cannot concatenate words over {self.n} and {other.n} letters")
        return Word(self.n, self.letters + other.letters)

    def prepend(self, letter: int) -> Word:
        return Word(self.n, (letter,) + self.letters)

    def _key(self):
        return (self.n, len(self.letters), self.letters)

    def __lt__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self._key() < other._key()

    def __str__(self):
        if not self.letters:
            return "e"
        if self.n <= 9:
            return "".join(str(x) for x in self.letters)
        return ".".join(str(x) for x in self.letters)

    def __repr__(self):
        return f"Word({self.n}, {str(self)!r})"


def _as_word(w, n: int | None = None) -> Word:
    if isinstance(w, Word):
        return w
    if n is None:
        raise TypeError("alphabet size required when passing a raw word")
    if isinstance(w, str):
        return Word.parse(w, n)
    return Word(n, tuple(w))


def dimension_d(n: int, k: int) -> int:
    """Number of words of length strictly less than ``k``: 1 + n + ... + n**(k-1)."""
    if n < 1 or k < 0:
        raise ValueError(f"need n >= 1 and k >= 0, got n={n}, k={k}")
    if n == 1:
        return k
    return (n**k - 1) // (n - 1)


def word_index(w: Word) -> int:
    offset = 0
    for x in w.letters:
        offset = offset * w.n + (x - 1)
    return dimension_d(w.n, len(w)) + offset


def word_from_index(n: int, index: int) -> Word:
    if index < 0:
        raise ValueError("index must be nonnegative")
    length = 0
    while dimension_d(n, length + 1) <= index:
        length += 1
    offset = index - dimension_d(n, length)
    letters = []
    for _ in range(length):
        offset, r = divmod(offset, n)
        letters.append(r + 1)
    return Word(n, tuple(reversed(letters)))


def enumerate_words(n: int, length: int) -> list[Word]:
    if n < 1:
        raise AlphabetError(f"alphabet size must be >= 1, got {n}")
    if length < 0:
        raise ValueError("length must be nonnegative")
    return [Word(n, t) for t in itertools.product(range(1, n + 1), repeat=length)]


def words_up_to(n: int, max_length: int) -> Iterator[Word]:
    """All words of length <= max_length, in index order."""
    for length in range(max_length + 1):
        yield from enumerate_words(n, length)


def periodic_decompose(w: Word, k: int) -> tuple[Word, Word]:
    """Split ``w = uv`` with ``|u| < k`` and ``k`` dividing ``|v|``."""
    if k < 1:
        raise ValueError(f"period must be >= 1, got {k}")
    r = len(w) % k
    return w[:r], w[r:]


def phi(w: Word, k: int) -> int:
    """Letter of the N**k-letter alphabet attached to a length-k word."""
    if len(w) != k:
        raise ValueError(f"phi needs a word of length {k}, got {w} of length {len(w)}")
    value = 0
    for x in w.letters:
        value = value * w.n + (x - 1)
    return value + 1


def phi_extended(w: Word, k: int) -> Word:
    if k < 1:
        raise ValueError(f"block length must be >= 1, got {k}")
    if len(w) % k:
        raise ValueError(f"length {len(w)} of {w} is not a multiple of {k}")
    letters = tuple(phi(w[j : j + k], k) for j in range(0, len(w), k))
    return Word(w.n**k, letters)


def phi_inverse(x: Word, k: int, n: int | None = None) -> Word:
    """Invert :func:`phi_extended`; ``n`` defaults to the k-th root of ``x.n``."""
    if n is None:
        n = round(x.n ** (1.0 / k))
        while n**k > x.n:
            n -= 1
        while (n + 1) ** k <= x.n:
            n += 1
    if n**k != x.n:
        raise AlphabetError(f"alphabet size {x.n} is not a {k}-th power")
    letters: list[int] = []
    for letter in x.letters:
        offset = letter - 1
        block = []
        for _ in range(k):
            offset, r = divmod(offset, n)
            block.append(r + 1)
        letters.extend(reversed(block))
    return Word(n, tuple(letters))

