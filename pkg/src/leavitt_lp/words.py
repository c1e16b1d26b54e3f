"""Words over the alphabet {1, ..., d} and the monomial product rule.

A word indexes the generator products s_alpha (letters in order) and
t_alpha (letters in reverse order). Monomials s_alpha t_beta multiply by
cancelling matching letters at the junction: t_j s_j = 1 and
t_j s_k = 0 for j != k, so (s_alpha t_beta)(s_gamma t_delta) survives
exactly when one of beta, gamma is a prefix of the other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from .errors import AlphabetMismatchError

Letters = Tuple[int, ...]


@dataclass(frozen=True)
class Word:
    """Finite sequence of letters in {1, ..., d}. The empty word is allowed."""

    letters: Letters
    d: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"alphabet size must be >= 2, got d={self.d}")
        for x in self.letters:
            if not 1 <= x <= self.d:
                raise ValueError(f"letter {x} out of range [1, {self.d}]")
        object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def concat(self, other: "Word") -> "Word":
        if self.d != other.d:
            raise AlphabetMismatchError(
                f"cannot concatenate words over d={self.d} and d={other.d}"
            )
        return Word(self.letters + other.letters, self.d)

    def __str__(self) -> str:
        if self.d <= 9:
            return "".join(str(x) for x in self.letters)
        return "[" + ",".join(str(x) for x in self.letters) + "]"


def empty_word(d: int) -> Word:
    return Word((), d)


def word_concat(alpha: Word, beta: Word) -> Word:
    """Concatenation alpha followed by beta; lengths add."""
    return alpha.concat(beta)


def mono_mul(
    left: Tuple[Word, Word], right: Tuple[Word, Word]
) -> Optional[Tuple[Word, Word]]:
    """Product of monomials (s_a t_b)(s_c t_e); None means the product is 0.

    If c = b c' the result is (a c', e); if b = c b' the result is
    (a, e b'); otherwise the inner letters mismatch and everything dies.
    """
    a, b = left
    c, e = right
    d = a.d
    for w in (b, c, e):
        if w.d != d:
            raise AlphabetMismatchError("monomial factors over different alphabets")
    bl, cl = b.letters, c.letters
    k = min(len(bl), len(cl))
    if bl[:k] != cl[:k]:
        return None
    if len(cl) >= len(bl):  # c = b c'
        return Word(a.letters + cl[len(bl):], d), e
    # b = c b'
    return a, Word(e.letters + bl[len(cl):], d)


def words_of_length(d: int, n: int) -> Iterator[Letters]:
    """All of {1..d}^n in lexicographic order, as raw letter tuples."""
    return itertools.product(range(1, d + 1), repeat=n)


def word_index(letters: Letters, d: int) -> int:
    """Position of a length-n word in the lexicographic order of {1..d}^n."""
    idx = 0
    for x in letters:
        idx = idx * d + (x - 1)
    return idx


def word_from_index(idx: int, d: int, n: int) -> Letters:
    out = []
    for _ in range(n):
        out.append(idx % d + 1)
        idx //= d
    return tuple(reversed(out))
