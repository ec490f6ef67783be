"""
Finite permutations of the positive integers and brute-force reduced-word oracles.

Words act by right multiplication: the letter ``a`` swaps positions ``a`` and
``a + 1`` of the one-line sequence, so ``word_to_permutation((3,4,5,2,3,1,2))``
is ``4 5 1 2 6 3``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .core import CapExceededError, ParseError, Word, _parse_ints, as_word

__all__ = [
    "Permutation",
    "word_to_permutation",
    "coxeter_length",
    "is_reduced_oracle",
    "inverse",
    "descents",
    "one_reduced_word",
    "reduced_words_oracle",
    "all_permutations",
    "format_permutation",
    "parse_permutation",
]


@dataclass(frozen=True)
class Permutation:
    """Permutation in one-line notation, trailing fixed points trimmed.

    Acts as the identity beyond ``len(one_line)``, so permutations of different
    nominal degree compare equal when they agree.
    """

    one_line: tuple[int, ...] = ()

    def __post_init__(self):
        line = list(self.one_line)
        if sorted(line) != list(range(1, len(line) + 1)):
            raise ValueError(f"{tuple(line)} is not a permutation of 1..{len(line)}")
        while line and line[-1] == len(line):
            line.pop()
        object.__setattr__(self, "one_line", tuple(line))

    @classmethod
    def identity(cls) -> Permutation:
        return cls(())

    @property
    def degree(self) -> int:
        return len(self.one_line)

    def __call__(self, x: int) -> int:
        return self.one_line[x - 1] if x <= len(self.one_line) else x

    def padded(self, n: int) -> tuple[int, ...]:
        """One-line form on ``1..max(n, degree)``."""
        return self.one_line + tuple(range(len(self.one_line) + 1, n + 1))

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition ``(self * other)(x) = self(other(x))``."""
        n = max(self.degree, other.degree)
        return Permutation(tuple(self(other(x)) for x in range(1, n + 1)))

    def times_simple(self, i: int) -> Permutation:
        """``self * s_i``: swap positions ``i`` and ``i + 1``."""
        line = list(self.padded(i + 1))
        line[i - 1], line[i] = line[i], line[i - 1]
        return Permutation(tuple(line))

    def __str__(self) -> str:
        return " ".join(map(str, self.one_line))


def word_to_permutation(word: Iterable[int]) -> Permutation:
    line: list[int] = []
    for a in as_word(word):
        if a + 1 > len(line):
            line.extend(range(len(line) + 1, a + 2))
        line[a - 1], line[a] = line[a], line[a - 1]
    return Permutation(tuple(line))


def coxeter_length(p: Permutation) -> int:
    """Number of inversions."""
    line = p.one_line
    return sum(1 for a, b in itertools.combinations(line, 2) if a > b)


def is_reduced_oracle(word: Iterable[int]) -> bool:
    word = as_word(word)
    return coxeter_length(word_to_permutation(word)) == len(word)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for pos, value in enumerate(p.one_line, start=1):
        inv[value - 1] = pos
    return Permutation(tuple(inv))


def descents(p: Permutation) -> list[int]:
    """Right descents: ``i`` with ``p(i) > p(i+1)``, i.e. ``l(p s_i) < l(p)``."""
    line = p.one_line
    return [i for i in range(1, len(line)) if line[i - 1] > line[i]]


def one_reduced_word(p: Permutation) -> Word:
    """A reduced word for ``p``, peeling off the largest descent each step."""
    line = list(p.one_line)
    letters = []
    while True:
        ds = [i for i in range(1, len(line)) if line[i - 1] > line[i]]
        if not ds:
            break
        i = ds[-1]
        line[i - 1], line[i] = line[i], line[i - 1]
        letters.append(i)
    return tuple(reversed(letters))


def reduced_words_oracle(p: Permutation, cap: int = 10**6) -> list[Word]:
    """All reduced words of ``p`` by depth-first search over right descents.

    The last letter of a reduced word must be a descent; strip it and recurse.
    Output is sorted lexicographically.
    """
    out: list[Word] = []

    def dfs(q: tuple[int, ...], suffix: list[int]) -> None:
        found = False
        for i in range(1, len(q)):
            if q[i - 1] > q[i]:
                found = True
                r = list(q)
                r[i - 1], r[i] = r[i], r[i - 1]
                suffix.append(i)
                dfs(tuple(r), suffix)
                suffix.pop()
        if not found:
            out.append(tuple(reversed(suffix)))
            if len(out) > cap:
                raise CapExceededError(len(out), cap)

    dfs(p.one_line, [])
    return sorted(out)


def all_permutations(n: int) -> Iterator[Permutation]:
    for line in itertools.permutations(range(1, n + 1)):
        yield Permutation(line)


def format_permutation(p: Permutation) -> str:
    return str(p) + "\n"


def parse_permutation(text: str | Sequence[str]) -> Permutation:
    if not isinstance(text, str):
        text = " ".join(text)
    values = _parse_ints(text, 1, minimum=1, what="value")
    try:
        return Permutation(tuple(values))
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1) from None
