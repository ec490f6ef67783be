"""Natural labelling and natural word of a tower diagram."""

from __future__ import annotations

from typing import Sequence

from .core import TowerDiagram, TowerTableau, Word
from .read import read

__all__ = ["natural_labelling", "natural_word", "natural_word_by_reading", "is_natural_word", "runs"]


def natural_labelling(diagram: TowerDiagram) -> TowerTableau:
    """Label towers right to left, each from bottom to top."""
    cols: list[tuple[int, ...]] = [()] * diagram.width
    next_label = 1
    for i in range(diagram.width, 0, -1):
        h = diagram.height(i)
        cols[i - 1] = tuple(range(next_label, next_label + h))
        next_label += h
    return TowerTableau(tuple(cols))


def natural_word(diagram: TowerDiagram) -> Word:
    """Concatenate ``i, i+1, ..., i+h_i-1`` over non-empty towers, right to left."""
    word: list[int] = []
    for i in range(diagram.width, 0, -1):
        word.extend(range(i, i + diagram.height(i)))
    return tuple(word)


def natural_word_by_reading(diagram: TowerDiagram) -> Word:
    return read(natural_labelling(diagram))


def runs(word: Sequence[int]) -> list[tuple[int, ...]]:
    """Split into maximal runs of consecutive increasing integers."""
    out: list[list[int]] = []
    for a in word:
        if out and a == out[-1][-1] + 1:
            out[-1].append(a)
        else:
            out.append([a])
    return [tuple(r) for r in out]


def is_natural_word(word: Sequence[int]) -> bool:
    starts = [r[0] for r in runs(word)]
    return all(a > b for a, b in zip(starts, starts[1:]))
