"""Standard tower tableaux of a shape by corner removal, and reduced words through them."""

from __future__ import annotations

from .core import CapExceededError, Cell, TowerDiagram, TowerTableau, Word
from .flight import path_in_heights
from .perm import Permutation, one_reduced_word
from .read import read
from .slide import sr_shape

__all__ = ["DEFAULT_CAP", "count_stt", "enumerate_stt", "reduced_words", "shape_of"]

DEFAULT_CAP = 10**6

Heights = tuple[int, ...]


def _corners(heights: Heights) -> list[tuple[int, int]]:
    return [
        (i, h - 1)
        for i, h in enumerate(heights, start=1)
        if h and path_in_heights(heights, i, h - 1) is not None
    ]


def _drop(heights: Heights, column: int) -> Heights:
    hs = list(heights)
    hs[column - 1] -= 1
    while hs and hs[-1] == 0:
        hs.pop()
    return tuple(hs)


def _count(heights: Heights, memo: dict[Heights, int]) -> int:
    if heights in memo:
        return memo[heights]
    if not heights:
        return 1
    total = sum(_count(_drop(heights, i), memo) for i, _ in _corners(heights))
    memo[heights] = total
    return total


def count_stt(diagram: TowerDiagram) -> int:
    """Number of standard tower tableaux of the given shape."""
    return _count(diagram.heights, {})


def _positions(heights: Heights, memo: dict[Heights, list[tuple[Cell, ...]]]) -> list[tuple[Cell, ...]]:
    if heights in memo:
        return memo[heights]
    if not heights:
        return [()]
    out = []
    for i, j in _corners(heights):
        corner = Cell(i, j)
        for seq in _positions(_drop(heights, i), memo):
            out.append(seq + (corner,))
    memo[heights] = out
    return out


def enumerate_stt(diagram: TowerDiagram, cap: int = DEFAULT_CAP) -> list[TowerTableau]:
    """All standard tower tableaux of ``diagram``.

    The largest label sits on a corner; removing it leaves a standard tableau of
    the smaller shape.  Sub-shapes are memoized by height sequence.  Results are
    ordered lexicographically by the sequence of cells holding labels 1, 2, ...
    """
    needed = count_stt(diagram)
    if needed > cap:
        raise CapExceededError(needed, cap)
    seqs = sorted(_positions(diagram.heights, {}))
    return [TowerTableau.from_positions(s) for s in seqs]


def shape_of(p: Permutation) -> TowerDiagram:
    """Shape of the recording tableau of any reduced word of ``p``."""
    shape = sr_shape(one_reduced_word(p))
    assert shape is not None
    return shape


def reduced_words(p: Permutation, cap: int = DEFAULT_CAP) -> list[Word]:
    """Reading words of every standard tableau of ``shape_of(p)``, sorted."""
    return sorted(read(t) for t in enumerate_stt(shape_of(p), cap))
