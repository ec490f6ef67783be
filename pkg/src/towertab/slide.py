"""Sliding a letter into a tower diagram, and the sliding-and-recording algorithm."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .core import Cell, TowerDiagram, TowerTableau, as_word

__all__ = [
    "Landed",
    "Terminated",
    "SlideOutcome",
    "SlidingTableau",
    "SRPair",
    "SRTerminated",
    "SRResult",
    "slide",
    "slide_heights",
    "sr_algorithm",
    "is_reduced_by_sliding",
    "recording_tableau",
    "sr_shape",
]


@dataclass(frozen=True)
class Landed:
    cell: Cell


@dataclass(frozen=True)
class Terminated:
    pass


SlideOutcome = Union[Landed, Terminated]


@dataclass(frozen=True)
class SlidingTableau:
    """Canonical labelling of a shape: cell ``(i, j)`` carries ``i + j``."""

    shape: TowerDiagram

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(range(i, i + h)) for i, h in enumerate(self.shape.heights, start=1)
        )

    def label_at(self, cell: tuple[int, int]) -> int:
        if cell not in self.shape:
            raise KeyError(cell)
        return cell[0] + cell[1]


@dataclass(frozen=True)
class SRPair:
    sliding: SlidingTableau
    recording: TowerTableau

    @property
    def shape(self) -> TowerDiagram:
        return self.recording.shape


@dataclass(frozen=True)
class SRTerminated:
    index: int  # 1-based position of the letter whose slide terminated


SRResult = Union[SRPair, SRTerminated]


def _h(heights: list[int], i: int) -> int:
    return heights[i - 1] if i <= len(heights) else 0


def slide_heights(heights: list[int], value: int) -> tuple[int, int] | None:
    """Slide ``value`` into ``heights`` in place.

    Returns the new cell, or ``None`` if the slide terminates (``heights`` is then
    left untouched).
    """
    if value < 1:
        raise ValueError(f"can only slide positive integers, got {value}")
    v, m = value, 1
    while True:
        # first tower in columns m..v-1 meeting diagonal v-1
        for i in range(m, v):
            t = _h(heights, i)
            if t >= v - i:
                if t == v - i:
                    cell = (i, v - i)
                    break
                if t == v - i + 1:
                    return None
                v, m = v + 1, i + 1
                cell = None
                break
        else:
            t = _h(heights, v)
            if t == 0:
                cell = (v, 0)
            elif t == 1:
                return None
            else:
                v, m = v + 1, v + 1
                continue
        if cell is not None:
            i, j = cell
            if i > len(heights):
                heights.extend([0] * (i - len(heights)))
            heights[i - 1] += 1
            return cell


def slide(diagram: TowerDiagram, value: int) -> tuple[TowerDiagram, SlideOutcome]:
    """Slide ``value`` into ``diagram``.

    On termination the input diagram is returned unchanged with ``Terminated()``.
    """
    hs = list(diagram.heights)
    cell = slide_heights(hs, value)
    if cell is None:
        return diagram, Terminated()
    return TowerDiagram(tuple(hs)), Landed(Cell(*cell))


def _sr_positions(word: Iterable[int]) -> tuple[list[tuple[int, int]], int]:
    """Landing cells of successive letters, and the 1-based failing index (0 if none)."""
    heights: list[int] = []
    cells = []
    for k, a in enumerate(word, start=1):
        cell = slide_heights(heights, a)
        if cell is None:
            return cells, k
        cells.append(cell)
    return cells, 0


def sr_algorithm(word: Iterable[int]) -> SRResult:
    word = as_word(word)
    cells, failed = _sr_positions(word)
    if failed:
        return SRTerminated(failed)
    recording = TowerTableau.from_positions(cells)
    return SRPair(SlidingTableau(recording.shape), recording)


def is_reduced_by_sliding(word: Iterable[int]) -> bool:
    return _sr_positions(as_word(word))[1] == 0


def recording_tableau(word: Iterable[int]) -> TowerTableau:
    """Recording tableau of a word the SR algorithm accepts; ``ValueError`` otherwise."""
    result = sr_algorithm(word)
    if isinstance(result, SRTerminated):
        raise ValueError(f"word is not reduced: slide of letter {result.index} terminates")
    return result.recording


def sr_shape(word: Iterable[int]) -> TowerDiagram | None:
    """Shape reached by sliding ``word``, or ``None`` if some slide terminates."""
    heights: list[int] = []
    for a in as_word(word):
        if slide_heights(heights, a) is None:
            return None
    return TowerDiagram(tuple(heights))
