"""
Rothe diagrams and their recovery from tower diagrams.

Rothe cells are ``(row, column)`` pairs in matrix convention (row 1 on top).
The virtual tower diagram of a reduced word is the tower diagram of the
reversed word reflected in ``y = -x``: tower ``r`` of height ``h`` becomes
virtual row ``r`` holding ``h`` cells at offsets ``0..h-1`` from the border.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import InvariantError, ParseError, TowerDiagram, TowerTableau, Word, _parse_ints, as_word
from .enumeration import shape_of
from .natural import natural_labelling, natural_word
from .perm import Permutation, inverse
from .slide import recording_tableau, sr_shape

__all__ = [
    "RotheDiagram",
    "VirtualTowerDiagram",
    "CompleteTowerTableau",
    "rothe_diagram",
    "rothe_right_action",
    "tower_from_rothe",
    "virtual_diagram",
    "complete_tableau",
    "rothify",
    "rothify_complete",
    "drop_last_natural_letter",
    "format_rothe",
    "parse_rothe",
]


@dataclass(frozen=True)
class RotheDiagram:
    cells: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "cells", frozenset((int(r), int(c)) for r, c in self.cells))

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.cells))

    def __contains__(self, cell: object) -> bool:
        return cell in self.cells

    def column_counts(self) -> tuple[int, ...]:
        """Cells per column, trailing zeros dropped."""
        width = max((c for _, c in self.cells), default=0)
        counts = [0] * width
        for _, c in self.cells:
            counts[c - 1] += 1
        return tuple(counts)

    def swap_rows(self, i: int) -> RotheDiagram:
        swap = {i: i + 1, i + 1: i}
        return RotheDiagram(frozenset((swap.get(r, r), c) for r, c in self.cells))


@dataclass(frozen=True)
class VirtualTowerDiagram:
    row_lengths: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "row_lengths", TowerDiagram(self.row_lengths).heights)

    def row(self, r: int) -> int:
        return self.row_lengths[r - 1] if 1 <= r <= len(self.row_lengths) else 0

    def __contains__(self, cell: object) -> bool:
        r, c = cell  # type: ignore[misc]
        return 0 <= c < self.row(r)

    @property
    def size(self) -> int:
        return sum(self.row_lengths)


@dataclass(frozen=True)
class CompleteTowerTableau:
    """Upper natural tableau plus the virtual tableau.

    ``reflected`` is the virtual tableau reflected back into the first quadrant:
    its tower ``r`` at height ``c`` is virtual row ``r`` at offset ``c``.
    """

    upper: TowerTableau
    reflected: TowerTableau

    @property
    def length(self) -> int:
        return self.upper.size

    @property
    def virtual(self) -> VirtualTowerDiagram:
        return VirtualTowerDiagram(self.reflected.shape.heights)

    def virtual_label(self, row: int, offset: int) -> int:
        return self.reflected.label_at((row, offset))

    def virtual_cell_of(self, label: int) -> tuple[int, int]:
        c = self.reflected.cell_of(label)
        return c.column, c.height


def rothe_diagram(p: Permutation) -> RotheDiagram:
    """``{(i, j) : j < p(i) and i < p^-1(j)}``."""
    n = p.degree
    inv = inverse(p)
    return RotheDiagram(
        frozenset(
            (i, j)
            for i in range(1, n + 1)
            for j in range(1, p(i))
            if i < inv(j)
        )
    )


def rothe_right_action(p: Permutation, i: int) -> RotheDiagram:
    """Rothe diagram of ``p * s_i`` obtained by editing the diagram of ``p``.

    Cross-checked against the direct definition; a mismatch raises
    ``InvariantError``.
    """
    d = rothe_diagram(p)
    if p(i) > p(i + 1):
        removed = (i, p(i + 1))
        if removed not in d:
            raise InvariantError(f"{removed} missing from the Rothe diagram of {p}")
        moved = RotheDiagram(d.cells - {removed}).swap_rows(i)
    else:
        moved = RotheDiagram(d.swap_rows(i).cells | {(i, p(i))})
    direct = rothe_diagram(p.times_simple(i))
    if moved != direct:
        raise InvariantError(f"row action on {p} by s_{i} disagrees with the definition")
    return moved


def tower_from_rothe(p: Permutation) -> TowerDiagram:
    return TowerDiagram(rothe_diagram(p).column_counts())


def virtual_diagram(word: Iterable[int]) -> VirtualTowerDiagram:
    word = as_word(word)
    shape = sr_shape(word[::-1])
    if shape is None:
        raise ValueError("virtual diagrams are only defined for reduced words")
    return VirtualTowerDiagram(shape.heights)


def complete_tableau(p: Permutation) -> CompleteTowerTableau:
    """Natural labelling of the complete tower diagram of ``p``.

    The virtual side carries the recording tableau of the reversed natural word.
    """
    shape = shape_of(p)
    eta: Word = natural_word(shape)
    return CompleteTowerTableau(natural_labelling(shape), recording_tableau(eta[::-1]))


def rothify_complete(ct: CompleteTowerTableau) -> RotheDiagram:
    """Pair upper label ``k`` with virtual label ``l + 1 - k``; each pair gives the
    cell (virtual row, upper column)."""
    n = ct.length
    out = set()
    for k in range(1, n + 1):
        u = ct.upper.cell_of(k)
        v = ct.reflected.cell_of(n + 1 - k)
        out.add((v.column, u.column))
    return RotheDiagram(frozenset(out))


def rothify(p: Permutation) -> RotheDiagram:
    return rothify_complete(complete_tableau(p))


def drop_last_natural_letter(ct: CompleteTowerTableau) -> CompleteTowerTableau:
    """Complete tableau after deleting the last letter of the natural word.

    Upper side: remove the cell labelled ``l``.  Virtual side: remove the cell
    labelled 1 (always at offset 0 of its row ``r``), move the rest of row ``r``
    diagonally into row ``r + 1`` and lower every label by one.  Row ``r + 1``
    must be empty beforehand.
    """
    n = ct.length
    if n == 0:
        raise ValueError("the identity has no natural letter to drop")
    upper = TowerTableau.from_positions(ct.upper.positions()[:-1])
    r, c = ct.virtual_cell_of(1)
    if c != 0:
        raise InvariantError(f"virtual label 1 sits at offset {c}, expected 0")
    if ct.virtual.row(r + 1):
        raise InvariantError(f"row {r + 1} below the virtual label 1 is not empty")
    labels = {}
    for cell, label in ct.reflected.items():
        if label == 1:
            continue
        row, off = cell
        if row == r:
            row, off = r + 1, off - 1
        labels[(row, off)] = label - 1
    return CompleteTowerTableau(upper, TowerTableau.from_mapping(labels))


def format_rothe(d: RotheDiagram) -> str:
    return "".join(f"{r} {c}\n" for r, c in d)


def parse_rothe(text: str) -> RotheDiagram:
    cells = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        values = _parse_ints(line, lineno, minimum=1, what="index")
        if len(values) != 2:
            raise ParseError("expected 'row col'", lineno, 1)
        cells.add((values[0], values[1]))
    return RotheDiagram(frozenset(cells))
