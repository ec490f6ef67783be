"""Flight paths, flight numbers and corner cells."""

from __future__ import annotations

from typing import Sequence

from .core import Cell, TowerDiagram

__all__ = [
    "flight_path",
    "flight_number",
    "corner_cells",
    "remove_corner",
    "path_in_heights",
]


def _left_neighbour_on(heights: Sequence[int], column: int, diagonal: int) -> int:
    """Rightmost column left of ``column`` with a cell on ``diagonal``, or 0."""
    for k in range(column - 1, 0, -1):
        # column k meets the diagonal at height diagonal - k
        if 0 <= diagonal - k < heights[k - 1]:
            return k
    return 0


def path_in_heights(heights: Sequence[int], column: int, height: int) -> list[tuple[int, int]] | None:
    """Flight path on a raw height sequence; no membership check.

    Walks the zigzag leftwards instead of recursing.
    """
    path = [(column, height)]
    i, j = column, height
    while True:
        d = i + j
        k = _left_neighbour_on(heights, i, d - 1)
        if not k:
            return path
        jk = d - 1 - k
        if jk + 1 >= heights[k - 1]:
            return None
        path.append((k, jk + 1))
        path.append((k, jk))
        i, j = k, jk


def _check_cell(diagram: TowerDiagram, cell: tuple[int, int]) -> Cell:
    cell = Cell(*cell)
    if cell not in diagram:
        raise ValueError(f"cell {cell} is not in the diagram {diagram.heights}")
    return cell


def flight_path(diagram: TowerDiagram, cell: tuple[int, int]) -> tuple[Cell, ...] | None:
    """Flight path of ``cell``, ending at its lexicographically smallest cell.

    Returns ``None`` when the cell has no flight path; raises ``ValueError`` when
    the cell is not in the diagram.
    """
    cell = _check_cell(diagram, cell)
    path = path_in_heights(diagram.heights, *cell)
    if path is None:
        return None
    return tuple(Cell(i, j) for i, j in path)


def flight_number(diagram: TowerDiagram, cell: tuple[int, int]) -> int | None:
    path = flight_path(diagram, cell)
    if path is None:
        return None
    return path[-1].diagonal


def corner_cells(diagram: TowerDiagram) -> list[Cell]:
    """Tower tops that have a flight path, by increasing column."""
    hs = diagram.heights
    return [c for c in diagram.tops() if path_in_heights(hs, *c) is not None]


def remove_corner(diagram: TowerDiagram, cell: tuple[int, int]) -> TowerDiagram:
    cell = _check_cell(diagram, cell)
    if cell not in corner_cells(diagram):
        raise ValueError(f"cell {cell} is not a corner of {diagram.heights}")
    return diagram.with_height(cell.column, cell.height)
