"""ASCII grids for diagrams, tableaux, flight paths, complete tableaux and Rothe diagrams."""

from __future__ import annotations

from typing import Sequence

from .core import TowerDiagram, TowerTableau
from .flight import flight_path
from .perm import Permutation
from .rothe import CompleteTowerTableau, rothe_diagram

__all__ = ["EMPTY", "render_diagram", "render_tableau", "render_flight", "render_complete", "render_rothe"]

EMPTY = "·"
FILLED = "#"


def _grid(
    rows: Sequence[Sequence[str]],
    row_names: Sequence[str],
    col_names: Sequence[str],
    rule_after: int | None = None,
) -> str:
    """Boxed grid; ``rule_after`` draws a double rule below that row index."""
    ncols = len(col_names)
    w = max([len(c) for r in rows for c in r] + [len(c) for c in col_names] + [1])
    rw = max([len(r) for r in row_names] + [0])
    rule = " " * rw + " +" + "+".join("-" * (w + 2) for _ in range(ncols)) + "+"
    axis = " " * rw + " +" + "+".join("=" * (w + 2) for _ in range(ncols)) + "+"
    out = [rule]
    for k, (name, row) in enumerate(zip(row_names, rows)):
        out.append(name.rjust(rw) + " | " + " | ".join(c.rjust(w) for c in row) + " |")
        out.append(axis if k == rule_after else rule)
    out.append(" " * rw + "   " + "   ".join(c.rjust(w) for c in col_names))
    return "\n".join(out) + "\n"


def _tower_rows(columns: Sequence[Sequence[str]], width: int) -> tuple[list[list[str]], list[str]]:
    top = max((len(c) for c in columns), default=0)
    rows, names = [], []
    for j in range(top - 1, -1, -1):
        rows.append([columns[i][j] if i < len(columns) and j < len(columns[i]) else EMPTY for i in range(width)])
        names.append(str(j))
    return rows, names


def render_diagram(diagram: TowerDiagram) -> str:
    if diagram.size == 0:
        return "(empty diagram)\n"
    cols = [[FILLED] * h for h in diagram.heights]
    rows, names = _tower_rows(cols, diagram.width)
    return _grid(rows, names, [str(i) for i in range(1, diagram.width + 1)])


def render_tableau(tableau) -> str:
    """Any object with ``shape`` and per-tower ``columns`` of labels."""
    shape = tableau.shape
    if shape.size == 0:
        return "(empty tableau)\n"
    cols = [[str(a) for a in col] for col in tableau.columns]
    rows, names = _tower_rows(cols, shape.width)
    return _grid(rows, names, [str(i) for i in range(1, shape.width + 1)])


def render_flight(diagram: TowerDiagram, cell: tuple[int, int]) -> str:
    """Diagram with the flight path of ``cell`` numbered in travel order."""
    path = flight_path(diagram, cell)
    cols = [[FILLED] * h for h in diagram.heights]
    if path is None:
        i, j = cell
        cols[i - 1][j] = "X"
        note = f"cell {tuple(cell)} has no flight path\n"
    else:
        for step, (i, j) in enumerate(path, start=1):
            cols[i - 1][j] = str(step)
        note = f"flight number {path[-1].diagonal}\n"
    rows, names = _tower_rows(cols, diagram.width)
    return _grid(rows, names, [str(i) for i in range(1, diagram.width + 1)]) + note


def render_complete(ct: CompleteTowerTableau) -> str:
    """Upper tableau above the axis rule, virtual rows below it.

    Virtual offsets grow leftwards from the border, so the upper columns sit to
    the right of the virtual ones.
    """
    if ct.length == 0:
        return "(empty complete tableau)\n"
    upper = ct.upper
    width = upper.shape.width
    depth = max(ct.virtual.row_lengths, default=0)
    col_names = [f"-{c + 1}" for c in range(depth - 1, -1, -1)] + [str(i) for i in range(1, width + 1)]
    cols = [[str(a) for a in col] for col in upper.columns]
    up_rows, up_names = _tower_rows(cols, width)
    rows = [[EMPTY] * depth + r for r in up_rows]
    names = list(up_names)
    rule_after = len(rows) - 1
    for r in range(1, len(ct.virtual.row_lengths) + 1):
        left = [EMPTY] * depth
        for off in range(ct.virtual.row(r)):
            left[depth - 1 - off] = str(ct.virtual_label(r, off))
        rows.append(left + [EMPTY] * width)
        names.append(f"r{r}")
    return _grid(rows, names, col_names, rule_after=rule_after)


def render_rothe(p: Permutation) -> str:
    """``o`` marks Rothe cells, ``x`` marks ``(i, p(i))``."""
    n = p.degree
    if n == 0:
        return "(identity: empty Rothe diagram)\n"
    d = rothe_diagram(p)
    rows = []
    for i in range(1, n + 1):
        rows.append(["x" if p(i) == j else "o" if (i, j) in d else EMPTY for j in range(1, n + 1)])
    return _grid(rows, [str(i) for i in range(1, n + 1)], [str(j) for j in range(1, n + 1)])
