"""
Cells, tower diagrams, tower tableaux and words, plus their text codec.

A tower diagram is a weak composition ``(t_1, t_2, ...)``: tower ``i`` holds the
cells ``(i, 0), ..., (i, t_i - 1)``.  Cell ``(i, j)`` lies on the diagonal
``x + y = i + j``.

Text formats (ASCII, newline terminated):

* diagram:   ``"1 0 4 2 0 0 2"``
* word:      ``"7 8 4 5 3 4 5 6 1"``
* tableau:   heights line, then ``"col: l_0 l_1 ..."`` per non-empty tower,
             labels listed bottom to top.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

__all__ = [
    "Cell",
    "TowerDiagram",
    "TowerTableau",
    "Word",
    "ParseError",
    "CapExceededError",
    "InvariantError",
    "diagram_from_heights",
    "contains",
    "as_word",
    "format_diagram",
    "parse_diagram",
    "format_word",
    "parse_word",
    "format_tableau",
    "parse_tableau",
]

Word = tuple[int, ...]


class ParseError(ValueError):
    """Malformed text input; carries a 1-based line and column."""

    def __init__(self, reason: str, line: int = 1, column: int = 1):
        self.reason = reason
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {reason}")


class CapExceededError(RuntimeError):
    """An enumeration would produce more results than the caller allowed."""

    def __init__(self, needed: int, cap: int):
        self.needed = needed
        self.cap = cap
        super().__init__(f"enumeration needs {needed} results, cap is {cap}")


class InvariantError(RuntimeError):
    """Two independent computations of the same object disagree."""


class _CellBase(NamedTuple):
    column: int
    height: int


class Cell(_CellBase):
    """Unit square in tower ``column`` (>= 1) at ``height`` (>= 0).

    Tuple ordering is the lexicographic order on ``(column, height)``.
    """

    __slots__ = ()

    def __new__(cls, column: int, height: int):
        if column < 1 or height < 0:
            raise ValueError(f"invalid cell ({column}, {height})")
        return super().__new__(cls, column, height)

    @property
    def diagonal(self) -> int:
        return self.column + self.height

    def __repr__(self) -> str:
        return f"({self.column},{self.height})"


def _normalize(heights: Iterable[int]) -> tuple[int, ...]:
    hs = list(heights)
    for h in hs:
        if h < 0:
            raise ValueError(f"negative tower height {h}")
    while hs and hs[-1] == 0:
        hs.pop()
    return tuple(hs)


@dataclass(frozen=True)
class TowerDiagram:
    """A tower diagram stored as its height sequence with trailing zeros removed."""

    heights: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "heights", _normalize(self.heights))

    @property
    def size(self) -> int:
        return sum(self.heights)

    @property
    def width(self) -> int:
        return len(self.heights)

    def height(self, column: int) -> int:
        """Height of tower ``column``; zero beyond the last non-empty tower."""
        if 1 <= column <= len(self.heights):
            return self.heights[column - 1]
        return 0

    def __contains__(self, cell: object) -> bool:
        if not isinstance(cell, tuple) or len(cell) != 2:
            return False
        i, j = cell
        return i >= 1 and 0 <= j < self.height(i)

    def cells(self) -> Iterator[Cell]:
        for i, h in enumerate(self.heights, start=1):
            for j in range(h):
                yield Cell(i, j)

    def tops(self) -> list[Cell]:
        return [Cell(i, h - 1) for i, h in enumerate(self.heights, start=1) if h]

    def with_height(self, column: int, height: int) -> TowerDiagram:
        hs = list(self.heights)
        if column > len(hs):
            hs.extend([0] * (column - len(hs)))
        hs[column - 1] = height
        return TowerDiagram(tuple(hs))

    def __len__(self) -> int:
        return self.size

    def __str__(self) -> str:
        return format_diagram(self)


def diagram_from_heights(heights: Iterable[int]) -> TowerDiagram:
    return TowerDiagram(tuple(heights))


def contains(diagram: TowerDiagram, cell: tuple[int, int]) -> bool:
    return cell in diagram


def as_word(letters: Iterable[int]) -> Word:
    """Validate and freeze a word over the positive integers."""
    word = tuple(int(a) for a in letters)
    for a in word:
        if a < 1:
            raise ValueError(f"word letters must be positive, got {a}")
    return word


@dataclass(frozen=True)
class TowerTableau:
    """A tower diagram whose cells are labelled bijectively by ``1..n``.

    ``columns[i - 1]`` lists the labels of tower ``i`` from bottom to top.
    """

    columns: tuple[tuple[int, ...], ...]
    _positions: tuple[Cell, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        cols = [tuple(c) for c in self.columns]
        while cols and not cols[-1]:
            cols.pop()
        object.__setattr__(self, "columns", tuple(cols))
        n = sum(len(c) for c in cols)
        positions: list[Cell | None] = [None] * n
        for i, col in enumerate(cols, start=1):
            for j, label in enumerate(col):
                if not 1 <= label <= n or positions[label - 1] is not None:
                    raise ValueError(f"labels must be a bijection onto 1..{n}")
                positions[label - 1] = Cell(i, j)
        object.__setattr__(self, "_positions", tuple(positions))

    @classmethod
    def from_positions(cls, positions: Sequence[tuple[int, int]]) -> TowerTableau:
        """Build from the cell holding each label: ``positions[k-1]`` carries ``k``."""
        return cls.from_mapping({c: k for k, c in enumerate(positions, start=1)})

    @classmethod
    def from_mapping(cls, labels: Mapping[tuple[int, int], int]) -> TowerTableau:
        width = max((i for i, _ in labels), default=0)
        cols: list[dict[int, int]] = [dict() for _ in range(width)]
        for (i, j), label in labels.items():
            Cell(i, j)
            cols[i - 1][j] = label
        out = []
        for i, col in enumerate(cols, start=1):
            if sorted(col) != list(range(len(col))):
                raise ValueError(f"tower {i} is not filled from the bottom")
            out.append(tuple(col[j] for j in range(len(col))))
        return cls(tuple(out))

    @property
    def shape(self) -> TowerDiagram:
        return TowerDiagram(tuple(len(c) for c in self.columns))

    @property
    def size(self) -> int:
        return len(self._positions)

    def positions(self) -> tuple[Cell, ...]:
        """Cells in label order: element ``k - 1`` is the cell labelled ``k``."""
        return self._positions

    def cell_of(self, label: int) -> Cell:
        return self._positions[label - 1]

    def label_at(self, cell: tuple[int, int]) -> int:
        i, j = cell
        return self.columns[i - 1][j]

    def prefix(self, a: int) -> frozenset[Cell]:
        """Cells with label ``<= a`` (not necessarily a tower diagram)."""
        return frozenset(self._positions[:a])

    def items(self) -> Iterator[tuple[Cell, int]]:
        for i, col in enumerate(self.columns, start=1):
            for j, label in enumerate(col):
                yield Cell(i, j), label

    def __str__(self) -> str:
        return format_tableau(self)


# -- text codec ---------------------------------------------------------------


def _parse_ints(text: str, line: int, *, minimum: int, what: str) -> list[int]:
    values = []
    col = 0
    for token in text.split():
        col = text.index(token, col)
        try:
            value = int(token)
        except ValueError:
            raise ParseError(f"expected integer {what}, got {token!r}", line, col + 1)
        if value < minimum:
            raise ParseError(f"{what} must be >= {minimum}, got {value}", line, col + 1)
        values.append(value)
        col += len(token)
    return values


def format_diagram(diagram: TowerDiagram) -> str:
    return " ".join(map(str, diagram.heights)) + "\n"


def parse_diagram(text: str) -> TowerDiagram:
    lines = text.splitlines()
    if len(lines) > 1 and any(s.strip() for s in lines[1:]):
        raise ParseError("a diagram occupies a single line", 2, 1)
    first = lines[0] if lines else ""
    return TowerDiagram(tuple(_parse_ints(first, 1, minimum=0, what="tower height")))


def format_word(word: Sequence[int]) -> str:
    return " ".join(map(str, word)) + "\n"


def parse_word(text: str) -> Word:
    lines = text.splitlines()
    if len(lines) > 1 and any(s.strip() for s in lines[1:]):
        raise ParseError("a word occupies a single line", 2, 1)
    first = lines[0] if lines else ""
    return tuple(_parse_ints(first, 1, minimum=1, what="letter"))


def format_tableau(tableau) -> str:
    """Any object with ``shape`` and per-tower ``columns`` of labels."""
    out = [format_diagram(tableau.shape)]
    for i, col in enumerate(tableau.columns, start=1):
        if col:
            out.append(f"{i}: " + " ".join(map(str, col)) + "\n")
    return "".join(out)


def parse_tableau(text: str) -> TowerTableau:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        return TowerTableau(())
    shape = parse_diagram(lines[0])
    columns: dict[int, tuple[int, ...]] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        head, sep, rest = line.partition(":")
        if not sep:
            raise ParseError("expected 'col: labels'", lineno, 1)
        heads = _parse_ints(head, lineno, minimum=1, what="column")
        if len(heads) != 1:
            raise ParseError("expected exactly one column index", lineno, 1)
        col = heads[0]
        if col in columns:
            raise ParseError(f"tower {col} listed twice", lineno, 1)
        labels = _parse_ints(rest, lineno, minimum=1, what="label")
        if len(labels) != shape.height(col):
            raise ParseError(
                f"tower {col} has height {shape.height(col)} but {len(labels)} labels",
                lineno,
                len(head) + 2,
            )
        columns[col] = tuple(labels)
    for i, h in enumerate(shape.heights, start=1):
        if h and i not in columns:
            raise ParseError(f"missing labels for tower {i}", len(lines), 1)
    try:
        return TowerTableau(tuple(columns.get(i, ()) for i in range(1, shape.width + 1)))
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1) from None
