"""Standardness test and the reading word of a standard tower tableau."""

from __future__ import annotations

from .core import TowerTableau, Word
from .flight import path_in_heights

__all__ = ["NotStandardError", "is_standard", "read", "first_bad_label"]


class NotStandardError(ValueError):
    def __init__(self, label: int, reason: str):
        self.label = label
        super().__init__(f"not a standard tower tableau at label {label}: {reason}")


def _scan(tableau: TowerTableau) -> tuple[list[int], int, str]:
    """Grow the prefix shapes label by label.

    Returns (letters read so far, first bad label or 0, reason).
    """
    heights = [0] * tableau.shape.width
    letters = []
    for k, (i, j) in enumerate(tableau.positions(), start=1):
        if heights[i - 1] != j:
            return letters, k, f"cell ({i},{j}) does not sit on top of tower {i}"
        heights[i - 1] += 1
        path = path_in_heights(heights, i, j)
        if path is None:
            return letters, k, f"cell ({i},{j}) is not a corner of the prefix shape"
        ci, cj = path[-1]
        letters.append(ci + cj)
    return letters, 0, ""


def first_bad_label(tableau: TowerTableau) -> int | None:
    bad = _scan(tableau)[1]
    return bad or None


def is_standard(tableau: TowerTableau) -> bool:
    return _scan(tableau)[1] == 0


def read(tableau: TowerTableau) -> Word:
    """Reading word: letter ``k`` is the flight number of the cell labelled ``k``
    inside the shape of labels ``<= k``."""
    letters, bad, reason = _scan(tableau)
    if bad:
        raise NotStandardError(bad, reason)
    return tuple(letters)
