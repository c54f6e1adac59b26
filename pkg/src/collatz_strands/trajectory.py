"""Column transport, row reduction and exact boundary classification.

Within rows above 1 a gamma step moves (i, j) to (i - 1, 3j + 1), so the
column evolves by g(j) = 3j + 1 independently of the row. Running the
column map backwards leaves the integers, which is why every boundary
quantity here is a Fraction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .cadogan import Coord, c
from .core import collatz_step
from .errors import BudgetExhausted, CycleFound, RowOutOfRange

DEFAULT_MAX_ROUNDS = 10**4


class Classification(enum.Enum):
    LESSER = "Lesser"
    ON = "On"
    GREATER = "Greater"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Boundary:
    """The completed trajectory ending at termination column J."""

    J: int

    def column(self, i: int) -> Fraction:
        return boundary_column(self, i)


def g(j):
    return 3 * j + 1


def g_inv(j) -> Fraction:
    return Fraction(j - 1, 3) if isinstance(j, int) else (j - 1) / 3


def g_pow(j, m: int):
    """m-fold g in closed form: j*3**m + (3**m - 1)/2."""
    if m < 0:
        raise ValueError("m must be non-negative")
    p = 3**m
    return j * p + (p - 1) // 2


def g_inv_pow(j, m: int) -> Fraction:
    """m-fold inverse of g in closed form: (j - (3**m - 1)/2) / 3**m, exact."""
    if m < 0:
        raise ValueError("m must be non-negative")
    p = 3**m
    return (Fraction(j) - (p - 1) // 2) / p


def coord_step(coord) -> Coord:
    i, j = coord
    if i < 2:
        raise RowOutOfRange(f"no row below row {i}")
    return Coord(i - 1, 3 * j + 1)


def coord_step_m(coord, m: int) -> Coord:
    i, j = coord
    if m < 0 or m > i - 1:
        raise RowOutOfRange(f"cannot descend {m} rows from row {i}")
    return Coord(i - m, g_pow(j, m))


def rho(coord) -> int:
    """Termination column of the row reduction that starts at ``coord``."""
    i, j = coord
    if i < 1:
        raise RowOutOfRange(f"row index must be >= 1, got {i}")
    return g_pow(j, i - 1)


def restart_q(J: int) -> Coord:
    """Next row-reduction start point: the coordinates of gamma(J)."""
    return c(collatz_step(J).value)


def boundary_column(boundary, i: int) -> Fraction:
    J = boundary.J if isinstance(boundary, Boundary) else boundary
    if i < 1:
        raise RowOutOfRange(f"row index must be >= 1, got {i}")
    return g_inv_pow(J, i - 1)


def compare(j, d) -> Classification:
    if j < d:
        return Classification.LESSER
    if j == d:
        return Classification.ON
    return Classification.GREATER


def classify_restart(J: int) -> Classification:
    """Where the restart point of J lies relative to the boundary through J."""
    return classify_detail(J)[0]


def classify_detail(J: int) -> tuple[Classification, Coord, Fraction]:
    """Classification together with the restart coordinate and boundary column."""
    if J < 1:
        raise ValueError(f"J must be >= 1, got {J}")
    start = restart_q(J)
    d = boundary_column(J, start.i)
    return compare(start.j, d), start, d


def completed_trajectory(start, top_row: int | None = None) -> list[tuple[int, Fraction]]:
    """Crossing points (row, column) of the boundary through ``start``.

    Listed from the highest row down to row 1. Upward the inverse map is
    applied while the column stays non-negative (and, if given, the row
    does not exceed ``top_row``); downward the forward closed form is used.
    """
    i0, j0 = start
    if i0 < 1:
        raise RowOutOfRange(f"row index must be >= 1, got {i0}")
    up = []
    i, col = i0, Fraction(j0)
    while col > 0 and (top_row is None or i < top_row):
        nxt = g_inv(col)
        if nxt < 0:
            break
        i += 1
        col = nxt
        up.append((i, col))
    down = [(i0 - m, Fraction(g_pow(j0, m))) for m in range(i0)]
    return up[::-1] + down


def reduce_sequence(n0: int, max_rounds: int = DEFAULT_MAX_ROUNDS) -> list[int]:
    """Termination columns J_0, J_1, ... of repeated row reductions from n0.

    Stops at the first J equal to 0 (n0 reaches 1). Raises CycleFound if a
    column repeats and BudgetExhausted after ``max_rounds`` columns; both
    carry the partial sequence.
    """
    if max_rounds < 1:
        raise ValueError("max_rounds must be at least 1")
    J = rho(c(n0))
    seq = [J]
    seen = {J}
    while J != 0:
        if len(seq) >= max_rounds:
            raise BudgetExhausted(f"no zero column within {max_rounds} rounds", seq)
        J = rho(restart_q(J))
        seq.append(J)
        if J in seen:
            raise CycleFound(f"termination column {J} repeated", seq)
        seen.add(J)
    return seq
