"""Head/tail decomposition of odd numbers and the (row, column) coordinates.

An odd n is written n = j * 2**(i+1) + 2**i - 1: the row i is the number of
trailing one-bits, the column j is whatever sits above the delimiting zero.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import EvenInput, RowOutOfRange

MAX_TABLE_ROWS = 64
MAX_TABLE_COLS = 2**20


class Coord(NamedTuple):
    i: int
    j: int

    def __str__(self) -> str:
        return f"({self.i}, {self.j})"


class TailResult(NamedTuple):
    value: int
    length: int


def _require_odd(n: int) -> None:
    if n < 1 or n % 2 == 0:
        raise EvenInput(f"expected an odd natural number, got {n}")


def tail_length(n: int) -> int:
    # trailing ones of n are the trailing zeros of ~n; (~n) & (n + 1) isolates the lowest zero bit
    return ((~n) & (n + 1)).bit_length() - 1


def tail(n: int) -> TailResult:
    _require_odd(n)
    i = tail_length(n)
    return TailResult((1 << i) - 1, i)


def head(n: int) -> int:
    _require_odd(n)
    return n >> (tail_length(n) + 1)


def c(n: int) -> Coord:
    """Coordinates (row, column) of an odd natural.

    >>> c(43)
    Coord(i=2, j=5)
    """
    _require_odd(n)
    i = tail_length(n)
    return Coord(i, n >> (i + 1))


def c_inv(coord) -> int:
    i, j = coord
    if i < 1:
        raise RowOutOfRange(f"row index must be >= 1, got {i}")
    if j < 0:
        raise ValueError(f"column index must be >= 0, got {j}")
    return (j << (i + 1)) + (1 << i) - 1


def table(rows: int, cols: int) -> list[list[int]]:
    """Row-major matrix whose entry [i-1][j] is c_inv((i, j))."""
    if not 1 <= rows <= MAX_TABLE_ROWS:
        raise ValueError(f"rows must be in [1, {MAX_TABLE_ROWS}], got {rows}")
    if not 1 <= cols <= MAX_TABLE_COLS:
        raise ValueError(f"cols must be in [1, {MAX_TABLE_COLS}], got {cols}")
    out = []
    for i in range(1, rows + 1):
        base = (1 << i) - 1
        stride = 1 << (i + 1)
        out.append([base + j * stride for j in range(cols)])
    return out
