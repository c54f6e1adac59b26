"""Dot-diagram rendering of the coordinate table with a boundary overlay.

Rows are drawn top to bottom from ``rows`` down to 1, so moving to a lower
row index moves down the picture; columns run left to right from 0.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from fractions import Fraction

from .cadogan import MAX_TABLE_COLS, MAX_TABLE_ROWS
from .trajectory import completed_trajectory

DOT = "."
ON_DOT = "*"
BETWEEN = "x"
OFF_RIGHT = ">"


def _check_size(rows, cols):
    if not 1 <= rows <= MAX_TABLE_ROWS:
        raise ValueError(f"rows must be in [1, {MAX_TABLE_ROWS}], got {rows}")
    if not 1 <= cols <= MAX_TABLE_COLS:
        raise ValueError(f"cols must be in [1, {MAX_TABLE_COLS}], got {cols}")


def crossings(rows: int, start) -> list[tuple[int, Fraction]]:
    if start is None:
        return []
    if not 1 <= start[0] <= rows:
        raise ValueError(f"start row {start[0]} is outside 1..{rows}")
    return completed_trajectory(start, top_row=rows)


def format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def render_ascii(rows: int, cols: int, start=None) -> str:
    """Text grid, two characters per column.

    A dot the boundary passes through becomes ``*``; a crossing strictly
    between columns c and c+1 puts ``x`` in the gap after column c; a
    crossing right of the last column ends the line with ``>``.
    """
    _check_size(rows, cols)
    pts = dict(crossings(rows, start))
    label_w = len(str(rows))
    lines = []
    for i in range(rows, 0, -1):
        cells = [DOT, " "] * cols
        tail = ""
        x = pts.get(i)
        if x is not None:
            if x >= cols:
                tail = OFF_RIGHT
            elif x.denominator == 1:
                cells[2 * int(x)] = ON_DOT
            else:
                cells[2 * (x.numerator // x.denominator) + 1] = BETWEEN
        lines.append(f"{i:>{label_w}} " + "".join(cells).rstrip() + tail)
    lines.append(" " * label_w + f" j=0..{cols - 1}")
    if start is not None:
        path = " ".join(f"({i}, {format_fraction(x)})" for i, x in sorted(pts.items(), reverse=True))
        lines.append(f"trajectory: {path}")
    return "\n".join(lines) + "\n"


def render_svg(rows: int, cols: int, start=None) -> str:
    """SVG with one filled circle per lattice dot and the boundary as a polyline.

    Coordinates are scaled by 3**rows so every crossing column, whose
    denominator is a power of 3 below that, lands on an exact integer.
    """
    _check_size(rows, cols)
    unit = 3**rows
    r = max(unit // 8, 1)
    width = (cols + 1) * unit
    height = (rows + 1) * unit

    def y_of(i):
        return (rows - i) * unit + unit // 2

    def x_of(col: Fraction):
        scaled = col * unit
        assert scaled.denominator == 1
        return scaled.numerator + unit // 2

    svg = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        version="1.1",
        viewBox=f"0 0 {width} {height}",
        width=f"{(cols + 1) * 16}",
        height=f"{(rows + 1) * 16}",
    )
    dots = ET.SubElement(svg, "g", {"class": "dots", "fill": "#888"})
    for i in range(rows, 0, -1):
        for j in range(cols):
            ET.SubElement(dots, "circle", cx=str(x_of(Fraction(j))), cy=str(y_of(i)), r=str(r))
    pts = [(i, x) for i, x in crossings(rows, start) if x <= cols]
    if pts:
        ET.SubElement(
            svg, "polyline",
            {"class": "boundary", "fill": "none", "stroke": "#c00",
             "stroke-width": str(max(unit // 20, 1)),
             "points": " ".join(f"{x_of(x)},{y_of(i)}" for i, x in pts)},
        )
        marks = ET.SubElement(svg, "g", {"class": "crossings"})
        for i, x in pts:
            integral = x.denominator == 1
            ET.SubElement(
                marks, "circle",
                {"class": "on-dot" if integral else "between-dots",
                 "cx": str(x_of(x)), "cy": str(y_of(i)), "r": str(r),
                 "fill": "#c00" if integral else "none", "stroke": "#c00",
                 "data-row": str(i), "data-col": format_fraction(x)},
            )
    return ET.tostring(svg, encoding="unicode") + "\n"
