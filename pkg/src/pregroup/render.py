"""
Plain-text drawings of link diagrams.

The word is printed on one line, grouped by item when a bracketing is given.
Contraction links hang below it as ``|____|`` brackets, inner links closest to
the word; expansion links sit above it as lids. A final line marks residual
positions with ``^``::

    ( d_pt n^l ) ( n c1^l n_p^l ) ( n_p ) ( c1 )
      ^     |_____|   |      |_______|        |
                      |________________________|
"""

from __future__ import annotations

from typing import Sequence

from .algebra import PregroupWord
from .reduction import CONTRACTION, EXPANSION, Link, LinkDiagram


def _layout(word: PregroupWord, groups: Sequence[tuple[int, int]] | None) -> tuple[str, list[int]]:
    """The word's text line and the column under the middle of each term."""
    parts: list[str] = []
    cols: list[int] = []
    width = 0

    def emit(text: str) -> None:
        nonlocal width
        if parts:
            parts.append(" ")
            width += 1
        parts.append(text)
        width += len(text)

    starts = {a for a, _ in groups} if groups else set()
    ends = {b for _, b in groups} if groups else set()
    for p, term in enumerate(word):
        if p in starts:
            emit("(")
        text = str(term)
        emit(text)
        cols.append(width - len(text) + (len(text) - 1) // 2)
        if p + 1 in ends:
            emit(")")
    if groups:
        for a, b in groups:
            if a == b:  # an item whose image is 1
                emit("( )")
    return "".join(parts), cols


def _heights(links: Sequence[Link]) -> dict[Link, int]:
    """0 for innermost links, otherwise one more than the tallest link nested inside."""
    heights: dict[Link, int] = {}
    for link in sorted(links, key=lambda l: l.right_pos - l.left_pos):
        inner = [
            heights[o]
            for o in heights
            if link.left_pos < o.left_pos and o.right_pos < link.right_pos
        ]
        heights[link] = 1 + max(inner) if inner else 0
    return heights


def _rows(links: Sequence[Link], cols: list[int], width: int) -> list[str]:
    heights = _heights(links)
    top = max(heights.values(), default=-1)
    rows = []
    for r in range(top + 1):
        row = [" "] * width
        for link, h in heights.items():
            a, b = cols[link.left_pos], cols[link.right_pos]
            if h >= r:
                row[a] = row[b] = "|"
            if h == r:
                for c in range(a + 1, b):
                    row[c] = "_"
        rows.append("".join(row).rstrip())
    return rows


def render_diagram(
    diagram: LinkDiagram, groups: Sequence[tuple[int, int]] | None = None
) -> str:
    """Draw ``diagram``; ``groups`` are half-open item spans for the parentheses."""
    line, cols = _layout(diagram.word, groups)
    width = len(line) + 1
    below = [l for l in diagram.links if l.kind == CONTRACTION]
    above = [l for l in diagram.links if l.kind == EXPANSION]

    out: list[str] = []
    if above:
        out.extend(_lid_rows(above, cols, width))
    out.append(line)
    rows = _rows(below, cols, width)
    if diagram.residuals:
        marks = [" "] * width
        for p in diagram.residuals:
            marks[cols[p]] = "^"
        first = list(rows[0]) if rows else []
        first += [" "] * (width - len(first))
        for c, ch in enumerate(marks):
            if ch == "^" and first[c] == " ":
                first[c] = "^"
        if rows:
            rows[0] = "".join(first).rstrip()
        else:
            rows = ["".join(first).rstrip()]
    out.extend(rows)
    return "\n".join(out)


def _lid_rows(links: Sequence[Link], cols: list[int], width: int) -> list[str]:
    """Rows above the word for expansion links, top row first."""
    heights = _heights(links)
    top = max(heights.values(), default=-1)
    rows = []
    # row r, counted upward from the word, carries the legs of every link of
    # height >= r; a link of height h gets its lid on row h + 1
    for r in range(top + 2):
        row = [" "] * width
        for link, h in heights.items():
            a, b = cols[link.left_pos], cols[link.right_pos]
            if h + 1 == r:
                for c in range(a, b + 1):
                    row[c] = "_"
            elif h >= r:
                row[a] = row[b] = "|"
        rows.append("".join(row).rstrip())
    return list(reversed(rows))
