"""Integer turtle embedding of curves as unit-step lattice paths."""

from __future__ import annotations

import enum
from typing import NamedTuple


class Point(NamedTuple):
    x: int
    y: int


class Heading(enum.Enum):
    """Axis-aligned facing direction; y grows upward."""

    EAST = (1, 0)
    NORTH = (0, 1)
    WEST = (-1, 0)
    SOUTH = (0, -1)

    def left(self) -> "Heading":
        dx, dy = self.value
        return Heading((-dy, dx))

    def right(self) -> "Heading":
        dx, dy = self.value
        return Heading((dy, -dx))


Path = list[Point]


def curve_to_path(xs: str, start: Point = Point(0, 0), heading: Heading = Heading.EAST) -> Path:
    """Walk the curve on the integer lattice.

    The turtle draws one unit segment, then at each turn rotates 90 degrees
    (L anticlockwise, R clockwise) and draws the next, so a curve of t turns
    yields t + 1 segments and t + 2 points.
    """
    x, y = start
    dx, dy = heading.value
    points = [Point(x, y)]
    append = points.append
    for turn in xs:
        x += dx
        y += dy
        append(Point(x, y))
        if turn == "L":
            dx, dy = -dy, dx
        elif turn == "R":
            dx, dy = dy, -dx
        else:
            raise ValueError(f"not a turn: {turn!r}")
    append(Point(x + dx, y + dy))
    return points


def bounding_box(path: Path) -> tuple[Point, Point]:
    """Smallest axis-aligned box containing the path, as (min, max) corners."""
    if not path:
        raise ValueError("empty path has no bounding box")
    xs = [p[0] for p in path]
    ys = [p[1] for p in path]
    return Point(min(xs), min(ys)), Point(max(xs), max(ys))


def endpoint(path: Path) -> Point:
    if not path:
        raise ValueError("empty path has no endpoint")
    return path[-1]


def distinct_undirected_edges(path: Path) -> bool:
    """True when no unit segment is traced twice, in either direction.

    Vertices may repeat (the dragon touches itself at corners); edges may not.
    """
    seen = set()
    for a, b in zip(path, path[1:]):
        edge = (a, b) if a <= b else (b, a)
        if edge in seen:
            return False
        seen.add(edge)
    return True
