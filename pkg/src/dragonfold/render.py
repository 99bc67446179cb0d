"""Byte-deterministic SVG rendering of lattice paths.

The whole path becomes a single polyline. Attribute order, number
formatting, and whitespace are fixed, so equal inputs always produce equal
bytes; the golden-file tests rely on this.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .geometry import Path, bounding_box


class CornerStyle(enum.Enum):
    MITER = "miter"
    ROUNDED = "round"


@dataclass(frozen=True)
class RenderOptions:
    scale: float = 10.0
    margin: float = 10.0
    stroke_width: float = 1.0
    corner_style: CornerStyle = CornerStyle.MITER

    def __post_init__(self) -> None:
        if self.scale <= 0:
            raise ValueError("scale must be positive")
        if self.margin < 0:
            raise ValueError("margin must not be negative")
        if self.stroke_width <= 0:
            raise ValueError("stroke width must be positive")


def _num(value: float) -> str:
    """Whole numbers render bare, everything else with exactly 3 decimals."""
    return str(int(value)) if value == int(value) else f"{value:.3f}"


def path_to_svg(path: Path, options: RenderOptions = RenderOptions()) -> str:
    """Render the path as a standalone SVG 1.1 document.

    Lattice coordinates are scaled, shifted by the margin, and flipped to
    screen orientation (y grows downward in SVG).
    """
    if not path:
        raise ValueError("cannot render an empty path")
    (min_x, min_y), (max_x, max_y) = bounding_box(path)
    scale = options.scale
    margin = options.margin
    width = (max_x - min_x) * scale + 2 * margin
    height = (max_y - min_y) * scale + 2 * margin
    points = " ".join(
        f"{_num(margin + (x - min_x) * scale)},{_num(margin + (max_y - y) * scale)}"
        for x, y in path
    )
    join = options.corner_style.value
    cap = "round" if options.corner_style is CornerStyle.ROUNDED else "square"
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_num(width)}" height="{_num(height)}" '
        f'viewBox="0 0 {_num(width)} {_num(height)}">\n'
        f'  <polyline points="{points}" fill="none" stroke="black" '
        f'stroke-width="{_num(options.stroke_width)}" '
        f'stroke-linejoin="{join}" stroke-linecap="{cap}"/>\n'
        "</svg>\n"
    )
