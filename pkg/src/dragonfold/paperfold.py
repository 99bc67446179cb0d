"""Physical simulation of repeatedly folding a paper strip in half.

The strip starts as 2**n unit cells in a single layer. Each fold brings
the right half over onto the left half: left-half layers keep their maps
and stay at the bottom, right-half layers are reflected and land on top in
reversed stacking order. After n folds the stack is one cell wide and 2**n
layers tall; reading off the crease between each pair of neighbouring
original cells yields a curve. The law suite checks that this curve is
exactly the classic dragon curve, giving a third, physically-motivated
construction that is independent of the string algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

# Cap on fold count: 2**30 cells is already far beyond anything the tests
# or CLI need, and keeps accidental huge allocations impossible.
MAX_FOLDS = 30


@dataclass(frozen=True)
class Layer:
    """One thickness of paper inside a folded stack.

    The layer is an affine map from physical position to the original
    strip: the unit cell at physical [x, x+1) came from original cell
    offset + x when direction is +1, and from offset - x - 1 when the
    layer lies flipped (direction -1).
    """

    offset: int
    direction: int

    def cell(self, x: int) -> int:
        """Original index of the cell at physical position x."""
        if self.direction == 1:
            return self.offset + x
        return self.offset - x - 1


@dataclass(frozen=True)
class StripStack:
    """A folded strip: layers listed bottom to top, all equally wide."""

    width: int
    layers: tuple[Layer, ...]


def new_strip(n: int) -> StripStack:
    """A flat strip of 2**n cells, ready to be folded n times."""
    if not 0 <= n <= MAX_FOLDS:
        raise ValueError(f"fold count must be between 0 and {MAX_FOLDS}")
    return StripStack(2**n, (Layer(0, 1),))


def fold_once(stack: StripStack) -> StripStack:
    """Fold the right half of the stack over onto the left half."""
    if stack.width % 2:
        raise ValueError("cannot fold a strip of odd width")
    # Reflecting x -> width - x about the fold line sends a layer mapping
    # x -> offset + d*x to x -> (offset + d*width) - d*x, flipped.
    flipped = tuple(
        Layer(layer.offset + layer.direction * stack.width, -layer.direction)
        for layer in reversed(stack.layers)
    )
    return StripStack(stack.width // 2, stack.layers + flipped)


def creases(n: int) -> str:
    """Fold a 2**n-cell strip n times and read the creases along it.

    After the final fold every layer is one cell wide, so each original
    cell has a definite height in the stack and a definite orientation.
    Walking the unfolded strip from cell k-1 into cell k crosses the crease
    at boundary k; that crease turns left exactly when the walk climbs the
    stack on the right edge of the paper or descends it on the left edge.
    """
    stack = new_strip(n)
    for _ in range(n):
        stack = fold_once(stack)
    height = {}
    direction = {}
    for h, layer in enumerate(stack.layers):
        cell = layer.cell(0)
        height[cell] = h
        direction[cell] = layer.direction
    out = []
    for k in range(1, 2**n):
        climbs = height[k - 1] < height[k]
        on_left_edge = direction[k - 1] == -1
        out.append("L" if climbs != on_left_edge else "R")
    return "".join(out)
