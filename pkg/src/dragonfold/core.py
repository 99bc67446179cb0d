"""Turn alphabet, curves, and the alternating-stream interleave algebra.

A curve is a plain string over the alphabet "LR", one character per turn:
'L' turns anticlockwise, 'R' clockwise. The string is simultaneously the
text encoding used by the CLI and the in-memory representation, which gives
constant-time positional access and lets the bulk operations run at C speed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

Curve = str

_INVERT_TABLE = str.maketrans("LR", "RL")


class Turn(str, enum.Enum):
    """One turn of the curve. Compares equal to its single-letter code."""

    L = "L"
    R = "R"


def inv(turn: Turn | str) -> Turn:
    """Swap L and R."""
    if turn == "L":
        return Turn.R
    if turn == "R":
        return Turn.L
    raise ValueError(f"not a turn: {turn!r}")


def curve_map_inv(xs: Curve) -> Curve:
    """Swap L and R at every position."""
    return xs.translate(_INVERT_TABLE)


def curve_reverse(xs: Curve) -> Curve:
    """The same turns in the opposite order."""
    return xs[::-1]


def parse_curve(text: str) -> Curve:
    """Validate the file encoding of a curve.

    Leading and trailing whitespace (including the terminating newline) is
    dropped; everything in between must be 'L' or 'R'.
    """
    body = text.strip()
    for i, ch in enumerate(body):
        if ch not in ("L", "R"):
            raise ValueError(f"invalid turn {ch!r} at position {i}")
    return body


@dataclass(frozen=True)
class AlternatingStream:
    """Infinite stream that alternates a turn with its inverse.

    The whole stream is determined by its first element: element i is the
    head when i is even and the inverted head when i is odd. Dropping one
    element flips the phase; dropping two gives the same stream back.
    """

    head: Turn

    def element(self, i: int) -> Turn:
        if i < 0:
            raise ValueError("stream positions start at 0")
        return self.head if i % 2 == 0 else inv(self.head)

    def tail(self) -> "AlternatingStream":
        return AlternatingStream(inv(self.head))

    def map_inv(self) -> "AlternatingStream":
        """Invert every element. On an alternating stream this is the same
        stream shifted by one, so it coincides with tail()."""
        return AlternatingStream(inv(self.head))

    def prefix(self, n: int) -> Curve:
        """First n elements as a curve string."""
        if n < 0:
            raise ValueError("cannot take a negative prefix")
        a = self.head.value
        b = inv(self.head).value
        return ((a + b) * (n // 2 + 1))[:n]


LR = AlternatingStream(Turn.L)
RL = AlternatingStream(Turn.R)


def interleave(stream: AlternatingStream, xs: Curve) -> Curve:
    """Alternate stream elements with curve turns, starting and ending with
    the stream.

    Stream elements occupy the even positions of the result and xs the odd
    ones, so the output has length 2*len(xs) + 1. With the empty curve the
    result is the single head element.
    """
    n = len(xs)
    out = [""] * (2 * n + 1)
    out[0::2] = stream.prefix(n + 1)
    out[1::2] = xs
    return "".join(out)
