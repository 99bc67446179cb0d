"""The two dual constructions of generalized dragon curves.

Both consume a list of rotation instructions ('C' clockwise, 'A'
anticlockwise) and produce a curve. Unfolding replays the instructions
last-first, doubling the curve around a pivot turn each round; folding
replays them first-first, creasing every existing segment by interleaving
an alternating stream. The law checkers confirm the two agree on every
input, and the infinite-stream helpers exploit that agreement.
"""

from __future__ import annotations

import enum

from .core import LR, RL, Curve, Turn, interleave, curve_map_inv, curve_reverse

InstructionList = str


class Rot(str, enum.Enum):
    """One construction instruction: a quarter-turn sense."""

    C = "C"
    A = "A"


def parse_instructions(text: str) -> InstructionList:
    """Validate the text encoding of an instruction list.

    Accepts 'C'/'A' in either case, returns them uppercased.
    """
    rs = text.upper()
    for i, ch in enumerate(rs):
        if ch not in ("C", "A"):
            raise ValueError(f"invalid instruction {text[i]!r} at position {i}")
    return rs


def _pivot(r: Rot | str) -> str:
    if r == "C":
        return "L"
    if r == "A":
        return "R"
    raise ValueError(f"not an instruction: {r!r}")


def unfold_step(r: Rot | str, ts: Curve) -> Curve:
    """One copy-and-rotate round of the unfolding method.

    The new curve continues past a pivot turn into a rotated copy of
    itself: the old turns walked backwards with each one inverted.
    """
    return ts + _pivot(r) + curve_map_inv(curve_reverse(ts))


def fold_step(ts: Curve, r: Rot | str) -> Curve:
    """One crease round of the folding method.

    Every segment of the current curve gains a new turn, alternating in
    sense; a clockwise instruction starts the alternation on L, an
    anticlockwise one on R.
    """
    if r == "C":
        return interleave(LR, ts)
    if r == "A":
        return interleave(RL, ts)
    raise ValueError(f"not an instruction: {r!r}")


def dragon_unfold(rs: InstructionList) -> Curve:
    """Build a curve by unfolding: the last instruction is applied first."""
    ts: Curve = ""
    for r in reversed(rs):
        ts = unfold_step(r, ts)
    return ts


def dragon_fold(rs: InstructionList) -> Curve:
    """Build a curve by folding: the first instruction is applied first."""
    ts: Curve = ""
    for r in rs:
        ts = fold_step(ts, r)
    return ts


def classic_instructions(n: int) -> InstructionList:
    """n clockwise instructions; both constructions then produce the
    classic order-n dragon curve."""
    if n < 0:
        raise ValueError("order must not be negative")
    return "C" * n


def stream_prefix(m: int) -> Curve:
    """First m turns of the infinite dragon curve.

    Each classic curve is a prefix of the next, so the smallest order whose
    curve has at least m turns (2**k - 1 >= m, i.e. k = m.bit_length())
    already determines the answer.
    """
    if m < 0:
        raise ValueError("cannot take a negative prefix")
    return dragon_fold(classic_instructions(m.bit_length()))[:m]


def stream_turn_at(i: int) -> Turn:
    """Turn at 1-based position i of the infinite dragon curve, in O(log i).

    The curve interleaves an L,R,L,R,... stream with itself, so even
    positions defer to position i/2 and odd positions read the alternating
    stream directly: L when i % 4 == 1, R when i % 4 == 3.
    """
    if i < 1:
        raise ValueError("stream positions start at 1")
    while i % 2 == 0:
        i //= 2
    return Turn.L if i % 4 == 1 else Turn.R
