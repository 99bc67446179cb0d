"""Generalized dragon curves, two dual ways, with mechanical law checking.

The package builds Heighway-style dragon curves from rotation-instruction
lists by two constructions (repeated unfolding and repeated creasing),
embeds them on the integer lattice, renders deterministic SVG, simulates
physical paper folding, and verifies every algebraic law the equivalence
of the two constructions rests on.
"""

from . import laws
from .construct import (
    InstructionList,
    Rot,
    classic_instructions,
    dragon_fold,
    dragon_unfold,
    fold_step,
    parse_instructions,
    stream_prefix,
    stream_turn_at,
    unfold_step,
)
from .core import (
    LR,
    RL,
    AlternatingStream,
    Curve,
    Turn,
    interleave,
    inv,
    curve_map_inv,
    parse_curve,
    curve_reverse,
)
from .geometry import (
    Heading,
    Path,
    Point,
    bounding_box,
    curve_to_path,
    distinct_undirected_edges,
    endpoint,
)
from .paperfold import Layer, StripStack, creases, fold_once, new_strip
from .render import CornerStyle, RenderOptions, path_to_svg

__version__ = "0.1.0"

__all__ = [
    "AlternatingStream",
    "CornerStyle",
    "Curve",
    "Heading",
    "InstructionList",
    "LR",
    "Layer",
    "Path",
    "Point",
    "RL",
    "RenderOptions",
    "Rot",
    "StripStack",
    "Turn",
    "bounding_box",
    "classic_instructions",
    "creases",
    "curve_to_path",
    "distinct_undirected_edges",
    "dragon_fold",
    "dragon_unfold",
    "endpoint",
    "fold_once",
    "fold_step",
    "interleave",
    "inv",
    "curve_map_inv",
    "laws",
    "new_strip",
    "parse_curve",
    "parse_instructions",
    "path_to_svg",
    "curve_reverse",
    "stream_prefix",
    "stream_turn_at",
    "unfold_step",
]
