"""Edge-colourings of cliques avoiding a forbidden colour pattern."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    Colouring,
    ColourClass,
    Palette,
    ParseError,
    canonical_form,
    colour_classes,
    colour_of,
    new_colouring,
    parse,
    serialize,
    used_colours,
)
from .detect import count_copies, find_copy, find_palette_copy, is_free  # noqa: E402
from .homog import alpha, h_from_s_cliques, homogeneous_number, s_clique  # noqa: E402

__all__ = [
    "Colouring",
    "ColourClass",
    "Palette",
    "ParseError",
    "alpha",
    "canonical_form",
    "colour_classes",
    "colour_of",
    "count_copies",
    "find_copy",
    "find_palette_copy",
    "h_from_s_cliques",
    "homogeneous_number",
    "is_free",
    "new_colouring",
    "parse",
    "s_clique",
    "serialize",
    "used_colours",
]
