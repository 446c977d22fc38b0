"""Named forbidden patterns shipped with the package."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .core import Colouring, parse, read_colouring

RAINBOW3 = Colouring(3, 3, (1, 2, 3))
# triangle with two edges of colour 1 and one of colour 2
TWO_ONE = Colouring(3, 2, (1, 1, 2))
# K4 whose colour-1 edges form the path 0-1-2-3 and colour-2 edges the path 2-0-3-1
DOUBLE_P4 = Colouring(4, 2, (1, 2, 2, 1, 2, 1))


def edge(colour: int) -> Colouring:
    return Colouring(2, colour, (colour,))


BUNDLED = {
    "rainbow3": RAINBOW3,
    "twoone": TWO_ONE,
    "doubleP4": DOUBLE_P4,
    **{f"edge_{i}": edge(i) for i in range(1, 5)},
}


def bundled_patterns() -> dict[str, Path]:
    """Name -> path of every pattern file in the package's patterns directory."""
    root = resources.files("ehlab") / "patterns"
    return {p.name[: -len(".ehc")]: Path(str(p)) for p in root.iterdir() if p.name.endswith(".ehc")}


def load_pattern(name_or_path: str) -> Colouring:
    """Read a pattern file, falling back to a bundled pattern name (with or without .ehc)."""
    path = Path(name_or_path)
    if path.is_file():
        return read_colouring(path)
    name = path.name[:-4] if path.name.endswith(".ehc") else path.name
    if name in BUNDLED:
        text = (resources.files("ehlab") / "patterns" / f"{name}.ehc").read_text(encoding="utf-8")
        return parse(text)
    raise FileNotFoundError(f"no pattern file or bundled pattern named {name_or_path!r}")
