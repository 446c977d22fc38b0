"""Edge-coloured cliques.

A :class:`Colouring` is an s-edge-colouring of K_n on vertices ``0..n-1``.
Colours are 1-based and never permuted by any isomorphism notion in this
package: two colourings are isomorphic only through a vertex bijection.

Edges are stored row-major over pairs ``(0,1), (0,2), ..., (0,n-1), (1,2), ...``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterable, Sequence

FORMAT_HEADER = "ehc 1"
CANON_MAX_N = 10


class ParseError(ValueError):
    pass


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


def pair_index(n: int, u: int, v: int) -> int:
    """Row-major position of the pair {u, v} (u != v)."""
    if u > v:
        u, v = v, u
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def pairs(n: int) -> Iterable[tuple[int, int]]:
    return combinations(range(n), 2)


@dataclass(frozen=True)
class ColourClass:
    """The graph of one colour, as per-vertex neighbour bitmasks."""

    colour: int
    adj: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in pairs(self.n) if self.adj[u] >> v & 1]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2


@dataclass(frozen=True)
class Colouring:
    n: int
    s: int
    colours: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or self.s < 1:
            raise ValueError(f"need n >= 1 and s >= 1, got n={self.n}, s={self.s}")
        colours = tuple(self.colours)
        object.__setattr__(self, "colours", colours)
        if len(colours) != num_pairs(self.n):
            raise ValueError(
                f"expected {num_pairs(self.n)} edge colours for n={self.n}, got {len(colours)}"
            )
        for col in colours:
            if not (isinstance(col, int) and 1 <= col <= self.s):
                raise ValueError(f"colour {col!r} outside 1..{self.s}")

    @classmethod
    def from_function(cls, n: int, s: int, f: Callable[[int, int], int]) -> Colouring:
        return cls(n, s, tuple(f(u, v) for u, v in pairs(n)))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]], s: int) -> Colouring:
        n = len(matrix)
        return cls(n, s, tuple(matrix[u][v] for u, v in pairs(n)))

    @cached_property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Symmetric n x n colour table with 0 on the diagonal."""
        n = self.n
        m = [[0] * n for _ in range(n)]
        for (u, v), col in zip(pairs(n), self.colours):
            m[u][v] = m[v][u] = col
        return tuple(tuple(row) for row in m)

    @cached_property
    def class_adj(self) -> tuple[tuple[int, ...], ...]:
        """class_adj[i-1][v] is the neighbour bitmask of v in colour i."""
        adj = [[0] * self.n for _ in range(self.s)]
        for (u, v), col in zip(pairs(self.n), self.colours):
            row = adj[col - 1]
            row[u] |= 1 << v
            row[v] |= 1 << u
        return tuple(tuple(r) for r in adj)

    def colour(self, u: int, v: int) -> int:
        return colour_of(self, u, v)

    @property
    def k(self) -> int:
        return self.n

    def restrict(self, vertices: Sequence[int]) -> Colouring:
        """Induced colouring on `vertices`, relabelled 0..len-1 in the given order."""
        m = self.matrix
        return Colouring.from_function(len(vertices), self.s, lambda a, b: m[vertices[a]][vertices[b]])

    def relabel(self, order: Sequence[int]) -> Colouring:
        """New vertex i is old vertex order[i]."""
        if sorted(order) != list(range(self.n)):
            raise ValueError("order must be a permutation of range(n)")
        return self.restrict(order)

    def with_palette(self, s: int) -> Colouring:
        return Colouring(self.n, s, self.colours)

    def histogram(self) -> tuple[int, ...]:
        counts = [0] * self.s
        for col in self.colours:
            counts[col - 1] += 1
        return tuple(counts)


# Patterns are colourings on k >= 2 vertices; the alias keeps signatures readable.
Pattern = Colouring


def check_pattern(pattern: Colouring) -> Colouring:
    if pattern.n < 2:
        raise ValueError("a pattern needs at least 2 vertices")
    return pattern


@dataclass(frozen=True)
class Palette:
    k: int
    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(self.counts))
        if self.k < 2:
            raise ValueError("palette clique size must be at least 2")
        if any(t < 0 for t in self.counts):
            raise ValueError("palette counts must be nonnegative")
        if sum(self.counts) != num_pairs(self.k):
            raise ValueError(
                f"palette counts sum to {sum(self.counts)}, expected {num_pairs(self.k)}"
            )


def new_colouring(n: int, s: int, edge_colour_list: Sequence[int]) -> Colouring:
    return Colouring(n, s, tuple(edge_colour_list))


def colour_of(c: Colouring, u: int, v: int) -> int:
    if u == v:
        raise ValueError("no loops: u == v")
    if not (0 <= u < c.n and 0 <= v < c.n):
        raise ValueError(f"vertex out of range 0..{c.n - 1}")
    return c.colours[pair_index(c.n, u, v)]


def colour_classes(c: Colouring) -> list[ColourClass]:
    return [ColourClass(i + 1, rows) for i, rows in enumerate(c.class_adj)]


def used_colours(c: Colouring) -> int:
    return len(set(c.colours))


def monochromatic(n: int, s: int, colour: int) -> Colouring:
    return Colouring(n, s, (colour,) * num_pairs(n))


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------


def _lexmin_order(m: Sequence[Sequence[int]], n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Vertex order minimizing the row-major edge string, and that string.

    Partition backtracking: position i is filled from the first cell, and the
    remaining cells are split by colour to the new vertex, which makes row i
    as small as possible. Only candidates achieving the minimal row are
    explored; twin vertices (transposition is an automorphism) are explored
    once.
    """
    best: list = [None, None]  # string, order

    def twins(u: int, v: int) -> bool:
        mu, mv = m[u], m[v]
        for w in range(n):
            if w != u and w != v and mu[w] != mv[w]:
                return False
        return True

    def rec(prefix: list, order: list, cells: list):
        if not cells:
            key = tuple(prefix)
            if best[0] is None or key < best[0]:
                best[0], best[1] = key, tuple(order)
            return
        first = cells[0]
        reps: list[int] = []
        for v in first:
            if not any(twins(v, r) for r in reps):
                reps.append(v)
        options = []
        for v in reps:
            mv = m[v]
            row: list[int] = []
            new_cells: list[list[int]] = []
            for cell in cells:
                members = [w for w in cell if w != v]
                if not members:
                    continue
                groups: dict[int, list[int]] = {}
                for w in members:
                    groups.setdefault(mv[w], []).append(w)
                for col in sorted(groups):
                    g = groups[col]
                    row.extend([col] * len(g))
                    new_cells.append(g)
            options.append((row, v, new_cells))
        min_row = min(o[0] for o in options)
        new_prefix = prefix + min_row
        if best[0] is not None:
            ref = list(best[0][: len(new_prefix)])
            if new_prefix > ref:
                return
        for row, v, new_cells in options:
            if row == min_row:
                rec(new_prefix, order + [v], new_cells)

    if n == 0:
        return (), ()
    rec([], [], [list(range(n))])
    return best[1], best[0]


def canonical_order(c: Colouring, max_n: int = CANON_MAX_N) -> tuple[int, ...]:
    """A vertex order whose relabelling is the canonical representative of c."""
    if c.n > max_n:
        raise ValueError(f"canonicalization capped at n <= {max_n}, got n={c.n}")
    order, _ = _lexmin_order(c.matrix, c.n)
    return order


def canonical_form(c: Colouring, max_n: int = CANON_MAX_N) -> bytes:
    """Lexicographically smallest row-major edge string over all vertex relabelings.

    Encoded as bytes ``[n, s, colours...]``; equal exactly for isomorphic colourings.
    """
    if c.n > max_n:
        raise ValueError(f"canonicalization capped at n <= {max_n}, got n={c.n}")
    if c.n > 255 or c.s > 255:
        raise ValueError("canonical form supports n, s <= 255")
    _, string = _lexmin_order(c.matrix, c.n)
    return bytes([c.n, c.s]) + bytes(string)


def canonical_colouring(c: Colouring, max_n: int = CANON_MAX_N) -> Colouring:
    return c.relabel(canonical_order(c, max_n))


def from_canonical_form(form: bytes) -> Colouring:
    return Colouring(form[0], form[1], tuple(form[2:]))


# ---------------------------------------------------------------------------
# ehc v1 text format
# ---------------------------------------------------------------------------


def serialize(c: Colouring) -> str:
    lines = [FORMAT_HEADER, f"{c.n} {c.s}"]
    m = c.matrix
    for u in range(c.n - 1):
        lines.append(" ".join(str(m[u][v]) for v in range(u + 1, c.n)))
    return "\n".join(lines) + "\n"


def parse(text: str) -> Colouring:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or lines[0] != FORMAT_HEADER:
        raise ParseError(f"missing header {FORMAT_HEADER!r}")
    if len(lines) < 2:
        raise ParseError("missing '<n> <s>' line")
    try:
        n, s = (int(x) for x in lines[1].split())
    except ValueError:
        raise ParseError(f"malformed size line {lines[1]!r}") from None
    if n < 1 or s < 1:
        raise ParseError("n and s must be positive")
    rows = lines[2:]
    if len(rows) != n - 1:
        raise ParseError(f"expected {n - 1} colour rows for n={n}, got {len(rows)}")
    colours: list[int] = []
    for i, row in enumerate(rows):
        try:
            entries = [int(x) for x in row.split()]
        except ValueError:
            raise ParseError(f"non-integer entry in row {i + 1}") from None
        if len(entries) != n - 1 - i:
            raise ParseError(f"row {i + 1} has {len(entries)} entries, expected {n - 1 - i}")
        colours.extend(entries)
    try:
        return Colouring(n, s, tuple(colours))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def read_colouring(path) -> Colouring:
    return parse(Path(path).read_text(encoding="utf-8"))


def write_colouring(path, c: Colouring) -> None:
    Path(path).write_text(serialize(c), encoding="utf-8")
