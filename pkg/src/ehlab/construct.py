"""Colouring constructions: lexicographic products, colour merging, random
recolouring with an extra colour, the Gallai product on m^3 vertices and the
three-colouring over a K4-free host graph.

Randomness comes from :mod:`ehlab.rng`; edge e (row-major index) of a
construction draws output number e of a stream keyed by (seed, purpose), so
results do not depend on iteration order or platform.
"""

from __future__ import annotations

from typing import Sequence

from . import rng
from .core import Colouring, monochromatic, num_pairs, pairs
from .detect import find_copy
from .homog import alpha_size

RAINBOW_TRIANGLE = Colouring(3, 3, (1, 2, 3))


def lex_product(outer: Colouring, inner: Colouring) -> Colouring:
    """Blow up every vertex of `outer` into a copy of `inner`.

    Blob i occupies vertices ``i*y .. i*y + y - 1`` (y = inner.n); vertex
    ``i*y + a`` is copy a of inner inside blob i. Edges between blobs i and j
    take outer's colour of ij.
    """
    if outer.s != inner.s:
        raise ValueError(f"palette mismatch: outer has s={outer.s}, inner has s={inner.s}")
    y = inner.n
    om, im = outer.matrix, inner.matrix

    def colour(u: int, v: int) -> int:
        bu, bv = divmod(u, y), divmod(v, y)
        if bu[0] == bv[0]:
            return im[bu[1]][bv[1]]
        return om[bu[0]][bv[0]]

    return Colouring.from_function(outer.n * y, outer.s, colour)


def product_of(factors: Sequence[Colouring]) -> Colouring:
    """c1 x (c2 x (... x ck)); vertex (a1, ..., ak) is numbered in mixed radix, a1 most significant."""
    if not factors:
        raise ValueError("need at least one factor")
    result = factors[-1]
    for f in reversed(factors[:-1]):
        result = lex_product(f, result)
    return result


def blob_coordinates(v: int, sizes: Sequence[int]) -> tuple[int, ...]:
    """Factor coordinates of product vertex v for factors of the given sizes."""
    coords = []
    for size in reversed(sizes):
        v, a = divmod(v, size)
        coords.append(a)
    return tuple(reversed(coords))


def merge_colours(c: Colouring, from_colour: int, to_colour: int) -> Colouring:
    for col in (from_colour, to_colour):
        if not 1 <= col <= c.s:
            raise ValueError(f"colour {col} outside 1..{c.s}")
    if from_colour == to_colour:
        raise ValueError("from_colour and to_colour must differ")
    return Colouring(c.n, c.s, tuple(to_colour if x == from_colour else x for x in c.colours))


def recolour_extra(c: Colouring, p: float = 0.5, seed: int = 0) -> Colouring:
    """Move each edge to the new colour s+1 independently with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    key = rng.derive(seed, "recolour-extra")
    extra = c.s + 1
    return Colouring(
        c.n,
        extra,
        tuple(extra if rng.edge_unit(key, e) < p else col for e, col in enumerate(c.colours)),
    )


def random_colouring(n: int, colour_list: Sequence[int], seed: int = 0, s: int | None = None) -> Colouring:
    """Uniform i.i.d. edge colours drawn from `colour_list`; palette defaults to max(colour_list)."""
    choices = list(colour_list)
    if not choices:
        raise ValueError("colour_list must be nonempty")
    if s is None:
        s = max(choices)
    key = rng.derive(seed, "random-colouring")
    k = len(choices)
    return Colouring(n, s, tuple(choices[rng.edge_below(key, e, k)] for e in range(num_pairs(n))))


def restricted_h(c: Colouring, colours: Sequence[int]) -> int:
    """Homogeneous number counting only the listed colours (other colours must be unused)."""
    return max(alpha_size(c.class_adj[col - 1]) for col in colours)


def best_random_colouring(
    n: int, colours: Sequence[int], s: int, seed: int, trials: int, tag=0
) -> tuple[Colouring, int, int]:
    """Best of `trials` seeded random colourings, minimizing restricted h.

    Returns (colouring, h, trial index); ties keep the smallest trial index.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    best = None
    for t in range(trials):
        c = random_colouring(n, colours, rng.derive(seed, "best-of", tag, t), s=s)
        h = restricted_h(c, colours)
        if best is None or (h, t) < (best[1], best[2]):
            best = (c, h, t)
    return best


def gallai_factors(m: int, seed: int = 0, trials: int = 20) -> list[Colouring]:
    """Factors c_1, c_2, c_3 on m vertices; c_i uses the colours {1,2,3,4} minus i."""
    if m < 2:
        raise ValueError("blob size m must be at least 2")
    factors = []
    for i in (1, 2, 3):
        colours = [col for col in (1, 2, 3, 4) if col != i]
        c, _, _ = best_random_colouring(m, colours, 4, seed, trials, tag=i)
        factors.append(c)
    return factors


def gallai_product_c4(m: int, seed: int = 0, trials: int = 20) -> Colouring:
    """c_1 x (c_2 x c_3) on m^3 vertices, free of the rainbow triangle in colours 1, 2, 3."""
    c = product_of(gallai_factors(m, seed, trials))
    if find_copy(c, RAINBOW_TRIANGLE) is not None:
        raise RuntimeError("Gallai product contains a rainbow triangle")
    return c


def k4_free_graph(n: int, seed: int = 0) -> list[int]:
    """Maximal K4-free graph by random greedy edge insertion (bitmask rows)."""
    order = list(pairs(n))
    rng.stream(seed, "k4-free-order").shuffle(order)
    adj = [0] * n
    for u, v in order:
        common = adj[u] & adj[v]
        closes_k4 = False
        w_mask = common
        while w_mask:
            low = w_mask & -w_mask
            w_mask ^= low
            if adj[low.bit_length() - 1] & common:
                closes_k4 = True
                break
        if not closes_k4:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return adj


def k4_free_host_colouring(n: int, seed: int = 0) -> Colouring:
    """Colour a random K4-free graph H: its edges get 1 or 2 by a fair coin, non-edges get 3."""
    if n < 4:
        raise ValueError("n must be at least 4")
    adj = k4_free_graph(n, seed)
    key = rng.derive(seed, "k4-host-colour")
    colours = []
    for e, (u, v) in enumerate(pairs(n)):
        if adj[u] >> v & 1:
            colours.append(1 + rng.edge_below(key, e, 2))
        else:
            colours.append(3)
    return Colouring(n, 3, tuple(colours))


def host_graph(c: Colouring, colours: Sequence[int] = (1, 2)) -> list[int]:
    """Union of the given colour classes as bitmask rows."""
    adj = [0] * c.n
    for col in colours:
        for v, row in enumerate(c.class_adj[col - 1]):
            adj[v] |= row
    return adj


def monochromatic_free(n: int, s: int, pattern: Colouring) -> Colouring:
    """A monochromatic colouring of K_n avoiding `pattern` (exists unless s == 1 and the pattern is monochromatic 1)."""
    used = set(pattern.colours)
    for col in range(1, s + 1):
        if used != {col}:
            return monochromatic(n, s, col)
    raise ValueError("every monochromatic colouring contains the pattern")
