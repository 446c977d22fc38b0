"""Homogeneous numbers, colour-restricted cliques, and the cograph fast path.

Graphs are passed around as sequences of neighbour bitmasks (``adj[v]`` has
bit ``w`` set iff vw is an edge); a :class:`ColourClass` works anywhere such a
sequence is expected.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence, Union

from .core import Colouring, ColourClass

Graph = Union[Sequence[int], ColourClass]


def _rows(g: Graph) -> Sequence[int]:
    return g.adj if isinstance(g, ColourClass) else g


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _clique_cover_size(adj: Sequence[int], P: int) -> int:
    """Number of cliques in a greedy clique cover of G[P]; bounds alpha(G[P]) from above."""
    count = 0
    while P:
        low = P & -P
        P ^= low
        cand = P & adj[low.bit_length() - 1]
        while cand:
            w = cand & -cand
            P ^= w
            cand &= adj[w.bit_length() - 1] & ~w
        count += 1
    return count


def _mis(adj: Sequence[int], P: int, target: Optional[int] = None) -> int:
    """Maximum independent set of G[P] as a bitmask.

    Branch and bound: branch on a vertex of highest degree, bound by a greedy
    clique cover. With `target`, stop as soon as a set of that size is found.
    """
    best = [0, 0]  # size, mask
    stop = [False]

    def rec(P: int, chosen: int, size: int):
        # vertices of degree <= 1 in G[P] always belong to some maximum set
        changed = True
        while changed and P:
            changed = False
            for v in _bits(P):
                if not P >> v & 1:
                    continue
                nb = adj[v] & P
                if nb & (nb - 1) == 0:
                    chosen |= 1 << v
                    size += 1
                    P &= ~(nb | (1 << v))
                    changed = True
        if not P:
            if size > best[0]:
                best[0], best[1] = size, chosen
                if target is not None and size >= target:
                    stop[0] = True
            return
        if size + _clique_cover_size(adj, P) <= best[0]:
            return
        v, deg = -1, -1
        for w in _bits(P):
            d = (adj[w] & P).bit_count()
            if d > deg:
                v, deg = w, d
        bit = 1 << v
        rec(P & ~(adj[v] | bit), chosen | bit, size + 1)
        if stop[0]:
            return
        rec(P & ~bit, chosen, size)

    if target is not None and target <= 0:
        return 0
    rec(P, 0, 0)
    return best[1]


def max_independent_set(g: Graph, within: Optional[int] = None) -> tuple[int, ...]:
    """Lexicographically smallest maximum independent set (sorted vertex tuple)."""
    adj = _rows(g)
    n = len(adj)
    P = (1 << n) - 1 if within is None else within
    current = _mis(adj, P)
    size = current.bit_count()
    chosen = 0
    need = size
    for v in range(n):
        if not P >> v & 1 or need == 0:
            continue
        bit = 1 << v
        rest = P & ~(adj[v] | bit)
        if current >> v & 1:
            chosen |= bit
            P = rest
            need -= 1
            continue
        found = _mis(adj, rest, target=need - 1)
        if found.bit_count() >= need - 1:
            chosen |= bit
            P = rest
            need -= 1
            current = chosen | found
        else:
            P &= ~bit
    return tuple(_bits(chosen))


def alpha(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Independence number with a lexicographically smallest witness."""
    w = max_independent_set(g)
    return len(w), w


def alpha_size(g: Graph) -> int:
    adj = _rows(g)
    return _mis(adj, (1 << len(adj)) - 1).bit_count()


def clique_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    return alpha(complement(_rows(g)))


def complement(adj: Sequence[int]) -> list[int]:
    n = len(adj)
    full = (1 << n) - 1
    return [full & ~adj[v] & ~(1 << v) for v in range(n)]


def is_independent(adj: Sequence[int], vertices: Iterable[int]) -> bool:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return all(adj[v] & mask == 0 for v in _bits(mask))


# ---------------------------------------------------------------------------
# homogeneous numbers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HomReport:
    value: int
    witness: tuple[int, ...]
    missing_colour: int
    alphas: tuple[int, ...] = ()


@dataclass(frozen=True)
class ColourSetClique:
    colours: tuple[int, ...]
    value: int
    witness: tuple[int, ...]


def homogeneous_number(c: Colouring) -> HomReport:
    """h(c): the largest alpha over the colour classes; ties go to the smaller colour."""
    alphas = []
    best = None
    for i, rows in enumerate(c.class_adj):
        size = alpha_size(rows)
        alphas.append(size)
        if best is None or size > alphas[best]:
            best = i
    witness = max_independent_set(c.class_adj[best])
    return HomReport(alphas[best], witness, best + 1, tuple(alphas))


def homogeneous_value(c: Colouring) -> int:
    return max(alpha_size(rows) for rows in c.class_adj)


def _outside_graph(c: Colouring, colours: Iterable[int]) -> list[int]:
    keep = set(colours)
    adj = [0] * c.n
    for i, rows in enumerate(c.class_adj):
        if i + 1 not in keep:
            for v in range(c.n):
                adj[v] |= rows[v]
    return adj


def _s_clique(c: Colouring, colours: tuple[int, ...]) -> ColourSetClique:
    witness = max_independent_set(_outside_graph(c, colours))
    return ColourSetClique(colours, len(witness), witness)


def s_clique(c: Colouring, colours: Iterable[int]) -> ColourSetClique:
    """Largest vertex set whose induced edges all have colours in `colours`."""
    I = tuple(sorted(set(colours)))
    if not I:
        raise ValueError("colour set must be nonempty")
    if I[0] < 1 or I[-1] > c.s:
        raise ValueError(f"colours must lie in 1..{c.s}")
    return _s_clique(c, I)


def h_from_s_cliques(c: Colouring) -> HomReport:
    """h(c) as the maximum of S_I over colour sets I missing exactly one colour."""
    best = None
    for missing in range(1, c.s + 1):
        I = tuple(col for col in range(1, c.s + 1) if col != missing)
        res = _s_clique(c, I)
        if best is None or res.value > best[0].value:
            best = (res, missing)
    res, missing = best
    return HomReport(res.value, res.witness, missing)


# ---------------------------------------------------------------------------
# cographs
# ---------------------------------------------------------------------------


def is_p4_free(g: Graph) -> bool:
    """No induced path a-b-c-d, searched from every middle edge bc."""
    adj = _rows(g)
    n = len(adj)
    for b in range(n):
        for c in _bits(adj[b] & ~((1 << (b + 1)) - 1)):
            bb, cb = 1 << b, 1 << c
            ends_b = adj[b] & ~adj[c] & ~cb
            ends_c = adj[c] & ~adj[b] & ~bb
            if not ends_b or not ends_c:
                continue
            for a in _bits(ends_b):
                if ends_c & ~adj[a]:
                    return False
    return True


def find_induced_p4(g: Graph) -> Optional[tuple[int, int, int, int]]:
    adj = _rows(g)
    for b in range(len(adj)):
        for c in _bits(adj[b]):
            ends_b = adj[b] & ~adj[c] & ~(1 << c)
            ends_c = adj[c] & ~adj[b] & ~(1 << b)
            for a in _bits(ends_b):
                rest = ends_c & ~adj[a]
                if rest:
                    return (a, b, c, (rest & -rest).bit_length() - 1)
    return None


def _components(adj: Sequence[int], mask: int) -> list[int]:
    comps = []
    while mask:
        seed = mask & -mask
        comp = seed
        frontier = seed
        while frontier:
            nb = 0
            for v in _bits(frontier):
                nb |= adj[v]
            frontier = nb & mask & ~comp
            comp |= frontier
        comps.append(comp)
        mask &= ~comp
    return comps


def cotree(g: Graph, mask: Optional[int] = None):
    """Cotree of a cograph as nested tuples.

    Nodes are ``("leaf", v)``, ``("union", children)`` or ``("join", children)``.
    Raises ValueError if some induced subgraph is connected with a connected
    complement, i.e. the graph contains an induced P4.
    """
    adj = list(_rows(g))
    if mask is None:
        mask = (1 << len(adj)) - 1
    comp = complement(adj)

    def build(m: int):
        if m & (m - 1) == 0:
            return ("leaf", m.bit_length() - 1)
        parts = _components(adj, m)
        if len(parts) > 1:
            return ("union", tuple(build(p) for p in parts))
        parts = _components(comp, m)
        if len(parts) > 1:
            return ("join", tuple(build(p) for p in parts))
        raise ValueError("not a cograph: found a part that is connected and co-connected")

    if not mask:
        raise ValueError("empty graph has no cotree")
    return build(mask)


def cotree_alpha_omega(tree) -> tuple[int, int]:
    kind, payload = tree
    if kind == "leaf":
        return 1, 1
    vals = [cotree_alpha_omega(ch) for ch in payload]
    if kind == "union":
        return sum(a for a, _ in vals), max(w for _, w in vals)
    return max(a for a, _ in vals), sum(w for _, w in vals)


def cograph_alpha_omega(g: Graph) -> tuple[int, int]:
    """(alpha, omega) of a cograph from its cotree.

    Disjoint union adds independence numbers and takes the larger clique; join
    does the reverse.
    """
    return cotree_alpha_omega(cotree(g))


def brute_alpha(adj: Sequence[int]) -> int:
    """Exhaustive independence number; reference for small graphs."""
    n = len(adj)
    for r in range(n, 0, -1):
        for sub in combinations(range(n), r):
            if is_independent(adj, sub):
                return r
    return 0
