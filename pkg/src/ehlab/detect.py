"""Exact detection of pattern copies and forbidden palettes in a host colouring."""

from __future__ import annotations

from typing import Iterator, Optional, Sequence

from .core import Colouring, Palette, check_pattern


def is_embedding(host: Colouring, pattern: Colouring, mapping: Sequence[int]) -> bool:
    """True if `mapping` (pattern vertex -> host vertex) is injective and colour-preserving."""
    if len(mapping) != pattern.n or len(set(mapping)) != pattern.n:
        return False
    hm, pm = host.matrix, pattern.matrix
    k = pattern.n
    return all(hm[mapping[x]][mapping[y]] == pm[x][y] for x in range(k) for y in range(x + 1, k))


def _colour_degrees(c: Colouring) -> list[list[int]]:
    return [[row.bit_count() for row in cls] for cls in c.class_adj]


class _Matcher:
    """Backtracking embedder of one pattern into one host, over bitmask classes.

    `hadj` is the host's per-colour neighbour bitmasks (``class_adj``) and may
    be a mutable list that the caller updates between queries.
    """

    def __init__(self, hadj: Sequence[Sequence[int]], host_n: int, pattern: Colouring, filter_degrees: bool = True):
        check_pattern(pattern)
        if pattern.n > host_n:
            raise ValueError(f"pattern on {pattern.n} vertices is larger than host on {host_n}")
        self.k = pattern.n
        self.pm = pattern.matrix
        self.hadj = hadj
        self.possible = max(pattern.colours) <= len(hadj)
        full = (1 << host_n) - 1
        self.allowed = [full] * self.k
        if not (self.possible and filter_degrees):
            return
        pdeg = _colour_degrees(pattern)
        used = sorted(set(pattern.colours))
        for x in range(self.k):
            mask = 0
            for v in range(host_n):
                if all(hadj[col - 1][v].bit_count() >= pdeg[col - 1][x] for col in used):
                    mask |= 1 << v
            self.allowed[x] = mask

    @classmethod
    def of(cls, host: Colouring, pattern: Colouring) -> "_Matcher":
        return cls(host.class_adj, host.n, pattern)

    def embeddings(self, pins: Optional[dict[int, int]] = None) -> Iterator[tuple[int, ...]]:
        """Colour-preserving maps in lexicographic order, honouring pinned vertices."""
        if not self.possible:
            return
        k, pm, hadj, allowed = self.k, self.pm, self.hadj, self.allowed
        pins = pins or {}
        used0 = 0
        for x, v in pins.items():
            if not allowed[x] >> v & 1 or used0 >> v & 1:
                return
            used0 |= 1 << v
        for x, v in pins.items():
            for y, w in pins.items():
                if x < y and hadj[pm[x][y] - 1][v] >> w & 1 == 0:
                    return
        order = [x for x in range(k) if x not in pins]
        mapping = [-1] * k
        for x, v in pins.items():
            mapping[x] = v

        def rec(i: int, used: int):
            if i == len(order):
                yield tuple(mapping)
                return
            x = order[i]
            cand = allowed[x] & ~used
            row = pm[x]
            for y in range(k):
                if y != x and mapping[y] >= 0:
                    cand &= hadj[row[y] - 1][mapping[y]]
                    if not cand:
                        return
            while cand:
                low = cand & -cand
                cand ^= low
                mapping[x] = low.bit_length() - 1
                yield from rec(i + 1, used | low)
            mapping[x] = -1

        yield from rec(0, used0)

    def first(self, pins: Optional[dict[int, int]] = None) -> Optional[tuple[int, ...]]:
        return next(self.embeddings(pins), None)

    def through_vertex(self, v: int) -> Optional[tuple[int, ...]]:
        """Some embedding whose image contains host vertex v."""
        for x in range(self.k):
            emb = self.first({x: v})
            if emb is not None:
                return emb
        return None

    def through_edge(self, u: int, v: int, colour: int) -> Optional[tuple[int, ...]]:
        """Some embedding whose image contains both u and v (edge uv coloured `colour`)."""
        pm = self.pm
        for x in range(self.k):
            for y in range(self.k):
                if x != y and pm[x][y] == colour:
                    emb = self.first({x: u, y: v})
                    if emb is not None:
                        return emb
        return None


def find_copy(host: Colouring, pattern: Colouring) -> Optional[tuple[int, ...]]:
    """Lexicographically first colour-preserving embedding of `pattern` into `host`.

    The result maps pattern vertex x to host vertex ``result[x]``; ``None`` if
    the host is pattern-free.
    """
    return _Matcher.of(host, pattern).first()


def is_free(host: Colouring, pattern: Colouring) -> bool:
    return find_copy(host, pattern) is None


def automorphism_count(pattern: Colouring) -> int:
    return sum(1 for _ in _Matcher.of(pattern, pattern).embeddings())


def count_copies(host: Colouring, pattern: Colouring) -> int:
    """Number of k-subsets of the host that induce a copy of the pattern.

    Each such subset carries exactly |Aut(pattern)| embeddings.
    """
    total = sum(1 for _ in _Matcher.of(host, pattern).embeddings())
    return total // automorphism_count(pattern)


def find_palette_copy(host: Colouring, k: int, palette: Palette) -> Optional[tuple[int, ...]]:
    """First k-subset (ascending, lexicographic) whose colour histogram is exactly `palette`.

    Colours beyond ``len(palette.counts)`` must not appear inside the subset.
    """
    if palette.k != k:
        raise ValueError(f"palette is for k={palette.k}, not k={k}")
    counts = palette.counts
    if len(counts) > host.s:
        raise ValueError(f"palette has {len(counts)} entries but host uses only {host.s} colours")
    if k > host.n:
        return None
    m = host.matrix
    n = host.n
    limit = len(counts)
    have = [0] * limit
    chosen: list[int] = []

    def rec(start: int) -> bool:
        if len(chosen) == k:
            return True
        for v in range(start, n - (k - len(chosen)) + 1):
            row = m[v]
            ok = True
            added = []
            for w in chosen:
                col = row[w]
                if col > limit or have[col - 1] == counts[col - 1]:
                    ok = False
                    break
                have[col - 1] += 1
                added.append(col)
            if ok:
                chosen.append(v)
                if rec(v + 1):
                    return True
                chosen.pop()
            for col in added:
                have[col - 1] -= 1
        return False

    return tuple(chosen) if rec(0) else None
