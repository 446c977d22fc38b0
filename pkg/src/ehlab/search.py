"""Exact minimum homogeneous number over pattern-free colourings, and heuristics.

:func:`exact_h` grows colourings one vertex at a time. Level m holds one
canonical representative (lexicographically smallest row-major edge string)
per isomorphism class of pattern-free colourings of K_m; each representative
is extended by every colour column to a new last vertex, children containing
a pattern copy through the new vertex are dropped, and the survivors are
canonicalized and deduplicated. Since pattern-freeness is hereditary and
isomorphic parents have isomorphic child sets, every class on m+1 vertices is
reached.
"""

from __future__ import annotations

import logging
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Optional

from . import rng
from .construct import monochromatic_free, random_colouring
from .core import CANON_MAX_N, Colouring, _lexmin_order, check_pattern, from_canonical_form, pairs
from .detect import _Matcher
from .homog import _mis
from .patterns import TWO_ONE

log = logging.getLogger(__name__)

DEFAULT_MAX_LEAVES = 10**9


class CapExceeded(RuntimeError):
    pass


def default_max_leaves() -> int:
    env = os.environ.get("EHLAB_MAX_LEAVES")
    return int(env) if env else DEFAULT_MAX_LEAVES


def ceil_sqrt(n: int) -> int:
    return math.isqrt(n - 1) + 1 if n > 0 else 0


@dataclass
class SearchStats:
    generated: int = 0
    pattern_pruned: int = 0
    bound_pruned: int = 0
    isomorph_rejected: int = 0
    classes_per_level: list[int] = field(default_factory=list)
    optimal_classes: int = 0
    wall_time: float = 0.0

    def as_dict(self, timing: bool = False) -> dict:
        d = asdict(self)
        if not timing:
            del d["wall_time"]
        return d


@dataclass(frozen=True)
class SearchResult:
    n: int
    s: int
    pattern: Colouring
    value: int
    witness: Colouring
    stats: SearchStats


def _matrix_from_form(form: bytes) -> list[list[int]]:
    n = form[0]
    m = [[0] * n for _ in range(n)]
    for (u, v), col in zip(pairs(n), form[2:]):
        m[u][v] = m[v][u] = col
    return m


def _class_adj(mat: list[list[int]], s: int) -> list[list[int]]:
    n = len(mat)
    adj = [[0] * n for _ in range(s)]
    for u in range(n):
        row = mat[u]
        for v in range(u + 1, n):
            col = row[v] - 1
            adj[col][u] |= 1 << v
            adj[col][v] |= 1 << u
    return adj


def _h_of_adj(adj: list[list[int]], n: int) -> int:
    full = (1 << n) - 1
    return max(_mis(rows, full).bit_count() for rows in adj)


def _expand(parents: list[bytes], s: int, pattern: Colouring, upper_bound: Optional[int]):
    """Children of the given representatives: (sorted forms, generated, pattern-pruned, bound-pruned)."""
    out = set()
    generated = pattern_pruned = bound_pruned = 0
    for form in parents:
        m = form[0]
        n = m + 1
        pmat = _matrix_from_form(form)
        padj = _class_adj(pmat, s)
        check = pattern.n <= n
        newbit = 1 << m
        for column in product(range(1, s + 1), repeat=m):
            generated += 1
            hadj = [rows + [0] for rows in padj]
            for u, col in enumerate(column):
                cls = hadj[col - 1]
                cls[u] |= newbit
                cls[m] |= 1 << u
            if check and _Matcher(hadj, n, pattern, filter_degrees=False).through_vertex(m) is not None:
                pattern_pruned += 1
                continue
            if upper_bound is not None and _h_of_adj(hadj, n) > upper_bound:
                bound_pruned += 1
                continue
            cmat = [prow + [column[u]] for u, prow in enumerate(pmat)]
            cmat.append(list(column) + [0])
            _, string = _lexmin_order(cmat, n)
            out.add(bytes([n, s]) + bytes(string))
    return sorted(out), generated, pattern_pruned, bound_pruned


def _expand_job(args):
    return _expand(*args)


def _chunks(items: list, parts: int) -> list[list]:
    size = max(1, -(-len(items) // parts))
    return [items[i : i + size] for i in range(0, len(items), size)]


def exact_h(
    n: int,
    s: int,
    pattern: Colouring,
    max_leaves: Optional[int] = None,
    workers: int = 1,
    upper_bound: Optional[int] = None,
) -> SearchResult:
    """h_s(n, pattern) by exhaustive isomorph-free enumeration.

    `max_leaves` caps the total number of generated extensions; the cap is
    checked before each level, so an oversized instance fails fast with
    :class:`CapExceeded`. With `upper_bound`, partial colourings whose
    homogeneous number already exceeds it are discarded (optima at or below
    the bound are unaffected). The witness is the lexicographically smallest
    row-major edge string among all optimal colourings.
    """
    check_pattern(pattern)
    if n < 1 or s < 1:
        raise ValueError("need n >= 1 and s >= 1")
    if n > CANON_MAX_N:
        raise CapExceeded(f"exact search needs canonical forms, capped at n <= {CANON_MAX_N}")
    if max_leaves is None:
        max_leaves = default_max_leaves()
    start = time.perf_counter()
    stats = SearchStats(classes_per_level=[1])
    level = [bytes([1, s])]
    for m in range(1, n):
        planned = len(level) * s**m
        if stats.generated + planned > max_leaves:
            raise CapExceeded(
                f"level {m + 1} would generate {planned} extensions; "
                f"total would exceed max_leaves={max_leaves}"
            )
        if workers > 1 and len(level) > 1:
            jobs = [(chunk, s, pattern, upper_bound) for chunk in _chunks(level, 4 * workers)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_expand_job, jobs))
        else:
            results = [_expand(level, s, pattern, upper_bound)]
        merged = set()
        survivors = 0
        for forms, gen, pp, bp in results:
            stats.generated += gen
            stats.pattern_pruned += pp
            stats.bound_pruned += bp
            survivors += gen - pp - bp
            merged.update(forms)
        level = sorted(merged)
        stats.isomorph_rejected += survivors - len(level)
        stats.classes_per_level.append(len(level))
        log.debug("level %d: %d classes, %d generated so far", m + 1, len(level), stats.generated)
        if not level:
            raise ValueError(f"no pattern-free colouring of K_{m + 1} within the given constraints")
    best_value, best_form, count = None, None, 0
    for form in level:
        value = _h_of_adj(_class_adj(_matrix_from_form(form), s), n) if n > 1 else 1
        if best_value is None or value < best_value:
            best_value, best_form, count = value, form, 1
        elif value == best_value:
            count += 1
    stats.optimal_classes = count
    stats.wall_time = time.perf_counter() - start
    return SearchResult(n, s, pattern, best_value, from_canonical_form(best_form), stats)


# ---------------------------------------------------------------------------
# annealing
# ---------------------------------------------------------------------------


class _State:
    """Mutable colouring with per-colour bitmask classes and cached alphas."""

    def __init__(self, c: Colouring):
        self.n, self.s = c.n, c.s
        self.mat = [list(row) for row in c.matrix]
        self.adj = [list(rows) for rows in c.class_adj]
        full = (1 << c.n) - 1
        self.alphas = [_mis(rows, full).bit_count() for rows in self.adj]

    def set(self, u: int, v: int, col: int) -> int:
        old = self.mat[u][v]
        if old != col:
            self.adj[old - 1][u] &= ~(1 << v)
            self.adj[old - 1][v] &= ~(1 << u)
            self.adj[col - 1][u] |= 1 << v
            self.adj[col - 1][v] |= 1 << u
            self.mat[u][v] = self.mat[v][u] = col
        return old

    def refresh(self, *colours: int) -> None:
        full = (1 << self.n) - 1
        for col in set(colours):
            self.alphas[col - 1] = _mis(self.adj[col - 1], full).bit_count()

    def colouring(self) -> Colouring:
        return Colouring.from_matrix(self.mat, self.s)


def _repair(c: Colouring, pattern: Colouring, stream: rng.SplitMix64) -> Colouring:
    """Greedily recolour edges of pattern copies until none is left."""
    if pattern.n > c.n:
        return c
    st = _State(c)
    matcher = _Matcher(st.adj, c.n, pattern, filter_degrees=False)
    for _ in range(20 * len(c.colours) * c.s + 20):
        emb = matcher.first()
        if emb is None:
            return st.colouring()
        u, v = emb[0], emb[1]
        old = st.mat[u][v]
        others = [col for col in range(1, c.s + 1) if col != old]
        if not others:
            break
        for col in others:
            st.set(u, v, col)
            if matcher.through_edge(u, v, col) is None:
                break
        else:
            st.set(u, v, stream.choice(others))
    return monochromatic_free(c.n, c.s, pattern)


def _anneal(start: Colouring, pattern: Colouring, budget: int, stream: rng.SplitMix64) -> tuple[tuple[int, int], Colouring]:
    n, s = start.n, start.s
    st = _State(start)

    # soft maximum of the class alphas: every class counts, the largest most
    def energy() -> float:
        return sum(a**4 for a in st.alphas) ** 0.25

    def key() -> tuple[int, int]:
        return max(st.alphas), sum(1 for row in st.adj if any(row))

    best_key, best = key(), start
    if n < 2 or s < 2 or budget <= 0:
        return best_key, best
    matcher = _Matcher(st.adj, n, pattern, filter_degrees=False) if pattern.n <= n else None
    edges = list(pairs(n))
    e_cur = energy()
    t0, t1 = 1.0, 0.02
    accepted = rejected = 0
    for step in range(budget):
        temp = t0 * (t1 / t0) ** (step / budget)
        u, v = edges[stream.below(len(edges))]
        old = st.mat[u][v]
        col = 1 + stream.below(s - 1)
        if col >= old:
            col += 1
        st.set(u, v, col)
        if matcher is not None and matcher.through_edge(u, v, col) is not None:
            st.set(u, v, old)
            rejected += 1
            continue
        st.refresh(old, col)
        e_new = energy()
        delta = e_new - e_cur
        if delta <= 0 or stream.random() < math.exp(-delta / temp):
            e_cur = e_new
            accepted += 1
            k = key()
            if k < best_key:
                best_key, best = k, st.colouring()
        else:
            st.set(u, v, old)
            st.refresh(old, col)
    log.debug("annealing: %d accepted, %d rejected for pattern copies", accepted, rejected)
    return best_key, best


def minimize_h(
    n: int, s: int, pattern: Colouring, budget: int = 10_000, seed: int = 0
) -> tuple[Colouring, int]:
    """Simulated annealing for a pattern-free colouring with small homogeneous number.

    Moves recolour one edge; moves creating a copy of the pattern through that
    edge are rejected. The budget is split between two runs, one from a
    greedily repaired random colouring and one from a pattern-free
    monochromatic colouring; repair can leave a colour locked out (every new
    edge of it would complete a copy), which the second start avoids. With
    budget 0 the repaired colouring is returned. The value is an upper bound
    on h_s(n, pattern).
    """
    check_pattern(pattern)
    stream = rng.stream(seed, "anneal")
    repaired = _repair(random_colouring(n, list(range(1, s + 1)), rng.derive(seed, "anneal-init"), s=s), pattern, stream)
    best_key, best = _anneal(repaired, pattern, budget - budget // 2, stream)
    if budget > 1:
        other_key, other = _anneal(monochromatic_free(n, s, pattern), pattern, budget // 2, stream)
        if other_key < best_key:
            best_key, best = other_key, other
    return best, best_key[0]


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MonotoneReport:
    n: int
    s: int
    pattern: Colouring
    lower: SearchResult
    upper: SearchResult
    holds: bool
    guaranteed: bool


def verify_monotone(n: int, pattern: Colouring, s: int, **search_kwargs) -> MonotoneReport:
    """Compare h_s(n, pattern) with h_{s+1}(n, pattern).

    The inequality h_{s+1} >= h_s is only guaranteed when the pattern uses
    fewer than s colours; `guaranteed` records whether that holds, and
    `holds` whether the inequality came out true.
    """
    lower = exact_h(n, s, pattern, **search_kwargs)
    upper = exact_h(n, s + 1, pattern, **search_kwargs)
    used = len(set(pattern.colours))
    return MonotoneReport(n, s, pattern, lower, upper, upper.value >= lower.value, used < s)


@dataclass(frozen=True)
class SqrtBoundReport:
    n: int
    s: int
    value: int
    bound: int
    holds: bool
    result: SearchResult


def sqrt_bound_check(n: int, pattern: Colouring = TWO_ONE, s: int = 3, **search_kwargs) -> SqrtBoundReport:
    """Check h_s(n, pattern) >= ceil(sqrt(n)) exhaustively."""
    result = exact_h(n, s, pattern, **search_kwargs)
    bound = ceil_sqrt(n)
    return SqrtBoundReport(n, s, result.value, bound, result.value >= bound, result)
