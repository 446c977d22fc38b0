"""Finite evaluations of the probabilistic estimates behind the two random
constructions. Logarithms are base 2; bounds are carried as base-2 exponents
so nothing overflows, and converted to floats only for display.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field


def _pow2(exponent: float) -> float:
    return math.inf if exponent > 1023 else 2.0**exponent


@dataclass(frozen=True)
class BoundReport:
    kind: str
    inputs: dict
    quantities: dict
    log2_bound: float
    bound: float = field(init=False)
    vacuous: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "bound", _pow2(self.log2_bound))
        object.__setattr__(self, "vacuous", self.log2_bound >= 0)

    def as_dict(self) -> dict:
        return asdict(self)


def turan_min_edges(q: int, alpha: int) -> int:
    """Fewest edges a graph on q vertices with independence number <= alpha can have.

    By Turan's theorem the extremal graph is alpha disjoint cliques of sizes as
    equal as possible.
    """
    if q < 1 or alpha < 1:
        raise ValueError("q and alpha must be positive")
    base, extra = divmod(q, alpha)
    return extra * math.comb(base + 1, 2) + (alpha - extra) * math.comb(base, 2)


def averaged_edge_estimate(q: int, alpha: int) -> float:
    """C(q, 2) / alpha, the density form of the edge count estimate."""
    if q < 1 or alpha < 1:
        raise ValueError("q and alpha must be positive")
    return math.comb(q, 2) / alpha


def turan_closed_form(q: float, alpha: float) -> float:
    """q^2 / (4 alpha); a lower bound on turan_min_edges once q >= 2 alpha."""
    return q * q / (4 * alpha)


def recolour_failure_bound(n: int, h: float, xi: float) -> BoundReport:
    """Union bound 2^(h^(1+xi) log n - h^(1+2xi)) for some h^(1+xi)-set missing a colour.

    ``x = h^(1+2xi)`` is the edge count each colour is forced to have on such a
    set, with the constant factor dropped.
    """
    if n < 2 or h < 1 or not 0 < xi < 1:
        raise ValueError("need n >= 2, h >= 1 and 0 < xi < 1")
    log_n = math.log2(n)
    set_size = h ** (1 + xi)
    x = h ** (1 + 2 * xi)
    threshold = log_n ** (2 / xi)
    exponent = set_size * log_n - x
    return BoundReport(
        "recolour",
        {"n": n, "h": h, "xi": xi},
        {
            "set_size": set_size,
            "x": x,
            "log2_n": log_n,
            "h_threshold": threshold,
            "above_threshold": h > threshold,
        },
        exponent,
    )


def smallest_effective_h(n: int, xi: float) -> int:
    """Smallest integer h for which the recolouring bound drops below 1."""
    log_n = math.log2(n)
    # exponent < 0  <=>  h^xi > log n
    h = max(1, math.floor(log_n ** (1 / xi)))
    while recolour_failure_bound(n, h, xi).log2_bound >= 0:
        h += 1
    while h > 1 and recolour_failure_bound(n, h - 1, xi).log2_bound < 0:
        h -= 1
    return h


def construction_failure_bound(n: int, alpha_h: int) -> BoundReport:
    """Probability bound that the random 1/2 colouring of a K4-free host has a
    q-set missing colour 1 or colour 2, with q = 8 alpha(H) log n.

    Uses the chain C(n, q) p_X <= n^q 2^(1 - q^2/(4 alpha)); the exponent
    simplifies to 1 - 8 alpha log^2 n.
    """
    if n < 2 or alpha_h < 1:
        raise ValueError("need n >= 2 and alpha_h >= 1")
    log_n = math.log2(n)
    q = 8 * alpha_h * log_n
    e_closed = turan_closed_form(q, alpha_h)
    q_int = math.ceil(q)
    log2_p = 1 - e_closed
    exponent = q * log_n + log2_p
    return BoundReport(
        "construction",
        {"n": n, "alpha_h": alpha_h},
        {
            "q": q,
            "q_ceil": q_int,
            "e_closed_form": e_closed,
            "e_averaged": averaged_edge_estimate(q_int, alpha_h),
            "e_turan_exact": turan_min_edges(q_int, alpha_h),
            "log2_p_x": log2_p,
            "log2_n": log_n,
            "simplified_exponent": 1 - 8 * alpha_h * log_n**2,
        },
        exponent,
    )
