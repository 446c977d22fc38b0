from itertools import product

import pytest

from oracles import brute_h, copy_subsets, naive_exact_h
from ehlab.core import Colouring
from ehlab.detect import is_free
from ehlab.homog import homogeneous_number
from ehlab.patterns import DOUBLE_P4, RAINBOW3, TWO_ONE, edge
from ehlab.search import (
    CapExceeded,
    ceil_sqrt,
    default_max_leaves,
    exact_h,
    minimize_h,
    sqrt_bound_check,
    verify_monotone,
)

# (pattern, n, s) -> (min h, number of labelled pattern-free colourings), from the naive oracle
NAIVE = {
    ("rainbow3", 3, 3): (3, 21),
    ("doubleP4", 4, 2): (2, 52),
    ("doubleP4", 5, 2): (3, 472),
    ("twoone", 3, 3): (2, 24),
    ("twoone", 4, 3): (2, 482),
    ("twoone", 3, 2): (2, 5),
    ("twoone", 4, 2): (2, 15),
    ("twoone", 5, 2): (3, 52),
    ("rainbow3", 4, 3): (3, 279),
    ("rainbow3", 4, 4): (3, 2830),
    ("doubleP4", 4, 3): (2, 717),
}
PATTERNS = {"rainbow3": RAINBOW3, "twoone": TWO_ONE, "doubleP4": DOUBLE_P4}


def test_ceil_sqrt():
    assert [ceil_sqrt(n) for n in (1, 2, 4, 5, 9, 10, 16, 17)] == [1, 2, 2, 3, 3, 4, 4, 5]


@pytest.mark.parametrize("key", sorted(NAIVE))
def test_exact_matches_frozen_naive(key):
    name, n, s = key
    assert exact_h(n, s, PATTERNS[name]).value == NAIVE[key][0]


def test_naive_oracle_recomputes_small_entries():
    for key in (("rainbow3", 3, 3), ("doubleP4", 4, 2), ("twoone", 4, 2)):
        name, n, s = key
        assert naive_exact_h(n, s, PATTERNS[name]) == NAIVE[key]


def test_rainbow_triangle_k3():
    # every non-rainbow colouring of K_3 leaves a colour unused, so h = 3
    res = exact_h(3, 3, RAINBOW3)
    assert res.value == 3
    assert homogeneous_number(res.witness).value == 3


def test_witness_is_lexmin_optimal():
    for pattern, n, s in ((TWO_ONE, 4, 2), (RAINBOW3, 4, 3), (DOUBLE_P4, 5, 2)):
        res = exact_h(n, s, pattern)
        best = None
        for cols in product(range(1, s + 1), repeat=n * (n - 1) // 2):
            c = Colouring(n, s, cols)
            if copy_subsets(c, pattern) or brute_h(c) != res.value:
                continue
            best = cols if best is None else min(best, cols)
        assert res.witness.colours == best
        assert is_free(res.witness, pattern)


def test_frozen_double_p4_witness():
    res = exact_h(4, 2, DOUBLE_P4)
    assert res.witness.colours == (1, 1, 2, 2, 1, 1)
    assert res.stats.classes_per_level == [1, 2, 4, 10]


def test_class_counts():
    # double-P4-free 2-colourings of K_n are exactly the cographs up to isomorphism
    assert exact_h(7, 2, DOUBLE_P4).stats.classes_per_level == [1, 2, 4, 10, 24, 66, 180]
    # (1,1,2)-free 2-colourings are disjoint unions of colour-1 cliques: partitions of n
    assert exact_h(6, 2, TWO_ONE).stats.classes_per_level == [1, 2, 3, 5, 7, 11]


def test_single_edge_pattern():
    for n in range(2, 6):
        assert exact_h(n, 2, edge(1).with_palette(2)).value == n


def test_stats_bookkeeping():
    st = exact_h(5, 3, TWO_ONE).stats
    assert st.generated == st.pattern_pruned + st.bound_pruned + st.isomorph_rejected + sum(
        st.classes_per_level[1:]
    )
    assert st.optimal_classes >= 1
    assert "wall_time" not in st.as_dict()
    assert "wall_time" in st.as_dict(timing=True)


def test_upper_bound_prunes_without_changing_optimum():
    plain = exact_h(5, 2, DOUBLE_P4)
    bounded = exact_h(5, 2, DOUBLE_P4, upper_bound=plain.value)
    assert bounded.value == plain.value
    assert bounded.witness == plain.witness
    assert bounded.stats.bound_pruned > 0
    with pytest.raises(ValueError):
        exact_h(5, 2, DOUBLE_P4, upper_bound=plain.value - 1)


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        exact_h(6, 3, TWO_ONE, max_leaves=1000)
    with pytest.raises(CapExceeded):
        exact_h(11, 2, TWO_ONE)


def test_env_cap(monkeypatch):
    monkeypatch.setenv("EHLAB_MAX_LEAVES", "50")
    assert default_max_leaves() == 50
    with pytest.raises(CapExceeded):
        exact_h(5, 2, DOUBLE_P4)


def test_workers_give_identical_results():
    serial = exact_h(6, 2, DOUBLE_P4)
    parallel = exact_h(6, 2, DOUBLE_P4, workers=3)
    assert parallel.value == serial.value
    assert parallel.witness == serial.witness
    assert parallel.stats.as_dict() == serial.stats.as_dict()


def test_minimize_h():
    for pattern, n, s in ((DOUBLE_P4, 7, 2), (TWO_ONE, 6, 3), (RAINBOW3, 6, 3)):
        c, value = minimize_h(n, s, pattern, budget=3000, seed=4)
        assert is_free(c, pattern)
        assert homogeneous_number(c).value == value
        assert value >= exact_h(n, s, pattern).value
    assert minimize_h(7, 2, DOUBLE_P4, budget=500, seed=1) == minimize_h(7, 2, DOUBLE_P4, budget=500, seed=1)


def test_minimize_h_larger_instance():
    c, value = minimize_h(16, 2, DOUBLE_P4, budget=4000, seed=0)
    assert c.n == 16 and is_free(c, DOUBLE_P4)
    assert value >= ceil_sqrt(16)
    assert value < 16


def test_verify_monotone():
    rep = verify_monotone(4, TWO_ONE, 2)
    assert rep.lower.value == 2 and rep.upper.value == 2
    assert rep.holds and not rep.guaranteed
    rep = verify_monotone(4, RAINBOW3, 3)
    assert rep.guaranteed is False


def test_rainbow_not_monotone_when_palette_matches_pattern():
    # with s = 3 the rainbow pattern uses all colours, so the inequality is not promised
    rep = verify_monotone(5, RAINBOW3, 3)
    assert rep.lower.value == 4 and rep.upper.value == 3
    assert not rep.holds


def test_sqrt_bound_check():
    rep = sqrt_bound_check(5)
    assert rep.value == 3 and rep.bound == 3 and rep.holds


def test_no_free_colouring():
    # with one colour every colouring is monochromatic and contains the single edge
    with pytest.raises(ValueError):
        exact_h(3, 1, edge(1))

