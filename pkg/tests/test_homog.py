import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_colouring, random_graph
from oracles import brute_alpha, brute_h, brute_omega, brute_s_clique
from ehlab.core import Colouring, monochromatic
from ehlab.homog import (
    alpha,
    clique_number,
    cograph_alpha_omega,
    complement,
    cotree,
    find_induced_p4,
    h_from_s_cliques,
    homogeneous_number,
    is_independent,
    is_p4_free,
    max_independent_set,
    s_clique,
)
from ehlab.patterns import DOUBLE_P4, RAINBOW3


def cycle(n):
    return [(1 << ((v + 1) % n)) | (1 << ((v - 1) % n)) for v in range(n)]


def test_alpha_small_graphs():
    assert alpha([0, 0, 0]) == (3, (0, 1, 2))
    assert alpha(cycle(5))[0] == 2
    assert alpha(cycle(6)) == (3, (0, 2, 4))
    assert alpha([]) == (0, ())
    # K4
    assert alpha([0b1110, 0b1101, 0b1011, 0b0111]) == (1, (0,))


def test_witness_is_lexicographically_smallest():
    from itertools import combinations

    rnd = random.Random(8)
    for _ in range(80):
        adj = random_graph(rnd, rnd.randint(1, 10), rnd.random())
        size, wit = alpha(adj)
        first = next(
            sub for sub in combinations(range(len(adj)), size) if is_independent(adj, sub)
        )
        assert wit == first


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 16), st.floats(0, 1), st.integers(0, 2**32))
def test_alpha_matches_oracle(n, p, seed):
    adj = random_graph(random.Random(seed), n, p)
    size, wit = alpha(adj)
    assert size == brute_alpha(adj)
    assert len(wit) == size and is_independent(adj, wit)
    assert clique_number(adj)[0] == brute_omega(adj)


def test_alpha_larger_graphs():
    rnd = random.Random(99)
    for n, p in ((40, 0.3), (60, 0.5), (60, 0.1), (80, 0.8)):
        adj = random_graph(rnd, n, p)
        size, wit = alpha(adj)
        assert is_independent(adj, wit)
        # maximality: nothing can be added
        taken = set(wit)
        assert all(not is_independent(adj, wit + (v,)) for v in range(n) if v not in taken)
        assert max_independent_set(adj) == wit


def test_within_restricts():
    adj = cycle(6)
    assert max_independent_set(adj, within=0b111110) == (1, 3, 5)


def test_h_examples():
    # the lone rainbow triangle: each class is one edge on three vertices
    rep = homogeneous_number(RAINBOW3)
    assert rep.value == 2 and rep.missing_colour == 1 and rep.witness == (0, 2)
    assert rep.alphas == (2, 2, 2)
    assert homogeneous_number(monochromatic(5, 2, 1)).value == 5
    # both classes of the double P4 are paths on four vertices
    assert homogeneous_number(DOUBLE_P4).value == 2
    assert homogeneous_number(DOUBLE_P4).alphas == (2, 2)


def test_h_tie_goes_to_smallest_colour():
    # colour 1 is a 4-cycle, colour 2 a perfect matching: both have alpha 2
    c = Colouring(4, 2, (1, 1, 2, 2, 1, 1))
    rep = homogeneous_number(c)
    assert rep.alphas[0] == rep.alphas[1] == rep.value
    assert rep.missing_colour == 1


def test_h_against_oracle():
    rnd = random.Random(31)
    for _ in range(150):
        c = random_colouring(rnd, rnd.randint(2, 10), rnd.randint(2, 4))
        rep = homogeneous_number(c)
        assert rep.value == brute_h(c) == h_from_s_cliques(c).value
        # the witness really avoids the missing colour
        w = rep.witness
        assert all(c.colour(a, b) != rep.missing_colour for i, a in enumerate(w) for b in w[i + 1:])


def test_s_clique():
    rnd = random.Random(41)
    for _ in range(80):
        c = random_colouring(rnd, rnd.randint(2, 9), 4)
        I = sorted(rnd.sample(range(1, 5), rnd.randint(1, 4)))
        res = s_clique(c, I)
        assert res.value == brute_s_clique(c, I)
        assert res.colours == tuple(I)
    assert s_clique(RAINBOW3, [1, 2, 3]).value == 3
    with pytest.raises(ValueError):
        s_clique(RAINBOW3, [])
    with pytest.raises(ValueError):
        s_clique(RAINBOW3, [4])


def test_p4_examples():
    path = [0b10, 0b101, 0b1010, 0b100]
    assert not is_p4_free(path)
    assert find_induced_p4(path) in {(0, 1, 2, 3), (3, 2, 1, 0)}
    assert is_p4_free(cycle(4))
    assert not is_p4_free(cycle(5))
    with pytest.raises(ValueError):
        cotree(path)


def random_cograph(rnd, n):
    """Build by random unions and joins of smaller cographs on disjoint vertex sets."""
    if n == 1:
        return [0]
    k = rnd.randint(1, n - 1)
    a, b = random_cograph(rnd, k), random_cograph(rnd, n - k)
    adj = a + [row << k for row in b]
    if rnd.random() < 0.5:
        for u in range(k):
            for v in range(k, n):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    perm = list(range(n))
    rnd.shuffle(perm)
    out = [0] * n
    for u in range(n):
        for v in range(n):
            if adj[u] >> v & 1:
                out[perm[u]] |= 1 << perm[v]
    return out


def test_cographs_against_oracle():
    rnd = random.Random(52)
    for _ in range(60):
        adj = random_cograph(rnd, rnd.randint(1, 14))
        assert is_p4_free(adj) and find_induced_p4(adj) is None
        assert cograph_alpha_omega(adj) == (brute_alpha(adj), brute_omega(adj))
        assert is_p4_free(complement(adj))


def test_p4_detection_against_brute():
    from itertools import permutations

    rnd = random.Random(6)
    for _ in range(100):
        adj = random_graph(rnd, rnd.randint(1, 7), 0.5)
        n = len(adj)
        has = any(
            all((adj[p[i]] >> p[j] & 1) == (abs(i - j) == 1) for i in range(4) for j in range(i + 1, 4))
            for p in permutations(range(n), 4)
        )
        assert is_p4_free(adj) == (not has)
        found = find_induced_p4(adj)
        assert (found is None) == (not has)
        if found:
            a, b, c, d = found
            assert adj[a] >> b & 1 and adj[b] >> c & 1 and adj[c] >> d & 1
            assert not (adj[a] >> c & 1 or adj[a] >> d & 1 or adj[b] >> d & 1)
