"""Brute-force reference implementations.

Nothing here touches the package's search code: colourings are handled as
plain symmetric matrices and every question is answered by enumeration.
"""

from itertools import combinations, permutations, product


def matrix(c):
    """Symmetric 0-based colour matrix from a package Colouring (row-major colours)."""
    n = c.n
    m = [[0] * n for _ in range(n)]
    it = iter(c.colours)
    for u in range(n):
        for v in range(u + 1, n):
            m[u][v] = m[v][u] = next(it)
    return m


def pattern_images(p):
    """All edge strings (row-major over a k-subset in increasing order) that realize pattern p."""
    pm = matrix(p)
    k = p.n
    images = set()
    for perm in permutations(range(k)):
        # perm[i] = pattern vertex placed at the i-th smallest subset vertex
        images.add(tuple(pm[perm[i]][perm[j]] for i in range(k) for j in range(i + 1, k)))
    return images


def copy_subsets(host, p):
    """All k-subsets of the host inducing a copy of p."""
    hm = matrix(host)
    k = p.n
    images = pattern_images(p)
    out = []
    for sub in combinations(range(host.n), k):
        key = tuple(hm[sub[i]][sub[j]] for i in range(k) for j in range(i + 1, k))
        if key in images:
            out.append(sub)
    return out


def all_embeddings(host, p):
    """Every injective colour-preserving map, in lexicographic order."""
    hm, pm = matrix(host), matrix(p)
    k = p.n
    out = []
    for img in permutations(range(host.n), k):
        if all(hm[img[x]][img[y]] == pm[x][y] for x in range(k) for y in range(x + 1, k)):
            out.append(img)
    return out


def palette_subsets(host, k, counts):
    hm = matrix(host)
    out = []
    for sub in combinations(range(host.n), k):
        hist = [0] * max(host.s, len(counts))
        for a, b in combinations(sub, 2):
            hist[hm[a][b] - 1] += 1
        if tuple(hist[: len(counts)]) == tuple(counts) and not any(hist[len(counts):]):
            out.append(sub)
    return out


def subset_colour_sets(m, n):
    """colours[mask] = bitmask of colours induced by the vertex set mask."""
    colours = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        acc = colours[rest]
        r = rest
        while r:
            w = (r & -r).bit_length() - 1
            r &= r - 1
            acc |= 1 << (m[low][w] - 1)
        colours[mask] = acc
    return colours


def brute_h(c):
    """Largest vertex set inducing fewer than s colours."""
    n, s = c.n, c.s
    cols = subset_colour_sets(matrix(c), n)
    return max(bin(mask).count("1") for mask in range(1 << n) if bin(cols[mask]).count("1") < s)


def brute_s_clique(c, colours):
    allowed = 0
    for col in colours:
        allowed |= 1 << (col - 1)
    cols = subset_colour_sets(matrix(c), c.n)
    return max(bin(mask).count("1") for mask in range(1 << c.n) if cols[mask] & ~allowed == 0)


def brute_alpha(adj):
    n = len(adj)
    best = 0
    for mask in range(1 << n):
        size = bin(mask).count("1")
        if size <= best:
            continue
        if all(adj[v] & mask == 0 for v in range(n) if mask >> v & 1):
            best = size
    return best


def brute_omega(adj):
    n = len(adj)
    comp = [((1 << n) - 1) & ~adj[v] & ~(1 << v) for v in range(n)]
    return brute_alpha(comp)


def brute_isomorphic(a, b):
    if (a.n, a.s) != (b.n, b.s):
        return False
    am, bm = matrix(a), matrix(b)
    n = a.n
    return any(
        all(am[x][y] == bm[phi[x]][phi[y]] for x in range(n) for y in range(x + 1, n))
        for phi in permutations(range(n))
    )


def naive_exact_h(n, s, p):
    """Minimum brute_h over every pattern-free s-colouring of K_n, plus the number of free colourings."""
    from ehlab.core import Colouring

    pairs = list(combinations(range(n), 2))
    images = pattern_images(p) if p.n <= n else set()
    k = p.n
    subsets = list(combinations(range(n), k)) if p.n <= n else []
    best, free = None, 0
    for cols in product(range(1, s + 1), repeat=len(pairs)):
        m = [[0] * n for _ in range(n)]
        for (u, v), col in zip(pairs, cols):
            m[u][v] = m[v][u] = col
        if any(tuple(m[sub[i]][sub[j]] for i in range(k) for j in range(i + 1, k)) in images for sub in subsets):
            continue
        free += 1
        h = brute_h(Colouring(n, s, cols)) if n > 1 else 1
        if best is None or h < best:
            best = h
    return best, free
