"""Shared brute-force oracles and hypothesis strategies.

The oracles deliberately avoid the library's own algorithms: independent
sets by subset enumeration, isomorphism by permutation search, homology
ranks by fraction Gaussian elimination, so every fast path has a dumb
second opinion.
"""

import itertools
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import strategies as st

from graphcm.graph import Graph, bits


# -- conversions ---------------------------------------------------------------


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    for i in range(g.n):
        for j in bits(g.adj[i]):
            if j > i:
                h.add_edge(i, j)
    return h


# -- brute-force oracles ---------------------------------------------------------


def brute_independent_sets(g: Graph):
    """All independent sets, as index masks."""
    out = []
    for mask in range(1 << g.n):
        if all(g.adj[v] & mask == 0 for v in bits(mask)):
            out.append(mask)
    return out

def brute_maximal_independent_sets(g: Graph):
    indep = set(brute_independent_sets(g))
    out = []
    for mask in indep:
        if all((mask | 1 << v) not in indep for v in range(g.n) if not mask >> v & 1):
            out.append(mask)
    return sorted(out)


def brute_alpha(g: Graph) -> int:
    return max(mask.bit_count() for mask in brute_independent_sets(g))


def brute_is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    n = g.n
    for perm in itertools.permutations(range(n)):
        if all(
            (g.adj[i] >> j & 1) == (h.adj[perm[i]] >> perm[j] & 1)
            for i in range(n)
            for j in range(i + 1, n)
        ):
            return True
    return False


def fraction_rank(rows) -> int:
    """Plain Gaussian elimination over Q with Fraction arithmetic."""
    if not rows or not rows[0]:
        return 0
    mat = [[Fraction(x) for x in row] for row in rows]
    m, ncol = len(mat), len(mat[0])
    rank = 0
    for c in range(ncol):
        piv = next((i for i in range(rank, m) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pr = mat[rank]
        inv = Fraction(1) / pr[c]
        mat[rank] = [x * inv for x in pr]
        for i in range(m):
            if i != rank and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def modp_rank(rows, p: int) -> int:
    if not rows or not rows[0]:
        return 0
    mat = [[x % p for x in row] for row in rows]
    m, ncol = len(mat), len(mat[0])
    rank = 0
    for c in range(ncol):
        piv = next((i for i in range(rank, m) if mat[i][c]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][c], p - 2, p)
        mat[rank] = [x * inv % p for x in mat[rank]]
        for i in range(m):
            if i != rank and mat[i][c]:
                f = mat[i][c]
                mat[i] = [(a - f * b) % p for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def brute_reduced_betti(faces, char: int):
    """Reduced Betti numbers from an explicit face list (frozensets of
    ints), straight from the definition; index c holds dimension c-1."""
    if not faces:
        return ()
    by_card = {}
    for f in faces:
        by_card.setdefault(len(f), []).append(tuple(sorted(f)))
    top = max(by_card)
    levels = [sorted(set(by_card.get(c, ()))) for c in range(top + 1)]
    ranks = [0] * (top + 2)
    for c in range(1, top + 1):
        prev, cur = levels[c - 1], levels[c]
        if not prev or not cur:
            continue
        row_of = {f: i for i, f in enumerate(prev)}
        rows = [[0] * len(cur) for _ in prev]
        for j, f in enumerate(cur):
            for t in range(len(f)):
                rows[row_of[f[:t] + f[t + 1 :]]][j] = (-1) ** t
        ranks[c] = fraction_rank(rows) if char == 0 else modp_rank(rows, char)
    return tuple(len(levels[c]) - ranks[c] - ranks[c + 1] for c in range(top + 1))


# -- hypothesis strategies ---------------------------------------------------------


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    nbits = n * (n - 1) // 2
    word = draw(st.integers(0, (1 << nbits) - 1)) if nbits else 0
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if word >> k & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


@pytest.fixture(scope="session")
def small_connected():
    """All connected graphs with up to 5 vertices, once per session."""
    from graphcm.enumeration import enumerate_connected_upto

    return list(enumerate_connected_upto(5))
