"""Planarity for small graphs by exhaustive Kuratowski subdivision search.

Not a linear-time embedder: after Euler-formula edge-count pruning the test
simply looks for a subdivision of K5 or K33 (branch vertices plus
internally-disjoint linking paths).  Exact for every input, intended for
the bounded sizes this package works at.
"""

from __future__ import annotations

import itertools

from .graph import Graph, INFINITY, UnsupportedSizeError, bits

DEFAULT_MAX_N = 12


def is_planar(g: Graph, max_n: int = DEFAULT_MAX_N) -> bool:
    if g.n > max_n:
        raise UnsupportedSizeError(
            f"planarity test limited to {max_n} vertices (got {g.n}); raise max_n to override"
        )
    return all(_component_planar(c) for c in g.component_subgraphs())


def _component_planar(g: Graph) -> bool:
    n, m = g.n, g.m
    if n < 5:
        return True
    if m > 3 * n - 6:
        return False
    gi = g.girth()
    if gi is not INFINITY and gi >= 4 and m > 2 * n - 4:
        return False
    return not (_has_k5_subdivision(g) or _has_k33_subdivision(g))


def _has_k5_subdivision(g: Graph) -> bool:
    cand = [v for v in range(g.n) if g.adj[v].bit_count() >= 4]
    if len(cand) < 5:
        return False
    for branch in itertools.combinations(cand, 5):
        pairs = list(itertools.combinations(branch, 2))
        if _link(g, frozenset(branch), pairs):
            return True
    return False


def _has_k33_subdivision(g: Graph) -> bool:
    cand = [v for v in range(g.n) if g.adj[v].bit_count() >= 3]
    if len(cand) < 6:
        return False
    for six in itertools.combinations(cand, 6):
        for side in itertools.combinations(six[1:], 2):
            left = (six[0],) + side
            right = tuple(v for v in six if v not in left)
            pairs = [(a, b) for a in left for b in right]
            if _link(g, frozenset(six), pairs):
                return True
    return False


def _link(g: Graph, branch, pairs, used: int = 0, idx: int = 0) -> bool:
    """Internally-disjoint paths realising all the pairs, avoiding branch
    vertices as interior points."""
    if idx == len(pairs):
        return True
    a, b = pairs[idx]
    blocked = used
    for v in branch:
        if v != a and v != b:
            blocked |= 1 << v
    for interior in _paths(g, a, b, blocked):
        if _link(g, branch, pairs, used | interior, idx + 1):
            return True
    return False


def _paths(g: Graph, a: int, b: int, blocked: int):
    """Yield interior-vertex masks of simple a-b paths avoiding ``blocked``."""
    if g.adj[a] >> b & 1:
        yield 0
    stack = [(a, 0)]
    adj = g.adj
    while stack:
        u, interior = stack.pop()
        for v in bits(adj[u] & ~blocked & ~interior):
            if v == b:
                if interior:  # the direct edge was already yielded
                    yield interior
            elif v != a:
                stack.append((v, interior | 1 << v))
