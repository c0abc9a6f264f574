"""Canonical forms via individualisation-refinement backtracking.

``canonical_form(G)`` returns a byte string that is invariant under
relabeling and distinct for non-isomorphic graphs: one length byte followed
by the lexicographically minimal packed adjacency matrix over all vertex
orderings compatible with iterated colour refinement.  The search prunes
orderings whose partial matrix already exceeds the best one found and skips
root branches identified by automorphisms discovered along the way.
"""

from __future__ import annotations

from .graph import Graph, bits


def _refine(adj, colors):
    """Iterated neighbourhood colour refinement to a fixed point."""
    n = len(adj)
    while True:
        sigs = []
        for v in range(n):
            sigs.append((colors[v], tuple(sorted(colors[w] for w in bits(adj[v])))))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return new
        colors = new


def _search_cached(g: Graph):
    cached = g.__dict__.get("_canon_search")
    if cached is None:
        cached = _search(g)
        g.__dict__["_canon_search"] = cached
    return cached


def canonical_order(g: Graph) -> tuple:
    """A canonical vertex ordering (position -> internal index); graphs with
    equal canonical forms place corresponding vertices at equal positions."""
    return tuple(_search_cached(g)[1])


def canonical_form(g: Graph) -> bytes:
    rows, _ = _search_cached(g)
    n = g.n
    acc = 0
    for k in range(1, n):
        acc = (acc << k) | rows[k]
    nbits = n * (n - 1) // 2
    return bytes([n]) + acc.to_bytes((nbits + 7) // 8, "big")


def _search(g: Graph):
    n = g.n
    if n == 0:
        return (), ()
    adj = g.adj
    base = _refine(adj, [0] * n)

    best_rows = None
    best_perm = None
    order = []
    rows = []

    # union-find over vertices, merged along discovered automorphisms; used
    # to skip root-level branches in the same orbit
    uf = list(range(n))

    def find(x):
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    def rec(colors, placed):
        nonlocal best_rows, best_perm
        k = len(order)
        if best_rows is not None:
            for i in range(k):
                if rows[i] != best_rows[i]:
                    if rows[i] > best_rows[i]:
                        return
                    break
        if k == n:
            if best_rows is None or rows < best_rows:
                best_rows = rows.copy()
                best_perm = order.copy()
            elif rows == best_rows:
                for i in range(n):
                    a, b = find(best_perm[i]), find(order[i])
                    if a != b:
                        uf[a] = b
            return
        cmin = min(colors[v] for v in range(n) if not placed >> v & 1)
        cell = [v for v in range(n) if not placed >> v & 1 and colors[v] == cmin]
        tried_roots = []
        for v in cell:
            if k == 0:
                rv = find(v)
                if any(find(u) == rv for u in tried_roots):
                    continue
                tried_roots.append(v)
            rowbits = 0
            av = adj[v]
            for i, u in enumerate(order):
                if av >> u & 1:
                    rowbits |= 1 << i
            order.append(v)
            rows.append(rowbits)
            if len(cell) == 1:
                rec(colors, placed | 1 << v)
            else:
                ncolors = colors.copy()
                ncolors[v] = n + k + 1
                rec(_refine(adj, ncolors), placed | 1 << v)
            order.pop()
            rows.pop()

    rec(base, 0)
    return tuple(best_rows), tuple(best_perm)


def _invariant(g: Graph):
    return (g.n, g.m, g.degree_sequence())


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if _invariant(g) != _invariant(h):
        return False
    return g.canonical_form() == h.canonical_form()


def isomorphism_map(g: Graph, h: Graph):
    """A label bijection realising an isomorphism, or None."""
    if not is_isomorphic(g, h):
        return None
    og, oh = canonical_order(g), canonical_order(h)
    return {g.labels[og[p]]: h.labels[oh[p]] for p in range(g.n)}
