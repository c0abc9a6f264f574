"""Bitset-backed immutable simple graphs (at most 64 vertices).

Vertices are addressed by *label* in the public API; labels are arbitrary
hashable values, typically ints or strings such as ``"x7"``.  Internally a
vertex is an index ``0..n-1`` in label-list order and the adjacency of each
vertex is a single machine-word bitmask, so set operations on neighbourhoods
are one-word operations.  Induced subgraphs keep the surviving labels, which
lets a chain of deletions remember which original vertices it contains.

All values are immutable after construction and every operation is pure, so
graphs can be shared freely between concurrent workers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

MAX_VERTICES = 64

#: Girth of a forest.  ``girth()`` returns an ``int`` for graphs that
#: contain a cycle and this value otherwise.
INFINITY = float("inf")

GirthValue = Union[int, float]


class GraphInputError(ValueError):
    """Bad input to a graph operation."""


class UnknownVertexError(GraphInputError):
    pass


class NotAnEdgeError(GraphInputError):
    pass


class UnsupportedSizeError(GraphInputError):
    pass


class PreconditionError(GraphInputError):
    """An operation's stated precondition does not hold."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


@dataclass(frozen=True)
class Graph:
    """An immutable labeled simple graph.

    ``adj[i]`` is the neighbour bitmask of the vertex with internal index
    ``i``; ``labels[i]`` is its label.  Construction validates symmetry and
    the absence of loops; the bitset representation rules out multi-edges.
    """

    labels: tuple
    adj: tuple

    def __post_init__(self):
        n = len(self.labels)
        if n > MAX_VERTICES:
            raise UnsupportedSizeError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
        if len(set(self.labels)) != n:
            raise GraphInputError("vertex labels must be unique")
        if len(self.adj) != n:
            raise GraphInputError("adjacency length does not match label count")
        full = (1 << n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphInputError(f"adjacency row {i} references vertices outside 0..{n - 1}")
            if row >> i & 1:
                raise GraphInputError(f"self-loop at vertex {self.labels[i]!r}")
        for i in range(n):
            for j in bits(self.adj[i]):
                if not self.adj[j] >> i & 1:
                    raise GraphInputError("adjacency is not symmetric")

    @classmethod
    def _unchecked(cls, labels: tuple, adj: tuple) -> "Graph":
        # Fast path for internally constructed graphs that are valid by
        # construction (induced subgraphs, generators).
        obj = cls.__new__(cls)
        object.__setattr__(obj, "labels", labels)
        object.__setattr__(obj, "adj", adj)
        return obj

    @classmethod
    def from_edges(cls, vertices, edges) -> "Graph":
        """Build a graph from a vertex specification and an edge list.

        ``vertices`` is either an integer ``n`` (labels ``0..n-1``) or an
        iterable of labels.  Edges are pairs of labels.
        """
        if isinstance(vertices, int):
            labels = tuple(range(vertices))
        else:
            labels = tuple(vertices)
        index = {v: i for i, v in enumerate(labels)}
        if len(index) != len(labels):
            raise GraphInputError("vertex labels must be unique")
        adj = [0] * len(labels)
        for u, v in edges:
            if u not in index:
                raise UnknownVertexError(f"unknown vertex {u!r}")
            if v not in index:
                raise UnknownVertexError(f"unknown vertex {v!r}")
            i, j = index[u], index[v]
            if i == j:
                raise GraphInputError(f"self-loop at vertex {u!r}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(labels, tuple(adj))

    @classmethod
    def empty(cls, vertices) -> "Graph":
        if isinstance(vertices, int):
            vertices = range(vertices)
        labels = tuple(vertices)
        return cls(labels, (0,) * len(labels))

    # -- basic accessors ------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, v) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v!r}") from None

    @property
    def _index(self) -> dict:
        cached = self.__dict__.get("_index_cache")
        if cached is None:
            cached = {v: i for i, v in enumerate(self.labels)}
            self.__dict__["_index_cache"] = cached
        return cached

    def mask_of(self, vertices: Iterable) -> int:
        mask = 0
        for v in vertices:
            mask |= 1 << self.index(v)
        return mask

    def label_set(self, mask: int) -> frozenset:
        return frozenset(self.labels[i] for i in bits(mask))

    def has_vertex(self, v) -> bool:
        return v in self._index

    def has_edge(self, u, v) -> bool:
        return bool(self.adj[self.index(u)] >> self.index(v) & 1)

    def edges(self) -> list:
        out = []
        for i in range(self.n):
            for j in bits(self.adj[i]):
                if j > i:
                    out.append((self.labels[i], self.labels[j]))
        return out

    def degree(self, v) -> int:
        return self.adj[self.index(v)].bit_count()

    def degree_sequence(self) -> tuple:
        return tuple(sorted(row.bit_count() for row in self.adj))

    def neighbors(self, v) -> frozenset:
        return self.label_set(self.adj[self.index(v)])

    def closed_neighborhood(self, v) -> frozenset:
        """N[v] = N(v) together with v itself."""
        i = self.index(v)
        return self.label_set(self.adj[i] | 1 << i)

    def isolated_vertices(self) -> frozenset:
        return frozenset(self.labels[i] for i in range(self.n) if self.adj[i] == 0)

    # -- induced subgraphs ------------------------------------------------

    def keep_mask(self, mask: int) -> "Graph":
        """Induced subgraph on the internal-index set ``mask``."""
        kept = list(bits(mask))
        pos = {old: new for new, old in enumerate(kept)}
        labels = tuple(self.labels[i] for i in kept)
        adj = []
        for i in kept:
            row = 0
            rem = self.adj[i] & mask
            for j in bits(rem):
                row |= 1 << pos[j]
            adj.append(row)
        return Graph._unchecked(labels, tuple(adj))

    def delete_vertices(self, remove: Iterable) -> "Graph":
        """Induced subgraph after deleting the given labels."""
        mask = self.mask_of(remove)
        return self.keep_mask(self.full_mask & ~mask)

    def punch_closed(self, v) -> "Graph":
        """Delete the closed neighbourhood N[v]."""
        i = self.index(v)
        return self.keep_mask(self.full_mask & ~(self.adj[i] | 1 << i))

    def punch_edge(self, x, y) -> "Graph":
        """Delete N(x) | N(y) for an edge xy (both endpoints go too)."""
        i, j = self.index(x), self.index(y)
        if not self.adj[i] >> j & 1:
            raise NotAnEdgeError(f"{x!r}{y!r} is not an edge")
        return self.keep_mask(self.full_mask & ~(self.adj[i] | self.adj[j]))

    def add_vertex(self, label, neighbors: Iterable) -> "Graph":
        if label in self._index:
            raise GraphInputError(f"duplicate vertex label {label!r}")
        n = self.n
        nbr_mask = self.mask_of(neighbors)
        adj = [row | ((nbr_mask >> i & 1) << n) for i, row in enumerate(self.adj)]
        adj.append(nbr_mask)
        return Graph(self.labels + (label,), tuple(adj))

    def _extend(self, nbr_mask: int) -> "Graph":
        # enumeration fast path: append a new vertex labeled n joined to nbr_mask
        n = self.n
        adj = [row | ((nbr_mask >> i & 1) << n) for i, row in enumerate(self.adj)]
        adj.append(nbr_mask)
        return Graph._unchecked(self.labels + (n,), tuple(adj))

    def relabel(self, mapping) -> "Graph":
        return Graph(tuple(mapping[v] for v in self.labels), self.adj)

    # -- connectivity ------------------------------------------------------

    def component_masks(self) -> list:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = 1 << s
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            comps.append(comp)
            seen |= comp
        return comps

    def component_subgraphs(self) -> list:
        return [self.keep_mask(mask) for mask in self.component_masks()]

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_masks()) == 1

    def is_edgeless(self) -> bool:
        return all(row == 0 for row in self.adj)

    # -- structural primitives ---------------------------------------------

    def girth(self) -> GirthValue:
        """Length of a shortest cycle, or INFINITY for forests.

        BFS from every vertex; each non-tree edge seen from root r bounds a
        cycle through r from above, and the bound is tight when r lies on a
        shortest cycle, so the minimum over all roots is exact.
        """
        n = self.n
        if n < 3:
            return INFINITY
        best = None
        for root in range(n):
            dist = [-1] * n
            parent = [-1] * n
            dist[root] = 0
            frontier = [root]
            while frontier:
                if best is not None and 2 * dist[frontier[0]] + 1 >= best:
                    break
                nxt = []
                for u in frontier:
                    for v in bits(self.adj[u]):
                        if dist[v] == -1:
                            dist[v] = dist[u] + 1
                            parent[v] = u
                            nxt.append(v)
                        elif v != parent[u]:
                            cand = dist[u] + dist[v] + 1
                            if best is None or cand < best:
                                best = cand
                frontier = nxt
        return INFINITY if best is None else best

    def pendant_edges(self) -> tuple:
        """All edges incident with a vertex of degree 1."""
        out = []
        for i in range(self.n):
            if self.adj[i].bit_count() == 1:
                j = self.adj[i].bit_length() - 1
                e = (self.labels[min(i, j)], self.labels[max(i, j)])
                if e not in out:
                    out.append(e)
        return tuple(out)

    def blocks(self) -> "BlockDecomposition":
        """Block / cut-vertex decomposition (DFS lowpoint algorithm).

        Isolated vertices form single-vertex blocks so that every vertex
        lies in at least one block; every edge lies in exactly one block.
        """
        n = self.n
        visited = [False] * n
        depth = [0] * n
        low = [0] * n
        block_masks = []
        cut = set()
        edge_stack = []
        timer = [0]

        def dfs(u, pu):
            visited[u] = True
            depth[u] = low[u] = timer[0]
            timer[0] += 1
            children = 0
            for v in bits(self.adj[u]):
                if v == pu:
                    continue
                if not visited[v]:
                    edge_stack.append((u, v))
                    children += 1
                    dfs(v, u)
                    low[u] = min(low[u], low[v])
                    if low[v] >= depth[u]:
                        if pu != -1:
                            cut.add(u)
                        comp = 0
                        while True:
                            x, y = edge_stack.pop()
                            comp |= (1 << x) | (1 << y)
                            if (x, y) == (u, v):
                                break
                        block_masks.append(comp)
                elif depth[v] < depth[u]:
                    edge_stack.append((u, v))
                    low[u] = min(low[u], depth[v])
            return children

        for root in range(n):
            if visited[root]:
                continue
            if self.adj[root] == 0:
                visited[root] = True
                block_masks.append(1 << root)
                continue
            if dfs(root, -1) >= 2:
                cut.add(root)

        blocks = tuple(self.label_set(mask) for mask in block_masks)
        return BlockDecomposition(blocks=blocks, cut_vertices=frozenset(self.labels[i] for i in cut))

    # -- misc ---------------------------------------------------------------

    def canonical_form(self) -> bytes:
        """Relabeling-invariant byte string; equal iff graphs isomorphic."""
        cached = self.__dict__.get("_canon_cache")
        if cached is None:
            from . import canon

            cached = canon.canonical_form(self)
            self.__dict__["_canon_cache"] = cached
        return cached

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, labels={list(self.labels)!r})"


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple
    cut_vertices: frozenset


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; colliding labels on the right get a ``'`` suffix."""
    taken = set(g.labels)
    rename = {}
    for v in h.labels:
        w = v
        while w in taken:
            w = f"{w}'"
        rename[v] = w
        taken.add(w)
    labels = g.labels + tuple(rename[v] for v in h.labels)
    shift = g.n
    adj = list(g.adj) + [row << shift for row in h.adj]
    return Graph(labels, tuple(adj))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise GraphInputError("cycles need at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    if k < 1:
        raise GraphInputError("paths need at least 1 vertex")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def complete_graph(k: int) -> Graph:
    return Graph.from_edges(k, itertools.combinations(range(k), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
