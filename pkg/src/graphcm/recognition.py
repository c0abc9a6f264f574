"""Recognition of the structural graph classes and criteria.

The partition classes work with three kinds of pieces:

* a *simplex* is the closed neighbourhood N[x] of a simplicial vertex x
  (one whose closed neighbourhood induces a complete graph);
* a *basic 5-cycle* has no two adjacent vertices of degree three or more;
* a *basic 4-cycle* has two adjacent vertices of degree two whose other
  two vertices each lie in some simplex or some basic 5-cycle of the whole
  graph; only its two degree-2 vertices enter the partition.

SQC asks for vertex-disjoint pieces of all three kinds covering V(G)
exactly; SC forbids 4-cycle pieces; PC asks for the pendant edges to
perfectly match the vertices incident with pendant edges and for
vertex-disjoint basic 5-cycles to cover everything else.  Recognition is
an exact-cover backtracking over candidate pieces; candidate basicness is
always judged against the full graph, and certificates are witnesses, not
canonical objects.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .complexes import DEFAULT_FIELDS, FieldSpec, is_cm_graph, is_doubly_cm_graph, is_gorenstein_graph
from .decomposability import is_vertex_decomposable
from .graph import Graph, INFINITY, PreconditionError, UnsupportedSizeError, bits
from .independence import independence_number, is_w2, is_well_covered
from .planarity import is_planar

# -- simplicial vertices and simplexes -----------------------------------------


def simplicial_vertices(g: Graph) -> frozenset:
    """All vertices whose closed neighbourhood induces a complete graph."""
    out = []
    for v in range(g.n):
        nmask = g.adj[v] | 1 << v
        if all((g.adj[u] | 1 << u) & nmask == nmask for u in bits(g.adj[v])):
            out.append(g.labels[v])
    return frozenset(out)


def is_simplicial_graph(g: Graph) -> bool:
    """Every vertex belongs to some simplex of g."""
    cover = 0
    for v in simplicial_vertices(g):
        i = g.index(v)
        cover |= g.adj[i] | 1 << i
    return cover == g.full_mask


# -- cycle enumeration ----------------------------------------------------------


def _cycles_of_length(g: Graph, length: int) -> list:
    """All cycles of the given length as index tuples, one per cycle:
    smallest vertex first, orientation fixed by second < last."""
    adj = g.adj
    out = []

    def dfs(start, path, used):
        u = path[-1]
        if len(path) == length:
            if adj[u] >> start & 1 and path[1] < path[-1]:
                out.append(tuple(path))
            return
        for v in bits(adj[u] & ~used):
            if v > start:
                path.append(v)
                dfs(start, path, used | 1 << v)
                path.pop()

    for a in range(g.n):
        dfs(a, [a], 1 << a)
    return out


def basic_3_cycles(g: Graph) -> list:
    """Triangles containing at least one vertex of degree two."""
    out = []
    for cyc in _cycles_of_length(g, 3):
        if any(g.adj[v].bit_count() == 2 for v in cyc):
            out.append(tuple(g.labels[v] for v in cyc))
    return out


def basic_5_cycles(g: Graph) -> list:
    """5-cycles with no two adjacent vertices of degree three or more."""
    out = []
    for cyc in _cycles_of_length(g, 5):
        deg = [g.adj[v].bit_count() for v in cyc]
        ok = True
        for i in range(5):
            for j in range(i + 1, 5):
                if deg[i] >= 3 and deg[j] >= 3 and g.adj[cyc[i]] >> cyc[j] & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(tuple(g.labels[v] for v in cyc))
    return out


def basic_4_cycles(g: Graph) -> list:
    """4-cycles with an adjacent degree-2 pair whose other two vertices each
    belong to a simplex or a basic 5-cycle of g; returned with that pair."""
    simplex_cover = 0
    for v in simplicial_vertices(g):
        i = g.index(v)
        simplex_cover |= g.adj[i] | 1 << i
    basic5_cover = 0
    for cyc in basic_5_cycles(g):
        for v in cyc:
            basic5_cover |= 1 << g.index(v)
    allowed = simplex_cover | basic5_cover
    out = []
    for cyc in _cycles_of_length(g, 4):
        for k in range(4):
            x, y = cyc[k], cyc[(k + 1) % 4]
            if g.adj[x].bit_count() != 2 or g.adj[y].bit_count() != 2:
                continue
            r, s = cyc[(k + 2) % 4], cyc[(k + 3) % 4]
            if allowed >> r & 1 and allowed >> s & 1:
                out.append(
                    (
                        tuple(g.labels[v] for v in cyc),
                        (g.labels[x], g.labels[y]),
                    )
                )
    return out


# -- certificates ----------------------------------------------------------------


@dataclass(frozen=True)
class SqcCertificate:
    """Witness partition V = simplexes | basic 5-cycles | degree-2 pairs of
    basic 4-cycles; counts (m, s, t) satisfy alpha = m + 2s + t."""

    simplexes: tuple  # (simplicial vertex, frozenset N[x]) pairs
    five_cycles: tuple  # label tuples
    four_cycles: tuple  # (cycle label tuple, (b1, b2)) pairs

    @property
    def m(self):
        return len(self.simplexes)

    @property
    def s(self):
        return len(self.five_cycles)

    @property
    def t(self):
        return len(self.four_cycles)

    def pieces(self):
        for x, simplex in self.simplexes:
            yield frozenset(simplex)
        for cyc in self.five_cycles:
            yield frozenset(cyc)
        for _cyc, pair in self.four_cycles:
            yield frozenset(pair)

    def validate(self, g: Graph) -> bool:
        seen = set()
        for piece in self.pieces():
            if seen & piece:
                return False
            seen |= piece
        if seen != set(g.labels):
            return False
        sv = simplicial_vertices(g)
        for x, simplex in self.simplexes:
            if x not in sv or frozenset(g.closed_neighborhood(x)) != frozenset(simplex):
                return False
        b5 = {frozenset(c) for c in basic_5_cycles(g)}
        if any(frozenset(c) not in b5 for c in self.five_cycles):
            return False
        b4 = {(frozenset(c), frozenset(p)) for c, p in basic_4_cycles(g)}
        if any((frozenset(c), frozenset(p)) not in b4 for c, p in self.four_cycles):
            return False
        return independence_number(g) == self.m + 2 * self.s + self.t

    def to_text(self) -> str:
        parts = []
        for x, simplex in self.simplexes:
            parts.append(f"S[{x}]={{{','.join(sorted(map(str, simplex)))}}}")
        for cyc in self.five_cycles:
            parts.append(f"C5=({','.join(map(str, cyc))})")
        for cyc, pair in self.four_cycles:
            parts.append(f"Q4=({','.join(map(str, cyc))});B={{{pair[0]},{pair[1]}}}")
        return "; ".join(parts)


@dataclass(frozen=True)
class ScCertificate:
    simplexes: tuple
    five_cycles: tuple

    @property
    def m(self):
        return len(self.simplexes)

    @property
    def s(self):
        return len(self.five_cycles)

    def as_sqc(self) -> SqcCertificate:
        return SqcCertificate(self.simplexes, self.five_cycles, ())

    def validate(self, g: Graph) -> bool:
        return self.as_sqc().validate(g)

    def to_text(self) -> str:
        return self.as_sqc().to_text()


@dataclass(frozen=True)
class PcCertificate:
    """Pendant edges perfectly matching P(G) plus vertex-disjoint basic
    5-cycles partitioning C(G)."""

    pendant_matching: tuple  # edges (u, v)
    basic5_partition: tuple  # cycles as label tuples

    def validate(self, g: Graph) -> bool:
        pend = set(map(frozenset, g.pendant_edges()))
        if any(frozenset(e) not in pend for e in self.pendant_matching):
            return False
        p_vertices = set()
        for u, v in self.pendant_matching:
            if u in p_vertices or v in p_vertices:
                return False
            p_vertices |= {u, v}
        if p_vertices != {v for e in g.pendant_edges() for v in e}:
            return False
        b5 = {frozenset(c) for c in basic_5_cycles(g)}
        c_vertices = set()
        for cyc in self.basic5_partition:
            if frozenset(cyc) not in b5 or c_vertices & set(cyc):
                return False
            c_vertices |= set(cyc)
        if c_vertices != {v for c in basic_5_cycles(g) for v in c}:
            return False
        return p_vertices.isdisjoint(c_vertices) and p_vertices | c_vertices == set(g.labels)

    def to_text(self) -> str:
        parts = [f"P=({u},{v})" for u, v in self.pendant_matching]
        parts += [f"C5=({','.join(map(str, cyc))})" for cyc in self.basic5_partition]
        return "; ".join(parts)


# -- exact cover -----------------------------------------------------------------


def _exact_cover(universe_mask: int, pieces: list):
    """Deterministic exact-cover backtracking.

    ``pieces`` is an ordered list of (mask, payload); the first cover found
    in that order is returned as a list of payload values, or None.
    """
    chosen = []

    def rec(remaining):
        if remaining == 0:
            return True
        pivot = (remaining & -remaining).bit_length() - 1
        for mask, payload in pieces:
            if mask >> pivot & 1 and mask & ~remaining == 0:
                chosen.append(payload)
                if rec(remaining & ~mask):
                    return True
                chosen.pop()
        return False

    if rec(universe_mask):
        return chosen
    return None


def _simplex_pieces(g: Graph, max_degree=None):
    """Candidate (mask, (vertex, simplex)) pieces, one per distinct simplex;
    the representative is the smallest simplicial vertex of the simplex."""
    by_mask = {}
    for v in sorted(simplicial_vertices(g), key=str):
        if max_degree is not None and g.degree(v) > max_degree:
            continue
        i = g.index(v)
        mask = g.adj[i] | 1 << i
        if mask not in by_mask:
            by_mask[mask] = (v, g.label_set(mask))
    return sorted(((m, p) for m, p in by_mask.items()), key=lambda kv: kv[0])


def _five_cycle_pieces(g: Graph):
    by_mask = {}
    for cyc in basic_5_cycles(g):
        mask = g.mask_of(cyc)
        by_mask.setdefault(mask, cyc)
    return sorted(by_mask.items(), key=lambda kv: kv[0])


def _four_cycle_pieces(g: Graph):
    by_mask = {}
    for cyc, pair in basic_4_cycles(g):
        mask = g.mask_of(pair)
        by_mask.setdefault(mask, (cyc, pair))
    return sorted(by_mask.items(), key=lambda kv: kv[0])


def recognize_sqc(g: Graph):
    simplex = [(m, ("S", p)) for m, p in _simplex_pieces(g)]
    five = [(m, ("C", p)) for m, p in _five_cycle_pieces(g)]
    four = [(m, ("Q", p)) for m, p in _four_cycle_pieces(g)]
    cover = _exact_cover(g.full_mask, simplex + five + four)
    if cover is None:
        return None
    return SqcCertificate(
        simplexes=tuple(p for kind, p in cover if kind == "S"),
        five_cycles=tuple(p for kind, p in cover if kind == "C"),
        four_cycles=tuple(p for kind, p in cover if kind == "Q"),
    )


def recognize_sc(g: Graph):
    simplex = [(m, ("S", p)) for m, p in _simplex_pieces(g)]
    five = [(m, ("C", p)) for m, p in _five_cycle_pieces(g)]
    cover = _exact_cover(g.full_mask, simplex + five)
    if cover is None:
        return None
    return ScCertificate(
        simplexes=tuple(p for kind, p in cover if kind == "S"),
        five_cycles=tuple(p for kind, p in cover if kind == "C"),
    )


def recognize_pc(g: Graph):
    pend = g.pendant_edges()
    p_mask = 0
    for u, v in pend:
        p_mask |= g.mask_of((u, v))
    five = _five_cycle_pieces(g)
    c_mask = 0
    for m, _ in five:
        c_mask |= m
    if p_mask & c_mask or p_mask | c_mask != g.full_mask:
        return None
    # the pendant edges must be pairwise disjoint (a perfect matching of P)
    seen = set()
    for u, v in pend:
        if u in seen or v in seen:
            return None
        seen |= {u, v}
    cover = _exact_cover(c_mask, five)
    if cover is None:
        return None
    return PcCertificate(pendant_matching=tuple(pend), basic5_partition=tuple(cover))


# -- theorem-shaped conditions -----------------------------------------------------


def t3_partition_condition(g: Graph) -> bool:
    """Simplicial vertices of degree at most 3 whose closed neighbourhoods
    partition V(G)."""
    pieces = _simplex_pieces(g, max_degree=3)
    return _exact_cover(g.full_mask, pieces) is not None


def t3_simplicial_condition(g: Graph) -> bool:
    """Well-covered simplicial graph with every simplicial vertex of degree
    at most 3 (the equivalent reformulation; cross-checked in the
    verification suites)."""
    sv = simplicial_vertices(g)
    if not sv or not is_simplicial_graph(g):
        return False
    if any(g.degree(v) > 3 for v in sv):
        return False
    return is_well_covered(g)


def t3_condition(g: Graph) -> bool:
    return t3_partition_condition(g)


def _induced_block(g: Graph, block) -> Graph:
    return g.keep_mask(g.mask_of(block))


def _block_is_complete(sub: Graph) -> bool:
    return sub.m == sub.n * (sub.n - 1) // 2


def _block_is_cycle(sub: Graph) -> bool:
    return sub.n >= 3 and sub.m == sub.n and all(row.bit_count() == 2 for row in sub.adj)


def is_block_cactus(g: Graph) -> bool:
    """Every block complete or a cycle."""
    for block in g.blocks().blocks:
        sub = _induced_block(g, block)
        if not (_block_is_complete(sub) or _block_is_cycle(sub)):
            return False
    return True


def is_cactus(g: Graph) -> bool:
    """Connected, with every block an edge or a cycle (single vertices are
    trivially allowed)."""
    if not g.is_connected():
        return False
    for block in g.blocks().blocks:
        sub = _induced_block(g, block)
        if sub.n <= 2:
            continue
        if not _block_is_cycle(sub):
            return False
    return True


def cactus_cm_condition(g: Graph) -> bool:
    """Literal evaluation of the two incidence conditions on a cactus:

    (a) every degree-2 vertex lies on exactly one pendant edge, basic
        3-cycle, basic 4-cycle or basic 5-cycle;
    (b) every vertex of degree at least 3 lies on exactly one pendant edge,
        basic 3-cycle or basic 5-cycle.
    """
    if not is_cactus(g):
        raise PreconditionError("cactus_cm_condition requires a cactus graph")
    pend = g.pendant_edges()
    b3 = {frozenset(c) for c in basic_3_cycles(g)}
    b4 = {frozenset(c) for c, _pair in basic_4_cycles(g)}
    b5 = {frozenset(c) for c in basic_5_cycles(g)}
    for v in g.labels:
        d = g.degree(v)
        if d < 2:
            continue
        count = sum(1 for e in pend if v in e)
        count += sum(1 for c in b3 if v in c)
        count += sum(1 for c in b5 if v in c)
        if d == 2:
            count += sum(1 for c in b4 if v in c)
        if count != 1:
            return False
    return True


def square_cm_criterion(g: Graph, field) -> bool:
    """For triangle-free g: g is CM and punching any edge xy (deleting
    N(x) | N(y)) leaves a CM graph with independence number alpha(g) - 1.
    The empty punched graph counts as CM with alpha 0."""
    if g.girth() < 4:
        raise PreconditionError("square_cm_criterion requires a triangle-free graph")
    char = field.characteristic if isinstance(field, FieldSpec) else int(field)
    if not is_cm_graph(g, char):
        return False
    a = independence_number(g)
    for u, v in g.edges():
        h = g.punch_edge(u, v)
        if independence_number(h) != a - 1 or not is_cm_graph(h, char):
            return False
    return True


# -- aggregate report ---------------------------------------------------------------


@dataclass
class ClassificationReport:
    n: int
    m: int
    girth: object
    alpha: int
    well_covered: bool
    w2: bool
    vertex_decomposable: bool
    cm: dict
    gorenstein: dict
    doubly_cm: dict
    sqc: object
    sc: object
    pc: object
    simplicial_graph: bool
    t3_condition: bool
    block_cactus: bool
    cactus: bool
    square_cm: dict
    planar: object

    def to_text(self) -> str:
        lines = []

        def emit(key, value):
            if isinstance(value, bool):
                value = "true" if value else "false"
            lines.append(f"{key}: {value}")

        emit("n", self.n)
        emit("m", self.m)
        emit("girth", "infinity" if self.girth is INFINITY else self.girth)
        emit("alpha", self.alpha)
        emit("well_covered", self.well_covered)
        emit("w2", self.w2)
        emit("vertex_decomposable", self.vertex_decomposable)
        for char in sorted(self.cm):
            emit(f"cm[char{char}]", self.cm[char])
        for char in sorted(self.gorenstein):
            emit(f"gorenstein[char{char}]", self.gorenstein[char])
        for char in sorted(self.doubly_cm):
            emit(f"doubly_cm[char{char}]", self.doubly_cm[char])
        for name, cert in (("sqc", self.sqc), ("sc", self.sc), ("pc", self.pc)):
            emit(name, "yes" if cert is not None else "no")
            if cert is not None:
                emit(f"{name}.partition", cert.to_text())
        emit("simplicial_graph", self.simplicial_graph)
        emit("t3_condition", self.t3_condition)
        emit("block_cactus", self.block_cactus)
        emit("cactus", self.cactus)
        for char in sorted(self.square_cm):
            value = self.square_cm[char]
            emit(f"square_cm[char{char}]", "n/a (triangle present)" if value is None else value)
        emit("planar", "unknown (size cap)" if self.planar is None else self.planar)
        return "\n".join(lines) + "\n"


def classify(g: Graph, fields=DEFAULT_FIELDS) -> ClassificationReport:
    chars = [f.characteristic if isinstance(f, FieldSpec) else int(f) for f in fields]
    triangle_free = g.girth() >= 4
    try:
        planar = is_planar(g, max_n=16)
    except UnsupportedSizeError:
        planar = None
    return ClassificationReport(
        n=g.n,
        m=g.m,
        girth=g.girth(),
        alpha=independence_number(g),
        well_covered=is_well_covered(g),
        w2=is_w2(g),
        vertex_decomposable=is_vertex_decomposable(g)[0],
        cm={c: is_cm_graph(g, c) for c in chars},
        gorenstein={c: is_gorenstein_graph(g, FieldSpec(c)) for c in chars},
        doubly_cm={c: is_doubly_cm_graph(g, c) for c in chars},
        sqc=recognize_sqc(g),
        sc=recognize_sc(g),
        pc=recognize_pc(g),
        simplicial_graph=is_simplicial_graph(g),
        t3_condition=t3_condition(g),
        block_cactus=is_block_cactus(g),
        cactus=is_cactus(g),
        square_cm={c: (square_cm_criterion(g, c) if triangle_free else None) for c in chars},
        planar=planar,
    )
