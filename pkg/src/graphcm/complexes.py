"""Simplicial complexes, exact reduced homology, and the homological
decision procedures for Cohen-Macaulay / Gorenstein / doubly-CM graphs.

Cohen-Macaulayness of a complex is decided by the Reisner criterion: for
every face F (the empty face included), the reduced homology of the link
of F vanishes below the link's own dimension.  Gorensteinness of a graph
is decided by the Stanley criterion on the core of its independence
complex: every link must have the reduced homology of a sphere of its
dimension (all zero below, exactly one at the top); the void complex,
the complex {emptyset} and a pair of points all count as Gorenstein.

All homology is computed per field characteristic with exact arithmetic:
bitset elimination over GF(2), dense elimination mod p, and fraction-free
integer elimination for characteristic 0.  Verdicts never collapse fields
silently; callers pass the characteristics they care about.

For independence complexes everything runs at graph level: the link of a
face F in Delta(G) is Delta(G minus N[F]), again an independence complex,
so the recursion memoises on canonical forms of punched graphs and the
cache is shared process-wide.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from . import linalg
from .graph import Graph, GraphInputError, bits
from .independence import _mis_masks, independence_number, is_well_covered


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A coefficient field, identified by its characteristic (0 or a prime)."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise GraphInputError(f"field characteristic must be 0 or a prime, got {c}")

    def __str__(self):
        return f"char{self.characteristic}"


DEFAULT_FIELDS = (FieldSpec(0), FieldSpec(2))


def parse_fields(text: str):
    """Parse a comma-separated characteristic list such as "0,2,3"."""
    try:
        chars = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise GraphInputError(f"bad field list {text!r}") from None
    if not chars:
        raise GraphInputError("empty field list")
    return tuple(FieldSpec(c) for c in chars)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers of one complex over one field.

    ``betti[c]`` is the reduced Betti number in dimension c-1, so index 0
    holds the (-1)-dimensional number; the void complex has an empty tuple.
    """

    characteristic: int
    betti: tuple

    def betti_number(self, dim: int) -> int:
        c = dim + 1
        if 0 <= c < len(self.betti):
            return self.betti[c]
        return 0

    @property
    def dim(self) -> int:
        return len(self.betti) - 2


@dataclass(frozen=True)
class SimplicialComplex:
    """A finite simplicial complex given by its facets.

    The void complex (no faces at all) and the complex {emptyset} are
    distinguished: the former has no facets, the latter the single facet
    emptyset.  Facets are stored inclusion-maximal and deduplicated.
    """

    universe: tuple
    facets: tuple
    graph: Graph | None = dc_field(default=None, compare=False, repr=False)

    def __post_init__(self):
        pos = {v: i for i, v in enumerate(self.universe)}
        if len(pos) != len(self.universe):
            raise GraphInputError("universe vertices must be unique")
        fsets = [frozenset(f) for f in self.facets]
        for f in fsets:
            for v in f:
                if v not in pos:
                    raise GraphInputError(f"facet vertex {v!r} not in universe")
        maximal = [f for f in fsets if not any(f < g for g in fsets)]
        seen = set()
        uniq = []
        for f in maximal:
            if f not in seen:
                seen.add(f)
                uniq.append(f)
        uniq.sort(key=lambda f: (len(f), sorted(pos[v] for v in f)))
        object.__setattr__(self, "facets", tuple(uniq))

    @classmethod
    def from_faces(cls, universe, faces, graph=None):
        return cls(tuple(universe), tuple(frozenset(f) for f in faces), graph)

    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self):
        """Dimension; -1 for {emptyset}, None for the void complex."""
        if not self.facets:
            return None
        return max(len(f) for f in self.facets) - 1

    def vertices(self) -> frozenset:
        out = set()
        for f in self.facets:
            out |= f
        return frozenset(out)

    def faces(self) -> set:
        out = set()
        for f in self.facets:
            elems = tuple(f)
            for k in range(len(elems) + 1):
                for c in itertools.combinations(elems, k):
                    out.add(frozenset(c))
        return out

    def has_face(self, f) -> bool:
        fs = frozenset(f)
        return any(fs <= g for g in self.facets)

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def f_vector(self) -> tuple:
        """Face counts by cardinality; entry c counts the (c-1)-faces."""
        counts = {}
        for f in self.faces():
            counts[len(f)] = counts.get(len(f), 0) + 1
        if not counts:
            return ()
        return tuple(counts.get(c, 0) for c in range(max(counts) + 1))


def independence_complex(g: Graph) -> SimplicialComplex:
    """Delta(G): faces are the independent sets, facets the maximal ones."""
    facets = tuple(g.label_set(mask) for mask in sorted(_mis_masks(g)))
    return SimplicialComplex(g.labels, facets, graph=g)


def to_facet_list(delta: SimplicialComplex) -> str:
    """One facet per line, vertices space-separated; the empty facet is an
    empty line, so {emptyset} serialises to a single blank line and the
    void complex to nothing."""
    pos = {v: i for i, v in enumerate(delta.universe)}
    lines = []
    for f in delta.facets:
        lines.append(" ".join(str(v) for v in sorted(f, key=lambda x: pos[x])))
    return "\n".join(lines) + ("\n" if lines else "")


def from_facet_list(text: str) -> SimplicialComplex:
    """Parse the facet-list format; vertex names are kept as strings."""
    facets = []
    universe = []
    seen = set()
    for raw in text.splitlines():
        names = raw.split()
        facets.append(frozenset(names))
        for v in names:
            if v not in seen:
                seen.add(v)
                universe.append(v)
    return SimplicialComplex(tuple(universe), tuple(facets))


def link(delta: SimplicialComplex, face) -> SimplicialComplex:
    f = frozenset(face)
    if not delta.has_face(f):
        raise GraphInputError(f"{set(face)!r} is not a face of the complex")
    facets = tuple(s - f for s in delta.facets if f <= s)
    universe = tuple(v for v in delta.universe if v not in f)
    graph = None
    if delta.graph is not None:
        punched = set()
        for v in f:
            punched |= delta.graph.closed_neighborhood(v)
        graph = delta.graph.delete_vertices(punched)
    return SimplicialComplex(universe, facets, graph=graph)


def delete(delta: SimplicialComplex, vertices) -> SimplicialComplex:
    u = frozenset(vertices)
    unknown = u - set(delta.universe)
    if unknown:
        raise GraphInputError(f"vertices {sorted(map(repr, unknown))} not in universe")
    facets = tuple(s - u for s in delta.facets)
    universe = tuple(v for v in delta.universe if v not in u)
    graph = None
    if delta.graph is not None:
        graph = delta.graph.delete_vertices(u & set(delta.graph.labels))
    return SimplicialComplex(universe, facets, graph=graph)


def cone_points(delta: SimplicialComplex) -> frozenset:
    """Vertices lying in every facet (st(x) = Delta)."""
    if not delta.facets:
        return frozenset()
    common = set(delta.facets[0])
    for f in delta.facets[1:]:
        common &= f
    return frozenset(common)


def core(delta: SimplicialComplex) -> SimplicialComplex:
    return delete(delta, cone_points(delta))


# -- reduced homology ---------------------------------------------------------


def _faces_by_card_from_complex(delta: SimplicialComplex):
    pos = {v: i for i, v in enumerate(delta.universe)}
    by_card = {}
    for f in delta.faces():
        key = tuple(sorted(pos[v] for v in f))
        by_card.setdefault(len(f), set()).add(key)
    if not by_card:
        return []
    return [sorted(by_card.get(c, ())) for c in range(max(by_card) + 1)]


def _independent_masks_by_card(g: Graph):
    full = g.full_mask
    nonadj = [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)]
    by_card = [[0]]

    def rec(cur, allowed, size):
        if size + 1 >= len(by_card):
            by_card.append([])
        for v in bits(allowed):
            nxt = cur | 1 << v
            by_card[size + 1].append(nxt)
            rec(nxt, allowed & nonadj[v] & ~((1 << (v + 1)) - 1), size + 1)

    rec(0, full, 0)
    return [sorted(level) for level in by_card if level]


def _boundary_rank(prev_faces, cur_faces, char: int) -> int:
    """Rank of the boundary map from cur_faces (cardinality c) down to
    prev_faces (cardinality c-1); faces are sorted index tuples."""
    if not cur_faces or not prev_faces:
        return 0
    row_of = {f: i for i, f in enumerate(prev_faces)}
    if char == 2:
        cols = []
        for f in cur_faces:
            colmask = 0
            for t in range(len(f)):
                sub = f[:t] + f[t + 1 :]
                colmask |= 1 << row_of[sub]
            cols.append(colmask)
        return linalg.rank_gf2(cols)
    ncols = len(cur_faces)
    rows = [[0] * ncols for _ in prev_faces]
    for j, f in enumerate(cur_faces):
        for t in range(len(f)):
            sub = f[:t] + f[t + 1 :]
            rows[row_of[sub]][j] = 1 if t % 2 == 0 else -1
    if char == 0:
        return linalg.rank_char0(rows)
    return linalg.rank_mod_p(rows, char)


def _profile_from_cards(faces_by_card, char: int) -> tuple:
    """Reduced Betti numbers indexed by cardinality (index c = dim c-1)."""
    if not faces_by_card:
        return ()
    top = len(faces_by_card) - 1
    # masks vs tuples: normalise masks to sorted index tuples
    levels = []
    for level in faces_by_card:
        norm = []
        for f in level:
            if isinstance(f, int):
                norm.append(tuple(bits(f)))
            else:
                norm.append(tuple(f))
        levels.append(norm)
    ranks = [0] * (top + 2)
    for c in range(1, top + 1):
        ranks[c] = _boundary_rank(levels[c - 1], levels[c], char)
    return tuple(len(levels[c]) - ranks[c] - ranks[c + 1] for c in range(top + 1))


def betti_profile(delta: SimplicialComplex, field: FieldSpec) -> HomologyProfile:
    """Exact reduced homology ranks of the complex over the given field,
    empty face included (so {emptyset} has a single 1 in dimension -1)."""
    char = field.characteristic
    if delta.graph is not None:
        return HomologyProfile(char, graph_betti(delta.graph, char))
    return HomologyProfile(char, _profile_from_cards(_faces_by_card_from_complex(delta), char))


# -- graph-level cached engines ------------------------------------------------

_PROFILE_CACHE: dict = {}
_REISNER_CACHE: dict = {}
_GORSTAR_CACHE: dict = {}


def clear_caches():
    _PROFILE_CACHE.clear()
    _REISNER_CACHE.clear()
    _GORSTAR_CACHE.clear()


def graph_betti(g: Graph, char: int) -> tuple:
    """Reduced Betti numbers of Delta(g), indexed by face cardinality."""
    key = (g.canonical_form(), char)
    out = _PROFILE_CACHE.get(key)
    if out is None:
        out = _profile_from_cards(_independent_masks_by_card(g), char)
        _PROFILE_CACHE[key] = out
    return out


def _punches(g: Graph):
    full = g.full_mask
    for v in range(g.n):
        yield g.keep_mask(full & ~(g.adj[v] | 1 << v))


def _reisner_graph(g: Graph, char: int) -> bool:
    """Reisner criterion for Delta(g): faces containing a vertex v are
    handled by recursing into the punched graph g minus N[v]."""
    key = (g.canonical_form(), char)
    out = _REISNER_CACHE.get(key)
    if out is not None:
        return out
    if not is_well_covered(g):  # CM complexes are pure
        out = False
    else:
        betti = graph_betti(g, char)
        alpha = len(betti) - 1
        out = all(betti[c] == 0 for c in range(alpha))
        if out:
            out = all(_reisner_graph(h, char) for h in _punches(g))
    _REISNER_CACHE[key] = out
    return out


def _gorenstein_star_graph(g: Graph, char: int) -> bool:
    """Stanley links-are-spheres condition over all faces of Delta(g)."""
    key = (g.canonical_form(), char)
    out = _GORSTAR_CACHE.get(key)
    if out is not None:
        return out
    betti = graph_betti(g, char)
    alpha = len(betti) - 1
    out = all(betti[c] == 0 for c in range(alpha)) and betti[alpha] == 1
    if out:
        out = all(_gorenstein_star_graph(h, char) for h in _punches(g))
    _GORSTAR_CACHE[key] = out
    return out


def is_cm_graph(g: Graph, field) -> bool:
    char = field.characteristic if isinstance(field, FieldSpec) else int(field)
    return _reisner_graph(g, char)


def is_cm(delta: SimplicialComplex, field: FieldSpec) -> bool:
    """Reisner criterion; graph-backed complexes use the cached recursion."""
    if delta.graph is not None:
        return is_cm_graph(delta.graph, field)
    if delta.is_void():
        return True
    if not delta.is_pure():
        return False
    char = field.characteristic
    for f in delta.faces():
        lk = link(delta, f)
        betti = _profile_from_cards(_faces_by_card_from_complex(lk), char)
        if any(betti[c] != 0 for c in range(len(betti) - 1)):
            return False
    return True


def is_doubly_cm(delta: SimplicialComplex, field: FieldSpec) -> bool:
    if not is_cm(delta, field):
        return False
    d = delta.dim
    for x in sorted(delta.vertices(), key=str):
        dx = delete(delta, [x])
        if dx.dim != d or not is_cm(dx, field):
            return False
    return True


def is_doubly_cm_graph(g: Graph, field) -> bool:
    if not is_cm_graph(g, field):
        return False
    a = independence_number(g)
    for v in g.labels:
        h = g.delete_vertices([v])
        if independence_number(h) != a or not is_cm_graph(h, field):
            return False
    return True


def is_gorenstein_graph(g: Graph, field) -> bool:
    """Gorenstein over the field, via the Stanley criterion on the core of
    Delta(g).  The cone points of Delta(g) are exactly the isolated
    vertices of g, so the core is the independence complex of g minus its
    isolated vertices; the empty graph's complex {emptyset} is Gorenstein,
    which makes K1 and K2 come out Gorenstein as they should."""
    char = field.characteristic if isinstance(field, FieldSpec) else int(field)
    stripped = g.delete_vertices(g.isolated_vertices())
    return _gorenstein_star_graph(stripped, char)
