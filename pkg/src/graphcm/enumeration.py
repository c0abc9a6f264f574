"""Exhaustive generation of small connected graphs up to isomorphism and
machine verification of the classification theorems at desk scale.

Generation grows graphs one vertex at a time (every connected graph has a
non-cut vertex, so joining a new vertex to each nonempty subset of a
connected (n-1)-vertex graph reaches every connected n-vertex graph) and
deduplicates by canonical form per level.  Filters whose graph classes are
closed under deleting a non-cut vertex (girth lower bounds, forbidden
short cycles, planarity, block-cactus, cactus) prune during generation;
girth upper bounds only apply to the finished graphs.

Levels are cached per hereditary-filter signature, so repeated suites over
the same class reuse one generation pass.  Verification is embarrassingly
parallel over the enumerated stream: counterexample lists are sorted, so
results do not depend on worker count or stream order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from multiprocessing import get_context

from . import recognition
from .canon import is_isomorphic
from .complexes import DEFAULT_FIELDS, FieldSpec, is_cm_graph, is_gorenstein_graph
from .decomposability import is_vertex_decomposable
from .families import gen_G
from .graph import Graph, GraphInputError, INFINITY, UnsupportedSizeError
from .graphio import read_graph6_file, to_graph6
from .independence import is_w2, is_well_covered
from .planarity import is_planar
from .recognition import (
    is_block_cactus,
    is_cactus,
    recognize_pc,
    recognize_sqc,
    square_cm_criterion,
    t3_partition_condition,
    t3_simplicial_condition,
)

HARD_CAP = 10


@dataclass(frozen=True)
class EnumFilter:
    min_girth: object = None
    max_girth: object = None
    forbid_c4: bool = False
    forbid_c5: bool = False
    planar_only: bool = False
    block_cactus_only: bool = False
    cactus_only: bool = False
    connected_only: bool = True

    def __post_init__(self):
        if self.min_girth is not None and self.max_girth is not None:
            if self.min_girth > self.max_girth:
                raise GraphInputError("min_girth exceeds max_girth")

    def hereditary_key(self):
        return (
            self.min_girth,
            self.forbid_c4,
            self.forbid_c5,
            self.planar_only,
            self.block_cactus_only,
            self.cactus_only,
        )

    def passes_hereditary(self, g: Graph) -> bool:
        if self.min_girth is not None and g.girth() < self.min_girth:
            return False
        if self.forbid_c4 and recognition._cycles_of_length(g, 4):
            return False
        if self.forbid_c5 and recognition._cycles_of_length(g, 5):
            return False
        if self.block_cactus_only and not is_block_cactus(g):
            return False
        if self.cactus_only and not is_cactus(g):
            return False
        if self.planar_only and not is_planar(g, max_n=max(HARD_CAP, g.n)):
            return False
        return True

    def passes(self, g: Graph) -> bool:
        if self.connected_only and not g.is_connected():
            return False
        if self.max_girth is not None and not g.girth() <= self.max_girth:
            return False
        return self.passes_hereditary(g)


# level cache: (hereditary key, n) -> tuple of graphs on exactly n vertices
_LEVELS: dict = {}


def clear_cache():
    _LEVELS.clear()


def _level(n: int, filt: EnumFilter):
    key = (filt.hereditary_key(), n)
    got = _LEVELS.get(key)
    if got is not None:
        return got
    if n == 1:
        out = (Graph.empty(1),) if filt.passes_hereditary(Graph.empty(1)) else ()
    else:
        prev = _level(n - 1, filt)
        seen = set()
        out = []
        for g in prev:
            for nbr_mask in range(1, 1 << (n - 1)):
                h = g._extend(nbr_mask)
                if not filt.passes_hereditary(h):
                    continue
                c = h.canonical_form()
                if c not in seen:
                    seen.add(c)
                    out.append(h)
        out = tuple(out)
    _LEVELS[key] = out
    return out


def enumerate_connected(n: int, filt: EnumFilter = EnumFilter(), hard_cap: int = HARD_CAP):
    """Every connected graph on exactly n vertices satisfying the filter,
    exactly once up to isomorphism."""
    if n < 1:
        return
    if n > hard_cap:
        raise UnsupportedSizeError(f"enumeration capped at {hard_cap} vertices (got {n})")
    for g in _level(n, filt):
        if filt.passes(g):
            yield g


def enumerate_connected_upto(n_max: int, filt: EnumFilter = EnumFilter(), hard_cap: int = HARD_CAP):
    for n in range(1, n_max + 1):
        yield from enumerate_connected(n, filt, hard_cap)


def connected_counts(n_max: int) -> list:
    """Number of connected graphs on 1..n_max vertices, up to isomorphism."""
    return [len(_level(n, EnumFilter())) for n in range(1, n_max + 1)]


# -- theorem verification -----------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    n_max: int
    fields: tuple
    graphs_checked: int
    counterexamples: tuple
    elapsed_s: float
    notes: tuple = ()

    def ok(self) -> bool:
        return not self.counterexamples

    def to_text(self, structured: bool = False) -> str:
        lines = [
            f"theorem: {self.theorem}",
            f"n_max: {self.n_max}",
            f"fields: {','.join(str(c) for c in self.fields)}",
            f"graphs_checked: {self.graphs_checked}",
            f"counterexample_count: {len(self.counterexamples)}",
        ]
        for g6 in self.counterexamples:
            lines.append(f"counterexample: {g6}")
        for note in self.notes:
            lines.append(f"note: {note}")
        if structured:
            lines.append(f"# elapsed_s: {self.elapsed_s:.2f}")
        else:
            lines.append(f"elapsed_s: {self.elapsed_s:.2f}")
        return "\n".join(lines) + "\n"


def _chars(fields) -> tuple:
    return tuple(f.characteristic if isinstance(f, FieldSpec) else int(f) for f in fields)


def _cm_all_fields(g: Graph, chars) -> bool:
    return all(is_cm_graph(g, c) for c in chars)


def _gorenstein_all_fields(g: Graph, chars) -> bool:
    return all(is_gorenstein_graph(g, FieldSpec(c)) for c in chars)


def _is_family_member(g: Graph) -> bool:
    if (g.n + 1) % 3 != 0:
        return False
    k = (g.n + 1) // 3
    return k >= 3 and is_isomorphic(g, gen_G(k))


def _pred_t1(g, chars):
    cert = recognize_sqc(g)
    if cert is None:
        return True
    return is_vertex_decomposable(g)[0] and _cm_all_fields(g, chars)


def _pred_t2(g, chars):
    return _cm_all_fields(g, chars) == (g.n == 1 or recognize_pc(g) is not None)


def _pred_cor_g6(g, chars):
    if g.n == 1:
        return True
    pend = g.pendant_edges()
    matched = set()
    ok = True
    for u, v in pend:
        if u in matched or v in matched:
            ok = False
            break
        matched |= {u, v}
    perfect = ok and matched == set(g.labels)
    return _cm_all_fields(g, chars) == perfect


def _pred_t3(g, chars):
    cm = _cm_all_fields(g, chars)
    return cm == t3_partition_condition(g) == t3_simplicial_condition(g)


def _pred_cor2(g, chars):
    wc_vd = is_well_covered(g) and is_vertex_decomposable(g)[0]
    return wc_vd == _cm_all_fields(g, chars) == (recognize_sqc(g) is not None)


def _pred_cor3(g, chars):
    wc_vd = is_well_covered(g) and is_vertex_decomposable(g)[0]
    return wc_vd == _cm_all_fields(g, chars) == recognition.cactus_cm_condition(g)


def _pred_t4(g, chars):
    return _gorenstein_all_fields(g, chars) == _is_family_member(g)


def _pred_lemma_p(g, chars):
    return is_w2(g) == _is_family_member(g)


def _pred_w2_gor(g, chars):
    if g.isolated_vertices():
        return True
    if not _gorenstein_all_fields(g, chars):
        return True
    return is_w2(g)


_THEOREMS = {
    "T1": ("SQC membership implies vertex decomposable and CM", EnumFilter(), 8, _pred_t1),
    "T2": ("girth >= 5 connected: CM iff K1 or PC", EnumFilter(min_girth=5), 9, _pred_t2),
    "COR_G6": (
        "girth >= 6 connected, not K1: CM iff pendant edges perfectly match V",
        EnumFilter(min_girth=6),
        9,
        _pred_cor_g6,
    ),
    "T3": (
        "no 4- or 5-cycles: CM iff the bounded-degree simplex partition exists",
        EnumFilter(forbid_c4=True, forbid_c5=True),
        8,
        _pred_t3,
    ),
    "COR2": (
        "block-cactus: well-covered+VD iff CM iff SQC",
        EnumFilter(block_cactus_only=True),
        8,
        _pred_cor2,
    ),
    "COR3": (
        "cactus: well-covered+VD iff CM iff incidence conditions (a),(b)",
        EnumFilter(cactus_only=True),
        8,
        _pred_cor3,
    ),
    "T4": (
        "connected planar girth 4: Gorenstein iff isomorphic to a family graph",
        EnumFilter(min_girth=4, max_girth=4, planar_only=True),
        8,
        _pred_t4,
    ),
    "LEMMA_P": (
        "connected planar girth 4: W2 iff isomorphic to a family graph",
        EnumFilter(min_girth=4, max_girth=4, planar_only=True),
        8,
        _pred_lemma_p,
    ),
    "W2_GOR": (
        "Gorenstein without isolated vertices implies W2",
        EnumFilter(),
        7,
        _pred_w2_gor,
    ),
    "EG1": ("square criterion holds along the family", None, 5, None),
}


def theorem_ids() -> tuple:
    return tuple(_THEOREMS)


def default_n_max(theorem_id: str) -> int:
    return _THEOREMS[theorem_id][2]


def _check_one(args):
    theorem_id, g6, chars = args
    from .graphio import from_graph6

    g = from_graph6(g6)
    pred = _THEOREMS[theorem_id][3]
    return g6 if not pred(g, chars) else None


def verify_theorem(
    theorem_id: str,
    n_max: int = None,
    fields=DEFAULT_FIELDS,
    workers: int = 1,
    input_path=None,
) -> VerificationReport:
    """Run one theorem's biconditional over the filtered enumeration (or
    over the family for EG1) and collect counterexamples."""
    if theorem_id not in _THEOREMS:
        raise GraphInputError(f"unknown theorem id {theorem_id!r}; know {sorted(_THEOREMS)}")
    desc, filt, default_cap, pred = _THEOREMS[theorem_id]
    if n_max is None:
        n_max = default_cap
    chars = _chars(fields)
    start = time.monotonic()
    notes = [desc]

    if theorem_id == "EG1":
        bad = []
        for k in range(1, n_max + 1):
            g = gen_G(k)
            if not all(square_cm_criterion(g, c) for c in chars):
                bad.append(to_graph6(g))
        return VerificationReport(
            theorem=theorem_id,
            n_max=n_max,
            fields=chars,
            graphs_checked=n_max,
            counterexamples=tuple(sorted(bad)),
            elapsed_s=time.monotonic() - start,
            notes=("n indexes the family here",) + tuple(notes),
        )

    if input_path is not None:
        stream = [g for g in read_graph6_file(input_path) if g.n <= n_max and filt.passes(g)]
        notes.append(f"external stream: {input_path}")
    else:
        stream = list(enumerate_connected_upto(n_max, filt))

    checked = len(stream)
    if workers > 1:
        jobs = [(theorem_id, to_graph6(g), chars) for g in stream]
        ctx = get_context("fork")
        with ctx.Pool(workers) as pool:
            results = pool.map(_check_one, jobs, chunksize=16)
        bad = [g6 for g6 in results if g6 is not None]
    else:
        bad = [to_graph6(g) for g in stream if not pred(g, chars)]
    bad = sorted(bad)
    # CM means CM over every configured field; a counterexample that is CM
    # over some fields but not others is a finding worth calling out
    for g6 in bad:
        from .graphio import from_graph6

        verdicts = {c: is_cm_graph(from_graph6(g6), c) for c in chars}
        if len(set(verdicts.values())) > 1:
            notes.append(f"field-dependent CM for {g6}: {verdicts}")
    return VerificationReport(
        theorem=theorem_id,
        n_max=n_max,
        fields=chars,
        graphs_checked=checked,
        counterexamples=tuple(bad),
        elapsed_s=time.monotonic() - start,
        notes=tuple(notes),
    )
