import itertools

import pytest
from hypothesis import given, settings

from conftest import graphs

from graphcm.complexes import DEFAULT_FIELDS, FieldSpec, is_cm_graph
from graphcm.graph import Graph, INFINITY, PreconditionError, complete_bipartite, complete_graph, cycle_graph, path_graph
from graphcm.independence import independence_number, is_well_covered
from graphcm.families import catalog, gen_G
from graphcm.recognition import (
    basic_3_cycles,
    basic_4_cycles,
    basic_5_cycles,
    cactus_cm_condition,
    classify,
    is_block_cactus,
    is_cactus,
    is_simplicial_graph,
    recognize_pc,
    recognize_sc,
    recognize_sqc,
    simplicial_vertices,
    square_cm_criterion,
    t3_partition_condition,
    t3_simplicial_condition,
)

BOWTIE = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])


def test_simplicial_vertices_examples():
    assert simplicial_vertices(path_graph(4)) == {0, 3}
    assert simplicial_vertices(cycle_graph(5)) == frozenset()
    assert simplicial_vertices(complete_graph(3)) == {0, 1, 2}
    assert simplicial_vertices(Graph.empty(2)) == {0, 1}  # isolated vertices are simplicial


def test_is_simplicial_graph_examples():
    assert is_simplicial_graph(complete_graph(3))
    assert not is_simplicial_graph(cycle_graph(5))
    assert is_simplicial_graph(path_graph(4))


def test_basic_5_cycles_examples():
    assert len(basic_5_cycles(cycle_graph(5))) == 1
    chord = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    assert basic_5_cycles(chord) == []
    assert len(basic_5_cycles(gen_G(2))) == 1


# a 4-cycle a-b-c-d with pendants on c and d: the pendants are simplicial,
# their simplexes absorb c and d, and (a, b) is an adjacent degree-2 pair
Q_GRAPH = Graph.from_edges(
    ["a", "b", "c", "d", "p", "q"],
    [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("c", "p"), ("d", "q")],
)


def test_basic_4_cycles_examples():
    assert basic_4_cycles(cycle_graph(4)) == []
    found = basic_4_cycles(Q_GRAPH)
    assert len(found) == 1 and set(found[0][1]) == {"a", "b"}
    # the only 4-cycle of gen_G(3) has all degrees 3, so it is not basic
    assert basic_4_cycles(gen_G(3)) == []
    assert basic_4_cycles(complete_graph(2)) == []


def test_basic_3_cycles_examples():
    assert len(basic_3_cycles(complete_graph(3))) == 1
    assert basic_3_cycles(complete_graph(4)) == []
    assert len(basic_3_cycles(catalog("paw"))) == 1


def test_recognize_sqc_examples():
    cert = recognize_sqc(cycle_graph(5))
    assert cert is not None and (cert.m, cert.s, cert.t) == (0, 1, 0)
    assert cert.validate(cycle_graph(5))
    assert recognize_sqc(cycle_graph(4)) is None
    cert_p4 = recognize_sqc(path_graph(4))
    assert cert_p4 is not None and (cert_p4.m, cert_p4.s, cert_p4.t) == (2, 0, 0)
    assert cert_p4.validate(path_graph(4))


def test_recognize_sqc_uses_four_cycles():
    cert = recognize_sqc(Q_GRAPH)
    assert cert is not None and (cert.m, cert.s, cert.t) == (2, 0, 1)
    assert cert.validate(Q_GRAPH)
    assert independence_number(Q_GRAPH) == cert.m + 2 * cert.s + cert.t
    # gen_G(3) has no simplicial vertices, no basic 5-cycles and no basic
    # 4-cycles, so it lies outside SQC even though it is CM
    assert recognize_sqc(gen_G(3)) is None


def test_recognize_sc_examples():
    assert recognize_sc(cycle_graph(5)) is not None
    assert recognize_sc(gen_G(3)) is None
    assert recognize_sc(Q_GRAPH) is None  # needs the 4-cycle pair
    cert = recognize_sc(complete_graph(2))
    assert cert is not None and cert.m == 1
    assert cert.validate(complete_graph(2))


def test_recognize_pc_examples():
    cert = recognize_pc(complete_graph(2))
    assert cert is not None and len(cert.pendant_matching) == 1
    assert cert.validate(complete_graph(2))
    c5 = recognize_pc(cycle_graph(5))
    assert c5 is not None and len(c5.basic5_partition) == 1
    assert c5.validate(cycle_graph(5))
    assert recognize_pc(cycle_graph(7)) is None


def test_pc_subset_of_sqc(small_connected):
    for g in small_connected:
        if recognize_pc(g) is not None:
            assert recognize_sqc(g) is not None
        if recognize_sc(g) is not None:
            assert recognize_sqc(g) is not None


def _brute_sqc_exists(g):
    """Exact cover by brute force over all piece subsets."""
    from graphcm.recognition import _four_cycle_pieces, _simplex_pieces, _five_cycle_pieces

    pieces = [m for m, _ in _simplex_pieces(g)]
    pieces += [m for m, _ in _five_cycle_pieces(g)]
    pieces += [m for m, _ in _four_cycle_pieces(g)]
    full = g.full_mask
    for r in range(len(pieces) + 1):
        for combo in itertools.combinations(pieces, r):
            union = 0
            ok = True
            for m in combo:
                if union & m:
                    ok = False
                    break
                union |= m
            if ok and union == full:
                return True
    return False


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=6))
def test_sqc_matches_brute_force_cover(g):
    assert (recognize_sqc(g) is not None) == _brute_sqc_exists(g)


def test_t3_examples():
    assert t3_partition_condition(complete_graph(3))
    assert not t3_partition_condition(cycle_graph(7))
    assert not t3_partition_condition(complete_graph(5))
    assert not t3_simplicial_condition(complete_graph(5))
    assert t3_simplicial_condition(complete_graph(3))


def test_block_cactus_and_cactus_examples():
    assert is_block_cactus(BOWTIE) and is_cactus(BOWTIE)
    assert is_block_cactus(complete_graph(4)) and not is_cactus(complete_graph(4))
    chorded = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert not is_block_cactus(chorded) and not is_cactus(chorded)
    assert is_cactus(complete_graph(1))
    assert not is_cactus(Graph.empty(2))  # disconnected


def test_cactus_cm_condition_examples():
    assert cactus_cm_condition(cycle_graph(5))
    assert not cactus_cm_condition(cycle_graph(4))
    paw = catalog("paw")
    assert cactus_cm_condition(paw) == all(is_cm_graph(paw, f.characteristic) for f in DEFAULT_FIELDS)
    with pytest.raises(PreconditionError):
        cactus_cm_condition(complete_graph(4))


def test_square_cm_examples():
    assert square_cm_criterion(complete_graph(2), FieldSpec(0))
    assert square_cm_criterion(cycle_graph(5), FieldSpec(0))
    assert not square_cm_criterion(cycle_graph(4), FieldSpec(0))
    with pytest.raises(PreconditionError):
        square_cm_criterion(complete_graph(3), FieldSpec(0))


def test_classify_reports():
    rep = classify(cycle_graph(5))
    assert rep.well_covered and rep.vertex_decomposable and rep.sqc is not None
    assert all(rep.cm.values()) and all(rep.gorenstein.values())
    text = rep.to_text()
    assert "gorenstein[char0]: true" in text and "girth: 5" in text

    rep7 = classify(cycle_graph(7))
    assert rep7.well_covered and not any(rep7.cm.values()) and rep7.pc is None

    rep3 = classify(gen_G(3))
    assert rep3.w2 and all(rep3.gorenstein.values()) and rep3.girth == 4 and rep3.planar

    repk3 = classify(complete_graph(3))
    assert repk3.square_cm == {0: None, 2: None}
    assert "n/a" in repk3.to_text()


def test_certificates_render():
    assert "S[" in recognize_sqc(path_graph(4)).to_text()
    assert "C5=" in recognize_pc(cycle_graph(5)).to_text()
