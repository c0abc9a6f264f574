from hypothesis import given, settings

from conftest import graphs

from graphcm.complexes import SimplicialComplex, independence_complex, link, delete, is_cm_graph, DEFAULT_FIELDS
from graphcm.decomposability import is_shedding_vertex, is_vertex_decomposable, replay_certificate
from graphcm.graph import Graph, complete_graph, cycle_graph, disjoint_union, path_graph
from graphcm.families import gen_G, gen_H


def _vd_complex(delta: SimplicialComplex) -> bool:
    """Direct complex-level recursion, used as an oracle for the graph-level
    implementation: a simplex (at most one facet), or a vertex v with both
    the deletion and the link vertex decomposable and no face of the link a
    facet of the deletion."""
    if len(delta.facets) <= 1:
        return True
    for v in sorted(delta.vertices(), key=str):
        dv = delete(delta, [v])
        lk = link(delta, [v])
        if any(face in dv.facets for face in lk.faces()):
            continue
        if _vd_complex(dv) and _vd_complex(lk):
            return True
    return False


def test_shedding_examples():
    assert is_shedding_vertex(complete_graph(2), 0)
    c4 = cycle_graph(4)
    assert all(not is_shedding_vertex(c4, v) for v in c4.labels)
    c5 = cycle_graph(5)
    assert all(is_shedding_vertex(c5, v) for v in c5.labels)


def test_vd_examples():
    assert is_vertex_decomposable(cycle_graph(5))[0]
    assert not is_vertex_decomposable(cycle_graph(4))[0]
    for n in range(1, 7):
        assert is_vertex_decomposable(gen_G(n))[0]
        assert is_vertex_decomposable(gen_H(n))[0]
    assert not is_vertex_decomposable(cycle_graph(7))[0]


def test_vd_union_rule():
    g = disjoint_union(cycle_graph(5), path_graph(4))
    assert is_vertex_decomposable(g)[0]
    bad = disjoint_union(cycle_graph(5), cycle_graph(4))
    assert not is_vertex_decomposable(bad)[0]


def test_certificates_replay():
    for g in (cycle_graph(5), path_graph(4), gen_G(3), complete_graph(4), gen_H(4)):
        ok, cert = is_vertex_decomposable(g, want_certificate=True)
        assert ok and cert is not None
        assert replay_certificate(g, cert)
        assert "shed=" in cert.to_text()
    ok, cert = is_vertex_decomposable(Graph.empty(3), want_certificate=True)
    assert ok and cert.steps == ()


def test_certificate_rejects_wrong_graph():
    _, cert = is_vertex_decomposable(cycle_graph(5), want_certificate=True)
    assert not replay_certificate(cycle_graph(7), cert)


def test_graph_recursion_equals_complex_definition(small_connected):
    for g in small_connected:
        assert is_vertex_decomposable(g)[0] == _vd_complex(independence_complex(g))


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=6))
def test_graph_recursion_equals_complex_definition_random(g):
    assert is_vertex_decomposable(g)[0] == _vd_complex(independence_complex(g))


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=6))
def test_vd_and_well_covered_imply_cm(g):
    # purity is needed: P3 is vertex decomposable (non-pure) but not CM
    from graphcm.independence import is_well_covered

    if is_vertex_decomposable(g)[0] and is_well_covered(g):
        for field in DEFAULT_FIELDS:
            assert is_cm_graph(g, field.characteristic)


def test_non_pure_vd_example():
    # the non-pure definition makes P3 vertex decomposable even though its
    # complex is not pure, hence not CM
    p3 = path_graph(3)
    assert is_vertex_decomposable(p3)[0]
    assert not is_cm_graph(p3, 0)
