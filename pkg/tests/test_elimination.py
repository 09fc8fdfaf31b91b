import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings

from signedchordal import (
    Digraph,
    EliminationCertificate,
    build_graph,
    induced_subgraph,
    is_chordal_bigraph,
    is_chordal_graph,
    is_signed_simplicial_edge,
    is_signed_simplicial_vertex,
    recognize_chordal_signed_bigraph,
    recognize_chordal_signed_graph,
    verify_certificate,
)
from signedchordal.elimination import (
    CertificateKind,
    digraph_to_signed_graph,
    has_induced_long_cycle,
    is_strict_chordal_digraph,
    signed_simplicial_edges,
)
from signedchordal.errors import NotAnEdge, OddCycle, VertexOutOfRange
from signedchordal.oracle import complete_signings, iter_bigraphs, iter_signed_graphs

from conftest import cycle
from test_graph import signed_graphs


def complete_bigraph(a, b, sign="+"):
    return build_graph(a + b, [(i, a + j, sign) for i in range(a) for j in range(b)])


def star(leaves):
    return build_graph(leaves + 1, [(0, i, "+") for i in range(1, leaves + 1)])


# simplicial predicates

def test_simplicial_vertex_examples():
    assert is_signed_simplicial_vertex(build_graph(3, [(0, 1, "+")]), 2)
    assert is_signed_simplicial_vertex(build_graph(2, [(0, 1, "-")]), 0)
    path = build_graph(3, [(0, 1, "+"), (1, 2, "+")])
    assert not is_signed_simplicial_vertex(path, 1)
    with pytest.raises(VertexOutOfRange):
        is_signed_simplicial_vertex(path, 5)


def test_simplicial_edge_examples(neg_c4):
    assert is_signed_simplicial_edge(star(3), (0, 2))
    assert not any(is_signed_simplicial_edge(neg_c4, e) for e in neg_c4.edge_pairs())
    # x1=0, x2=1, y1=2, y2=3; x1y1 positive opposite edge, negative edges at x1,y1
    k = build_graph(4, [(0, 2, "+"), (0, 3, "-"), (1, 2, "-"), (1, 3, "+")])
    assert is_signed_simplicial_edge(k, (0, 2))


def test_simplicial_edge_errors(neg_c4):
    with pytest.raises(NotAnEdge):
        is_signed_simplicial_edge(neg_c4, (0, 2))
    with pytest.raises(OddCycle):
        is_signed_simplicial_edge(cycle(5, "+"), (0, 1))


def test_edge_with_negative_incident_edges_can_be_simplicial():
    g = build_graph(3, [(0, 1, "-"), (1, 2, "-")])
    assert signed_simplicial_edges(g) == [(0, 1), (1, 2)]


# vertex recognizer

def test_vertex_recognizer_examples(neg_c4):
    k4 = build_graph(4, [(u, v, "+") for u, v in itertools.combinations(range(4), 2)])
    cert = recognize_chordal_signed_graph(k4)
    assert cert.kind is CertificateKind.VERTEX_ORDERING and cert.sequence == (0, 1, 2, 3)
    assert recognize_chordal_signed_graph(neg_c4) is None
    assert recognize_chordal_signed_graph(build_graph(3, [])).sequence == (0, 1, 2)


# edge recognizer

def test_edge_recognizer_examples(neg_c4):
    tree = build_graph(6, [(0, 1, "-"), (1, 2, "+"), (1, 3, "-"), (3, 4, "-"), (3, 5, "+")])
    assert verify_certificate(tree, recognize_chordal_signed_bigraph(tree))
    assert recognize_chordal_signed_bigraph(neg_c4) is None
    cert = recognize_chordal_signed_bigraph(complete_bigraph(3, 3))
    assert len(cert) == 9 and cert.kind is CertificateKind.EDGE_ORDERING
    for signs in itertools.product("+-", repeat=6):
        c6 = build_graph(6, [(i, (i + 1) % 6, s) for i, s in enumerate(signs)])
        assert recognize_chordal_signed_bigraph(c6) is None
    with pytest.raises(OddCycle):
        recognize_chordal_signed_bigraph(cycle(3, "+"))


def test_edgeless_and_empty():
    assert recognize_chordal_signed_bigraph(build_graph(4, [])).sequence == ()
    assert recognize_chordal_signed_bigraph(build_graph(0, [])).sequence == ()


def test_deterministic_certificate():
    path = build_graph(4, [(0, 1, "+"), (1, 2, "+"), (2, 3, "+")])
    assert recognize_chordal_signed_bigraph(path).sequence == ((0, 1), (1, 2), (2, 3))


# certificates

def test_bad_order_on_p4():
    # a-b-c-d with a negative middle edge: N(bc) = {a, d} with a, d non-adjacent
    p4 = build_graph(4, [(0, 1, "+"), (1, 2, "-"), (2, 3, "+")])
    bad = EliminationCertificate(CertificateKind.EDGE_ORDERING, ((1, 2), (0, 1), (2, 3)))
    assert not verify_certificate(p4, bad)
    good = EliminationCertificate(CertificateKind.EDGE_ORDERING, ((0, 1), (1, 2), (2, 3)))
    assert verify_certificate(p4, good)


def test_certificate_with_duplicate_edge():
    g = build_graph(3, [(0, 1, "+"), (1, 2, "+")])
    dup = EliminationCertificate(CertificateKind.EDGE_ORDERING, ((0, 1), (0, 1), (1, 2)))
    assert not verify_certificate(g, dup)
    short = EliminationCertificate(CertificateKind.EDGE_ORDERING, ((0, 1),))
    assert not verify_certificate(g, short)
    short_v = EliminationCertificate(CertificateKind.VERTEX_ORDERING, (0, 1))
    assert not verify_certificate(g, short_v)


# unsigned counterparts

def test_chordal_graph_examples():
    c4 = cycle(4, "+")
    assert not is_chordal_graph(c4)
    chord = build_graph(4, [(0, 1, "+"), (1, 2, "+"), (2, 3, "+"), (3, 0, "+"), (0, 2, "+")])
    assert is_chordal_graph(chord)
    assert is_chordal_graph(star(4))


def test_chordal_bigraph_examples():
    assert not is_chordal_bigraph(cycle(6, "-"))
    assert is_chordal_bigraph(cycle(4, "-"))
    assert is_chordal_bigraph(complete_bigraph(3, 3, "-"))
    with pytest.raises(OddCycle):
        is_chordal_bigraph(cycle(5, "+"))


def test_underlying_of_chordal_signed_graph_is_chordal():
    for n in range(1, 6):
        for g in iter_signed_graphs(n):
            if recognize_chordal_signed_graph(g) is not None:
                assert is_chordal_graph(g)


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edge_pairs())
    return h


@settings(max_examples=200, deadline=None)
@given(signed_graphs(max_n=8))
def test_chordal_graph_matches_networkx(g):
    assert is_chordal_graph(g) == nx.is_chordal(_nx(g))


@settings(max_examples=200, deadline=None)
@given(signed_graphs(max_n=9, bipartite=True))
def test_chordal_bigraph_matches_long_cycle_search(g):
    long_cycle = has_induced_long_cycle(g)
    assert is_chordal_bigraph(g) == (long_cycle is None)
    if long_cycle is not None:
        h = _nx(induced_subgraph(g, long_cycle))
        assert len(long_cycle) >= 6 and all(d == 2 for _, d in h.degree()) and nx.is_connected(h)


# digraphs

def test_digraph_transformation():
    assert digraph_to_signed_graph(Digraph(2, [(0, 1), (1, 0)])).edges()[0][2].value == "+"
    assert digraph_to_signed_graph(Digraph(2, [(0, 1)])).edges()[0][2].value == "-"
    dc4 = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert digraph_to_signed_graph(dc4) == cycle(4, "-")


def test_strict_chordal_digraph():
    sym3 = Digraph(3, [(u, v) for u in range(3) for v in range(3) if u != v])
    assert is_strict_chordal_digraph(sym3)
    assert not is_strict_chordal_digraph(Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    assert is_strict_chordal_digraph(Digraph(2, [(0, 1)]))


# exhaustive invariants on canonical representatives

CANON6 = list(iter_bigraphs(6, canonical=True))
CANON7 = list(iter_bigraphs(7, canonical=True))


def test_soundness_replay():
    for g in CANON7:
        cert = recognize_chordal_signed_bigraph(g)
        if cert is not None:
            assert verify_certificate(g, cert)
            assert is_chordal_bigraph(g)


def test_hereditary():
    for g in CANON6:
        if recognize_chordal_signed_bigraph(g) is None:
            continue
        for r in range(g.n):
            for keep in itertools.combinations(range(g.n), r):
                assert recognize_chordal_signed_bigraph(induced_subgraph(g, keep)) is not None


def test_edge_deletion_closure():
    for g in CANON7:
        if recognize_chordal_signed_bigraph(g) is None:
            continue
        for e in signed_simplicial_edges(g):
            assert recognize_chordal_signed_bigraph(g.without_edges([e])) is not None


def test_greedy_choice_independence():
    rng = random.Random(7)
    for g in CANON6:
        if recognize_chordal_signed_bigraph(g) is None:
            continue
        for _ in range(100):
            cert = recognize_chordal_signed_bigraph(g, chooser=rng.choice)
            assert cert is not None and verify_certificate(g, cert)


def test_complete_bigraph_chordal_iff_simplicial_edge():
    for a in range(1, 4):
        for b in range(1, 4):
            for g in complete_signings(a, b):
                chordal = recognize_chordal_signed_bigraph(g) is not None
                assert chordal == bool(signed_simplicial_edges(g))
