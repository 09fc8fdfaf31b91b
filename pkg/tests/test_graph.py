import itertools

import pytest
from hypothesis import given, settings, strategies as st

from signedchordal import (
    NEG,
    POS,
    PatternGraph,
    Sign,
    are_isomorphic,
    bipartition,
    build_graph,
    expand_pattern,
    induced_subgraph,
    is_positive_biclique,
    is_positive_clique,
)
from signedchordal.catalog import figure_pattern
from signedchordal.errors import DuplicateEdge, LoopEdge, OddCycle, VertexOutOfRange
from signedchordal.graph import check_isomorphism, components, side_masks

from conftest import cycle


def test_build_single_edge():
    g = build_graph(2, [(0, 1, "+")])
    assert g.n == 2 and g.m == 1
    assert g.sign(1, 0) is POS


def test_build_negative_c4(neg_c4):
    assert neg_c4.m == 4
    assert all(s is NEG for _, _, s in neg_c4.edges())


@pytest.mark.parametrize("n,edges,exc", [
    (3, [(0, 0, "+")], LoopEdge),
    (2, [(0, 2, "+")], VertexOutOfRange),
    (3, [(0, 1, "+"), (1, 0, "-")], DuplicateEdge),
])
def test_build_rejects(n, edges, exc):
    with pytest.raises(exc):
        build_graph(n, edges)


def test_sign_parse():
    assert Sign.parse("-") is NEG
    assert Sign.parse(1) is POS
    assert POS.flipped() is NEG
    with pytest.raises(ValueError):
        Sign.parse("?")


def test_induced_path_from_c4(neg_c4):
    p = induced_subgraph(neg_c4, [0, 1, 2])
    assert p.n == 3 and p.m == 2
    assert all(s is NEG for _, _, s in p.edges())


def test_induced_identity(neg_c4):
    assert induced_subgraph(neg_c4, range(4)) == neg_c4


def test_induced_subgraph_map():
    g = cycle(6, "+")
    sub, fwd = induced_subgraph(g, [5, 1, 0], with_map=True)
    assert fwd == {0: 0, 1: 1, 5: 2}
    assert sub.sign(0, 2) is POS and sub.sign(0, 1) is POS and not sub.has_edge(1, 2)


def test_induced_out_of_range(neg_c4):
    with pytest.raises(VertexOutOfRange):
        induced_subgraph(neg_c4, [0, 9])


def test_f2_with_negative_black_edge_contains_f1():
    f2 = figure_pattern("F2")
    black = sorted(f2.black)
    for signs in itertools.product((POS, NEG), repeat=len(black)):
        if NEG not in signs:
            continue
        g = f2.instantiate(signs)
        hits = [s for s in itertools.combinations(range(g.n), 4)
                if are_isomorphic(induced_subgraph(g, s), cycle(4, "-")) is not None]
        assert hits


def test_bipartition_c4(neg_c4):
    bp = bipartition(neg_c4)
    assert bp.x == frozenset({0, 2}) and bp.y == frozenset({1, 3})


def test_bipartition_triangle():
    with pytest.raises(OddCycle):
        bipartition(cycle(3, "+"))


def test_bipartition_edgeless():
    bp = bipartition(build_graph(3, []))
    assert bp.x == frozenset({0, 1, 2}) and bp.y == frozenset()


def test_positive_biclique(pos_k22, neg_c4):
    assert is_positive_biclique(pos_k22, range(4))
    assert not is_positive_biclique(neg_c4, range(4))
    assert is_positive_biclique(neg_c4, [2])
    assert is_positive_biclique(neg_c4, [])


def test_positive_clique():
    k3 = build_graph(3, [(0, 1, "+"), (1, 2, "+"), (0, 2, "+")])
    assert is_positive_clique(k3, range(3))
    assert not is_positive_clique(build_graph(3, [(0, 1, "+"), (1, 2, "+")]), range(3))


def test_isomorphism_examples(neg_c4):
    relabeled = neg_c4.relabeled([2, 0, 3, 1])
    f = are_isomorphic(neg_c4, relabeled)
    assert f is not None and check_isomorphism(neg_c4, relabeled, f)
    assert are_isomorphic(neg_c4, cycle(4, "+")) is None
    assert are_isomorphic(neg_c4, cycle(4, "+"), respect_signs=False) is not None


def test_f2_single_negative_black_edges_isomorphic():
    f2 = figure_pattern("F2")
    a = f2.instantiate([NEG, POS])
    b = f2.instantiate([POS, NEG])
    brute = [p for p in itertools.permutations(range(5)) if check_isomorphism(a, b, p)]
    assert brute
    assert are_isomorphic(a, b) is not None


def test_expand_pattern_counts():
    assert len(expand_pattern(figure_pattern("F1"))) == 1
    f2 = figure_pattern("F2")
    assert len(list(f2.raw_expansions())) == 4
    assert len(expand_pattern(f2)) == 3
    empty = PatternGraph(3, frozenset(), frozenset(), frozenset())
    out = expand_pattern(empty)
    assert len(out) == 1 and out[0].m == 0


def test_pattern_rejects_overlapping_colours():
    with pytest.raises(DuplicateEdge):
        PatternGraph(2, frozenset({(0, 1)}), frozenset({(0, 1)}), frozenset())


def test_components():
    g = build_graph(5, [(0, 1, "+"), (3, 4, "-")])
    assert sorted(components(g)) == [0b11, 0b100, 0b11000]


# ---------------------------------------------------------------------------
# properties

@st.composite
def signed_graphs(draw, max_n=7, bipartite=False):
    n = draw(st.integers(1, max_n))
    if bipartite:
        a = draw(st.integers(0, n))
        pairs = [(i, j) for i in range(a) for j in range(a, n)]
    else:
        pairs = list(itertools.combinations(range(n), 2))
    choice = draw(st.lists(st.sampled_from("0+-"), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [(u, v, s) for (u, v), s in zip(pairs, choice) if s != "0"])


@settings(max_examples=150, deadline=None)
@given(signed_graphs(), st.randoms(use_true_random=False))
def test_isomorphism_relabel_roundtrip(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabeled(perm)
    f = are_isomorphic(g, h)
    assert f is not None and check_isomorphism(g, h, f)
    back = are_isomorphic(h, g)
    assert back is not None and check_isomorphism(h, g, back)
    assert are_isomorphic(g, g) is not None


@settings(max_examples=150, deadline=None)
@given(signed_graphs(), st.data())
def test_induced_of_induced(g, data):
    keep2 = sorted(data.draw(st.sets(st.integers(0, g.n - 1))))
    keep1 = sorted(data.draw(st.sets(st.sampled_from(keep2)))) if keep2 else []
    inner, fwd = induced_subgraph(g, keep2, with_map=True)
    assert induced_subgraph(inner, [fwd[v] for v in keep1]) == induced_subgraph(g, keep1)


@settings(max_examples=150, deadline=None)
@given(signed_graphs(bipartite=True))
def test_bipartition_valid(g):
    bp = bipartition(g)
    bp.validate(g)
    xmask, _ = side_masks(g)
    for comp in components(g):
        assert xmask >> (comp & -comp).bit_length() - 1 & 1


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 5), st.integers(0, 3), st.data())
def test_expansion_respects_colours(nblack, nred, data):
    pairs = [(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 5), (1, 5), (0, 5)]
    chosen = data.draw(st.permutations(pairs))[: nblack + nred]
    black, red = chosen[:nblack], chosen[nblack:]
    p = PatternGraph(6, frozenset(), frozenset(red), frozenset(black))
    out = expand_pattern(p)
    assert 1 <= len(out) <= 2 ** len(black)
    for g in out:
        assert all(g.sign(u, v) is NEG for u, v in red)
        assert all(g.has_edge(u, v) for u, v in black)
