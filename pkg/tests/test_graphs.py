import pytest
from hypothesis import given, settings, strategies as st

from oracles import good_labelings_brute, is_good_by_subsets, norm_edges
from strategies import graphs
from twelverep.catalog import make_cycle
from twelverep.graphs import (I3, J4, Q4, LabeledGraph, bad_pattern_witness, components,
                              cutset_filter, cutset_scan, enumerate_good_labelings,
                              format_graph, induced_subgraph, is_good_labeling,
                              labeling_from_order, parse_graph, reduced_form, small_cutsets,
                              supplement)


def test_edges_are_normalized_and_validated():
    g = LabeledGraph(3, frozenset({(2, 1), (3, 2)}))
    assert g.edges == {(1, 2), (2, 3)}
    with pytest.raises(ValueError):
        LabeledGraph(2, frozenset({(1, 3)}))
    with pytest.raises(ValueError):
        LabeledGraph(2, frozenset({(1, 1)}))


def test_relabel_requires_bijection():
    g = make_cycle(4)
    assert g.relabel({1: 2, 2: 1, 3: 3, 4: 4}).edges == {(1, 2), (1, 3), (3, 4), (2, 4)}
    with pytest.raises(ValueError):
        g.relabel({1: 1, 2: 1, 3: 3, 4: 4})


@given(graphs())
def test_graph_file_roundtrip(g):
    assert parse_graph(format_graph(g)) == g


def test_graph_file_errors():
    with pytest.raises(ValueError, match="declares"):
        parse_graph("3 2\n1 2\n")
    with pytest.raises(ValueError, match="bad edge"):
        parse_graph("3 1\n2 2\n")
    with pytest.raises(ValueError, match="duplicate"):
        parse_graph("3 2\n1 2\n1 2\n")


@given(graphs())
def test_supplement_is_an_involution(g):
    assert supplement(supplement(g)) == g


def test_patterns_are_not_good():
    for p in (I3, J4, Q4):
        assert not is_good_labeling(p)
    assert bad_pattern_witness(I3) == ("I3", (1, 2, 3))


@given(graphs())
def test_good_labeling_check_agrees_with_subset_scan(g):
    assert is_good_labeling(g) == is_good_by_subsets(g.n, g.edges)
    assert (bad_pattern_witness(g) is None) == is_good_labeling(g)


@given(graphs(max_n=6), st.data())
def test_goodness_is_hereditary(g, data):
    if not is_good_labeling(g):
        return
    keep = data.draw(st.sets(st.sampled_from(list(g.vertices)), min_size=1))
    assert is_good_labeling(reduced_form(induced_subgraph(g, keep)))


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_enumeration_matches_brute_force(g):
    got = {lab.edges for lab in enumerate_good_labelings(g)}
    assert got == good_labelings_brute(g.n, g.edges)


def test_enumeration_order_and_first_vertex():
    g = make_cycle(4)
    labs = list(enumerate_good_labelings(g, first_vertex=2))
    assert labs and all(is_good_labeling(lab) for lab in labs)
    assert len(set(l.edges for l in enumerate_good_labelings(g))) == len(
        good_labelings_brute(4, g.edges))


def test_labeling_from_order():
    g = LabeledGraph(3, frozenset({(1, 2)}))
    assert labeling_from_order(g, [3, 1, 2]).edges == {(2, 3)}


def test_cutset_filter_and_components():
    # path 1-2-3-4-5 labeled so that removing 3 leaves {1,2} and {4,5}
    path = LabeledGraph(5, frozenset({(1, 2), (2, 3), (3, 4), (4, 5)}))
    assert components(path, [3]) == [frozenset({1, 2}), frozenset({4, 5})]
    assert cutset_filter(path, [3]).ok
    bad = path.relabel({1: 1, 2: 4, 3: 3, 4: 2, 5: 5})
    r = cutset_filter(bad, [3])
    assert r.is_cutset and not r.ok
    assert cutset_scan(bad) is not None
    assert not cutset_filter(path, [1]).is_cutset
    assert (3,) in small_cutsets(path, 1)


@given(graphs(max_n=6))
def test_cutset_violation_means_no_representant(g):
    from oracles import labeled_word

    if cutset_scan(g) is not None:
        assert labeled_word(g.n, norm_edges(g.edges)) is None
