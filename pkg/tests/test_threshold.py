import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import forbidden_subgraph, max_clique_size, max_independent_set_size, threshold_by_lp
from strategies import graphs, threshold_graphs
from threshpack import (
    Graph,
    IntervalModel,
    complement,
    compute_last_col,
    derive_interval_model,
    gen_threshold,
    gen_uniform_arbitrary,
    intersection_graph,
    max_clique,
    max_independent_set,
    realize_threshold_representation,
    recognize_threshold,
    universal_vertices,
)
from threshpack.threshold import rebuild_from_weights

STAR = Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])
P4 = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)])
C4 = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
TWO_K2 = Graph.from_edges(4, [(1, 2), (3, 4)])


def ordered(cert):
    return cert.graph.relabeled(cert.ordering)


class TestRecognition:
    def test_star(self):
        cert = recognize_threshold(STAR)
        assert cert
        assert [STAR.degree(v) for v in cert.ordering] == [3, 1, 1, 1]
        assert (cert.t, cert.g) == (2, 1)

    @pytest.mark.parametrize("g", [P4, C4, TWO_K2], ids=["P4", "C4", "2K2"])
    def test_forbidden_graphs_rejected(self, g):
        res = recognize_threshold(g)
        assert not res
        assert res.is_threshold is False
        assert 1 <= res.vertex <= 4 and 1 <= res.position <= 4

    def test_empty_graph(self):
        cert = recognize_threshold(Graph.empty(5))
        assert cert and cert.t == 1 and cert.g == 0

    def test_complete_graph(self):
        cert = recognize_threshold(Graph.complete(5))
        assert cert and cert.t == 5 and cert.g == 5

    @pytest.mark.parametrize("n", [0, 1])
    def test_trivial_graphs(self, n):
        assert recognize_threshold(Graph.empty(n))

    def test_ties_broken_by_index(self):
        cert = recognize_threshold(Graph.empty(4))
        assert cert.ordering == (1, 2, 3, 4)

    def test_path_rejection_names_first_bad_row(self):
        # degree order 2, 3, 1, 4: row 2 (vertex 3) sees positions 1 and 4
        res = recognize_threshold(P4)
        assert (res.vertex, res.position) == (3, 2)


class TestLastCol:
    def test_empty(self):
        assert compute_last_col(Graph.empty(3)) == [0, 0, 0]

    def test_complete(self):
        assert compute_last_col(Graph.complete(3)) == [3, 3, 2]

    def test_star_centre_first(self):
        assert compute_last_col(STAR) == [4, 1, 1, 1]

    def test_certificate_matches(self):
        cert = recognize_threshold(STAR)
        assert list(cert.last_col) == compute_last_col(ordered(cert))


class TestStructure:
    def test_clique_examples(self):
        assert len(max_clique(recognize_threshold(Graph.complete(5)))) == 5
        assert len(max_clique(recognize_threshold(Graph.empty(5)))) == 1
        clique = max_clique(recognize_threshold(STAR))
        assert len(clique) == 2 and 1 in clique

    def test_independent_set_examples(self):
        assert sorted(max_independent_set(recognize_threshold(Graph.empty(5)))) == [1, 2, 3, 4, 5]
        assert max_independent_set(recognize_threshold(Graph.complete(5))) == [5]
        assert sorted(max_independent_set(recognize_threshold(STAR))) == [2, 3, 4]

    def test_universal_examples(self):
        assert universal_vertices(recognize_threshold(STAR)) == [1]
        assert universal_vertices(recognize_threshold(Graph.empty(4))) == []
        assert sorted(universal_vertices(recognize_threshold(Graph.complete(4)))) == [1, 2, 3, 4]


class TestIntervals:
    def test_star_model(self):
        model = derive_interval_model(recognize_threshold(STAR))
        assert model.intervals == [(0, 3), (0, 1), (1, 2), (2, 3)]
        assert intersection_graph(model) == STAR

    def test_empty_graph_model(self):
        model = derive_interval_model(recognize_threshold(Graph.empty(3)))
        assert model.intervals == [(0, 1), (1, 2), (2, 3)]

    def test_open_endpoints_do_not_touch(self):
        assert intersection_graph(IntervalModel.from_pairs([(0, 1), (1, 2)])).edge_count == 0

    def test_containment_intersects(self):
        assert intersection_graph(IntervalModel.from_pairs([(0, 3), (1, 2)])).edge_count == 1

    def test_rejects_reversed_interval(self):
        with pytest.raises(ValueError):
            IntervalModel.from_pairs([(2, 1)])

    def test_shape_on_generated_graph(self):
        g, _ = gen_threshold(20, 0.45, seed=3)
        cert = recognize_threshold(g)
        model = derive_interval_model(cert)
        at_zero = [k for k in range(20) if model.left[k] == 0]
        units = [k for k in range(20) if model.right[k] - model.left[k] == 1]
        pos = {v: k for k, v in enumerate(cert.ordering, start=1)}
        clique_side = [v for v in range(1, 21) if pos[v] < cert.t]
        assert len(clique_side) == cert.t - 1
        assert all(model.left[v - 1] == 0 for v in clique_side)
        assert len(units) >= 20 - cert.t + 1
        assert len(at_zero) >= cert.t - 1


class TestRealization:
    def test_empty_pair(self):
        p, d = realize_threshold_representation(recognize_threshold(Graph.empty(2)))
        assert rebuild_from_weights(p, d) == Graph.empty(2)

    def test_complete(self):
        p, d = realize_threshold_representation(recognize_threshold(Graph.complete(3)))
        assert rebuild_from_weights(p, d) == Graph.complete(3)

    def test_star(self):
        cert = recognize_threshold(STAR)
        p, d = realize_threshold_representation(cert)
        assert rebuild_from_weights(p, d) == STAR
        assert all(0 <= x <= 1 for x in p) and 0 <= d <= 1


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_recognition_agrees_with_lp(g):
    assert bool(recognize_threshold(g)) == threshold_by_lp(g)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_recognition_agrees_with_forbidden_subgraphs(g):
    assert bool(recognize_threshold(g)) == (forbidden_subgraph(g) is None)


@pytest.mark.parametrize("seed", range(100))
def test_recognition_agrees_with_lp_on_generated_graphs(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 13))
    if seed % 2:
        g, _ = gen_threshold(n, float(rng.random()), seed)
    else:
        g = gen_uniform_arbitrary(n, float(rng.random()), seed)
    assert bool(recognize_threshold(g)) == threshold_by_lp(g)


@settings(max_examples=100, deadline=None)
@given(threshold_graphs(max_n=12))
def test_certificate_invariants(g):
    cert = recognize_threshold(g)
    assert cert
    n = g.n
    degs = [g.degree(v) for v in cert.ordering]
    assert degs == sorted(degs, reverse=True)
    assert sorted(cert.ordering) == list(range(1, n + 1))
    last = list(cert.last_col)
    assert all(a >= b for a, b in zip(last, last[1:]))
    m = ordered(cert)
    for i in range(1, n + 1):
        assert m.neighbors(i) == set(range(1, last[i - 1] + 1)) - {i}
    assert 1 <= cert.t <= n
    clique = max_clique(cert)
    indep = max_independent_set(cert)
    assert all(g.has_edge(a, b) for a in clique for b in clique if a != b)
    assert not any(g.has_edge(a, b) for a in indep for b in indep if a != b)
    assert len(indep) == n - cert.t + 1
    assert sorted(universal_vertices(cert)) == [v for v in range(1, n + 1) if g.degree(v) == n - 1]


@settings(max_examples=100, deadline=None)
@given(threshold_graphs(max_n=10))
def test_clique_and_independent_set_are_maximum(g):
    cert = recognize_threshold(g)
    assert cert.t == max_clique_size(g)
    assert g.n - cert.t + 1 == max_independent_set_size(g)


@settings(max_examples=100, deadline=None)
@given(threshold_graphs(max_n=12))
def test_universal_count_matches_last_row_off_complete(g):
    cert = recognize_threshold(g)
    if g.edge_count < g.n * (g.n - 1) // 2:
        assert cert.g == cert.last_col[-1]


@settings(max_examples=100, deadline=None)
@given(threshold_graphs(max_n=12))
def test_complement_of_threshold_is_threshold(g):
    assert recognize_threshold(complement(g))


@settings(max_examples=100, deadline=None)
@given(threshold_graphs(max_n=12))
def test_interval_model_roundtrip(g):
    assert intersection_graph(derive_interval_model(recognize_threshold(g))) == g


@settings(max_examples=100, deadline=None)
@given(threshold_graphs(max_n=12))
def test_realization_roundtrip(g):
    cert = recognize_threshold(g)
    p, d = realize_threshold_representation(cert)
    assert rebuild_from_weights(p, d) == g
    assert np.all((0 <= p) & (p <= 1))
    along = [p[v - 1] for v in cert.ordering]
    assert along == sorted(along)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_recognition_ignores_labels(g, rnd):
    # shuffling vertex ids permutes every block of equal degrees
    perm = list(range(1, g.n + 1))
    rnd.shuffle(perm)
    assert bool(recognize_threshold(g)) == bool(recognize_threshold(g.relabeled(perm)))


@pytest.mark.parametrize("seed", range(25))
def test_generated_threshold_graphs_roundtrip(seed):
    rng = np.random.default_rng(1000 + seed)
    n = int(rng.integers(2, 201))
    g, _ = gen_threshold(n, float(rng.random()), seed)
    cert = recognize_threshold(g)
    assert cert
    assert intersection_graph(derive_interval_model(cert)) == g
    p, d = realize_threshold_representation(cert)
    assert rebuild_from_weights(p, d) == g
    assert recognize_threshold(complement(g))
