import random

import pytest
from hypothesis import given, settings, strategies as st

from langrep.errors import InvalidArgumentsError, ResourceLimitError
from langrep.graphs import (
    ClassWitness,
    Graph,
    HostGraph,
    all_graphs,
    canonical_form,
    check_witness,
    complement_graph,
    complete_bipartite_graph,
    complete_graph,
    connected_components,
    cycle_graph,
    find_isomorphism,
    find_structure,
    is_isomorphic,
    null_graph,
    path_graph,
    recognize,
    sort_labels,
    union_graph,
)
from oracles import (
    brute_bipartite,
    brute_canonical,
    brute_cluster,
    brute_colorable,
    brute_comparability,
    brute_isomorphic,
    brute_split,
    interval_graph_keys,
)


@st.composite
def graphs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    vs = [str(i) for i in range(1, n + 1)]
    pairs = [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(vs, [p for p, b in zip(pairs, bits) if b])


def small_graphs(max_n):
    for n in range(1, max_n + 1):
        yield from all_graphs(n)


class TestModel:
    def test_loops_rejected(self):
        with pytest.raises(InvalidArgumentsError):
            Graph(["1"], [("1", "1")])

    def test_unknown_endpoint_rejected(self):
        with pytest.raises(InvalidArgumentsError):
            Graph(["1"], [("1", "2")])

    def test_edges_canonical(self):
        g = Graph(["1", "2"], [("2", "1"), ("1", "2")])
        assert g.m == 1 and g.sorted_edges() == [("1", "2")]

    def test_natural_label_order(self):
        assert sort_labels(["10", "9", "b", "a", "2"]) == ["2", "9", "10", "a", "b"]

    def test_complement_examples(self):
        assert complement_graph(complete_graph(3)) == null_graph(3)
        assert complement_graph(cycle_graph(4)) == Graph(["1", "2", "3", "4"], [("1", "3"), ("2", "4")])
        assert complement_graph(null_graph(1)) == null_graph(1)

    @given(graphs())
    def test_complement_involution(self, g):
        assert complement_graph(complement_graph(g)) == g

    def test_union_requires_disjoint(self):
        with pytest.raises(InvalidArgumentsError):
            union_graph(path_graph(2), path_graph(2))
        u = union_graph(path_graph(2), complete_bipartite_graph(1, 2))
        assert u.n == 5 and u.m == 3
        assert len(connected_components(u)) == 2


class TestRecognition:
    def test_c4_bipartite(self):
        ok, wit = recognize(cycle_graph(4), "bipartite")
        assert ok
        a, b = wit.payload
        assert {frozenset(a), frozenset(b)} == {frozenset({"1", "3"}), frozenset({"2", "4"})}
        assert "1" in a

    def test_c4_comparability_order(self):
        ok, wit = recognize(cycle_graph(4), "comparability")
        assert ok
        assert set(wit.payload) == {("1", "2"), ("1", "4"), ("3", "2"), ("3", "4")}

    def test_c5_not_comparability(self):
        assert recognize(cycle_graph(5), "comparability") == (False, None)

    def test_bounds(self):
        with pytest.raises(ResourceLimitError):
            recognize(complete_graph(11), "comparability")
        with pytest.raises(ResourceLimitError):
            recognize(complete_graph(11), "k-colorable:3")

    def test_unknown_class(self):
        with pytest.raises(InvalidArgumentsError):
            recognize(complete_graph(2), "planar")

    def test_h_colorable_needs_host(self):
        with pytest.raises(InvalidArgumentsError):
            recognize(complete_graph(2), "h-colorable")

    @pytest.mark.parametrize("cls,oracle", [
        ("comparability", brute_comparability),
        ("bipartite", brute_bipartite),
        ("split", brute_split),
        ("cluster", brute_cluster),
        ("k-colorable:2", lambda g: brute_colorable(g, 2)),
        ("k-colorable:3", lambda g: brute_colorable(g, 3)),
        ("cobipartite", lambda g: brute_bipartite(complement_graph(g))),
        ("complete-multipartite", lambda g: brute_cluster(complement_graph(g))),
    ])
    def test_against_brute_force(self, cls, oracle):
        for g in small_graphs(5):
            ok, wit = recognize(g, cls)
            assert ok == oracle(g), (cls, g)
            if ok:
                assert check_witness(g, wit)

    def test_co_interval_against_endpoint_orderings(self):
        for n in range(1, 6):
            keys = interval_graph_keys(n)
            for g in all_graphs(n):
                co = complement_graph(g)
                ok, wit = recognize(g, "co-interval")
                assert ok == (co.edges in keys), g
                if ok:
                    assert check_witness(g, wit)

    def test_h_colorable(self):
        c5 = cycle_graph(5)
        host = HostGraph(cycle_graph(5))
        ok, wit = recognize(c5, "h-colorable", host=host)
        assert ok and check_witness(c5, wit, host=host)
        assert not recognize(complete_graph(3), "h-colorable", host=host)[0]
        looped = HostGraph(null_graph(1), frozenset({"1"}))
        assert recognize(complete_graph(4), "h-colorable", host=looped)[0]

    @given(graphs())
    @settings(max_examples=60)
    def test_duality(self, g):
        assert recognize(g, "cobipartite")[0] == recognize(complement_graph(g), "bipartite")[0]
        assert recognize(g, "complete-multipartite")[0] == recognize(complement_graph(g), "cluster")[0]

    @given(graphs())
    @settings(max_examples=60)
    def test_comparability_witness_is_order(self, g):
        ok, wit = recognize(g, "comparability")
        if ok:
            rel = set(wit.payload)
            assert all(u != v for u, v in rel)
            assert all((a, d) in rel for a, b in rel for c, d in rel if b == c)
            for u in g.vertices:
                for v in g.vertices:
                    if u < v:
                        assert g.has_edge(u, v) == ((u, v) in rel or (v, u) in rel)


class TestWitnessChecker:
    def test_rejects_bad_witnesses(self):
        c4 = cycle_graph(4)
        assert not check_witness(c4, ClassWitness("bipartite", (["1", "2"], ["3", "4"])))
        assert not check_witness(c4, ClassWitness("comparability", frozenset({("1", "2"), ("2", "3")})))
        assert not check_witness(c4, ClassWitness("cluster", (["1", "2"], ["3", "4"])))
        assert not check_witness(c4, ClassWitness("k-colorable:2", {"1": 0, "2": 0, "3": 1, "4": 1}))
        assert not check_witness(c4, ClassWitness("co-interval", {"1": (1, 2), "2": (3, 4), "3": (5, 6), "4": (7, 8)}))

    def test_accepts_good_witnesses(self):
        c4 = cycle_graph(4)
        assert check_witness(c4, ClassWitness("bipartite", (["1", "3"], ["2", "4"])))
        assert check_witness(c4, ClassWitness("complete-multipartite", (["1", "3"], ["2", "4"])))


class TestIsomorphism:
    def test_examples(self):
        c4 = cycle_graph(4)
        relabelled = cycle_graph(4, labels="abcd")
        assert is_isomorphic(c4, relabelled)
        assert not is_isomorphic(path_graph(4), complete_bipartite_graph(1, 3))
        assert is_isomorphic(cycle_graph(5), complement_graph(cycle_graph(5)))

    def test_mapping_is_an_isomorphism(self):
        g, h = cycle_graph(5), complement_graph(cycle_graph(5))
        f = find_isomorphism(g, h)
        assert all(h.has_edge(f[u], f[v]) for u, v in g.sorted_edges())

    def test_bound(self):
        with pytest.raises(ResourceLimitError):
            is_isomorphic(complete_graph(10), complete_graph(10))

    def test_against_permutations(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randint(1, 6)
            vs = [str(i) for i in range(1, n + 1)]
            pairs = [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]]
            g = Graph(vs, [p for p in pairs if rng.random() < 0.5])
            h = Graph(vs, [p for p in pairs if rng.random() < 0.5])
            assert is_isomorphic(g, h) == brute_isomorphic(g, h)


class TestCanonicalForm:
    def test_examples(self):
        assert canonical_form(null_graph(2)) == "0"
        assert canonical_form(complete_graph(2)) == "1"
        p3 = path_graph(3)
        assert canonical_form(p3) == canonical_form(Graph("xyz", [("x", "z"), ("z", "y")]))

    def test_against_permutation_minimum(self):
        for g in small_graphs(6):
            assert canonical_form(g) == brute_canonical(g)

    @given(graphs(max_n=7), st.randoms(use_true_random=False))
    @settings(max_examples=80)
    def test_label_invariance(self, g, rnd):
        vs = g.sorted_vertices()
        shuffled = vs[:]
        rnd.shuffle(shuffled)
        h = g.relabel(dict(zip(vs, shuffled)))
        assert canonical_form(g) == canonical_form(h)

    def test_class_counts(self):
        assert [len(all_graphs(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]

    def test_bound(self):
        with pytest.raises(ResourceLimitError):
            canonical_form(null_graph(10))

    def test_nine_vertices_fast(self):
        assert canonical_form(complete_graph(9)) == "1" * 36
        assert canonical_form(cycle_graph(9)).count("1") == 9
