import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from hyperkmax import (
    Hypergraph,
    complement,
    complete,
    components,
    crossing_edges,
    delete_vertices,
    disjoint_union,
    empty,
    h_l,
    h_u,
    induced,
    r_join,
    union,
)
from hyperkmax.bounds import binom
from hyperkmax.hypergraph import mask_of

from conftest import as_sets, random_hypergraph
from oracles import all_r_sets, literal_gnk, pairwise_join
from oracles import components as oracle_components


@st.composite
def hypergraphs(draw, max_n=8):
    r = draw(st.integers(2, 4))
    n = draw(st.integers(0, max_n))
    pool = list(combinations(range(n), r))
    edges = draw(st.lists(st.sampled_from(pool), unique=True)) if pool else []
    return Hypergraph.from_edges(n, r, edges)


class TestConstruction:
    def test_complete_counts(self):
        assert len(complete(5, 3)) == len(all_r_sets(range(5), 3)) == 10
        assert len(complete(3, 4)) == 0 and complete(3, 4).n == 3
        h = complete(0, 2)
        assert h.n == 0 and len(h) == 0

    def test_rejects_bad_uniformity(self):
        with pytest.raises(ValueError):
            complete(4, 1)
        with pytest.raises(ValueError):
            Hypergraph.from_edges(3, 1, [(0,)])

    @pytest.mark.parametrize(
        "edges",
        [[(0, 1)], [(0, 1, 1)], [(0, 1, 5)], [(0, 1, 2), (2, 1, 0)]],
    )
    def test_from_edges_validation(self, edges):
        with pytest.raises(ValueError):
            Hypergraph.from_edges(4, 3, edges)

    def test_canonical_order_independent_of_input(self):
        a = Hypergraph.from_edges(5, 3, [(2, 3, 4), (0, 1, 2), (4, 0, 1)])
        b = Hypergraph.from_edges(5, 3, [(1, 0, 4), (4, 3, 2), (2, 1, 0)])
        assert a == b
        assert a.edges == ((0, 1, 2), (0, 1, 4), (2, 3, 4))

    def test_value_semantics(self):
        h = Hypergraph.from_edges(4, 3, [(0, 1, 2)])
        g = h.add_edge((1, 2, 3))
        assert len(h) == 1 and len(g) == 2
        assert g.remove_edge((1, 2, 3)) == h

    def test_edge_edit_errors(self):
        h = Hypergraph.from_edges(4, 3, [(0, 1, 2)])
        with pytest.raises(ValueError):
            h.add_edge((0, 1, 2))
        with pytest.raises(ValueError):
            h.remove_edge((1, 2, 3))
        with pytest.raises(ValueError):
            h.add_edge((0, 1))
        with pytest.raises(ValueError):
            h.add_edge((0, 1, 7))

    def test_adding_all_missing_gives_complete(self):
        h = random_hypergraph(random.Random(3), 7, 3, 0.4)
        assert h.add_edges(complement(h).masks) == complete(7, 3)


class TestSetAlgebra:
    def test_complement_examples(self):
        assert len(complement(complete(6, 3))) == 0
        c = complement(h_l(6, 2, 3))
        assert as_sets(c) == all_r_sets(range(2, 6), 3)
        assert len(c) == 4

    @given(hypergraphs())
    def test_complement_involution_and_count(self, h):
        assert complement(complement(h)) == h
        assert len(h) + len(complement(h)) == binom(h.n, h.r)

    def test_disjoint_union(self):
        e = complete(3, 3)
        u = union(e, e, offset=3)
        assert u.n == 6 and u.edges == ((0, 1, 2), (3, 4, 5))
        assert disjoint_union(e, e) == u

    @given(hypergraphs())
    def test_union_idempotent(self, h):
        assert union(h, h) == h

    def test_union_rejects_mixed_r(self):
        with pytest.raises(ValueError):
            union(complete(3, 3), complete(3, 2))
        with pytest.raises(ValueError):
            r_join(complete(3, 3), complete(3, 2))

    def test_union_of_cliques_count(self):
        for k, r, p in [(3, 2, 4), (4, 3, 3), (5, 4, 2)]:
            assert len(disjoint_union(*[complete(k, r)] * (p - 1))) == (p - 1) * binom(k, r)

    def test_r_join_example(self):
        j = r_join(empty(2, 3), empty(4, 3))
        assert len(j) == 16 == binom(6, 3) - binom(2, 3) - binom(4, 3)

    @given(hypergraphs(max_n=7))
    def test_r_join_identity(self, h):
        assert r_join(h, empty(0, h.r)) == h

    def test_r_join_count_and_oracle(self):
        rng = random.Random(11)
        for _ in range(60):
            r = rng.choice([2, 3, 4])
            n1 = rng.randint(0, 6)
            n2 = rng.randint(0, 12 - n1)
            a = random_hypergraph(rng, n1, r, 0.5)
            b = random_hypergraph(rng, n2, r, 0.5)
            j = r_join(a, b)
            assert len(j) == len(a) + len(b) + binom(n1 + n2, r) - binom(n1, r) - binom(n2, r)
            assert set(as_sets(j)) == pairwise_join(n1, as_sets(a), n2, as_sets(b), r)

    def test_graph_join_with_independent_set(self):
        for k in range(1, 4):
            for m in range(0, 5):
                g = random_hypergraph(random.Random(k * 10 + m), m, 2, 0.5)
                j = r_join(empty(k, 2), g)
                want = {frozenset(v + k for v in e) for e in as_sets(g)}
                want |= {frozenset((a, b)) for a in range(k) for b in range(k, k + m)}
                assert set(as_sets(j)) == want


class TestFamilies:
    def test_h_l_examples(self):
        assert len(h_l(6, 2, 3)) == 16
        assert len(complement(h_l(7, 2, 3))) == 10
        for n in range(3, 6):
            assert h_l(n, 2, 3 if n <= 4 else 4) == complete(n, 3 if n <= 4 else 4)

    def test_h_l_missing_edges_avoid_hub(self):
        for e in complement(h_l(7, 2, 3)).edges:
            assert not set(e) & {0, 1}

    @pytest.mark.parametrize("bad", [(2, 2, 3), (5, 1, 3), (5, 2, 1)])
    def test_h_l_rejects(self, bad):
        with pytest.raises(ValueError):
            h_l(*bad)

    def test_h_l_size_identity(self):
        for r in range(2, 5):
            for k in range(2, 6):
                for n in range(k + 1, 15):
                    if binom(n, r) <= 1001:
                        assert len(h_l(n, k, r)) == binom(n, r) - binom(n - k, r)

    def test_h_u_examples(self):
        assert len(h_u(8, 2, 3)) == 36
        assert len(h_u(9, 2, 2)) == 17
        with pytest.raises(ValueError):
            h_u(3, 2, 3)

    def test_h_u_layout(self):
        h = h_u(9, 3, 2)
        hub = {0, 1, 2}
        inside_hub = [e for e in h.edges if set(e) <= hub]
        assert inside_hub == []
        for block in ({3, 4, 5}, {6, 7, 8}):
            assert all(frozenset(c) in set(as_sets(h)) for c in combinations(sorted(block), 2))

    def test_h_u_graph_case_is_gnk(self):
        for k in range(2, 5):
            for n in range(2 * k, 14):
                assert set(as_sets(h_u(n, k, 2))) == literal_gnk(n, k)


class TestInduced:
    def test_examples(self):
        e = Hypergraph.from_edges(3, 3, [(0, 1, 2)])
        sub, labels = induced(e, {0, 1})
        assert sub.n == 2 and len(sub) == 0 and labels == (0, 1)
        sub, labels = delete_vertices(e, {2})
        assert labels == (0, 1) and len(sub) == 0
        sub, _ = induced(complete(6, 3), {1, 2, 4, 5})
        assert sub == complete(4, 3)

    @given(hypergraphs())
    def test_identity(self, h):
        assert induced(h, range(h.n))[0] == h
        assert delete_vertices(h, set())[0] == h

    def test_delete_to_below_r(self):
        for n, r in [(6, 3), (7, 4), (5, 2)]:
            sub, _ = delete_vertices(complete(n, r), range(n - r + 1))
            assert sub.n == r - 1 and len(sub) == 0

    @given(hypergraphs(), st.data())
    def test_composition(self, h, data):
        y1 = data.draw(st.sets(st.integers(0, max(h.n - 1, 0)), max_size=h.n)) if h.n else set()
        y2 = data.draw(st.sets(st.integers(0, max(h.n - 1, 0)), max_size=h.n)) if h.n else set()
        direct, lab = induced(h, y1 & y2)
        first, lab1 = induced(h, y1)
        pos = {v: i for i, v in enumerate(lab1)}
        second, lab2 = induced(first, {pos[v] for v in y1 & y2})
        assert second == direct
        assert tuple(lab1[i] for i in lab2) == lab

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            induced(complete(4, 2), {5})


class TestComponentsDegree:
    def test_examples(self):
        a = Hypergraph.from_edges(5, 3, [(0, 1, 2), (2, 3, 4)])
        assert components(a) == [frozenset(range(5))]
        b = Hypergraph.from_edges(6, 3, [(0, 1, 2), (3, 4, 5)])
        assert components(b) == [frozenset({0, 1, 2}), frozenset({3, 4, 5})]
        assert components(empty(4, 3)) == [frozenset({i}) for i in range(4)]

    @given(hypergraphs(max_n=9))
    def test_against_bfs_oracle(self, h):
        assert components(h) == oracle_components(range(h.n), as_sets(h))

    def test_degrees(self):
        for n, r in [(6, 3), (7, 2), (8, 4)]:
            h = complete(n, r)
            assert all(h.degree(v) == binom(n - 1, r - 1) for v in range(n))
            assert h.is_regular()
        assert empty(5, 3).degree(2) == 0
        assert empty(5, 3).min_degree() == empty(5, 3).max_degree() == 0
        with pytest.raises(ValueError):
            empty(5, 3).degree(5)

    def test_degree_counts_edges(self):
        h = random_hypergraph(random.Random(5), 9, 3, 0.3)
        assert sum(h.degrees()) == 3 * len(h)


class TestCrossing:
    def test_h_l_three_way(self):
        h = h_l(7, 2, 3)
        got = crossing_edges(h, [{2}, {0, 1}, {3, 4, 5, 6}])
        assert len(got) == 8
        assert all(2 in e and set(e) & {0, 1} and set(e) & {3, 4, 5, 6} for e in got)

    def test_single_part_exact(self):
        h = random_hypergraph(random.Random(1), 8, 3, 0.4)
        assert crossing_edges(h, [range(8)], exact=True) == list(h.edges)

    def test_untouched_part(self):
        h = Hypergraph.from_edges(6, 3, [(0, 1, 2)])
        assert crossing_edges(h, [{0}, {5}]) == []

    def test_bad_parts(self):
        h = complete(5, 3)
        with pytest.raises(ValueError):
            crossing_edges(h, [{0, 1}, {1, 2}])
        with pytest.raises(ValueError):
            crossing_edges(h, [{0}, set()])

    @given(hypergraphs(max_n=9), st.data())
    def test_two_part_partition(self, h, data):
        if h.n < 2:
            return
        a = data.draw(st.sets(st.integers(0, h.n - 1), min_size=1, max_size=h.n - 1))
        b = set(range(h.n)) - a
        cross = crossing_edges(h, [a, b], exact=True)
        in_a = [e for e in h.edges if set(e) <= a]
        in_b = [e for e in h.edges if set(e) <= b]
        assert len(cross) + len(in_a) + len(in_b) == len(h)

    def test_exact_excludes_outside(self):
        h = complete(5, 3)
        assert len(crossing_edges(h, [{0}, {1}])) == 3
        assert crossing_edges(h, [{0}, {1}], exact=True) == []
        assert mask_of([0, 1, 2]) in h
