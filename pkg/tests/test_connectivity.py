import random
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hyperkmax import (
    Hypergraph,
    complement,
    complete,
    components,
    empty,
    h_l,
    h_u,
    is_connected,
    is_t_connected,
    kappa,
    kappa_bar,
    kappa_bar_bruteforce,
    min_separator,
    min_vertex_cut,
    separation_triple,
)
from hyperkmax import _kernels as K
from hyperkmax.connectivity import find_t_connected, kappa_of_set
from hyperkmax.hypergraph import component_masks, delete_vertices, mask_of

from conftest import as_sets, random_hypergraph
from oracles import kappa as oracle_kappa
from oracles import kappa_bar_induced

PATH = Hypergraph.from_edges(5, 3, [(0, 1, 2), (2, 3, 4)])
EDGE = Hypergraph.from_edges(3, 3, [(0, 1, 2)])


def test_kernel_connectivity_matches_python():
    rng = random.Random(2)
    for _ in range(40):
        h = random_hypergraph(rng, rng.randint(1, 10), rng.choice([2, 3, 4]), rng.random())
        ws = np.arange(1 << h.n, dtype=np.uint64)
        got = K.connected_batch(K.edge_array(h.masks), ws)
        want = [len(component_masks(h.masks, int(w))) <= 1 for w in ws]
        assert list(got) == want


def test_subset_masks_lex_order():
    pool = mask_of([1, 3, 4, 6])
    got = [tuple(i for i in range(8) if int(m) >> i & 1) for m in K.subset_masks(pool, 2)]
    assert got == list(combinations([1, 3, 4, 6], 2))


class TestIsConnected:
    def test_examples(self):
        assert is_connected(EDGE)
        assert not is_connected(empty(2, 3))
        assert is_connected(h_l(7, 2, 3))
        assert is_connected(empty(0, 2)) and is_connected(empty(1, 2))


class TestMinSeparator:
    def test_single_edge(self):
        res = min_separator(EDGE, 0, 1)
        assert res.kind == "cut" and res.cut == {2} and res.kappa == 1

    def test_already_apart(self):
        res = min_separator(empty(2, 3), 0, 1)
        assert res.cut == frozenset() and res.kappa == 0

    def test_complete(self):
        for u, v in combinations(range(5), 2):
            res = min_separator(complete(5, 3), u, v)
            assert res.kappa == 3 == 5 - 3 + 1
            assert not res.cut & {u, v}

    def test_adjacent_pair_in_graph_has_no_separator(self):
        res = min_separator(complete(4, 2), 0, 1)
        assert res.kind == "no-cut"

    def test_rejects_equal(self):
        with pytest.raises(ValueError):
            min_separator(EDGE, 1, 1)

    def test_pairwise_minimum_is_kappa(self):
        rng = random.Random(7)
        for _ in range(40):
            n = rng.randint(2, 9)
            h = random_hypergraph(rng, n, rng.choice([2, 3]), rng.random())
            sizes = [min_separator(h, u, v) for u, v in combinations(range(n), 2)]
            cuts = [s.kappa for s in sizes if s.kind == "cut"]
            want, _ = oracle_kappa(range(n), as_sets(h))
            if cuts:
                assert min(cuts) == want == kappa(h)
            else:
                assert kappa(h) == n - 1


class TestKappa:
    def test_complete_formula(self):
        for r in (2, 3, 4):
            for n in range(r, 13):
                assert kappa(complete(n, r)) == n - r + 1

    def test_examples(self):
        assert kappa(complete(6, 3)) == 4
        res = min_vertex_cut(PATH)
        assert res.kappa == 1
        # every singleton separates under induced deletion; the lex-first is returned
        assert res.cut == {0}
        rest, _ = delete_vertices(PATH, {2})
        assert not is_connected(rest)
        assert kappa(h_l(7, 2, 3)) == 2

    def test_small_orders(self):
        assert kappa(empty(0, 2)) == 0
        assert kappa(empty(1, 3)) == 0
        assert min_vertex_cut(empty(1, 3)).kind == "no-cut"
        assert kappa(complete(2, 2)) == 1

    def test_against_definition(self):
        rng = random.Random(13)
        for _ in range(150):
            n = rng.randint(0, 10)
            r = rng.choice([2, 3, 4])
            h = random_hypergraph(rng, n, r, rng.random())
            want, cut = oracle_kappa(range(n), as_sets(h))
            got = min_vertex_cut(h)
            assert got.kappa == want
            assert got.cut == cut
            assert 0 <= got.kappa <= max(n - 1, 0)
            if n >= r:
                assert got.kappa <= n - r + 1

    def test_cut_result_invariant(self):
        rng = random.Random(17)
        for _ in range(40):
            h = random_hypergraph(rng, rng.randint(2, 9), 3, rng.random())
            res = min_vertex_cut(h)
            if res.kind == "cut":
                assert not is_connected(delete_vertices(h, res.cut)[0])
            else:
                assert res.kappa == h.n - 1

    def test_monotone_under_edge_addition(self):
        rng = random.Random(23)
        for _ in range(60):
            h = random_hypergraph(rng, rng.randint(2, 10), rng.choice([2, 3, 4]), rng.random())
            missing = complement(h).masks
            if not missing:
                continue
            g = h.add_edge(rng.choice(missing))
            assert kappa(h) <= kappa(g)


class TestIsTConnected:
    def test_examples(self):
        for k, r in [(2, 3), (3, 2), (2, 4)]:
            assert is_t_connected(complete(k + r, r), k + 1)
        h = Hypergraph.from_edges(5, 3, [(0, 1, 2), (1, 2, 3)])
        assert not is_t_connected(h, 1)
        assert is_t_connected(h_u(8, 2, 3), 2)
        assert not is_t_connected(h_u(8, 2, 3), 3)

    def test_agrees_with_kappa(self):
        rng = random.Random(29)
        for _ in range(40):
            h = random_hypergraph(rng, rng.randint(0, 9), rng.choice([2, 3]), rng.random())
            k = kappa(h)
            for t in range(0, h.n + 2):
                assert is_t_connected(h, t) == (k >= t)


class TestKappaBar:
    def test_bruteforce_examples(self):
        for n, r in [(4, 2), (6, 3), (8, 3), (7, 4)]:
            assert kappa_bar_bruteforce(complete(n, r)).value == n - r + 1
        assert kappa_bar_bruteforce(empty(6, 3)).value == 0
        assert kappa_bar_bruteforce(h_u(8, 2, 3)).value == 2

    def test_bruteforce_against_definition(self):
        rng = random.Random(31)
        for _ in range(30):
            n = rng.randint(0, 7)
            h = random_hypergraph(rng, n, rng.choice([2, 3]), rng.random())
            res = kappa_bar_bruteforce(h)
            assert res.value == kappa_bar_induced(range(n), as_sets(h))
            assert kappa_of_set(h, res.witness) == res.value

    def test_ceiling(self):
        with pytest.raises(ValueError):
            kappa_bar_bruteforce(empty(15, 3))
        with pytest.raises(ValueError):
            kappa_bar_bruteforce(empty(9, 3), max_n=8)

    def test_decomposition_matches_bruteforce(self):
        rng = random.Random(37)
        for i in range(80):
            n = rng.randint(0, 11)
            h = random_hypergraph(rng, n, rng.choice([2, 3, 4]), (i % 10 + 0.5) / 10)
            assert kappa_bar(h) == kappa_bar_bruteforce(h)

    def test_probe_hint_does_not_change_answer(self):
        rng = random.Random(41)
        for _ in range(20):
            h = random_hypergraph(rng, 9, 3, rng.random())
            want = kappa_bar(h)
            for t in range(0, 9):
                assert kappa_bar(h, t_probe=t) == want

    def test_h_l_family(self):
        for n in range(5, 13):
            assert kappa_bar(h_l(n, 2, 3)).value == 2

    def test_monotone(self):
        rng = random.Random(43)
        for _ in range(40):
            h = random_hypergraph(rng, rng.randint(2, 10), rng.choice([2, 3]), rng.random())
            missing = complement(h).masks
            if missing:
                assert kappa_bar(h).value <= kappa_bar(h.add_edge(rng.choice(missing))).value

    def test_every_induced_subset_below(self):
        rng = random.Random(47)
        h = random_hypergraph(rng, 8, 3, 0.6)
        kb = kappa_bar(h).value
        for y in range(1 << 8):
            assert kappa_of_set(h, y) <= kb


@settings(max_examples=60, deadline=None)
@given(
    st.integers(2, 4).flatmap(
        lambda r: st.tuples(
            st.just(r),
            st.integers(0, 9).flatmap(
                lambda n: st.tuples(st.just(n), st.lists(st.sampled_from(list(combinations(range(n), r)) or [()]), unique=True))
            ),
        )
    )
)
def test_kappa_bar_property(data):
    r, (n, edges) = data
    edges = [e for e in edges if e]
    h = Hypergraph.from_edges(n, r, edges)
    fast = kappa_bar(h)
    assert fast == kappa_bar_bruteforce(h)
    assert kappa(h) <= fast.value


class TestFindTConnected:
    def test_must_contain(self):
        h = h_l(7, 2, 3).add_edge((4, 5, 6))
        y = find_t_connected(h, 3, must=(4, 5, 6))
        assert y is not None and {4, 5, 6} <= y
        assert kappa_of_set(h, y) >= 3
        assert find_t_connected(h_l(7, 2, 3), 3) is None


class TestSeparationTriple:
    def test_h_l(self):
        tri = separation_triple(h_l(7, 2, 3))
        assert tri.s == {0, 1}
        assert len(tri.side1) == 1 and tri.n1 == 3 and tri.n2 == 6

    def test_path(self):
        tri = separation_triple(PATH)
        assert len(tri.s) == 1
        assert tri.s == {0}

    def test_complete(self):
        for n, r in [(5, 3), (6, 3), (7, 4), (8, 3)]:
            tri = separation_triple(complete(n, r))
            assert len(tri.s) == n - r + 1
            assert len(tri.side1) + len(tri.side2) == r - 1

    def test_rejects_no_cut(self):
        with pytest.raises(ValueError):
            separation_triple(complete(5, 2))

    def test_invariants(self):
        rng = random.Random(53)
        for _ in range(40):
            h = random_hypergraph(rng, rng.randint(3, 10), rng.choice([2, 3]), rng.random())
            if min_vertex_cut(h).kind == "no-cut":
                continue
            tri = separation_triple(h)
            assert len(tri.s) == kappa(h)
            assert tri.side1 and tri.side2
            assert tri.s | tri.side1 | tri.side2 == set(range(h.n))
            assert not (tri.s & tri.side1 or tri.s & tri.side2 or tri.side1 & tri.side2)
            assert h.n == tri.n1 + tri.n2 - len(tri.s)
            rest, labels = delete_vertices(h, tri.s)
            comps = [frozenset(labels[i] for i in c) for c in components(rest)]
            assert tri.side1 in comps
