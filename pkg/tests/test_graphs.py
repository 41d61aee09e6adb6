from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rcpotts.graphs import (
    EdgeSubsetError,
    Multigraph,
    canonical_key,
    component_count,
    contract,
    cycle,
    delete,
    is_even,
    path,
    rank_corank,
    triangle,
)
from .conftest import bfs_component_count


@st.composite
def small_graph_and_subset(draw):
    n = draw(st.integers(1, 8))
    m = draw(st.integers(0, 10))
    edges = tuple(
        (draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))) for _ in range(m)
    )
    g = Multigraph(n, edges)
    a = draw(st.integers(0, (1 << m) - 1)) if m else 0
    return g, a


class TestComponentCount:
    def test_triangle_empty(self):
        assert component_count(triangle(), 0) == 3

    def test_triangle_full(self):
        assert component_count(triangle(), 0b111) == 1

    def test_path_with_isolated_vertex(self):
        g = Multigraph(4, ((0, 1), (1, 2)))
        assert component_count(g, 0b01) == 3

    def test_subset_too_wide_rejected(self):
        with pytest.raises(EdgeSubsetError):
            component_count(triangle(), 0b1111)

    @settings(max_examples=1000, deadline=None)
    @given(small_graph_and_subset())
    def test_matches_bfs_oracle(self, ga):
        g, a = ga
        assert component_count(g, a) == bfs_component_count(g, a)


class TestRankCorank:
    def test_triangle_full(self):
        assert rank_corank(triangle(), 0b111) == (2, 1)

    def test_empty_subset(self):
        assert rank_corank(Multigraph(5, ((0, 1), (2, 3))), 0) == (0, 0)

    def test_single_edge(self):
        assert rank_corank(Multigraph(2, ((0, 1),)), 0b1) == (1, 0)

    @settings(max_examples=300, deadline=None)
    @given(small_graph_and_subset())
    def test_rank_plus_corank_is_size(self, ga):
        g, a = ga
        r, c = rank_corank(g, a)
        assert r + c == bin(a).count("1")


class TestDeleteContract:
    def test_delete_triangle_edge_gives_path(self):
        g = delete(triangle(), 0)
        assert g.n == 3 and g.m == 2

    def test_contract_triangle_gives_parallel_pair(self):
        g = contract(triangle(), 0)
        assert g.n == 2
        assert g.edges == ((0, 1), (0, 1))

    def test_contract_loop_is_deletion(self):
        g = Multigraph(1, ((0, 0),))
        assert contract(g, 0) == Multigraph(1, ())

    def test_contract_makes_loop_from_parallel(self):
        g = Multigraph(2, ((0, 1), (0, 1)))
        assert contract(g, 0).edges == ((0, 0),)

    def test_index_out_of_range(self):
        with pytest.raises(IndexError):
            delete(triangle(), 3)
        with pytest.raises(IndexError):
            contract(triangle(), -1)

    def test_disjoint_edges_commute_up_to_key(self):
        g = Multigraph(4, ((0, 1), (2, 3), (1, 2)))
        # edge 1 shifts to position 0 once edge 0 is removed by contraction
        a = contract(delete(g, 1), 0)
        b = delete(contract(g, 0), 0)
        assert canonical_key(a) == canonical_key(b)


class TestCanonicalKey:
    def test_deterministic(self):
        g = triangle()
        assert canonical_key(g) == canonical_key(triangle())

    def test_distinguishes_triangle_from_path(self):
        assert canonical_key(triangle()) != canonical_key(path(3))

    def test_stable_under_recomputation(self):
        g = Multigraph(4, ((0, 1), (1, 2), (2, 3), (0, 3), (1, 3)))
        h1 = contract(delete(g, 1), 0)
        h2 = contract(delete(g, 1), 0)
        assert canonical_key(h1) == canonical_key(h2)

    def test_edge_order_irrelevant(self):
        g1 = Multigraph(3, ((0, 1), (1, 2)))
        g2 = Multigraph(3, ((1, 2), (0, 1)))
        assert canonical_key(g1) == canonical_key(g2)


class TestIsEven:
    def test_cycle_even(self):
        assert is_even(cycle(4))

    def test_single_edge_odd(self):
        assert not is_even(Multigraph(2, ((0, 1),)))

    def test_parallel_pair_even(self):
        assert is_even(Multigraph(2, ((0, 1), (0, 1))))

    def test_loop_counts_twice(self):
        assert is_even(Multigraph(1, ((0, 0),)))


def test_out_of_range_edge_rejected():
    with pytest.raises(ValueError):
        Multigraph(2, ((0, 2),))
