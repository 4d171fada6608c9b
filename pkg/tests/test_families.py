import math

import pytest

from smallworlds.arrays import alpha_array, degree_stats, gamma_array, neighboring_index
from smallworlds.catalog import catalog_figure, catalog_ids, compute_expected
from smallworlds.families import (
    FamilySpec,
    chain,
    complete,
    find_graphs_matching,
    kite,
    ln_tree,
    make_family,
    polygon,
    s1,
    s2,
    spider,
    star,
)
from smallworlds.graph import degree_array, distance_stats, is_connected, is_tree


class TestClosedFormDeltas:
    @pytest.mark.parametrize("m", range(2, 11))
    def test_spider(self, m):
        g = spider(m)
        assert g.n == 3 * m
        assert degree_array(g) == (m + 1,) * m + (1,) * (2 * m)

    @pytest.mark.parametrize("m", range(2, 11))
    def test_kite(self, m):
        g = kite(m)
        assert g.n == 2 * m - 1
        want = (m,) + (m - 1,) * (m - 1) + (2,) * (m - 2) + (1,)
        assert degree_array(g) == tuple(sorted(want, reverse=True))

    @pytest.mark.parametrize("m", range(1, 9))
    def test_s1(self, m):
        a, b = 3, 1
        g = s1(m, a, b)
        assert g.n == 2 * m + a + b
        want = (m + a,) * (m + b) + (m + a - 1,) * (a - b) + (1,) * (m + b)
        assert degree_array(g) == want

    @pytest.mark.parametrize("m", range(1, 9))
    def test_s2(self, m):
        a, b = 1, 3
        g = s2(m, a, b)
        assert g.n == 2 * m + a + b
        want = (m + a + 1,) * (b - a) + (m + a,) * (m + 2 * a - b) + (1,) * (m + b)
        assert degree_array(g) == want

    @pytest.mark.parametrize("n", range(2, 12))
    def test_simple_kinds(self, n):
        assert degree_array(star(n)) == (n - 1,) + (1,) * (n - 1)
        assert degree_array(complete(n)) == (n - 1,) * n
        assert degree_array(chain(n)) == tuple(sorted([2] * (n - 2) + [1, 1], reverse=True))
        if n >= 3:
            assert degree_array(polygon(n)) == (2,) * n


class TestFamilyExamples:
    def test_spider5_delta(self):
        assert degree_array(spider(5)) == (6,) * 5 + (1,) * 10

    def test_kite3_alpha(self):
        assert alpha_array(kite(3)) == (5, 3, 2, 0)

    def test_s1_example_median(self):
        g = s1(3, a=3, b=1)
        assert degree_array(g) == (6, 6, 6, 6, 5, 5, 1, 1, 1, 1)
        assert degree_stats(degree_array(g))[2] == 3 + 3 - 1

    def test_s2_example_median(self):
        g = s2(3, a=1, b=3)
        assert degree_array(g) == (5, 5, 4, 4, 1, 1, 1, 1, 1, 1)
        assert degree_stats(degree_array(g))[2] == 1

    def test_all_families_connected(self):
        for kind in ("complete", "star", "chain", "polygon"):
            assert is_connected(make_family(FamilySpec(kind), 7))
        for kind in ("spider", "kite", "s1", "s2"):
            assert is_connected(make_family(FamilySpec(kind), 5))
        assert is_connected(make_family(FamilySpec("lntree"), 40))

    def test_invalid_params_rejected(self):
        with pytest.raises(ValueError):
            polygon(2)
        with pytest.raises(ValueError):
            spider(1)
        with pytest.raises(ValueError):
            s1(3, a=1, b=3)
        with pytest.raises(ValueError):
            s2(3, a=3, b=1)
        with pytest.raises(ValueError):
            FamilySpec("chain", a=1, b=2)
        with pytest.raises(ValueError):
            FamilySpec("nosuch")


class TestLnTree:
    @pytest.mark.parametrize("n", [8, 20, 50, 100, 400, 1000])
    def test_is_tree_with_exact_size(self, n):
        g = ln_tree(n)
        assert g.n == n
        assert is_tree(g)

    @pytest.mark.parametrize("n", [8, 20, 50, 100, 400, 1000])
    def test_max_degree_bound(self, n):
        k = math.floor(math.log(n))
        assert degree_array(ln_tree(n))[0] <= k + 2

    @pytest.mark.parametrize("n", [20, 50, 100, 400, 1000])
    def test_diameter_bound(self, n):
        k = math.floor(math.log(n))
        bound = k + 2 * math.log(n) / math.log(k) + 2
        assert distance_stats(ln_tree(n)).diameter <= bound


class TestCatalog:
    @pytest.mark.parametrize("fig_id", catalog_ids())
    def test_expected_values_recompute(self, fig_id):
        entry = catalog_figure(fig_id)
        assert is_connected(entry.graph)
        assert compute_expected(entry) == entry.expected

    def test_fig14_G(self):
        entry = catalog_figure("fig14_G")
        assert gamma_array(entry.graph) == (17, 17, 14, 14, 13, 13)
        assert neighboring_index(entry.graph) == 88

    def test_fig19_a(self):
        g = catalog_figure("fig19_a").graph
        assert degree_array(g) == (3, 1, 1, 1)
        assert gamma_array(g) == (6, 4, 4, 4)

    def test_fig16_pair_indices(self):
        assert neighboring_index(catalog_figure("fig16_a").graph) == 22
        assert neighboring_index(catalog_figure("fig16_b").graph) == 24

    def test_unknown_id(self):
        with pytest.raises(KeyError):
            catalog_figure("nosuch")


class TestFindGraphsMatching:
    def test_star_is_unique_class(self):
        found = find_graphs_matching(4, delta=(3, 1, 1, 1))
        assert len(found) == 1

    def test_fig15_constraints_give_two_classes(self):
        found = find_graphs_matching(
            6, delta=(3,) * 6, alpha=(9, 6, 0, 0, 0), gamma=(12,) * 6)
        assert len(found) == 2

    def test_fig14_deltas_alpha_give_two_gammas(self):
        found = find_graphs_matching(6, delta=(4, 4, 3, 3, 3, 3), alpha=(10, 5, 0, 0, 0))
        gammas = {gamma_array(g) for g in found}
        assert len(found) >= 2
        assert (17, 17, 14, 14, 13, 13) in gammas
        assert (16, 16, 14, 14, 14, 14) in gammas

    def test_requires_a_constraint(self):
        with pytest.raises(ValueError):
            find_graphs_matching(4)

    def test_size_cap(self):
        with pytest.raises(ValueError):
            find_graphs_matching(8, delta=(1,) * 8)
