"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Criterion 1 and 2 carry a documented caveat: the published Gini value (24) and
cumulative array (3,5,7,9) for the third 4-node network contradict its own
degree array (3,2,2,1), whose prefix sums are (3,5,7,8) totalling 23 — a
cumulative array ending at 9 would need an odd total degree, which no graph
realizes. The verify suite reports that slip as "flagged", alongside the three
discrepancies it already documents, and these tests assert the arithmetically
consistent values.
"""

import math
import random
import time
from fractions import Fraction

import pytest

from conftest import random_connected_graph
from smallworlds.arrays import (
    alpha_array,
    degree_stats,
    gamma_array,
    gamma_via_adjacency,
    neighboring_index,
)
from smallworlds.catalog import catalog_figure, catalog_ids
from smallworlds.families import FAMILY_KINDS, FamilySpec, chain, complete, kite, ln_tree, polygon, star
from smallworlds.graph import (
    degree_array,
    distance_stats,
    enumerate_connected_graphs,
    enumerate_labeled_trees,
    triangle_count,
)
from smallworlds.lorenz import (
    Relation,
    cumulative,
    gini_generalized,
    gini_standard,
    majorize_compare,
    power_measure,
    theil,
)
from smallworlds.smallworld import (
    DEFAULT_TARGET_SIZES,
    classify_distance_smallworld,
    growth_report,
    known_classification,
    params_for_targets,
)
from smallworlds import verify


def report(criterion: str, ok: bool):
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'}")
    assert ok


FOUR_NODE_IDS = [f"fig6_G{i}" for i in range(1, 7)]


def test_criterion_01_generalized_gini_values():
    ginis = tuple(gini_generalized(degree_array(catalog_figure(f).graph))
                  for f in FOUR_NODE_IDS)
    # Published: (17, 18, 24, 20, 27, 30); the third value is the documented
    # arithmetic slip, 23 is forced by delta (3,2,2,1).
    report("01 generalized Gini of the six 4-node arrays", ginis == (17, 18, 23, 20, 27, 30))


def test_criterion_02_hasse_relations_and_cumulatives():
    deltas = {f: degree_array(catalog_figure(f).graph) for f in FOUR_NODE_IDS}
    rel = lambda a, b: majorize_compare(deltas[a], deltas[b]).relation
    ok = (
        rel("fig6_G1", "fig6_G2") is Relation.LESS
        and rel("fig6_G1", "fig6_G4") is Relation.LESS
        and rel("fig6_G2", "fig6_G4") is Relation.INCOMPARABLE
        and rel("fig6_G2", "fig6_G3") is Relation.LESS
        and rel("fig6_G4", "fig6_G3") is Relation.LESS
        and rel("fig6_G3", "fig6_G5") is Relation.LESS
        and rel("fig6_G5", "fig6_G6") is Relation.LESS
    )
    want = {  # third entry corrected from the published (3,5,7,9); see module docstring
        "fig6_G1": (2, 4, 5, 6), "fig6_G2": (3, 4, 5, 6), "fig6_G3": (3, 5, 7, 8),
        "fig6_G4": (2, 4, 6, 8), "fig6_G5": (3, 6, 8, 10), "fig6_G6": (3, 6, 9, 12),
    }
    ok = ok and all(tuple(cumulative(deltas[f])) == want[f] for f in FOUR_NODE_IDS)
    report("02 Hasse relations and cumulative arrays", ok)


def test_criterion_03_theorem1_fixtures():
    md = lambda g: degree_stats(degree_array(g))[2]
    mean = lambda g: degree_stats(degree_array(g))[1]
    fig1 = (chain(5), catalog_figure("fig1_H").graph)
    fig2 = (catalog_figure("fig2_G1").graph, catalog_figure("fig2_H1").graph)
    fig3 = (catalog_figure("fig3_H1").graph, catalog_figure("fig3_H2").graph)
    ok = (
        (md(fig1[0]), md(fig1[1])) == (Fraction(2), Fraction(1))
        and (md(fig2[0]), md(fig2[1])) == (Fraction(2), Fraction(3))
        and mean(fig3[0]) == mean(fig3[1]) == Fraction(20, 6)
        and (md(fig3[0]), md(fig3[1])) == (Fraction(3), Fraction(7, 2))
        and majorize_compare(degree_array(fig3[0]),
                             degree_array(fig3[1])).relation is Relation.INCOMPARABLE
        and majorize_compare(degree_array(fig1[0]),
                             degree_array(fig1[1])).relation is Relation.LESS
        and majorize_compare(degree_array(fig2[0]),
                             degree_array(fig2[1])).relation is Relation.LESS
    )
    report("03 Theorem 1 median/mean fixtures", ok)


def test_criterion_04_chain_is_lowest_exhaustively():
    start = time.monotonic()
    ok = True
    for n in (3, 4, 5, 6):
        base = degree_array(chain(n))
        for g in enumerate_connected_graphs(n):
            if majorize_compare(base, degree_array(g)).relation in (
                    Relation.GREATER, Relation.INCOMPARABLE):
                ok = False
    elapsed = time.monotonic() - start
    report("04 chain minimality over all connected graphs n<=6", ok and elapsed < 30)


def test_criterion_05_gamma_tables():
    ok = True
    for n in range(4, 11):
        ok = ok and gamma_array(star(n)) == (2 * (n - 1),) + (n,) * (n - 1)
        ok = ok and neighboring_index(star(n)) == (n + 2) * (n - 1)
        ok = ok and neighboring_index(chain(n)) == 6 * n - 8
        ok = ok and neighboring_index(polygon(n)) == 6 * n
        ok = ok and neighboring_index(complete(n)) == n * n * (n - 1)
    report("05 gamma tables for star/chain/polygon/complete N in 4..10", ok)


def test_criterion_06_gamma_matrix_identity():
    rng = random.Random(606)
    ok = all(
        gamma_array(g) == gamma_via_adjacency(g)
        for g in (random_connected_graph(rng, rng.randint(2, 12)) for _ in range(200))
    )
    ok = ok and all(
        gamma_array(catalog_figure(f).graph) == gamma_via_adjacency(catalog_figure(f).graph)
        for f in catalog_ids()
    )
    report("06 gamma equals unit-vector (A^2+A) on 200 random graphs + catalog", ok)


def test_criterion_07_neighboring_index_identity_and_remarks():
    rng = random.Random(707)
    ok = all(
        sum(gamma_array(g)) == sum(d * (d + 1) for d in degree_array(g))
        for g in (random_connected_graph(rng, rng.randint(2, 12)) for _ in range(200))
    )
    a, b = catalog_figure("fig16_a").graph, catalog_figure("fig16_b").graph
    c, d = catalog_figure("fig17_a").graph, catalog_figure("fig17_b").graph
    ok = ok and sum(degree_array(a)) == sum(degree_array(b)) == 8
    ok = ok and (neighboring_index(a), neighboring_index(b)) == (22, 24)
    ok = ok and neighboring_index(c) == neighboring_index(d) == 48
    ok = ok and (sum(degree_array(c)), sum(degree_array(d))) == (14, 12)
    report("07 nu identity plus fig16/fig17 counterexample pairs", ok)


def test_criterion_08_majorization_not_preserved_across_arrays():
    a, b = catalog_figure("fig18_a").graph, catalog_figure("fig18_b").graph
    c, d = catalog_figure("fig19_a").graph, catalog_figure("fig19_b").graph
    ok = (
        majorize_compare(degree_array(a), degree_array(b)).relation is Relation.LESS
        and majorize_compare(gamma_array(a), gamma_array(b)).relation is Relation.INCOMPARABLE
        and gamma_array(a) == (12, 12, 10, 10, 4, 4)
        and gamma_array(b) == (11, 11, 11, 11, 8, 8)
        and majorize_compare(gamma_array(c), gamma_array(d)).relation is Relation.LESS
        and majorize_compare(degree_array(c), degree_array(d)).relation is Relation.INCOMPARABLE
        and gamma_array(c) == (6, 4, 4, 4)
        and gamma_array(d) == (6, 6, 6, 6)
    )
    report("08 statements (15)/(16) on the fig18/fig19 pairs", ok)


def test_criterion_09_array_separations():
    g, gp = catalog_figure("fig14_G").graph, catalog_figure("fig14_Gp").graph
    a, b = catalog_figure("fig15a").graph, catalog_figure("fig15b").graph
    ok = (
        degree_array(g) == degree_array(gp) == (4, 4, 3, 3, 3, 3)
        and alpha_array(g) == alpha_array(gp) == (10, 5, 0, 0, 0)
        and gamma_array(g) == (17, 17, 14, 14, 13, 13)
        and gamma_array(gp) == (16, 16, 14, 14, 14, 14)
        and neighboring_index(g) == neighboring_index(gp) == 88
        and degree_array(a) == degree_array(b) == (3,) * 6
        and alpha_array(a) == alpha_array(b) == (9, 6, 0, 0, 0)
        and gamma_array(a) == gamma_array(b) == (12,) * 6
        and (triangle_count(a), triangle_count(b)) == (0, 2)
    )
    report("09 fig14 gamma separation and fig15 triangle separation", ok)


def test_criterion_10_trees_equal_gamma_equal_delta():
    start = time.monotonic()
    ok = True
    for n in range(4, 9):
        groups = {}
        count = 0
        for t in enumerate_labeled_trees(n):
            groups.setdefault(gamma_array(t), set()).add(degree_array(t))
            count += 1
        ok = ok and count == n ** (n - 2)
        ok = ok and all(len(deltas) == 1 for deltas in groups.values())
    elapsed = time.monotonic() - start
    report("10 equal gamma implies equal delta over all labeled trees n<=8",
           ok and elapsed < 60)


def test_criterion_11_acceptable_measures_and_standard_gini():
    rng = random.Random(1111)
    checked = 0
    ok = True
    while checked < 500:
        n = rng.randint(3, 10)
        x = tuple(sorted((rng.randint(1, 10) for _ in range(n)), reverse=True))
        y = tuple(sorted((rng.randint(1, 10) for _ in range(n)), reverse=True))
        if majorize_compare(x, y).relation is not Relation.LESS:
            continue
        checked += 1
        ok = ok and gini_generalized(x) <= gini_generalized(y)
        ok = ok and theil(x) <= theil(y) + 1e-9
        for p in (1.5, 2, 3):
            ok = ok and power_measure(x, p) <= power_measure(y, p) + 1e-9
    for n in (4, 10, 100):
        got = float(gini_standard(degree_array(star(n))))
        ok = ok and abs(got - (n - 2) / (2 * n)) < 1e-12
    report("11 measure monotonicity on 500 pairs + star standard Gini", ok)


def test_criterion_12_smallworld_classifications():
    ok = True
    star_c = known_classification(FamilySpec("star"))
    ok = ok and (star_c.dswl, star_c.dswa, star_c.dswmd) == (True, False, False)
    ok = ok and star_c.swd and distance_stats(star(50)).diameter == 2
    ok = ok and all(
        getattr(known_classification(FamilySpec("complete")), f)
        for f in ("dswl", "dswa", "dswmd"))
    for kind in ("chain", "polygon"):
        ok = ok and not any(known_classification(FamilySpec(kind)).flags().values())
    spider_c = known_classification(FamilySpec("spider"))
    ok = ok and spider_c.dswa and not spider_c.dswmd
    kite_c = known_classification(FamilySpec("kite"))
    ok = ok and kite_c.dswmd and not kite_c.swmd
    for m in (10, 20, 50, 100):
        g = kite(m)
        ok = ok and degree_stats(degree_array(g))[2] == Fraction(g.n - 1, 2)
        bound = (2 - math.sqrt(3)) / 2 * g.n - (1 + math.sqrt(3)) / 2
        ok = ok and float(distance_stats(g).median_distance) > bound - 1
    for n in (32, 128, 1024):
        g = ln_tree(n)
        k = math.floor(math.log(n))
        ok = ok and distance_stats(g).diameter <= k + 2 * math.log(n) / math.log(k) + 2
        ok = ok and degree_array(g)[0] <= k + 2
    for kind in FAMILY_KINDS:
        spec = FamilySpec(kind)
        rep = growth_report(spec, params_for_targets(spec, DEFAULT_TARGET_SIZES))
        emp = classify_distance_smallworld(rep, closed_form=False)
        ok = ok and emp.flags() == known_classification(spec).flags()
    report("12 small-world classifications and bounds for all families", ok)


def test_criterion_13_verify_suite_green_with_flagged_discrepancies():
    results = verify.run_fixtures()
    fails = [r for r in results if r.status == verify.FAIL]
    flagged = {r.name for r in results if r.status == verify.FLAGGED}
    ok = not fails and flagged == set(verify.FLAGGED_FIXTURES)
    report("13 verify suite: zero failures, only documented flags", ok)
