"""The worked-example verification suite.

Every fixture checks a value or relation stated in the source material against
what this library computes. Three documented discrepancies in the source are
reported with status "flagged" instead of "fail": the chain cumulative array
(its stated form contradicts the chain's total degree), the claimed
majorization direction between the S1/S2 constructions under the figure
parameters, and the length of the alpha array quoted for the 6-node pair.
A fourth slip surfaced during implementation and is flagged the same way: the
Gini value and cumulative array published for the third 4-node network imply
an odd total degree, contradicting its own degree array (3,2,2,1).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import catalog
from .arrays import (
    alpha_array,
    degree_stats,
    gamma_array,
    gamma_via_adjacency,
    neighboring_index,
)
from .families import chain, complete, kite, polygon, s1, s2, star
from .graph import (
    Graph,
    degree_array,
    distance_stats,
    enumerate_connected_graphs,
    enumerate_labeled_trees,
    is_tree,
    triangle_count,
)
from .lorenz import Relation, cumulative, gini_generalized, majorize_compare

PASS, FAIL, FLAGGED = "pass", "fail", "flagged"

FLAGGED_FIXTURES = (
    "flag.chain_cumulative_typo",
    "flag.s1_s2_direction",
    "flag.fig15_alpha_length",
    "flag.gini.fig6_G3",
    "flag.cumulative.fig6_G3",
)


@dataclass(frozen=True)
class FixtureResult:
    name: str
    expected: str
    computed: str
    status: str


def _check(name: str, expected, computed) -> FixtureResult:
    status = PASS if expected == computed else FAIL
    return FixtureResult(name, repr(expected), repr(computed), status)


def _fig(fig_id: str) -> Graph:
    return catalog.catalog_figure(fig_id).graph


def _gini_fixtures() -> list[FixtureResult]:
    # The value published for fig6_G3 is 24, but its degree array (3,2,2,1)
    # has prefix sums (3,5,7,8) totalling 23; a cumulative array reaching 9
    # would need an odd total degree, which no graph realizes. Reported as a
    # flagged discrepancy, not a failure.
    expected = {"fig6_G1": 17, "fig6_G2": 18, "fig6_G3": 24,
                "fig6_G4": 20, "fig6_G5": 27, "fig6_G6": 30}
    out = []
    for fid, want in expected.items():
        got = gini_generalized(degree_array(_fig(fid)))
        if fid == "fig6_G3":
            out.append(FixtureResult(f"flag.gini.{fid}", repr(want), repr(got), FLAGGED))
        else:
            out.append(_check(f"gini.{fid}", want, got))
    return out


def _hasse_fixtures() -> list[FixtureResult]:
    cumulatives = {
        "fig6_G1": (2, 4, 5, 6), "fig6_G2": (3, 4, 5, 6), "fig6_G3": (3, 5, 7, 9),
        "fig6_G4": (2, 4, 6, 8), "fig6_G5": (3, 6, 8, 10), "fig6_G6": (3, 6, 9, 12),
    }
    out = []
    for fid, want in cumulatives.items():
        got = tuple(cumulative(degree_array(_fig(fid))))
        if fid == "fig6_G3":
            # Same published slip as the fig6_G3 Gini value: (3,5,7,9) is not
            # the prefix-sum array of (3,2,2,1).
            out.append(FixtureResult(f"flag.cumulative.{fid}", repr(want),
                                     repr(got), FLAGGED))
        else:
            out.append(_check(f"hasse.cumulative.{fid}", want, got))
    relations = [
        ("fig6_G1", "fig6_G2", Relation.LESS),
        ("fig6_G1", "fig6_G4", Relation.LESS),
        ("fig6_G2", "fig6_G4", Relation.INCOMPARABLE),
        ("fig6_G2", "fig6_G3", Relation.LESS),
        ("fig6_G4", "fig6_G3", Relation.LESS),
        ("fig6_G3", "fig6_G5", Relation.LESS),
        ("fig6_G5", "fig6_G6", Relation.LESS),
    ]
    for a, b, want in relations:
        got = majorize_compare(degree_array(_fig(a)), degree_array(_fig(b))).relation
        out.append(_check(f"hasse.{a}-vs-{b}", want.value, got.value))
    return out


def _theorem1_fixtures() -> list[FixtureResult]:
    out = []
    pairs = [
        ("theorem1.fig1", chain(5), _fig("fig1_H"),
         Relation.LESS, Fraction(2), Fraction(1)),
        ("theorem1.fig2", _fig("fig2_G1"), _fig("fig2_H1"),
         Relation.LESS, Fraction(2), Fraction(3)),
        ("theorem1.fig3", _fig("fig3_H1"), _fig("fig3_H2"),
         Relation.INCOMPARABLE, Fraction(3), Fraction(7, 2)),
    ]
    for name, g, h, rel, md_g, md_h in pairs:
        dg, dh = degree_array(g), degree_array(h)
        out.append(_check(f"{name}.relation", rel.value,
                          majorize_compare(dg, dh).relation.value))
        out.append(_check(f"{name}.medians", (md_g, md_h),
                          (degree_stats(dg)[2], degree_stats(dh)[2])))
    _, mean_g, _ = degree_stats(degree_array(_fig("fig3_H1")))
    _, mean_h, _ = degree_stats(degree_array(_fig("fig3_H2")))
    out.append(_check("theorem1.fig3.means", (Fraction(20, 6), Fraction(20, 6)),
                      (mean_g, mean_h)))
    return out


def _theorem2_fixtures(max_n: int = 6) -> list[FixtureResult]:
    out = []
    for n in range(3, max_n + 1):
        base = degree_array(chain(n))
        bad = sum(
            1 for g in enumerate_connected_graphs(n)
            if majorize_compare(base, degree_array(g)).relation
            in (Relation.GREATER, Relation.INCOMPARABLE)
        )
        out.append(_check(f"theorem2.n{n}.violations", 0, bad))
    return out


def _gamma_table_fixtures() -> list[FixtureResult]:
    out = []
    for n in range(4, 11):
        out.append(_check(f"gamma.star.n{n}",
                          (2 * (n - 1),) + (n,) * (n - 1), gamma_array(star(n))))
        out.append(_check(f"nu.star.n{n}", (n + 2) * (n - 1), neighboring_index(star(n))))
        out.append(_check(f"nu.chain.n{n}", 6 * n - 8, neighboring_index(chain(n))))
        out.append(_check(f"nu.polygon.n{n}", 6 * n, neighboring_index(polygon(n))))
        out.append(_check(f"nu.complete.n{n}", n * n * (n - 1),
                          neighboring_index(complete(n))))
    return out


def _random_connected(rng: random.Random, max_n: int = 12) -> Graph:
    n = rng.randint(2, max_n)
    nodes = list(range(n))
    rng.shuffle(nodes)
    edges = set()
    for i in range(1, n):  # random spanning tree first, so it is connected
        j = rng.randrange(i)
        u, v = nodes[i], nodes[j]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.25:
                edges.add((u, v))
    return Graph(n, frozenset(edges))


def _theorem5_fixtures(samples: int = 200) -> list[FixtureResult]:
    rng = random.Random(20240826)
    mismatches = sum(
        1 for _ in range(samples)
        if gamma_array(g := _random_connected(rng)) != gamma_via_adjacency(g)
    )
    out = [_check("theorem5.random200.mismatches", 0, mismatches)]
    for fid in catalog.catalog_ids():
        g = _fig(fid)
        out.append(_check(f"theorem5.{fid}", gamma_array(g), gamma_via_adjacency(g)))
    return out


def _eq14_fixtures(samples: int = 200) -> list[FixtureResult]:
    rng = random.Random(826)
    mismatches = sum(
        1 for _ in range(samples)
        if sum(gamma_array(g := _random_connected(rng)))
        != sum(d * (d + 1) for d in degree_array(g))
    )
    return [_check("eq14.random200.mismatches", 0, mismatches)]


def _remark_fixtures() -> list[FixtureResult]:
    a, b = _fig("fig16_a"), _fig("fig16_b")
    c, d = _fig("fig17_a"), _fig("fig17_b")
    return [
        _check("remark_a.fig16.total_degrees", (8, 8),
               (sum(degree_array(a)), sum(degree_array(b)))),
        _check("remark_a.fig16.nu", (22, 24),
               (neighboring_index(a), neighboring_index(b))),
        _check("remark_b.fig17.nu", (48, 48),
               (neighboring_index(c), neighboring_index(d))),
        _check("remark_b.fig17.total_degrees", (14, 12),
               (sum(degree_array(c)), sum(degree_array(d)))),
    ]


def _statement_fixtures() -> list[FixtureResult]:
    a, b = _fig("fig18_a"), _fig("fig18_b")
    c, d = _fig("fig19_a"), _fig("fig19_b")
    return [
        _check("statement15.fig18.delta", Relation.LESS.value,
               majorize_compare(degree_array(a), degree_array(b)).relation.value),
        _check("statement15.fig18.gamma", Relation.INCOMPARABLE.value,
               majorize_compare(gamma_array(a), gamma_array(b)).relation.value),
        _check("statement15.fig18.gammas", ((12, 12, 10, 10, 4, 4), (11, 11, 11, 11, 8, 8)),
               (gamma_array(a), gamma_array(b))),
        _check("statement16.fig19.gamma", Relation.LESS.value,
               majorize_compare(gamma_array(c), gamma_array(d)).relation.value),
        _check("statement16.fig19.delta", Relation.INCOMPARABLE.value,
               majorize_compare(degree_array(c), degree_array(d)).relation.value),
        _check("statement16.fig19.gammas", ((6, 4, 4, 4), (6, 6, 6, 6)),
               (gamma_array(c), gamma_array(d))),
    ]


def _separation_fixtures() -> list[FixtureResult]:
    g, gp = _fig("fig14_G"), _fig("fig14_Gp")
    a, b = _fig("fig15a"), _fig("fig15b")
    return [
        _check("separation.fig14.delta", degree_array(g), degree_array(gp)),
        _check("separation.fig14.alpha", alpha_array(g), alpha_array(gp)),
        _check("separation.fig14.gammas",
               ((17, 17, 14, 14, 13, 13), (16, 16, 14, 14, 14, 14)),
               (gamma_array(g), gamma_array(gp))),
        _check("separation.fig14.nu", (88, 88),
               (neighboring_index(g), neighboring_index(gp))),
        _check("separation.fig15.arrays",
               (degree_array(a), alpha_array(a), gamma_array(a)),
               (degree_array(b), alpha_array(b), gamma_array(b))),
        _check("separation.fig15.triangles", (0, 2),
               (triangle_count(a), triangle_count(b))),
    ]


def _theorem6_fixtures(max_n: int = 8) -> list[FixtureResult]:
    out = []
    for n in range(4, max_n + 1):
        groups: dict[tuple[int, ...], set[tuple[int, ...]]] = {}
        for t in enumerate_labeled_trees(n):
            groups.setdefault(gamma_array(t), set()).add(degree_array(t))
        violations = sum(1 for deltas in groups.values() if len(deltas) > 1)
        out.append(_check(f"theorem6.n{n}.gamma_groups_with_mixed_delta", 0, violations))
    return out


def _theorem3_bound_fixtures() -> list[FixtureResult]:
    out = []
    for m in (10, 20, 50, 100):
        g = kite(m)
        n = g.n
        md = distance_stats(g).median_distance
        bound = (2 - math.sqrt(3)) / 2 * n - (1 + math.sqrt(3)) / 2
        # One distance unit of slack covers the median-convention difference.
        out.append(_check(f"theorem3.kite_m{m}.median_bound_holds", True,
                          float(md) > bound - 1))
        out.append(_check(f"theorem3.kite_m{m}.median_degree", Fraction(m - 1),
                          degree_stats(degree_array(g))[2]))
    return out


def _flagged_fixtures() -> list[FixtureResult]:
    out = []
    # The stated chain cumulative array ends at 2N; the degree-derived one ends
    # at the chain's total degree 2N-2.
    computed = tuple(cumulative(degree_array(chain(6))))
    out.append(FixtureResult("flag.chain_cumulative_typo",
                             "(2, 4, 6, ..., 2N-2, 2N-1, 2N)",
                             repr(computed), FLAGGED))
    # The claimed relation delta(S1) majorized-by delta(S2) fails under the
    # figure parameters; the computed verdict goes the other way.
    d1 = degree_array(s1(3, a=3, b=1))
    d2 = degree_array(s2(3, a=1, b=3))
    verdict = majorize_compare(d1, d2).relation.value
    out.append(FixtureResult("flag.s1_s2_direction", "'less'", repr(verdict), FLAGGED))
    # The quoted alpha array for the 6-node pair has four entries; a 6-node
    # alpha array has five.
    out.append(FixtureResult("flag.fig15_alpha_length", "(9, 6, 0, 0)",
                             repr(alpha_array(_fig("fig15a"))), FLAGGED))
    return out


_GROUPS = {
    "gini": _gini_fixtures,
    "hasse": _hasse_fixtures,
    "theorem1": _theorem1_fixtures,
    "theorem2": _theorem2_fixtures,
    "gamma": _gamma_table_fixtures,
    "theorem5": _theorem5_fixtures,
    "eq14": _eq14_fixtures,
    "remarks": _remark_fixtures,
    "statements": _statement_fixtures,
    "separations": _separation_fixtures,
    "theorem6": _theorem6_fixtures,
    "theorem3": _theorem3_bound_fixtures,
    "flags": _flagged_fixtures,
}


def run_fixtures(only: str | None = None, theorem6_max_n: int = 8) -> list[FixtureResult]:
    """Run the verification suite, optionally restricted to one fixture group."""
    if only is not None and only not in _GROUPS:
        raise KeyError(f"unknown fixture group {only!r}; choose from {sorted(_GROUPS)}")
    results: list[FixtureResult] = []
    for name, fn in _GROUPS.items():
        if only is not None and name != only:
            continue
        if name == "theorem6":
            results.extend(fn(theorem6_max_n))
        else:
            results.extend(fn())
    return results
