"""Catalog of the worked-example networks, frozen as explicit edge lists.

Entries whose figure is fully determined by the text are constructed directly;
the remaining ones were pinned by running
``find_graphs_matching`` with the invariants stated for the figure and freezing
the first representative (sorted canonical order). ``scripts/freeze_catalog.py``
reruns that search and reports the selecting constraints.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arrays import alpha_array, gamma_array, neighboring_index
from .graph import Graph, degree_array, triangle_count


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    graph: Graph
    expected: dict = field(default_factory=dict)


def _g(n: int, edges: list[tuple[int, int]]) -> Graph:
    return Graph(n, frozenset(edges))


_RAW: dict[str, tuple[int, list[tuple[int, int]], dict]] = {
    # 5-node tree with degrees (3,2,1,1,1); also the second graph of the
    # equal-total-degree counterexample pair (fig16_b).
    "fig1_H": (5, [(0, 1), (0, 2), (0, 3), (3, 4)],
               {"delta": (3, 2, 1, 1, 1), "nu": 24}),
    # Frozen from search: delta (3,3,2,2,2).
    "fig2_G1": (5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (3, 4)],
                {"delta": (3, 3, 2, 2, 2)}),
    # Frozen from search: delta (4,3,3,2,2).
    "fig2_H1": (5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 4)],
                {"delta": (4, 3, 3, 2, 2)}),
    # 5-wheel: hub plus 5-cycle.
    "fig3_H1": (6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
                    (1, 2), (2, 3), (3, 4), (4, 5), (1, 5)],
                {"delta": (5, 3, 3, 3, 3, 3)}),
    # Frozen from search: delta (4,4,4,3,3,2).
    "fig3_H2": (6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4),
                    (2, 3), (2, 5), (4, 5)],
                {"delta": (4, 4, 4, 3, 3, 2)}),
    # Frozen from search: the three incomparable 5-node examples.
    "fig4_G1": (5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4)],
                {"delta": (3, 3, 3, 2, 1)}),
    "fig4_G2": (5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)],
                {"delta": (4, 2, 2, 1, 1)}),
    "fig4_G3": (5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)],
                {"delta": (4, 2, 2, 2, 2)}),
    # The six non-isomorphic connected 4-node networks.
    "fig6_G1": (4, [(0, 1), (1, 2), (2, 3)], {"delta": (2, 2, 1, 1)}),
    "fig6_G2": (4, [(0, 1), (0, 2), (0, 3)], {"delta": (3, 1, 1, 1)}),
    "fig6_G3": (4, [(0, 1), (0, 2), (0, 3), (1, 2)], {"delta": (3, 2, 2, 1)}),
    "fig6_G4": (4, [(0, 1), (1, 2), (2, 3), (0, 3)], {"delta": (2, 2, 2, 2)}),
    "fig6_G5": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)], {"delta": (3, 3, 2, 2)}),
    "fig6_G6": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
                {"delta": (3, 3, 3, 3)}),
    # Frozen from search: equal delta and alpha, different gamma.
    "fig14_G": (6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5),
                    (2, 4), (3, 5), (4, 5)],
                {"delta": (4, 4, 3, 3, 3, 3), "alpha": (10, 5, 0, 0, 0),
                 "gamma": (17, 17, 14, 14, 13, 13), "nu": 88}),
    "fig14_Gp": (6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 5), (2, 5),
                     (3, 4), (3, 5), (4, 5)],
                 {"delta": (4, 4, 3, 3, 3, 3), "alpha": (10, 5, 0, 0, 0),
                  "gamma": (16, 16, 14, 14, 14, 14), "nu": 88}),
    # Complete bipartite 3+3 and the triangular prism: equal delta, alpha, and
    # gamma, separated only by triangle counts.
    "fig15a": (6, [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5),
                   (2, 3), (2, 4), (2, 5)],
               {"delta": (3, 3, 3, 3, 3, 3), "alpha": (9, 6, 0, 0, 0),
                "gamma": (12, 12, 12, 12, 12, 12), "triangles": 0}),
    "fig15b": (6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                   (0, 3), (1, 4), (2, 5)],
               {"delta": (3, 3, 3, 3, 3, 3), "alpha": (9, 6, 0, 0, 0),
                "gamma": (12, 12, 12, 12, 12, 12), "triangles": 2}),
    # Equal total degree 8, different neighboring index (5-chain vs fig1_H).
    "fig16_a": (5, [(0, 1), (1, 2), (2, 3), (3, 4)],
                {"delta": (2, 2, 2, 1, 1), "nu": 22}),
    "fig16_b": (5, [(0, 1), (0, 2), (0, 3), (3, 4)],
                {"delta": (3, 2, 1, 1, 1), "nu": 24}),
    # Equal neighboring index 48, different total degrees 14 vs 12.
    # Frozen from search on the only realizable degree multisets.
    "fig17_a": (6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (3, 5), (4, 5)],
                {"delta": (3, 3, 2, 2, 2, 2), "nu": 48}),
    "fig17_b": (6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2)],
                {"delta": (5, 2, 2, 1, 1, 1), "nu": 48}),
    # Delta majorized but gamma incomparable: complete-4 minus an edge with two
    # pendants on the degree-2 nodes, against a frozen search result.
    "fig18_a": (6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5)],
                {"delta": (3, 3, 3, 3, 1, 1), "gamma": (12, 12, 10, 10, 4, 4)}),
    "fig18_b": (6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (3, 4), (3, 5), (4, 5)],
                {"delta": (3, 3, 3, 3, 2, 2), "gamma": (11, 11, 11, 11, 8, 8)}),
    # Gamma majorized but delta incomparable: 4-star vs 4-cycle.
    "fig19_a": (4, [(0, 1), (0, 2), (0, 3)],
                {"delta": (3, 1, 1, 1), "gamma": (6, 4, 4, 4)}),
    "fig19_b": (4, [(0, 1), (1, 2), (2, 3), (0, 3)],
                {"delta": (2, 2, 2, 2), "gamma": (6, 6, 6, 6)}),
}

_COMPUTERS = {
    "delta": degree_array,
    "alpha": alpha_array,
    "gamma": gamma_array,
    "nu": neighboring_index,
    "triangles": triangle_count,
}


def catalog_ids() -> list[str]:
    return list(_RAW)


def catalog_figure(fig_id: str) -> CatalogEntry:
    """Look up a catalog entry by figure identifier."""
    if fig_id not in _RAW:
        raise KeyError(f"unknown catalog id {fig_id!r}")
    n, edges, expected = _RAW[fig_id]
    return CatalogEntry(fig_id, _g(n, edges), dict(expected))


def compute_expected(entry: CatalogEntry) -> dict:
    """Recompute each expected invariant from the stored graph."""
    return {key: _COMPUTERS[key](entry.graph) for key in entry.expected}
