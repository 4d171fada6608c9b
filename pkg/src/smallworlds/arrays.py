"""Invariant arrays of a graph: delta (degrees), alpha (distance frequencies),
gamma (closed-neighborhood degree sums), and the derived scalar indices."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .graph import Graph, degree_array, distance_matrix, multiset_median


def alpha_array(g: Graph) -> tuple[int, ...]:
    """Entry j-1 counts unordered node pairs at distance j; length N-1."""
    if g.n < 2:
        raise ValueError("alpha array needs at least two nodes")
    mat = distance_matrix(g)
    counts = [0] * (g.n - 1)
    for i in range(g.n):
        for j in range(i + 1, g.n):
            counts[mat[i][j] - 1] += 1
    return tuple(counts)


def gamma_values(g: Graph) -> list[int]:
    """Per-node closed-neighborhood degree sums, in node order (unsorted)."""
    adj = g.adjacency()
    deg = [len(a) for a in adj]
    return [deg[i] + sum(deg[j] for j in adj[i]) for i in range(g.n)]


def gamma_array(g: Graph) -> tuple[int, ...]:
    """The neighboring array: closed-neighborhood degree sums, sorted decreasingly."""
    return tuple(sorted(gamma_values(g), reverse=True))


def gamma_via_adjacency(g: Graph) -> tuple[int, ...]:
    """Cross-checking oracle: unit row vector times (A^2 + A), sorted decreasingly."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    vals = np.ones(g.n, dtype=np.int64) @ (a @ a + a)
    return tuple(sorted(map(int, vals), reverse=True))


def neighboring_index(g: Graph) -> int:
    """Sum of the gamma array; equals sum of delta*(delta+1) over nodes."""
    return sum(d * (d + 1) for d in degree_array(g))


def density(g: Graph) -> Fraction:
    """Total degree divided by N(N-1)."""
    if g.n < 2:
        raise ValueError("density needs at least two nodes")
    return Fraction(2 * g.edge_count, g.n * (g.n - 1))


def degree_stats(delta: tuple[int, ...]) -> tuple[int, Fraction, Fraction]:
    """(max, mean, median) of a non-empty degree array."""
    if not delta:
        raise ValueError("empty degree array")
    return (
        max(delta),
        Fraction(sum(delta), len(delta)),
        multiset_median(list(delta)),
    )
