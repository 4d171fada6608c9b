"""Parametric network families and the reconstruction search oracle.

The figure catalog lives in :mod:`smallworlds.catalog`; it freezes the graphs
found by :func:`find_graphs_matching` as explicit edge lists.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .arrays import alpha_array, gamma_array
from .graph import (
    MAX_GRAPH_ENUM_NODES,
    Graph,
    canonical_form,
    degree_array,
    enumerate_connected_graphs,
)

FAMILY_KINDS = ("complete", "star", "chain", "polygon", "spider", "kite", "s1", "s2", "lntree")


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus the fixed parameters of the S1/S2 constructions."""

    kind: str
    a: int | None = None
    b: int | None = None

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family {self.kind!r}")
        if self.kind == "s1":
            a = 3 if self.a is None else self.a
            b = 1 if self.b is None else self.b
            if not (0 < b < a):
                raise ValueError("s1 requires 0 < b < a")
        elif self.kind == "s2":
            a = 1 if self.a is None else self.a
            b = 3 if self.b is None else self.b
            if not (0 < a < b):
                raise ValueError("s2 requires 0 < a < b")
        elif self.a is not None or self.b is not None:
            raise ValueError(f"family {self.kind!r} takes no (a, b) parameters")

    @property
    def ab(self) -> tuple[int, int]:
        """Effective (a, b); defaults match the paper's figure parameters."""
        if self.kind == "s1":
            return (3 if self.a is None else self.a, 1 if self.b is None else self.b)
        if self.kind == "s2":
            return (1 if self.a is None else self.a, 3 if self.b is None else self.b)
        raise ValueError(f"family {self.kind!r} has no (a, b)")


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, frozenset(itertools.combinations(range(n), 2)))


def star(n: int) -> Graph:
    """One center (node 0) with n-1 pendants."""
    if n < 2:
        raise ValueError("star needs n >= 2")
    return Graph(n, frozenset((0, i) for i in range(1, n)))


def chain(n: int) -> Graph:
    if n < 2:
        raise ValueError("chain needs n >= 2")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def polygon(n: int) -> Graph:
    if n < 3:
        raise ValueError("polygon needs n >= 3")
    edges = {(i, i + 1) for i in range(n - 1)} | {(0, n - 1)}
    return Graph(n, frozenset(edges))


def spider(m: int) -> Graph:
    """Complete m-graph with two pendant nodes on each clique node; N = 3m."""
    if m < 2:
        raise ValueError("spider needs m >= 2")
    edges = set(itertools.combinations(range(m), 2))
    for i in range(m):
        edges.add((i, m + 2 * i))
        edges.add((i, m + 2 * i + 1))
    return Graph(3 * m, frozenset(edges))


def kite(m: int) -> Graph:
    """Complete m-graph with a pendant chain of m-1 nodes; N = 2m-1."""
    if m < 2:
        raise ValueError("kite needs m >= 2")
    edges = set(itertools.combinations(range(m), 2))
    prev = 0
    for k in range(m, 2 * m - 1):
        edges.add((min(prev, k), max(prev, k)))
        prev = k
    return Graph(2 * m - 1, frozenset(edges))


def s1(m: int, a: int = 3, b: int = 1) -> Graph:
    """Complete (m+a)-graph with one pendant on m+b of its nodes; N = 2m+a+b."""
    if not (0 < b < a) or m < 1:
        raise ValueError("s1 requires m >= 1 and 0 < b < a")
    core = m + a
    edges = set(itertools.combinations(range(core), 2))
    for i in range(m + b):
        edges.add((i, core + i))
    return Graph(2 * m + a + b, frozenset(edges))


def s2(m: int, a: int = 1, b: int = 3) -> Graph:
    """Complete (m+a)-graph with a pendant on every clique node and a second
    pendant on b-a of them; N = 2m+a+b."""
    if not (0 < a < b) or m + 2 * a - b < 0 or m < 1:
        raise ValueError("s2 requires m >= 1, 0 < a < b, and m + 2a - b >= 0")
    core = m + a
    edges = set(itertools.combinations(range(core), 2))
    nxt = core
    for i in range(core):
        edges.add((i, nxt))
        nxt += 1
    for i in range(b - a):
        edges.add((i, nxt))
        nxt += 1
    return Graph(2 * m + a + b, frozenset(edges))


def ln_tree(n: int) -> Graph:
    """Chain of floor(ln n) nodes, each node sprouting floor(ln n) children per
    level until at least n nodes exist, then truncated to the first n created."""
    if n < 4:
        raise ValueError("ln-tree needs n >= 4")
    k = math.floor(math.log(n))
    edges = [(i, i + 1) for i in range(k - 1)]
    level = list(range(k))
    count = k
    while count < n:
        nxt = []
        for parent in level:
            for _ in range(k):
                edges.append((parent, count))
                nxt.append(count)
                count += 1
        level = nxt
    # Creation order is breadth-first, so dropping the tail keeps a tree.
    kept = [(u, v) for u, v in edges if u < n and v < n]
    return Graph(n, frozenset(kept))


def make_family(spec: FamilySpec, size: int) -> Graph:
    """Instantiate a family member; `size` is N for the plain kinds and the
    parameter M for spider, kite, s1, and s2."""
    if spec.kind == "complete":
        return complete(size)
    if spec.kind == "star":
        return star(size)
    if spec.kind == "chain":
        return chain(size)
    if spec.kind == "polygon":
        return polygon(size)
    if spec.kind == "spider":
        return spider(size)
    if spec.kind == "kite":
        return kite(size)
    if spec.kind == "s1":
        a, b = spec.ab
        return s1(size, a, b)
    if spec.kind == "s2":
        a, b = spec.ab
        return s2(size, a, b)
    if spec.kind == "lntree":
        return ln_tree(size)
    raise ValueError(f"unknown family {spec.kind!r}")


def find_graphs_matching(
    n: int,
    delta: tuple[int, ...] | None = None,
    alpha: tuple[int, ...] | None = None,
    gamma: tuple[int, ...] | None = None,
) -> list[Graph]:
    """One representative per isomorphism class of connected n-node graphs whose
    invariant arrays equal every supplied constraint (exhaustive, n <= 7)."""
    if n > MAX_GRAPH_ENUM_NODES:
        raise ValueError(f"search supports n <= {MAX_GRAPH_ENUM_NODES}")
    if delta is None and alpha is None and gamma is None:
        raise ValueError("at least one constraint required")
    seen: dict[tuple, Graph] = {}
    for g in enumerate_connected_graphs(n):
        if delta is not None and degree_array(g) != tuple(delta):
            continue
        if gamma is not None and gamma_array(g) != tuple(gamma):
            continue
        if alpha is not None and alpha_array(g) != tuple(alpha):
            continue
        key = canonical_form(g)
        if key not in seen:
            seen[key] = Graph(n, frozenset(key))
    return [seen[k] for k in sorted(seen)]
