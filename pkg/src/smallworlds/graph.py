"""Core graph type: parsing, distances, tree predicates, and small-n enumeration.

Graphs are finite, simple, and undirected. Nodes are 0-based integer indices;
external labels from parsed edge lists are kept in a side table. All functions
are pure and a Graph is immutable after construction.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

# Desk-scale caps for the exhaustive oracles.
MAX_GRAPH_ENUM_NODES = 7
MAX_TREE_ENUM_NODES = 9

# Above this size distance statistics switch to the scipy BFS backend.
_FAST_PATH_NODES = 64


class DisconnectedGraphError(ValueError):
    """Distances are undefined on a disconnected graph."""


class EdgeListParseError(ValueError):
    """Malformed edge-list input."""


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on nodes 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one node")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) not normalized or out of range")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("label table size must equal node count")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]],
                   labels: Iterable[str] | None = None) -> "Graph":
        """Build a graph, normalizing each pair to (min, max) and deduplicating."""
        norm = frozenset((u, v) if u < v else (v, u) for u, v in edges)
        return Graph(n, norm, tuple(labels) if labels is not None else None)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        """Neighbor lists, each sorted increasingly."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for row in adj:
            row.sort()
        return adj

    def degree_of(self, i: int) -> int:
        return sum(1 for u, v in self.edges if i in (u, v))

    def label_of(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)


@dataclass(frozen=True)
class DistanceStats:
    """Diameter, mean, and median of the multiset of pairwise distances."""

    diameter: int
    mean_distance: Fraction
    median_distance: Fraction
    distance_multiset_size: int


def multiset_median(values: list[int]) -> Fraction:
    """Median of a non-empty multiset; even sizes average the two middle values."""
    s = sorted(values)
    k = len(s)
    if k == 0:
        raise ValueError("median of empty multiset")
    if k % 2 == 1:
        return Fraction(s[k // 2])
    return Fraction(s[k // 2 - 1] + s[k // 2], 2)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: one edge per line "labelA labelB".

    "#" starts a comment; "node <label>" declares an isolated node; duplicate
    edge lines collapse. Labels are mapped to indices in first-appearance order.
    """
    labels: list[str] = []
    index: dict[str, int] = {}

    def intern(tok: str) -> int:
        if tok not in index:
            index[tok] = len(labels)
            labels.append(tok)
        return index[tok]

    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) == 2 and toks[0] == "node":
            intern(toks[1])
            continue
        if len(toks) != 2:
            raise EdgeListParseError(f"line {lineno}: expected two tokens, got {len(toks)}")
        if toks[0] == toks[1]:
            raise EdgeListParseError(f"line {lineno}: self-loop on {toks[0]!r}")
        u, v = intern(toks[0]), intern(toks[1])
        edges.add((u, v) if u < v else (v, u))
    if not labels:
        raise EdgeListParseError("no nodes declared")
    return Graph(len(labels), frozenset(edges), tuple(labels))


def to_edge_list(g: Graph) -> str:
    """Serialize a graph back to the edge-list format."""
    lines = [f"{g.label_of(u)} {g.label_of(v)}" for u, v in sorted(g.edges)]
    adj_nodes = {i for e in g.edges for i in e}
    for i in range(g.n):
        if i not in adj_nodes:
            lines.append(f"node {g.label_of(i)}")
    return "\n".join(lines) + "\n"


def degree_array(g: Graph) -> tuple[int, ...]:
    """Node degrees sorted decreasingly (the delta array)."""
    deg = [0] * g.n
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return tuple(sorted(deg, reverse=True))


def _bfs_distances(adj: list[list[int]], source: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        d = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = d
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    return min(_bfs_distances(g.adjacency(), 0)) >= 0


def is_tree(g: Graph) -> bool:
    """Knuth's lemma: connected with exactly n-1 edges."""
    return g.edge_count == g.n - 1 and is_connected(g)


def distance_matrix(g: Graph) -> list[list[int]]:
    """All-pairs hop distances by BFS from every node."""
    adj = g.adjacency()
    mat = []
    for s in range(g.n):
        dist = _bfs_distances(adj, s)
        if min(dist) < 0:
            raise DisconnectedGraphError("distances undefined: graph is disconnected")
        mat.append(dist)
    return mat


def _scipy_distance_values(g: Graph) -> "object":
    # Returns the flat upper-triangle distance array via scipy's BFS backend.
    import numpy as np
    import scipy.sparse as sp
    from scipy.sparse.csgraph import shortest_path

    if not g.edges:
        raise DisconnectedGraphError("distances undefined: graph is disconnected")
    rows, cols = zip(*g.edges)
    a = sp.csr_matrix(
        (np.ones(len(rows)), (np.array(rows), np.array(cols))), shape=(g.n, g.n)
    )
    d = shortest_path(a, method="D", unweighted=True, directed=False)
    iu = np.triu_indices(g.n, k=1)
    vals = d[iu]
    if np.isinf(vals).any():
        raise DisconnectedGraphError("distances undefined: graph is disconnected")
    return vals.astype(np.int64)


def distance_stats(g: Graph) -> DistanceStats:
    """Diameter, mean, and median over the N(N-1)/2 unordered-pair distances."""
    if g.n < 2:
        raise ValueError("distance statistics need at least two nodes")
    if g.n > _FAST_PATH_NODES:
        vals = list(map(int, _scipy_distance_values(g)))
    else:
        mat = distance_matrix(g)
        vals = [mat[i][j] for i in range(g.n) for j in range(i + 1, g.n)]
    total = sum(vals)
    return DistanceStats(
        diameter=max(vals),
        mean_distance=Fraction(total, len(vals)),
        median_distance=multiset_median(vals),
        distance_multiset_size=len(vals),
    )


def spanning_tree(g: Graph) -> Graph:
    """Deterministic BFS spanning tree: root 0, neighbors taken in index order."""
    adj = g.adjacency()
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    tree_edges = []
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                tree_edges.append((min(u, w), max(u, w)))
                queue.append(w)
    if not all(seen):
        raise DisconnectedGraphError("no spanning tree: graph is disconnected")
    return Graph(g.n, frozenset(tree_edges), g.labels)


def prufer_to_edges(n: int, seq: tuple[int, ...]) -> frozenset[tuple[int, int]]:
    """Decode a Prüfer sequence over nodes 0..n-1 into tree edges."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = degree.index(1)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return frozenset(edges)


def enumerate_labeled_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labeled trees on n nodes via the Prüfer bijection."""
    if not 2 <= n <= MAX_TREE_ENUM_NODES:
        raise ValueError(f"tree enumeration supports 2 <= n <= {MAX_TREE_ENUM_NODES}")
    if n == 2:
        yield Graph(2, frozenset({(0, 1)}))
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield Graph(n, prufer_to_edges(n, seq))


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """All labeled connected simple graphs on n nodes (brute force over edge subsets)."""
    if not 2 <= n <= MAX_GRAPH_ENUM_NODES:
        raise ValueError(f"graph enumeration supports 2 <= n <= {MAX_GRAPH_ENUM_NODES}")
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = frozenset(p for k, p in enumerate(pairs) if mask >> k & 1)
        g = Graph(n, edges)
        if is_connected(g):
            yield g


def triangle_count(g: Graph) -> int:
    """Number of 3-cliques."""
    adj = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    count = 0
    for u, v in g.edges:
        count += len(adj[u] & adj[v] & set(range(max(u, v) + 1, g.n)))
    return count


def canonical_form(g: Graph) -> tuple[tuple[int, int], ...]:
    """Minimum edge tuple over all node relabelings; equal iff isomorphic (n <= 7)."""
    if g.n > MAX_GRAPH_ENUM_NODES:
        raise ValueError(f"canonical form supports n <= {MAX_GRAPH_ENUM_NODES}")
    best = None
    for perm in itertools.permutations(range(g.n)):
        mapped = tuple(sorted(
            (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
            for u, v in g.edges
        ))
        if best is None or mapped < best:
            best = mapped
    return best if best is not None else ()
