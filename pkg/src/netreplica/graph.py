"""Undirected simple graph storage, edge-list I/O, and elementary statistics.

The :class:`Graph` container is the single graph representation used by the
whole package: nodes are the integers ``0..n-1`` and each node keeps a sorted
list of neighbor ids. Graphs are immutable after construction and safe to
read from concurrent workers.

On-disk format: one edge per line as two whitespace-separated node ids,
``#`` or ``%`` starting a comment line. Node ids are 0-based and the node
count is ``max id + 1``, so ids that never appear as endpoints are isolated
nodes. Duplicate lines and self-loops are dropped on load.
"""

from __future__ import annotations

import logging
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import EdgeListParseError, UndefinedInputError
from .rng import make_rng

logger = logging.getLogger(__name__)

COMMENT_PREFIXES = ("#", "%")

# Above this node count, diameter computations fall back to BFS from a
# uniform sample of sources instead of every node.
EXACT_DIAMETER_LIMIT = 10_000
DEFAULT_DIAMETER_SAMPLES = 1000


class Graph:
    """Simple undirected graph over nodes ``0..n-1``.

    Invariants (enforced by :func:`from_edges` and the loaders):

    * no self-loops, each unordered pair appears at most once;
    * adjacency is symmetric: ``v in neighbors(u)`` iff ``u in neighbors(v)``;
    * ``m`` equals half the sum of adjacency-list lengths.

    The raw constructor trusts its input; use :meth:`from_edges` unless the
    adjacency is known to be valid and sorted.
    """

    __slots__ = ("_adj", "_m")

    def __init__(self, adjacency: list[list[int]]):
        self._adj = adjacency
        self._m = sum(len(nbrs) for nbrs in adjacency) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge iterable, rejecting invalid input.

        Raises ``ValueError`` on self-loops, duplicate edges, or endpoints
        outside ``0..n-1``.
        """
        adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[int] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside node range 0..{n - 1}")
            key = u * n + v if u < v else v * n + u
            if key in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        for nbrs in adj:
            nbrs.sort()
        return cls(adj)

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def neighbors(self, v: int) -> Sequence[int]:
        """Sorted neighbor ids of ``v`` (do not mutate)."""
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self._adj[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Iterate each edge once as ``(u, v)`` with ``u < v``, sorted."""
        for u, nbrs in enumerate(self._adj):
            for v in nbrs:
                if v > u:
                    yield (u, v)

    def adjacency(self) -> list[list[int]]:
        """The underlying adjacency lists (treat as read-only)."""
        return self._adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def validate(self) -> None:
        """Full-scan check of the simplicity and symmetry invariants."""
        for u, nbrs in enumerate(self._adj):
            prev = -1
            for v in nbrs:
                if v == u:
                    raise ValueError(f"self-loop at node {u}")
                if v <= prev:
                    raise ValueError(f"adjacency of {u} not strictly sorted")
                if not self.has_edge(v, u):
                    raise ValueError(f"asymmetric edge ({u}, {v})")
                prev = v


@dataclass(frozen=True)
class ParseResult:
    """Loader outcome: the graph plus counts of dropped lines."""

    graph: Graph
    self_loops_dropped: int
    duplicates_dropped: int


def parse_edge_list(text: str) -> ParseResult:
    """Parse edge-list text into a simple undirected graph.

    Node ids run from 0 to the maximum id seen. Self-loops and duplicate
    edges (in either orientation) are dropped and counted.
    """
    pairs: list[tuple[int, int]] = []
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(
                f"expected two node ids, got {len(parts)} tokens", lineno
            )
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"malformed token in {parts!r}", lineno) from None
        if u < 0 or v < 0:
            raise EdgeListParseError("negative node id", lineno)
        if u > max_id:
            max_id = u
        if v > max_id:
            max_id = v
        pairs.append((u, v))

    n = max_id + 1
    adj: list[list[int]] = [[] for _ in range(n)]
    seen: set[int] = set()
    self_loops = 0
    duplicates = 0
    for u, v in pairs:
        if u == v:
            self_loops += 1
            continue
        key = u * n + v if u < v else v * n + u
        if key in seen:
            duplicates += 1
            continue
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    for nbrs in adj:
        nbrs.sort()
    return ParseResult(Graph(adj), self_loops, duplicates)


def load_edge_list(text: str) -> Graph:
    """Parse edge-list text, warning about dropped self-loops/duplicates."""
    result = parse_edge_list(text)
    dropped = result.self_loops_dropped + result.duplicates_dropped
    if dropped:
        logger.warning(
            "dropped %d self-loop(s) and %d duplicate edge(s) while loading",
            result.self_loops_dropped,
            result.duplicates_dropped,
        )
    return result.graph


def read_edge_list(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return load_edge_list(fh.read())


def write_edge_list(graph: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for u, v in graph.edges():
            fh.write(f"{u} {v}\n")


def disjoint_union(graph: Graph, copies: int) -> Graph:
    """Disjoint union of ``copies`` copies of ``graph``.

    Copy ``i`` of node ``v`` gets id ``i * n + v``; no edges run between
    copies, so the result has ``copies * n`` nodes and ``copies * m`` edges.
    """
    if copies < 1:
        raise ValueError("number of copies must be >= 1")
    n = graph.n
    adj: list[list[int]] = []
    for i in range(copies):
        base = i * n
        for nbrs in graph.adjacency():
            adj.append([base + w for w in nbrs])
    return Graph(adj)


def degree_sequence(graph: Graph) -> list[int]:
    """Per-node degrees, indexed by node id."""
    return [len(nbrs) for nbrs in graph.adjacency()]


def gini(values: Sequence[float]) -> float:
    """Population Gini coefficient of a sequence of non-negative values.

    Computed on the ascending sort ``x_(1) <= ... <= x_(n)`` as
    ``G = 2 * sum(i * x_(i)) / (n * sum(x)) - (n + 1) / n``.
    0 for any constant positive sequence, and invariant under uniform
    scaling.
    """
    if not values:
        raise UndefinedInputError("gini of an empty sequence")
    if any(x < 0 for x in values):
        raise ValueError("gini requires non-negative values")
    total = sum(values)
    if total == 0:
        raise UndefinedInputError("gini undefined when all values are zero")
    xs = sorted(values)
    n = len(xs)
    ranked = sum(i * x for i, x in enumerate(xs, start=1))
    return 2.0 * ranked / (n * total) - (n + 1) / n


def triangles_per_node(graph: Graph) -> list[int]:
    """Number of triangles each node participates in.

    Sorted-adjacency intersection; each triangle contributes 1 to each of
    its three corners.
    """
    adj = graph.adjacency()
    counts = [0] * graph.n
    for u in range(graph.n):
        nbrs_u = adj[u]
        for v in nbrs_u:
            if v <= u:
                continue
            # count common neighbors w > v so each triangle is found once
            nbrs_v = adj[v]
            i = bisect_left(nbrs_u, v + 1)
            j = bisect_left(nbrs_v, v + 1)
            len_u, len_v = len(nbrs_u), len(nbrs_v)
            while i < len_u and j < len_v:
                a, b = nbrs_u[i], nbrs_v[j]
                if a == b:
                    counts[u] += 1
                    counts[v] += 1
                    counts[a] += 1
                    i += 1
                    j += 1
                elif a < b:
                    i += 1
                else:
                    j += 1
    return counts


def local_clustering(graph: Graph) -> list[float]:
    """Local clustering coefficient per node; nodes of degree < 2 get 0."""
    tri = triangles_per_node(graph)
    out = []
    for v in range(graph.n):
        d = graph.degree(v)
        if d < 2:
            out.append(0.0)
        else:
            out.append(2.0 * tri[v] / (d * (d - 1)))
    return out


def avg_local_clustering(graph: Graph) -> float:
    """Mean local clustering coefficient over all nodes."""
    if graph.n == 0:
        return 0.0
    return sum(local_clustering(graph)) / graph.n


def clustering_by_degree(graph: Graph) -> dict[int, tuple[int, float]]:
    """Per-degree clustering summary: ``degree -> (node count, mean coefficient)``."""
    coeffs = local_clustering(graph)
    sums: dict[int, float] = {}
    counts: dict[int, int] = {}
    for v, c in enumerate(coeffs):
        d = graph.degree(v)
        sums[d] = sums.get(d, 0.0) + c
        counts[d] = counts.get(d, 0) + 1
    return {d: (counts[d], sums[d] / counts[d]) for d in sorted(counts)}


def bfs_distances(graph: Graph, source: int) -> list[int]:
    """BFS hop distances from ``source``; unreachable nodes get -1."""
    adj = graph.adjacency()
    dist = [-1] * graph.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return dist


def connected_components(graph: Graph) -> tuple[int, list[int]]:
    """Count of connected components and a dense component id per node.

    Component ids are assigned in order of each component's smallest node.
    """
    n = graph.n
    labels = [-1] * n
    adj = graph.adjacency()
    count = 0
    for start in range(n):
        if labels[start] >= 0:
            continue
        labels[start] = count
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if labels[v] < 0:
                    labels[v] = count
                    queue.append(v)
        count += 1
    return count, labels


def largest_component_nodes(graph: Graph) -> list[int]:
    """Nodes of the largest connected component (smallest-label tie-break)."""
    if graph.n == 0:
        return []
    count, labels = connected_components(graph)
    sizes = [0] * count
    for c in labels:
        sizes[c] += 1
    best = max(range(count), key=lambda c: (sizes[c], -c))
    return [v for v in range(graph.n) if labels[v] == best]


def _component_subgraph(graph: Graph, nodes: list[int]) -> Graph:
    index = {v: i for i, v in enumerate(nodes)}
    adj = [[index[w] for w in graph.neighbors(v) if w in index] for v in nodes]
    return Graph(adj)


def diameter(
    graph: Graph,
    mode: str = "exact",
    *,
    seed: int | None = None,
    samples: int = DEFAULT_DIAMETER_SAMPLES,
) -> float:
    """Diameter of the largest connected component.

    ``exact``: maximum BFS eccentricity. ``effective90``: smallest h such
    that at least 90% of the component's node pairs lie within distance h,
    linearly interpolated between integer h values.

    For components above ``EXACT_DIAMETER_LIMIT`` nodes, BFS runs from a
    uniform sample of ``samples`` sources (seeded) instead of every node,
    making both modes approximations at that scale.
    """
    if graph.n == 0:
        raise UndefinedInputError("diameter of an empty graph")
    if mode not in ("exact", "effective90"):
        raise ValueError(f"unknown diameter mode {mode!r}")
    comp_nodes = largest_component_nodes(graph)
    sub = _component_subgraph(graph, comp_nodes)
    nc = sub.n
    if nc <= 1:
        return 0.0

    if nc > EXACT_DIAMETER_LIMIT and samples < nc:
        rng = make_rng(seed)
        sources = rng.sample(range(nc), samples)
    else:
        sources = range(nc)

    if mode == "exact":
        best = 0
        for s in sources:
            ecc = max(bfs_distances(sub, s))
            if ecc > best:
                best = ecc
        return float(best)

    # effective90: build the distance histogram over sampled source rows
    hist: dict[int, int] = {}
    for s in sources:
        for d in bfs_distances(sub, s):
            if d > 0:
                hist[d] = hist.get(d, 0) + 1
    total = sum(hist.values())  # ordered pairs (or sampled rows thereof)
    target = 0.9 * total
    cumulative = 0
    prev_cum = 0
    for h in sorted(hist):
        prev_cum = cumulative
        cumulative += hist[h]
        if cumulative >= target:
            if cumulative == prev_cum:
                return float(h)
            return (h - 1) + (target - prev_cum) / (cumulative - prev_cum)
    return float(max(hist))
