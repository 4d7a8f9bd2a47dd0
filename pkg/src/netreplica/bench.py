"""Graph algorithm suite with timing, for running-time realism comparisons.

The algorithms cover distinct computation and data-access patterns:
breadth-first component search, PageRank power iteration, source-sampled
betweenness, modularity-based community detection, k-core peeling,
triangle counting by neighbor intersection, and a union-find spanning
forest. Throughput is reported in edges per second so runs on graphs of
different sizes are comparable; each timed run is preceded by one untimed
warm-up.
"""

from __future__ import annotations

import logging
import time
from collections import deque
from dataclasses import dataclass

from .community import plm
from .errors import UndefinedInputError
from .graph import Graph, connected_components, triangles_per_node
from .rng import make_rng

logger = logging.getLogger(__name__)

DEFAULT_DAMPING = 0.85
DEFAULT_TOLERANCE = 1e-8


def pagerank(
    graph: Graph,
    damping: float = DEFAULT_DAMPING,
    tol: float = DEFAULT_TOLERANCE,
    max_iterations: int = 10_000,
) -> list[float]:
    """PageRank by power iteration on the undirected random walk.

    Uniform teleport with probability ``1 - damping``; mass on degree-0
    nodes is spread uniformly so scores always sum to 1. Iterates until the
    L1 change drops to ``tol``.
    """
    n = graph.n
    if n == 0:
        raise UndefinedInputError("pagerank of an empty graph")
    if not 0.0 < damping < 1.0:
        raise ValueError("damping must be in (0, 1)")
    if tol <= 0.0:
        raise ValueError("tolerance must be positive")
    adj = graph.adjacency()
    degrees = [len(nbrs) for nbrs in adj]
    scores = [1.0 / n] * n
    base = (1.0 - damping) / n
    for _ in range(max_iterations):
        share = [scores[v] / degrees[v] if degrees[v] else 0.0 for v in range(n)]
        dangling = damping * sum(scores[v] for v in range(n) if not degrees[v]) / n
        nxt = [0.0] * n
        for v in range(n):
            acc = 0.0
            for u in adj[v]:
                acc += share[u]
            nxt[v] = base + dangling + damping * acc
        delta = sum(abs(nxt[v] - scores[v]) for v in range(n))
        scores = nxt
        if delta <= tol:
            break
    return scores


def betweenness_approx(
    graph: Graph,
    samples: int | None = None,
    seed: int | None = None,
) -> list[float]:
    """Source-sampled betweenness (per unordered node pair).

    Runs single-source shortest-path dependency accumulation from
    ``samples`` sources drawn uniformly without replacement and scales by
    ``n / samples``; with ``samples >= n`` every node is a source and the
    result is exact. Default sample count is ``max(1, n // 10)``.
    """
    n = graph.n
    if n == 0:
        return []
    if samples is None:
        samples = max(1, n // 10)
    if samples < 1:
        raise ValueError("need at least one sample source")
    if samples >= n:
        sources = range(n)
        factor = 1.0
    else:
        sources = make_rng(seed).sample(range(n), samples)
        factor = n / samples

    adj = graph.adjacency()
    scores = [0.0] * n
    for s in sources:
        # Brandes: BFS phase, then dependency accumulation in reverse order
        stack: list[int] = []
        preds: list[list[int]] = [[] for _ in range(n)]
        sigma = [0] * n
        dist = [-1] * n
        sigma[s] = 1
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            stack.append(u)
            du = dist[u]
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = du + 1
                    queue.append(v)
                if dist[v] == du + 1:
                    sigma[v] += sigma[u]
                    preds[v].append(u)
        delta = [0.0] * n
        while stack:
            w = stack.pop()
            coeff = (1.0 + delta[w]) / sigma[w]
            for u in preds[w]:
                delta[u] += sigma[u] * coeff
            if w != s:
                scores[w] += delta[w]
    # each unordered pair is seen from both endpoints in the exact case
    return [x * factor * 0.5 for x in scores]


def core_decomposition(graph: Graph, with_order: bool = False):
    """k-core numbers via bucket peeling.

    Returns the per-node core numbers; with ``with_order=True`` also the
    node peeling order. A node's core number never exceeds its degree.
    """
    n = graph.n
    adj = graph.adjacency()
    degree = [len(nbrs) for nbrs in adj]
    max_deg = max(degree, default=0)
    bins = [0] * (max_deg + 1)
    for d in degree:
        bins[d] += 1
    start = 0
    for d in range(max_deg + 1):
        bins[d], start = start, start + bins[d]
    position = [0] * n
    ordered = [0] * n
    for v in range(n):
        position[v] = bins[degree[v]]
        ordered[position[v]] = v
        bins[degree[v]] += 1
    for d in range(max_deg, 0, -1):
        bins[d] = bins[d - 1]
    bins[0] = 0

    cores = degree[:]
    for i in range(n):
        v = ordered[i]
        for u in adj[v]:
            if cores[u] > cores[v]:
                # move u to the front of its bucket, then shrink its degree
                du = cores[u]
                pu = position[u]
                pw = bins[du]
                w = ordered[pw]
                if u != w:
                    ordered[pu], ordered[pw] = w, u
                    position[u], position[w] = pw, pu
                bins[du] += 1
                cores[u] -= 1
    if with_order:
        return cores, ordered
    return cores


def triangle_count(graph: Graph) -> tuple[int, list[int]]:
    """Exact triangle count, total and per node.

    Forward style: each edge (u, v) with u < v intersects the higher-id
    remainders of both sorted neighbor lists, so every triangle is found at
    exactly one edge.
    """
    per_node = triangles_per_node(graph)
    total = sum(per_node) // 3
    return total, per_node


def spanning_forest(graph: Graph) -> list[tuple[int, int]]:
    """Spanning forest edges via union-find (path halving, union by size)."""
    n = graph.n
    parent = list(range(n))
    size = [1] * n
    forest: list[tuple[int, int]] = []
    for u, v in graph.edges():
        ru = u
        while parent[ru] != ru:
            parent[ru] = parent[parent[ru]]
            ru = parent[ru]
        rv = v
        while parent[rv] != rv:
            parent[rv] = parent[parent[rv]]
            rv = parent[rv]
        if ru == rv:
            continue
        if size[ru] < size[rv]:
            ru, rv = rv, ru
        parent[rv] = ru
        size[ru] += size[rv]
        forest.append((u, v))
    return forest


@dataclass(frozen=True)
class BenchResult:
    algorithm: str
    ms: float
    edges_per_second: float


SUITE_ALGORITHMS = (
    "connected_components",
    "pagerank",
    "betweenness_approx",
    "plm",
    "core_decomposition",
    "triangle_count",
    "spanning_forest",
)


def timed_suite(graph: Graph, seed: int | None = None, reps: int = 1) -> list[BenchResult]:
    """Time the whole algorithm suite on one graph.

    Each algorithm gets one untimed warm-up, then the mean wall time of
    ``reps`` runs; throughput is m / seconds. An empty graph is skipped
    with a diagnostic and yields no results.
    """
    if graph.m == 0:
        logger.warning("benchmark skipped: graph has no edges")
        return []
    m = graph.m
    runners = {
        "connected_components": lambda: connected_components(graph),
        "pagerank": lambda: pagerank(graph),
        "betweenness_approx": lambda: betweenness_approx(graph, seed=seed),
        "plm": lambda: plm(graph, seed=seed),
        "core_decomposition": lambda: core_decomposition(graph),
        "triangle_count": lambda: triangle_count(graph),
        "spanning_forest": lambda: spanning_forest(graph),
    }
    results = []
    for name in SUITE_ALGORITHMS:
        run = runners[name]
        run()  # warm-up, untimed
        elapsed = 0.0
        for _ in range(max(1, reps)):
            t0 = time.perf_counter()
            run()
            elapsed += time.perf_counter() - t0
        seconds = max(elapsed / max(1, reps), 1e-9)
        results.append(BenchResult(name, seconds * 1000.0, m / seconds))
    return results
