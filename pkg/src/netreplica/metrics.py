"""Realism measurement: feature vectors, replica/original comparison ratios,
and normalized centrality distributions.

A feature vector collects the scalar properties used to judge how faithful
a replica is: edge count, maximum degree, Gini coefficient of the degree
distribution, average local clustering, diameter (with its computation mode
recorded), connected components, and community counts. Comparisons report
the replica/original ratio per feature, falling back to absolute deltas
when the original value is zero.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

from . import bench
from .community import plm
from .graph import (
    Graph,
    avg_local_clustering,
    bfs_distances,
    connected_components,
    degree_sequence,
    diameter,
    gini,
    local_clustering,
)

NONTRIVIAL_COMMUNITY_SIZE = 3

CENTRALITY_MEASURES = (
    "degree",
    "closeness",
    "clustering",
    "core",
    "pagerank",
    "betweenness",
)

QUANTILE_POINTS = (1, 5, 25, 50, 75, 95, 99)


@dataclass(frozen=True)
class FeatureVector:
    """Scalar structural profile of one graph."""

    n: int
    m: int
    max_degree: int
    degree_gini: float
    avg_clustering: float
    diameter: float
    diameter_mode: str
    components: int
    communities: int
    nontrivial_communities: int

    def as_dict(self) -> dict:
        return asdict(self)

    # fields eligible for ratio comparison (everything numeric)
    NUMERIC_FIELDS = (
        "n",
        "m",
        "max_degree",
        "degree_gini",
        "avg_clustering",
        "diameter",
        "components",
        "communities",
        "nontrivial_communities",
    )


@dataclass
class ComparisonReport:
    """Replica-vs-original feature ratios plus centrality summaries.

    ``ratios`` holds replica/original per feature where the original is
    positive; features with original value 0 land in ``deltas`` as
    replica - original. ``centrality_quantiles`` maps measure ->
    {"original": [...], "replica": [...]} at the percent points in
    ``QUANTILE_POINTS``, when centralities were requested.
    """

    original: FeatureVector
    replica: FeatureVector
    ratios: dict[str, float]
    deltas: dict[str, float]
    centrality_quantiles: dict[str, dict[str, list[float]]] | None = None

    def as_dict(self) -> dict:
        out = {
            "original": self.original.as_dict(),
            "replica": self.replica.as_dict(),
            "ratios": self.ratios,
            "deltas": self.deltas,
        }
        if self.centrality_quantiles is not None:
            out["centrality_quantiles"] = self.centrality_quantiles
            out["quantile_points"] = list(QUANTILE_POINTS)
        return out


def profile(
    graph: Graph,
    seed: int | None = None,
    diameter_mode: str = "exact",
) -> FeatureVector:
    """Compute the full feature vector of a graph.

    Communities come from the seeded detector; an edgeless graph gets a
    degree Gini of 0 by convention (the statistic is undefined there).
    """
    if graph.n < 1:
        raise ValueError("profile requires at least one node")
    degrees = degree_sequence(graph)
    partition = plm(graph, seed=seed)
    count, _ = connected_components(graph)
    nontrivial = sum(
        1 for size in partition.sizes if size >= NONTRIVIAL_COMMUNITY_SIZE
    )
    return FeatureVector(
        n=graph.n,
        m=graph.m,
        max_degree=max(degrees),
        degree_gini=gini(degrees) if graph.m > 0 else 0.0,
        avg_clustering=avg_local_clustering(graph),
        diameter=diameter(graph, diameter_mode, seed=seed),
        diameter_mode=diameter_mode,
        components=count,
        communities=partition.k,
        nontrivial_communities=nontrivial,
    )


def compare(
    original: FeatureVector,
    replica: FeatureVector,
    centralities_original: dict[str, list[float]] | None = None,
    centralities_replica: dict[str, list[float]] | None = None,
) -> ComparisonReport:
    """Relative comparison of two feature vectors (replica / original)."""
    ratios: dict[str, float] = {}
    deltas: dict[str, float] = {}
    orig = original.as_dict()
    repl = replica.as_dict()
    for field in FeatureVector.NUMERIC_FIELDS:
        if orig[field] > 0:
            ratios[field] = repl[field] / orig[field]
        else:
            deltas[field] = repl[field] - orig[field]
    quantiles = None
    if centralities_original is not None and centralities_replica is not None:
        quantiles = {
            measure: {
                "original": quantile_summary(centralities_original[measure]),
                "replica": quantile_summary(centralities_replica[measure]),
            }
            for measure in CENTRALITY_MEASURES
        }
    return ComparisonReport(original, replica, ratios, deltas, quantiles)


def _harmonic_closeness(graph: Graph) -> list[float]:
    """Per-node harmonic closeness; well-defined on disconnected graphs."""
    out = []
    for v in range(graph.n):
        acc = 0.0
        for d in bfs_distances(graph, v):
            if d > 0:
                acc += 1.0 / d
        out.append(acc)
    return out


def minmax_normalize(values: list[float]) -> list[float]:
    """Scale to [0, 1]; constant vectors map to all zeros."""
    if not values:
        return []
    lo, hi = min(values), max(values)
    if hi == lo:
        return [0.0] * len(values)
    span = hi - lo
    return [(x - lo) / span for x in values]


def centrality_distributions(
    graph: Graph,
    seed: int | None = None,
    threads: int = 1,
) -> dict[str, list[float]]:
    """Min-max normalized score lists for the six centrality measures.

    Degree, harmonic closeness, local clustering, k-core number, PageRank,
    and exact betweenness; every list lies in [0, 1] with at least one 1
    unless the raw scores were constant.
    """
    producers = {
        "degree": lambda: [float(d) for d in degree_sequence(graph)],
        "closeness": lambda: _harmonic_closeness(graph),
        "clustering": lambda: local_clustering(graph),
        "core": lambda: [float(c) for c in bench.core_decomposition(graph)],
        "pagerank": lambda: bench.pagerank(graph),
        "betweenness": lambda: bench.betweenness_approx(graph, samples=graph.n, seed=seed),
    }
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = {name: pool.submit(fn) for name, fn in producers.items()}
            raw = {name: fut.result() for name, fut in futures.items()}
    else:
        raw = {name: fn() for name, fn in producers.items()}
    return {name: minmax_normalize(scores) for name, scores in raw.items()}


def quantile_summary(values: list[float], points=QUANTILE_POINTS) -> list[float]:
    """Linearly interpolated quantiles at the given percent points."""
    if not values:
        return [0.0] * len(points)
    xs = sorted(values)
    n = len(xs)
    out = []
    for p in points:
        rank = (p / 100.0) * (n - 1)
        lo = int(rank)
        hi = min(lo + 1, n - 1)
        frac = rank - lo
        out.append(xs[lo] * (1.0 - frac) + xs[hi] * frac)
    return out
