"""Community-preserving graph replication.

The generator fits a signature from a graph and a community structure
(detected if not supplied): each node's internal and external degree plus
the community memberships, together with the original edges grouped into
per-community and cross-community sets. A scale-x replica starts from x
disjoint copies of the original (which realize the per-node internal and
external degrees exactly), then

1. randomizes each community copy's internal edges independently with
   degree-preserving edge switches (10 per internal edge),
2. randomizes the cross-community edges globally (10 per edge), which is
   what interconnects the copies,
3. rewires "forbidden" edges, i.e. globally randomized edges that landed
   inside a community, by switching them with uniformly chosen partner
   edges from the global phase, accepting only switches that keep the
   graph simple. Up to 100 passes run over the forbidden set; whatever
   remains is reported as a residual rather than looping forever.

Degrees are preserved exactly: the replica's sorted degree sequence is x
concatenated copies of the original's, and m_r = x * m. Per-community
seeds are derived from the master seed and the community-copy index, so
results do not depend on how step 1's independent chains are scheduled.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .community import Partition, plm
from .graph import Graph
from .randomize import switch_chain
from .rng import derive_seed, make_rng

REWIRE_PASS_LIMIT = 100

# stream tags for deriving independent sub-chain seeds
_STREAM_FIT = 0
_STREAM_INTRA = 1
_STREAM_GLOBAL = 2
_STREAM_REWIRE = 3


@dataclass(frozen=True)
class ReconModel:
    """Fitted replication signature.

    ``internal_degree[v] + external_degree[v]`` equals v's original degree;
    the summed internal degree of each community is twice its intra-edge
    count (hence even), and the summed external degree is even. The original
    edges are retained, grouped by phase, as the randomization starting
    state.
    """

    n: int
    k: int
    membership: tuple[int, ...]
    internal_degree: tuple[int, ...]
    external_degree: tuple[int, ...]
    community_sizes: tuple[int, ...]
    intra_edges: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False)
    inter_edges: tuple[tuple[int, int], ...] = field(repr=False)

    @property
    def total_intra(self) -> int:
        return sum(len(es) for es in self.intra_edges)


@dataclass
class GenerationResult:
    """A generated replica plus its generation metadata."""

    graph: Graph
    scale: int
    seed: int | None
    k: int
    residual_forbidden: int
    ms_fit: float = 0.0
    ms_generate: float = 0.0

    def metadata(self) -> dict:
        return {
            "scale": self.scale,
            "seed": self.seed,
            "k": self.k,
            "residual_forbidden": self.residual_forbidden,
            "ms_fit": self.ms_fit,
            "ms_generate": self.ms_generate,
        }


def fit_recon(
    graph: Graph,
    partition: Partition | None = None,
    seed: int | None = None,
) -> ReconModel:
    """Fit a replication signature from a graph and an optional partition.

    Without a partition, communities are detected first (seeded). Generating
    at scale 1 from the result reproduces the graph's degree sequence and
    per-community intra-edge counts exactly.
    """
    if partition is None:
        partition = plm(graph, seed=derive_seed(seed, _STREAM_FIT))
    elif len(partition.assignment) != graph.n:
        raise ValueError(
            f"partition covers {len(partition.assignment)} nodes, graph has {graph.n}"
        )

    assign = partition.assignment
    internal = [0] * graph.n
    intra: list[list[tuple[int, int]]] = [[] for _ in range(partition.k)]
    inter: list[tuple[int, int]] = []
    for u, v in graph.edges():
        if assign[u] == assign[v]:
            internal[u] += 1
            internal[v] += 1
            intra[assign[u]].append((u, v))
        else:
            inter.append((u, v))
    external = [graph.degree(v) - internal[v] for v in range(graph.n)]
    return ReconModel(
        n=graph.n,
        k=partition.k,
        membership=assign,
        internal_degree=tuple(internal),
        external_degree=tuple(external),
        community_sizes=partition.sizes,
        intra_edges=tuple(tuple(es) for es in intra),
        inter_edges=tuple(inter),
    )


def _randomize_community(
    edges: list[tuple[int, int]], stride: int, chain_seed: int
) -> list[tuple[int, int]]:
    keys = {u * stride + v for u, v in edges}
    switch_chain(edges, keys, stride, 10 * len(edges), make_rng(chain_seed))
    return edges


def generate(
    model: ReconModel,
    scale: int = 1,
    seed: int | None = None,
    threads: int = 1,
) -> GenerationResult:
    """Generate a scale-x replica from a fitted signature.

    The replica has ``scale * n`` nodes (copy i of node v is ``i * n + v``)
    and ``scale * m`` edges, every node copy keeping its original degree.
    Forbidden edges that survive rewiring are reported in the result, not
    fatal.
    """
    if scale < 1:
        raise ValueError("scale must be a positive integer")
    t0 = time.perf_counter()
    n, k = model.n, model.k
    big_n = scale * n

    # Step 1: per-community-copy randomization of internal edges. Copies are
    # independent chains with seeds derived from (seed, copy-community id).
    jobs: list[tuple[int, list[tuple[int, int]]]] = []
    for i in range(scale):
        base = i * n
        for c, orig_edges in enumerate(model.intra_edges):
            if len(orig_edges) < 2:
                if orig_edges:
                    jobs.append((-1, [(base + u, base + v) for u, v in orig_edges]))
                continue
            shifted = [(base + u, base + v) for u, v in orig_edges]
            jobs.append((i * k + c, shifted))

    def run_job(job: tuple[int, list[tuple[int, int]]]) -> list[tuple[int, int]]:
        comm_id, edges = job
        if comm_id < 0:
            return edges
        return _randomize_community(
            edges, big_n, derive_seed(seed, _STREAM_INTRA, comm_id)
        )

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            intra_results = list(pool.map(run_job, jobs))
    else:
        intra_results = [run_job(job) for job in jobs]

    # Step 2: global randomization of the cross-community edges, checked
    # against every edge of the whole graph so no duplicate can appear.
    inter: list[tuple[int, int]] = []
    for i in range(scale):
        base = i * n
        for u, v in model.inter_edges:
            inter.append((base + u, base + v))
    all_keys: set[int] = set()
    for edges in intra_results:
        for u, v in edges:
            all_keys.add(u * big_n + v if u < v else v * big_n + u)
    for u, v in inter:
        all_keys.add(u * big_n + v if u < v else v * big_n + u)
    switch_chain(
        inter, all_keys, big_n, 10 * len(inter), make_rng(derive_seed(seed, _STREAM_GLOBAL))
    )

    # Step 3: rewire global edges that landed inside a community copy.
    membership = model.membership
    residual = _rewire_forbidden(
        inter, all_keys, big_n, n, k, membership, derive_seed(seed, _STREAM_REWIRE)
    )

    adj: list[list[int]] = [[] for _ in range(big_n)]
    for edges in intra_results:
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
    for u, v in inter:
        adj[u].append(v)
        adj[v].append(u)
    for nbrs in adj:
        nbrs.sort()
    graph = Graph(adj)

    ms = (time.perf_counter() - t0) * 1000.0
    return GenerationResult(
        graph=graph,
        scale=scale,
        seed=seed,
        k=k,
        residual_forbidden=residual,
        ms_generate=ms,
    )


def _community_of(node: int, n: int, k: int, membership) -> int:
    return (node // n) * k + membership[node % n]


def _rewire_forbidden(
    inter: list[tuple[int, int]],
    keys: set[int],
    stride: int,
    n: int,
    k: int,
    membership,
    rewire_seed: int,
) -> int:
    """Switch forbidden global edges with random partners until none remain
    or the pass limit is hit; returns the residual forbidden count."""
    m = len(inter)
    if m < 2:
        return sum(
            1
            for u, v in inter
            if _community_of(u, n, k, membership) == _community_of(v, n, k, membership)
        )
    rng = make_rng(rewire_seed)
    rand = rng.random
    for _ in range(REWIRE_PASS_LIMIT):
        forbidden = [
            idx
            for idx, (u, v) in enumerate(inter)
            if _community_of(u, n, k, membership) == _community_of(v, n, k, membership)
        ]
        if not forbidden:
            return 0
        for idx in forbidden:
            j = int(rand() * m)
            while j == idx:
                j = int(rand() * m)
            u, v = inter[idx]
            y, z = inter[j]
            if rand() < 0.5:
                y, z = z, y
            if u == z or y == v:
                continue
            k1 = u * stride + z if u < z else z * stride + u
            if k1 in keys:
                continue
            k2 = y * stride + v if y < v else v * stride + y
            if k2 in keys:
                continue
            keys.discard(u * stride + v if u < v else v * stride + u)
            keys.discard(y * stride + z if y < z else z * stride + y)
            keys.add(k1)
            keys.add(k2)
            inter[idx] = (u, z)
            inter[j] = (y, v)
    return sum(
        1
        for u, v in inter
        if _community_of(u, n, k, membership) == _community_of(v, n, k, membership)
    )


def replicate(
    graph: Graph,
    scale: int = 1,
    seed: int | None = None,
    partition: Partition | None = None,
    threads: int = 1,
) -> GenerationResult:
    """Convenience composition: fit a signature, then generate a replica."""
    t0 = time.perf_counter()
    model = fit_recon(graph, partition=partition, seed=seed)
    ms_fit = (time.perf_counter() - t0) * 1000.0
    result = generate(model, scale=scale, seed=seed, threads=threads)
    result.ms_fit = ms_fit
    return result


class ReconGenerator(BaseEstimator):
    """Estimator-style interface to the replica generator.

    Parameters are the scaling factor, the master seed, and the thread count
    for the per-community randomization step (results are identical for any
    thread count). ``fit`` learns the replication signature, ``generate``
    draws a replica.

    Attributes set by ``fit``: ``model_`` (the signature) and ``k_`` (number
    of communities used). Each ``generate`` call records its metadata in
    ``report_``.
    """

    def __init__(self, scale: int = 1, seed: int | None = None, threads: int = 1):
        self.scale = scale
        self.seed = seed
        self.threads = threads

    def fit(self, graph: Graph, y=None, partition: Partition | None = None):
        self.model_ = fit_recon(graph, partition=partition, seed=self.seed)
        self.k_ = self.model_.k
        return self

    def generate(self, scale: int | None = None, seed: int | None = None) -> Graph:
        check_is_fitted(self, "model_")
        result = generate(
            self.model_,
            scale=self.scale if scale is None else scale,
            seed=self.seed if seed is None else seed,
            threads=self.threads,
        )
        self.report_ = result
        return result.graph

    def fit_generate(self, graph: Graph, y=None) -> Graph:
        return self.fit(graph).generate()
