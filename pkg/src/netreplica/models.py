"""Baseline generative models with fitting and scaling schemes.

Each model is fitted to an input graph by a closed-form rule and can be
scaled by an integer factor x:

* Erdos-Renyi: ``n' = x*n``, ``p = 2m / (x * n * (n-1))`` (keeps the
  edge-to-node ratio).
* Barabasi-Albert: ``n' = x*n``, ``k = floor(m / n)`` edges per new node.
* Chung-Lu and the edge-switching chain: the degree sequence itself,
  concatenated x times for scaling.
* RMAT: ``s = ceil(log2(x*n))`` recursion depth, ``e = floor(m / n)`` edge
  draws per node, plus a 2x2 stochastic initiator (explicit, preset, or
  uniform-random).

Power-law exponents are fitted by matching the expected mean of a discrete
power law on ``[d_min, d_max]`` to the observed mean, via binary search on
the exponent in ``[-6, -1]``. The variant for community sizes additionally
raises the minimum size when the observed mean is unreachable at the
clamped exponent. Hyperbolic unit-disk and community-benchmark rows are
fitted for reference only; no generator is provided for them.
"""

from __future__ import annotations

import heapq
import logging
import math
from bisect import bisect_left
from dataclasses import dataclass
from itertools import accumulate
from typing import Sequence

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .community import plm
from .errors import NotGraphicalError
from .graph import Graph, degree_sequence
from .randomize import default_swaps, switch_chain
from .rng import derive_seed, make_rng

logger = logging.getLogger(__name__)

# Preset initiator fitted (by likelihood maximization, 50 iterations) to a
# small university social network; a reasonable default when replicating
# graphs from the same family.
SOCIAL_PRESET_INITIATOR = (0.378802757, 0.249474498, 0.255098510, 0.116624233)

GAMMA_RANGE = (-6.0, -1.0)
GAMMA_PRECISION = 1e-3

REPLICABLE_KINDS = ("er", "ba", "cl", "esmc", "rmat")
FIT_ONLY_KINDS = ("hudg", "lfr")


@dataclass(frozen=True)
class ErdosRenyiParams:
    n: int
    p: float

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"edge probability {self.p} outside [0, 1]")


@dataclass(frozen=True)
class BarabasiAlbertParams:
    n: int
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("attachment count k must be >= 1")


@dataclass(frozen=True)
class ChungLuParams:
    degrees: tuple[int, ...]


@dataclass(frozen=True)
class EdgeSwitchingParams:
    degrees: tuple[int, ...]


@dataclass(frozen=True)
class RmatParams:
    s: int
    e: int
    a: float
    b: float
    c: float
    d: float
    n: int  # target node count after deleting 2**s - n random nodes

    def __post_init__(self):
        quads = (self.a, self.b, self.c, self.d)
        if any(q < 0 for q in quads):
            raise ValueError("initiator entries must be non-negative")
        # 1e-8 admits initiators published rounded to 9 decimal places
        if abs(sum(quads) - 1.0) > 1e-8:
            raise ValueError(f"initiator sums to {sum(quads)}, expected 1")
        if self.n > (1 << self.s):
            raise ValueError(f"target n={self.n} exceeds 2^s={1 << self.s}")


@dataclass(frozen=True)
class PowerLawFit:
    """Fitted discrete power-law exponent with the observed degree bounds."""

    gamma: float
    d_min: int
    d_max: int
    degenerate: bool = False


@dataclass(frozen=True)
class CommunityFit:
    """Power-law fit for community sizes, with a possibly raised minimum."""

    beta: float
    c_min: int
    c_max: int
    degenerate: bool = False


@dataclass(frozen=True)
class HudgParams:
    """Hyperbolic unit-disk reference parameters (fit-only)."""

    n: int
    avg_degree: float
    gamma: float


@dataclass(frozen=True)
class LfrParams:
    """Community-benchmark reference parameters (fit-only)."""

    n: int
    gamma: float
    d_min: int
    d_max: int
    beta: float
    c_min: int
    c_max: int
    mu: float


def expected_power_law_mean(gamma: float, lo: int, hi: int) -> float:
    """Mean of the discrete distribution ``p(d) ~ d**gamma`` on ``[lo, hi]``.

    Strictly increasing in gamma whenever ``lo < hi``.
    """
    num = 0.0
    den = 0.0
    for d in range(lo, hi + 1):
        w = d**gamma
        den += w
        num += w * d
    return num / den


def plfit(degrees: Sequence[int]) -> PowerLawFit:
    """Fit a power-law exponent so the expected mean matches the observed one.

    Binary search on gamma in [-6, -1] down to an interval width of 1e-3;
    unreachable means clamp to the nearest bound. A constant sequence is
    degenerate and fixed at the range midpoint gamma = -3.
    """
    if not degrees:
        raise ValueError("cannot fit an empty sequence")
    d_min, d_max = min(degrees), max(degrees)
    if d_min < 1:
        raise ValueError("power-law fitting requires all values >= 1")
    if d_min == d_max:
        return PowerLawFit(-3.0, d_min, d_max, degenerate=True)
    target = sum(degrees) / len(degrees)
    lo, hi = GAMMA_RANGE
    if target <= expected_power_law_mean(lo, d_min, d_max):
        return PowerLawFit(lo, d_min, d_max)
    if target >= expected_power_law_mean(hi, d_min, d_max):
        return PowerLawFit(hi, d_min, d_max)
    while hi - lo > GAMMA_PRECISION:
        mid = 0.5 * (lo + hi)
        if expected_power_law_mean(mid, d_min, d_max) < target:
            lo = mid
        else:
            hi = mid
    return PowerLawFit(0.5 * (lo + hi), d_min, d_max)


def plfit_star(sizes: Sequence[int]) -> CommunityFit:
    """Fit community sizes; raise the minimum size if the mean is unreachable.

    When the exponent clamps at -1 and the expected mean still undershoots
    the observed one, the minimum size is binary-searched upward (integers
    in [observed min, observed max]) to bring the expected mean as close to
    the observed mean as possible.
    """
    base = plfit(sizes)
    if base.degenerate:
        return CommunityFit(base.gamma, base.d_min, base.d_max, degenerate=True)
    beta, c_min, c_max = base.gamma, base.d_min, base.d_max
    mean = sum(sizes) / len(sizes)
    if beta == GAMMA_RANGE[1] and expected_power_law_mean(beta, c_min, c_max) < mean:
        lo, hi = c_min, c_max
        while lo < hi:
            mid = (lo + hi) // 2
            if expected_power_law_mean(beta, mid, c_max) < mean:
                lo = mid + 1
            else:
                hi = mid
        best = lo
        if lo > c_min:
            above = expected_power_law_mean(beta, lo, c_max)
            below = expected_power_law_mean(beta, lo - 1, c_max)
            if abs(below - mean) <= abs(above - mean):
                best = lo - 1
        c_min = best
    return CommunityFit(beta, c_min, c_max)


def is_graphical(degrees: Sequence[int]) -> bool:
    """Erdos-Gallai test: can the sequence be realized by a simple graph?"""
    if any(d < 0 for d in degrees):
        return False
    ds = sorted(degrees, reverse=True)
    n = len(ds)
    if n == 0:
        return True
    if ds[0] >= n:
        return False
    if sum(ds) % 2:
        return False
    prefix = list(accumulate(ds))
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + ds[i]
    asc = ds[::-1]
    for k in range(1, n + 1):
        lhs = prefix[k - 1]
        count_ge_k = n - bisect_left(asc, k)  # entries with value >= k
        big = max(0, count_ge_k - k)  # suffix entries capped at k
        start = max(k, count_ge_k)
        rhs = k * (k - 1) + big * k + suffix[start]
        if lhs > rhs:
            return False
    return True


def havel_hakimi(degrees: Sequence[int]) -> list[tuple[int, int]]:
    """Deterministic realization of a graphical degree sequence.

    Greedy: repeatedly connect the highest-remaining-degree node to the next
    highest ones (ties broken by node id). Raises ``NotGraphicalError`` for
    non-graphical input.
    """
    if not is_graphical(degrees):
        raise NotGraphicalError(f"sequence not graphical: {list(degrees)!r}")
    heap = [(-d, v) for v, d in enumerate(degrees) if d > 0]
    heapq.heapify(heap)
    edges: list[tuple[int, int]] = []
    while heap:
        negd, v = heapq.heappop(heap)
        need = -negd
        if need > len(heap):
            raise NotGraphicalError("ran out of attachment targets")
        taken = [heapq.heappop(heap) for _ in range(need)]
        for negdw, w in taken:
            edges.append((v, w) if v < w else (w, v))
        for negdw, w in taken:
            if -negdw - 1 > 0:
                heapq.heappush(heap, (negdw + 1, w))
    return edges


def _resolve_initiator(initiator, seed: int | None) -> tuple[float, float, float, float]:
    if initiator is None or initiator == "random":
        rng = make_rng(derive_seed(seed, 7))
        raw = [rng.random() for _ in range(4)]
        total = sum(raw)
        a, b, c = raw[0] / total, raw[1] / total, raw[2] / total
        return (a, b, c, 1.0 - a - b - c)
    if initiator == "preset":
        return SOCIAL_PRESET_INITIATOR
    a, b, c, d = initiator
    return (float(a), float(b), float(c), float(d))


def fit(
    graph: Graph,
    kind: str,
    scale: int = 1,
    *,
    initiator=None,
    seed: int | None = None,
):
    """Fit model parameters to a graph, for a scale-``scale`` replica.

    ``kind`` is one of ``er``, ``ba``, ``cl``, ``esmc``, ``rmat`` (all
    generatable) or ``hudg`` / ``lfr`` (reference fits only). Requires
    ``n >= 2`` and ``m >= 1``.
    """
    if scale < 1:
        raise ValueError("scale must be a positive integer")
    n, m = graph.n, graph.m
    if n < 2 or m < 1:
        raise ValueError("model fitting requires n >= 2 and m >= 1")
    kind = kind.lower()

    if kind == "er":
        return ErdosRenyiParams(scale * n, 2.0 * m / (scale * n * (n - 1)))
    if kind in ("ba", "rmat"):
        k = m // n
        if k < 1:
            logger.warning("m/n < 1; clamping per-node edge budget to 1")
            k = 1
        if kind == "ba":
            return BarabasiAlbertParams(scale * n, k)
        s = (scale * n - 1).bit_length()  # ceil(log2(scale * n))
        a, b, c, d = _resolve_initiator(initiator, seed)
        return RmatParams(s=s, e=k, a=a, b=b, c=c, d=d, n=scale * n)
    if kind in ("cl", "esmc"):
        degrees = tuple(degree_sequence(graph)) * scale
        return ChungLuParams(degrees) if kind == "cl" else EdgeSwitchingParams(degrees)
    if kind == "hudg":
        positive = [d for d in degree_sequence(graph) if d >= 1]
        fit_gamma = plfit(positive).gamma
        # unit-disk models use the positive exponent convention, floor 2.1
        return HudgParams(scale * n, 2.0 * m / n, max(2.1, -fit_gamma))
    if kind == "lfr":
        positive = [d for d in degree_sequence(graph) if d >= 1]
        deg_fit = plfit(positive)
        partition = plm(graph, seed=derive_seed(seed, 11))
        size_fit = plfit_star(list(partition.sizes))
        return LfrParams(
            n=scale * n,
            gamma=deg_fit.gamma,
            d_min=deg_fit.d_min,
            d_max=deg_fit.d_max,
            beta=size_fit.beta,
            c_min=size_fit.c_min,
            c_max=size_fit.c_max,
            mu=partition.inter_edges / m,
        )
    raise ValueError(f"unsupported model kind {kind!r}")


def gen_er(params: ErdosRenyiParams, seed: int | None = None) -> Graph:
    """Draw a graph where each pair is an edge independently with prob p.

    Uses geometric skipping over the linearized pair index, so the runtime
    is proportional to n + m rather than n^2.
    """
    n, p = params.n, params.p
    if n < 2 or p <= 0.0:
        return Graph([[] for _ in range(n)])
    if p >= 1.0:
        return Graph([[v for v in range(n) if v != u] for u in range(n)])
    rng = make_rng(seed)
    rand = rng.random
    log_q = math.log1p(-p)
    total = n * (n - 1) // 2
    adj: list[list[int]] = [[] for _ in range(n)]
    idx = -1
    u = 0
    row_start = 0  # linearized index where row u begins
    while True:
        idx += 1 + int(math.log(1.0 - rand()) / log_q)
        if idx >= total:
            break
        while idx >= row_start + (n - 1 - u):
            row_start += n - 1 - u
            u += 1
        v = u + 1 + (idx - row_start)
        adj[u].append(v)
        adj[v].append(u)
    for nbrs in adj:
        nbrs.sort()
    return Graph(adj)


def gen_ba(params: BarabasiAlbertParams, seed: int | None = None) -> Graph:
    """Preferential attachment starting from a (k+1)-clique seed.

    Each new node attaches k edges to existing nodes chosen proportionally
    to current degree; duplicate targets within one node's draws are
    redrawn, so the result is simple with exactly
    ``C(k+1, 2) + (n - k - 1) * k`` edges.
    """
    n, k = params.n, params.k
    if n < k + 1:
        raise ValueError(f"need at least k+1={k + 1} nodes, got {n}")
    rng = make_rng(seed)
    rand = rng.random
    edges: list[tuple[int, int]] = []
    pool: list[int] = []  # one entry per edge endpoint: degree-weighted
    for u in range(k + 1):
        for v in range(u + 1, k + 1):
            edges.append((u, v))
        pool.extend([u] * k)
    for v in range(k + 1, n):
        chosen: set[int] = set()
        while len(chosen) < k:
            chosen.add(pool[int(rand() * len(pool))])
        for t in sorted(chosen):
            edges.append((t, v))
            pool.append(t)
        pool.extend([v] * k)
    return Graph.from_edges(n, edges)


def gen_cl(params: ChungLuParams, seed: int | None = None) -> Graph:
    """Random graph reproducing a degree sequence in expectation.

    Edge {u, v} appears independently with probability
    ``min(1, d_u * d_v / sum(d))``. Warns and clamps when the sequence
    violates ``max(d)^2 <= sum(d)``.
    """
    degrees = params.degrees
    n = len(degrees)
    total = sum(degrees)
    adj: list[list[int]] = [[] for _ in range(n)]
    if total == 0:
        return Graph(adj)
    if max(degrees) ** 2 > total:
        logger.warning(
            "max degree %d too large for sum %d; probabilities clamped at 1",
            max(degrees),
            total,
        )
    rng = make_rng(seed)
    rand = rng.random
    inv = 1.0 / total
    for u in range(n):
        du = degrees[u]
        if du == 0:
            continue
        base = du * inv
        row = adj[u]
        for v in range(u + 1, n):
            if rand() < base * degrees[v]:
                row.append(v)
                adj[v].append(u)
    for nbrs in adj:
        nbrs.sort()
    return Graph(adj)


def gen_esmc(degrees: Sequence[int], seed: int | None = None) -> Graph:
    """Uniform-ish sample from the graphs with exactly this degree sequence.

    Realizes the sequence greedily, then mixes with 10 * m edge switches.
    Raises ``NotGraphicalError`` when no simple graph has the sequence.
    """
    edges = havel_hakimi(degrees)
    n = len(degrees)
    if len(edges) >= 2:
        keys = {u * n + v for u, v in edges}
        switch_chain(edges, keys, n, default_swaps(len(edges)), make_rng(seed))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    for nbrs in adj:
        nbrs.sort()
    return Graph(adj)


def gen_rmat(params: RmatParams, seed: int | None = None) -> Graph:
    """Recursive-matrix generator.

    Makes ``e * 2^s`` directed edge draws by descending s levels of the
    initiator, symmetrizes, drops self-loops and duplicates, then deletes
    ``2^s - n`` uniformly chosen nodes and relabels densely.
    """
    n_full = 1 << params.s
    rng = make_rng(seed)
    rand = rng.random
    ca = params.a
    cab = ca + params.b
    cabc = cab + params.c
    s = params.s
    keys: set[int] = set()
    pairs: list[tuple[int, int]] = []
    for _ in range(params.e * n_full):
        u = 0
        v = 0
        for _ in range(s):
            r = rand()
            if r < ca:
                qu = qv = 0
            elif r < cab:
                qu, qv = 0, 1
            elif r < cabc:
                qu, qv = 1, 0
            else:
                qu = qv = 1
            u = (u << 1) | qu
            v = (v << 1) | qv
        if u == v:
            continue
        if u > v:
            u, v = v, u
        key = u * n_full + v
        if key not in keys:
            keys.add(key)
            pairs.append((u, v))
    if params.n < n_full:
        removed = set(rng.sample(range(n_full), n_full - params.n))
        relabel = {}
        next_id = 0
        for x in range(n_full):
            if x not in removed:
                relabel[x] = next_id
                next_id += 1
        pairs = [
            (relabel[u], relabel[v])
            for u, v in pairs
            if u not in removed and v not in removed
        ]
    return Graph.from_edges(params.n, pairs)


class _ParametricGenerator(BaseEstimator):
    """Shared fit/generate surface for the parametric baseline models."""

    _kind: str = ""

    def __init__(self, scale: int = 1, seed: int | None = None):
        self.scale = scale
        self.seed = seed

    def fit(self, graph: Graph, y=None):
        self.params_ = fit(graph, self._kind, self.scale, seed=self.seed)
        return self

    def generate(self, seed: int | None = None) -> Graph:
        check_is_fitted(self, "params_")
        return self._generate(self.params_, self.seed if seed is None else seed)

    def fit_generate(self, graph: Graph, y=None) -> Graph:
        return self.fit(graph).generate()

    @staticmethod
    def _generate(params, seed):  # pragma: no cover - overridden
        raise NotImplementedError


class ErdosRenyiGenerator(_ParametricGenerator):
    _kind = "er"
    _generate = staticmethod(gen_er)


class BarabasiAlbertGenerator(_ParametricGenerator):
    _kind = "ba"
    _generate = staticmethod(gen_ba)


class ChungLuGenerator(_ParametricGenerator):
    _kind = "cl"
    _generate = staticmethod(gen_cl)


class EdgeSwitchingGenerator(_ParametricGenerator):
    _kind = "esmc"

    @staticmethod
    def _generate(params, seed):
        return gen_esmc(params.degrees, seed)


class RmatGenerator(_ParametricGenerator):
    """RMAT with an explicit, preset, or per-fit random initiator."""

    _kind = "rmat"
    _generate = staticmethod(gen_rmat)

    def __init__(self, scale: int = 1, seed: int | None = None, initiator=None):
        super().__init__(scale=scale, seed=seed)
        self.initiator = initiator

    def fit(self, graph: Graph, y=None):
        self.params_ = fit(
            graph, "rmat", self.scale, initiator=self.initiator, seed=self.seed
        )
        return self
