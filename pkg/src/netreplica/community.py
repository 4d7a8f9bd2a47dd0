"""Community detection and partition statistics.

The detector is a Louvain-style modularity maximizer: repeated single-node
move phases followed by graph contraction, iterated until no move improves
modularity. Node visit order is shuffled from the seed, ties keep the
current community, and the resolution is fixed at 1, so a fixed seed gives
a reproducible partition.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UndefinedInputError
from .graph import Graph
from .rng import make_rng


@dataclass(frozen=True)
class Partition:
    """Assignment of every node to exactly one community.

    Community ids are dense ``0..k-1`` (renumbered in order of first
    appearance by node id). Aggregates satisfy
    ``sum(intra_edges) + inter_edges == m`` for the graph the partition
    was built against.
    """

    assignment: tuple[int, ...]
    k: int
    sizes: tuple[int, ...]
    intra_edges: tuple[int, ...]
    inter_edges: int
    _members: tuple[tuple[int, ...], ...] = field(repr=False, default=())

    @classmethod
    def from_assignment(cls, graph: Graph, assignment) -> "Partition":
        """Build a partition (densifying community ids) and its aggregates."""
        if len(assignment) != graph.n:
            raise ValueError(
                f"assignment covers {len(assignment)} nodes, graph has {graph.n}"
            )
        remap: dict[int, int] = {}
        dense = []
        for c in assignment:
            if c not in remap:
                remap[c] = len(remap)
            dense.append(remap[c])
        k = len(remap)
        sizes = [0] * k
        members: list[list[int]] = [[] for _ in range(k)]
        for v, c in enumerate(dense):
            sizes[c] += 1
            members[c].append(v)
        intra = [0] * k
        inter = 0
        for u, v in graph.edges():
            if dense[u] == dense[v]:
                intra[dense[u]] += 1
            else:
                inter += 1
        return cls(
            assignment=tuple(dense),
            k=k,
            sizes=tuple(sizes),
            intra_edges=tuple(intra),
            inter_edges=inter,
            _members=tuple(tuple(ms) for ms in members),
        )

    def members(self, c: int) -> tuple[int, ...]:
        return self._members[c]


def modularity(graph: Graph, partition: Partition) -> float:
    """Newman-Girvan modularity Q of a partition.

    ``Q = sum_c [ intra_c / m - (vol_c / 2m)^2 ]`` where each intra edge
    counts once and ``vol_c`` is the summed degree of the community.
    """
    m = graph.m
    if m == 0:
        raise UndefinedInputError("modularity undefined for an edgeless graph")
    vol = [0] * partition.k
    for v in range(graph.n):
        vol[partition.assignment[v]] += graph.degree(v)
    two_m = 2.0 * m
    q = 0.0
    for c in range(partition.k):
        q += partition.intra_edges[c] / m - (vol[c] / two_m) ** 2
    return q


def mixing_parameter(graph: Graph, partition: Partition) -> float:
    """Fraction of edges crossing communities: ``inter_edges / m``.

    This is the convention used by community benchmark generators; note in
    reports that the alternative inter/intra reading is not used here.
    """
    if graph.m == 0:
        raise UndefinedInputError("mixing parameter undefined for an edgeless graph")
    return partition.inter_edges / graph.m


def _move_phase(
    adj: list[dict[int, float]],
    loops: list[float],
    total_weight: float,
    rng,
) -> tuple[list[int], bool]:
    """One Louvain move phase on a weighted graph.

    ``adj[v]`` maps neighbor -> edge weight (no self entries); ``loops[v]``
    is the self-loop weight counting both directions. Returns the node ->
    community assignment and whether any node moved.
    """
    n = len(adj)
    volume = [loops[v] + sum(adj[v].values()) for v in range(n)]
    community = list(range(n))
    comm_volume = volume[:]
    inv_w = 1.0 / total_weight

    order = list(range(n))
    rng.shuffle(order)

    moved_any = False
    improved = True
    while improved:
        improved = False
        for v in order:
            home = community[v]
            vol_v = volume[v]
            # weight from v to each neighboring community
            weights: dict[int, float] = {}
            for u, w in adj[v].items():
                cu = community[u]
                weights[cu] = weights.get(cu, 0.0) + w
            w_home = weights.get(home, 0.0)
            vol_home_rest = comm_volume[home] - vol_v

            best_comm = home
            best_gain = 0.0
            for c, w_c in weights.items():
                if c == home:
                    continue
                gain = 2.0 * inv_w * (w_c - w_home) - 2.0 * inv_w * inv_w * vol_v * (
                    comm_volume[c] - vol_home_rest
                )
                if gain > best_gain:  # ties keep the current community
                    best_gain = gain
                    best_comm = c
            if best_comm != home:
                community[v] = best_comm
                comm_volume[home] -= vol_v
                comm_volume[best_comm] += vol_v
                improved = True
                moved_any = True
    return community, moved_any


def _contract(
    adj: list[dict[int, float]],
    loops: list[float],
    community: list[int],
) -> tuple[list[dict[int, float]], list[float], dict[int, int]]:
    """Collapse communities into supernodes, merging parallel edge weights."""
    remap: dict[int, int] = {}
    for v in range(len(adj)):
        c = community[v]
        if c not in remap:
            remap[c] = len(remap)
    k = len(remap)
    new_adj: list[dict[int, float]] = [{} for _ in range(k)]
    new_loops = [0.0] * k
    for v in range(len(adj)):
        cv = remap[community[v]]
        new_loops[cv] += loops[v]
        for u, w in adj[v].items():
            cu = remap[community[u]]
            if cu == cv:
                new_loops[cv] += w  # both directions of intra edges land here
            else:
                new_adj[cv][cu] = new_adj[cv].get(cu, 0.0) + w
    return new_adj, new_loops, remap


def plm(graph: Graph, seed: int | None = None) -> Partition:
    """Louvain-style modularity maximization.

    Starts from singletons, applies improving single-node moves, contracts,
    and repeats until the coarsest pass moves nothing; the result is a local
    maximum under both node moves and pairwise community merges. An edgeless
    graph yields all singletons.
    """
    n = graph.n
    if graph.m == 0:
        return Partition.from_assignment(graph, list(range(n)))

    rng = make_rng(seed)
    adj: list[dict[int, float]] = [
        {u: 1.0 for u in graph.neighbors(v)} for v in range(n)
    ]
    loops = [0.0] * n
    total_weight = 2.0 * graph.m

    node_to_super = list(range(n))
    while True:
        community, moved = _move_phase(adj, loops, total_weight, rng)
        if not moved:
            break
        adj, loops, remap = _contract(adj, loops, community)
        node_to_super = [remap[community[s]] for s in node_to_super]
        if len(adj) == 1:
            break
    return Partition.from_assignment(graph, node_to_super)


def read_partition(path, n: int | None = None) -> list[int]:
    """Read a partition file: line v holds the community id of node v."""
    with open(path, "r", encoding="utf-8") as fh:
        assignment = []
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith(("#", "%")):
                continue
            try:
                assignment.append(int(line))
            except ValueError:
                raise ValueError(f"partition file line {lineno}: not an integer") from None
    if n is not None and len(assignment) != n:
        raise ValueError(f"partition has {len(assignment)} entries, expected {n}")
    return assignment


def write_partition(assignment, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for c in assignment:
            fh.write(f"{c}\n")
