"""Degree-preserving randomization via the edge-switching Markov chain.

A switch attempt draws two distinct edge slots uniformly from the edge
array, picks one of the two endpoint pairings uniformly, and replaces
``{u, v}, {y, z}`` with ``{u, z}, {y, v}`` unless that would create a
self-loop or a duplicate edge. Rejected attempts count toward the swap
budget, which keeps the runtime bounded. Node degrees are invariant under
every attempt.

Running the chain for 10 * m attempts is the standard budget after which
the result is expected to be close to a uniform sample from all simple
graphs with the same degree sequence.
"""

from __future__ import annotations

from .graph import Graph
from .rng import make_rng


def default_swaps(m: int) -> int:
    """Standard switch budget for a graph with ``m`` edges: ``10 * m``."""
    return 10 * m


def switch_chain(
    edges: list[tuple[int, int]],
    edge_keys: set[int],
    stride: int,
    attempts: int,
    rng,
) -> int:
    """Run ``attempts`` switch attempts in place; returns the accepted count.

    ``edges`` is mutated slot-by-slot. ``edge_keys`` holds ``min*stride+max``
    keys of every edge that must not be duplicated; it may be a superset of
    the slots in ``edges`` (e.g. the whole graph while only a phase's edges
    are switchable) and is kept in sync. ``stride`` must exceed every node id.
    """
    m = len(edges)
    if m < 2 or attempts <= 0:
        return 0
    rand = rng.random
    keys = edge_keys
    accepted = 0
    for _ in range(attempts):
        i = int(rand() * m)
        j = int(rand() * m)
        while j == i:
            j = int(rand() * m)
        u, v = edges[i]
        y, z = edges[j]
        if rand() < 0.5:
            y, z = z, y
        # candidate edges {u, z} and {y, v}
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
        edges[i] = (u, z)
        edges[j] = (y, v)
        accepted += 1
    return accepted


def edge_switch(graph: Graph, swaps: int, seed: int | None = None) -> Graph:
    """Randomize a graph with ``swaps`` switch attempts, preserving degrees.

    Graphs with fewer than two edges are returned unchanged. The per-node
    degree multiset, the edge count, and simplicity are all preserved
    exactly.
    """
    if graph.m < 2 or swaps <= 0:
        return graph
    n = graph.n
    edges = list(graph.edges())
    keys = {u * n + v for u, v in edges}
    switch_chain(edges, keys, n, swaps, make_rng(seed))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    for nbrs in adj:
        nbrs.sort()
    return Graph(adj)
