"""Independent brute-force reference implementations.

Everything here is deliberately written against the naive definition of
each quantity, sharing no code path with the package, so the fast
implementations can be checked against them.
"""

from __future__ import annotations

import random
from collections import deque
from itertools import combinations, product


def random_simple_graph(rng: random.Random, n: int, p: float):
    """Plain pair-by-pair Bernoulli graph as an (n, edge set) tuple."""
    edges = {(u, v) for u, v in combinations(range(n), 2) if rng.random() < p}
    return n, edges


def brute_triangles(n: int, edges: set[tuple[int, int]]) -> int:
    es = {frozenset(e) for e in edges}
    count = 0
    for a, b, c in combinations(range(n), 3):
        if (
            frozenset((a, b)) in es
            and frozenset((b, c)) in es
            and frozenset((a, c)) in es
        ):
            count += 1
    return count


def brute_core_numbers(n: int, edges: set[tuple[int, int]]) -> list[int]:
    """Core number via literal iterative deletion for every k."""
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    cores = [0] * n
    max_deg = max((len(adj[v]) for v in range(n)), default=0)
    for k in range(max_deg + 1):
        alive = set(range(n))
        changed = True
        while changed:
            changed = False
            for v in list(alive):
                if sum(1 for u in adj[v] if u in alive) < k:
                    alive.discard(v)
                    changed = True
        for v in alive:
            cores[v] = k
    return cores


def label_propagation_components(n: int, edges: set[tuple[int, int]]) -> int:
    """Component count by min-label propagation to a fixpoint."""
    labels = list(range(n))
    changed = True
    while changed:
        changed = False
        for u, v in edges:
            low = min(labels[u], labels[v])
            if labels[u] != low or labels[v] != low:
                labels[u] = labels[v] = low
                changed = True
    return len(set(labels))


def brute_betweenness(n: int, edges: set[tuple[int, int]]) -> list[float]:
    """Betweenness per unordered pair via shortest-path enumeration."""
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    scores = [0.0] * n
    for s, t in combinations(range(n), 2):
        dist = _bfs_dist(adj, n, s)
        d = dist[t]
        if d < 0:
            continue
        interior_counts = [0] * n
        paths = 0
        # depth-limited DFS enumerating every shortest s-t path
        stack = [(s, [s])]
        while stack:
            node, path = stack.pop()
            if node == t:
                paths += 1
                for w in path[1:-1]:
                    interior_counts[w] += 1
                continue
            if len(path) - 1 >= d:
                continue
            for w in adj[node]:
                if w not in path:
                    stack.append((w, path + [w]))
        for v in range(n):
            if interior_counts[v]:
                scores[v] += interior_counts[v] / paths
    return scores


def _bfs_dist(adj, n, s):
    dist = [-1] * n
    dist[s] = 0
    q = deque([s])
    while q:
        u = q.popleft()
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                q.append(v)
    return dist


def matrix_modularity(n: int, edges: set[tuple[int, int]], assignment) -> float:
    """Modularity in the matrix form: (1/2m) sum_uv [A_uv - d_u d_v / 2m] delta."""
    m = len(edges)
    deg = [0] * n
    es = {frozenset(e) for e in edges}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    two_m = 2.0 * m
    q = 0.0
    for u in range(n):
        for v in range(n):
            if assignment[u] != assignment[v]:
                continue
            a_uv = 1.0 if u != v and frozenset((u, v)) in es else 0.0
            q += a_uv - deg[u] * deg[v] / two_m
    return q / two_m


def best_partition_up_to_3_blocks(n: int, edges: set[tuple[int, int]]):
    """Exhaustive max-modularity search over partitions with <= 3 blocks."""
    best_q = float("-inf")
    best = None
    seen = set()
    for labels in product(range(3), repeat=n):
        # canonicalize by first-appearance renumbering to kill symmetric dupes
        remap = {}
        canon = []
        for c in labels:
            if c not in remap:
                remap[c] = len(remap)
            canon.append(remap[c])
        key = tuple(canon)
        if key in seen:
            continue
        seen.add(key)
        q = matrix_modularity(n, edges, key)
        if q > best_q:
            best_q = q
            best = key
    return best, best_q


def expected_mean_discrete_power_law(gamma: float, lo: int, hi: int) -> float:
    num = sum(d ** (gamma + 1) for d in range(lo, hi + 1))
    den = sum(d**gamma for d in range(lo, hi + 1))
    return num / den


def bisect_power_law_exponent(target_mean: float, lo: int, hi: int) -> float:
    """Root of E[d](gamma) = target on [-6, -1] via scipy's Brent solver."""
    from scipy.optimize import brentq

    f = lambda g: expected_mean_discrete_power_law(g, lo, hi) - target_mean
    if f(-1.0) <= 0:
        return -1.0
    if f(-6.0) >= 0:
        return -6.0
    return brentq(f, -6.0, -1.0, xtol=1e-12)
