import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import netreplica as nr

DATA_DIR = Path(__file__).parent / "data"
SOCIAL62_PATH = DATA_DIR / "social62.el"


def make_caveman(cliques: int = 10, size: int = 20, bridges: int = 2) -> nr.Graph:
    """Ring of cliques: dense communities bridged around a cycle."""
    edges = []
    for c in range(cliques):
        base = c * size
        for i in range(size):
            for j in range(i + 1, size):
                edges.append((base + i, base + j))
    for c in range(cliques):
        nxt = (c + 1) % cliques
        for b in range(bridges):
            edges.append((c * size + b, nxt * size + size - 1 - b))
    return nr.Graph.from_edges(cliques * size, edges)


def make_planted_two_block(
    seed: int = 123, n: int = 100, p_in: float = 0.3, p_out: float = 0.01
) -> nr.Graph:
    rng = random.Random(seed)
    half = n // 2
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            p = p_in if (u < half) == (v < half) else p_out
            if rng.random() < p:
                edges.append((u, v))
    return nr.Graph.from_edges(n, edges)


@pytest.fixture(scope="session")
def social62() -> nr.Graph:
    return nr.read_edge_list(SOCIAL62_PATH)


@pytest.fixture
def triangle() -> nr.Graph:
    return nr.Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def p3() -> nr.Graph:
    return nr.Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def p5() -> nr.Graph:
    return nr.Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])


@pytest.fixture
def star4() -> nr.Graph:
    """Star with center 0 and 3 leaves."""
    return nr.Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def k4() -> nr.Graph:
    return nr.Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


@pytest.fixture
def two_triangles_bridge() -> nr.Graph:
    """Triangles {0,1,2} and {3,4,5} joined by the bridge 2-3."""
    return nr.Graph.from_edges(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]
    )


@pytest.fixture
def chorded_cycle() -> nr.Graph:
    """4-cycle 0-1-2-3 plus the chord {1, 3}."""
    return nr.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)])
