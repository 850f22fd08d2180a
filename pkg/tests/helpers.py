"""Shared generators for the test suites (seeded, deterministic)."""
from __future__ import annotations

import random

import numpy as np

from qclifford.gf2core import QuadSpace
from qclifford.graphs import ColoredGraph, family

# the spaces most suites sweep: named families plus a few hand-built ones
FAMILY_SPECS = ["A:1", "A:2", "A:3", "A:5", "D:4", "D:5", "D:6", "E:6", "E:7", "E:8",
                "K:3", "K:4", "K:5", "Cl:0,3", "Cl:1,2", "Cl:2,2", "Cl:3,0"]


def random_space(dim: int, rng: random.Random) -> QuadSpace:
    return QuadSpace(dim, tuple(rng.getrandbits(dim) if dim else 0 for _ in range(dim)))


def random_graph(n: int, rng: random.Random, p: float = 0.4) -> ColoredGraph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return ColoredGraph.plain(n, edges)


def random_connected_graph(n: int, rng: random.Random, p: float = 0.4) -> ColoredGraph:
    """A random spanning tree plus extra edges with probability ``p``."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[k], order[rng.randrange(k)]))) for k in range(1, n)}
    edges |= {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    return ColoredGraph.plain(n, sorted(edges))


def family_spaces():
    from qclifford.graphs import build_space
    return [(spec, build_space(family(spec))[0]) for spec in FAMILY_SPECS]


def brute_q(space: QuadSpace, v: int) -> int:
    """``v^T G v`` straight from the Gram matrix."""
    G = space.gram.astype(np.int64)
    x = np.array([(v >> i) & 1 for i in range(space.dim)], dtype=np.int64)
    return int(x @ G @ x) & 1


def brute_f(space: QuadSpace, u: int, v: int) -> int:
    G = space.gram.astype(np.int64)
    x = np.array([(u >> i) & 1 for i in range(space.dim)], dtype=np.int64)
    y = np.array([(v >> i) & 1 for i in range(space.dim)], dtype=np.int64)
    return int(x @ (G + G.T) @ y) & 1
