"""Seeded random block graphs and a few fixed families used as fixtures."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Tuple

from beiblock.graph import Graph


@dataclass(frozen=True)
class GeneratorConfig:
    """Parameters for :func:`generate_block_graph`.

    ``tree_shape_bias`` in [0, 1] is the chance of attaching the next block
    to a vertex of the most recent block instead of a uniformly chosen one;
    high values give long, path-like block-cut trees.
    """

    num_blocks: int
    max_block_size: int
    tree_shape_bias: float = 0.0
    min_block_size: int = 2
    shuffle_labels: bool = True

    def check(self) -> None:
        if self.num_blocks < 1:
            raise ValueError("num_blocks must be >= 1")
        if self.min_block_size < 2 or self.max_block_size < self.min_block_size:
            raise ValueError("need 2 <= min_block_size <= max_block_size")
        if not 0.0 <= self.tree_shape_bias <= 1.0:
            raise ValueError("tree_shape_bias must lie in [0, 1]")


def generate_block_graph(config: GeneratorConfig, seed: int) -> Graph:
    """Connected block graph grown by attaching cliques at existing vertices."""
    config.check()
    rng = random.Random(seed)
    size = rng.randint(config.min_block_size, config.max_block_size)
    blocks: List[List[int]] = [list(range(1, size + 1))]
    n = size
    for _ in range(config.num_blocks - 1):
        if rng.random() < config.tree_shape_bias:
            at = rng.choice(blocks[-1])
        else:
            at = rng.randint(1, n)
        size = rng.randint(config.min_block_size, config.max_block_size)
        new = list(range(n + 1, n + size))
        n += size - 1
        blocks.append([at] + new)
    perm = list(range(1, n + 1))
    if config.shuffle_labels:
        rng.shuffle(perm)
    relabel = dict(zip(range(1, n + 1), perm))
    edges = []
    for b in blocks:
        for i, u in enumerate(b):
            for w in b[i + 1:]:
                edges.append((relabel[u], relabel[w]))
    return Graph.from_edges(n, edges)


def random_small_block_graph(seed: int, max_n: int = 12) -> Graph:
    """A random block graph with at most ``max_n`` vertices, mixed shapes."""
    rng = random.Random(seed)
    while True:
        cfg = GeneratorConfig(
            num_blocks=rng.randint(1, max_n - 1),
            max_block_size=rng.randint(2, 5),
            tree_shape_bias=rng.choice([0.0, 0.3, 0.7]),
        )
        g = generate_block_graph(cfg, rng.randrange(2**31))
        if g.n <= max_n:
            return g


def complete_graph(m: int) -> Graph:
    return Graph.from_edges(m, [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)])


def path_graph(p: int) -> Graph:
    return Graph.from_edges(p, [(i, i + 1) for i in range(1, p)])


def star_graph(m: int) -> Graph:
    """K_{1,m} with centre 1."""
    return Graph.from_edges(m + 1, [(1, i) for i in range(2, m + 2)])


def cycle_graph(p: int) -> Graph:
    return Graph.from_edges(p, [(i, i % p + 1) for i in range(1, p + 1)])


def flower_graph(h: int, k: int) -> Graph:
    """F_{h,k}(v) with v = 1: h triangles and k claws sharing the free vertex 1.

    Claw petal j has centre c adjacent to 1 and to two further leaves.
    """
    edges: List[Tuple[int, int]] = []
    nxt = 2
    for _ in range(h):
        a, b = nxt, nxt + 1
        nxt += 2
        edges += [(1, a), (1, b), (a, b)]
    for _ in range(k):
        c, x, y = nxt, nxt + 1, nxt + 2
        nxt += 3
        edges += [(1, c), (c, x), (c, y)]
    return Graph.from_edges(nxt - 1, edges)


def spider_graph(legs: int = 3) -> Graph:
    """Centre 1 with legs 1-a_i-b_i; a_i = 2i, b_i = 2i+1."""
    edges = []
    for i in range(1, legs + 1):
        edges += [(1, 2 * i), (2 * i, 2 * i + 1)]
    return Graph.from_edges(2 * legs + 1, edges)


def two_flower_example() -> Graph:
    """Twelve-vertex block graph: two triangles at v1 = 1, three at v2 = 2, edge 1-2.

    Triangles at 1: {1,3,4}, {1,5,6}; at 2: {2,7,8}, {2,9,10}, {2,11,12}.
    """
    edges = [(1, 2)]
    for centre, pairs in ((1, [(3, 4), (5, 6)]), (2, [(7, 8), (9, 10), (11, 12)])):
        for a, b in pairs:
            edges += [(centre, a), (centre, b), (a, b)]
    return Graph.from_edges(12, edges)
