"""Block decomposition of block graphs.

Blocks come from a lowpoint DFS; a graph is accepted only if every block is
a clique. Isolated vertices lie in no block (clique degree 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from beiblock.graph import Graph, GraphError, connected_components

Block = Tuple[int, ...]


class NotBlockGraph(GraphError):
    """Some biconnected component is not complete."""

    def __init__(self, block: Block, missing: Tuple[int, int]):
        super().__init__(
            f"not a block graph: block {list(block)} is not a clique "
            f"(missing edge {missing[0]}-{missing[1]})"
        )
        self.block = block
        self.missing = missing


def biconnected_components(g: Graph) -> List[Block]:
    """Vertex sets of the biconnected components (bridges included).

    Iterative Hopcroft-Tarjan; each component is returned sorted, and the
    list is sorted. Isolated vertices yield nothing.
    """
    disc = [0] * (g.n + 1)
    low = [0] * (g.n + 1)
    time = 1
    comps: List[Block] = []
    adj = [sorted(g.neighbors(v)) for v in range(g.n + 1)]
    for root in g.vertices:
        if disc[root] or not adj[root]:
            continue
        disc[root] = low[root] = time
        time += 1
        edge_stack: List[Tuple[int, int]] = []
        # frames: (vertex, parent, next neighbour index)
        stack = [[root, 0, 0]]
        while stack:
            frame = stack[-1]
            v, parent, i = frame
            if i < len(adj[v]):
                frame[2] += 1
                w = adj[v][i]
                if not disc[w]:
                    disc[w] = low[w] = time
                    time += 1
                    edge_stack.append((v, w))
                    stack.append([w, v, 0])
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if not stack:
                break
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] >= disc[p]:
                comp = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.add(a)
                    comp.add(b)
                    if (a, b) == (p, v):
                        break
                comps.append(tuple(sorted(comp)))
    comps.sort()
    return comps


@dataclass(frozen=True)
class BlockDecomposition:
    graph: Graph
    blocks: Tuple[Block, ...]
    cutpoints: FrozenSet[int]
    blocks_at: Tuple[Tuple[int, ...], ...]  # indexed by vertex; entry 0 unused
    components: Tuple[Tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.graph.n

    def cdeg(self, v: int) -> int:
        return len(self.blocks_at[v])

    @property
    def inner_count(self) -> int:
        """i(G): vertices lying in more than one block."""
        return sum(1 for v in self.graph.vertices if self.cdeg(v) > 1)

    @property
    def free_count(self) -> int:
        """f(G): vertices lying in exactly one block."""
        return sum(1 for v in self.graph.vertices if self.cdeg(v) == 1)

    @property
    def isolated(self) -> List[int]:
        return [v for v in self.graph.vertices if self.cdeg(v) == 0]

    def is_endblock(self, b: int) -> bool:
        """A block with at most one cutpoint (a lone block counts as an endblock)."""
        return sum(1 for v in self.blocks[b] if self.cdeg(v) > 1) <= 1


def validate_block_graph(g: Graph) -> BlockDecomposition:
    blocks = biconnected_components(g)
    for b in blocks:
        for i, u in enumerate(b):
            for w in b[i + 1:]:
                if not g.has_edge(u, w):
                    raise NotBlockGraph(b, (u, w))
    at: List[List[int]] = [[] for _ in range(g.n + 1)]
    for idx, b in enumerate(blocks):
        for v in b:
            at[v].append(idx)
    cut = frozenset(v for v in g.vertices if len(at[v]) >= 2)
    return BlockDecomposition(
        graph=g,
        blocks=tuple(blocks),
        cutpoints=cut,
        blocks_at=tuple(tuple(a) for a in at),
        components=tuple(tuple(c) for c in connected_components(g)),
    )


def is_block_graph(g: Graph) -> bool:
    try:
        validate_block_graph(g)
    except NotBlockGraph:
        return False
    return True


def clique_degree(bd: BlockDecomposition, v: int) -> int:
    if not 1 <= v <= bd.n:
        raise GraphError(f"vertex {v} out of range 1..{bd.n}")
    return bd.cdeg(v)


@dataclass(frozen=True)
class RootedBlockTree:
    """A block-cut forest rooted at one vertex per component.

    ``order`` lists vertices so that each vertex comes after the parent
    cutpoint of its parent block; iterate it reversed for a post-order.
    """

    roots: Tuple[int, ...]
    order: Tuple[int, ...]
    parent_block: Tuple[Optional[int], ...]   # per vertex
    block_parent: Tuple[int, ...]             # per block: its top vertex
    depth: Tuple[int, ...]                    # per vertex, in blocks from the root

    def child_blocks(self, bd: BlockDecomposition, v: int) -> List[int]:
        pb = self.parent_block[v]
        return [b for b in bd.blocks_at[v] if b != pb]


def root_blocks(bd: BlockDecomposition, roots: Optional[Dict[int, int]] = None) -> RootedBlockTree:
    """Root every component at its smallest vertex, or at ``roots[min(component)]``."""
    parent_block: List[Optional[int]] = [None] * (bd.n + 1)
    block_parent = [0] * len(bd.blocks)
    depth = [0] * (bd.n + 1)
    order: List[int] = []
    root_list = []
    for comp in bd.components:
        r = comp[0] if roots is None else roots.get(comp[0], comp[0])
        root_list.append(r)
        order.append(r)
        head = len(order) - 1
        while head < len(order):
            v = order[head]
            head += 1
            for b in bd.blocks_at[v]:
                if b == parent_block[v]:
                    continue
                block_parent[b] = v
                for w in bd.blocks[b]:
                    if w != v:
                        parent_block[w] = b
                        depth[w] = depth[v] + 1
                        order.append(w)
    return RootedBlockTree(tuple(root_list), tuple(order), tuple(parent_block), tuple(block_parent), tuple(depth))


@dataclass(frozen=True)
class IndecomposableSplit:
    parts: Tuple[Tuple[int, ...], ...]
    glue_vertices: FrozenSet[int]


def split_indecomposable(bd: BlockDecomposition) -> IndecomposableSplit:
    """Cut the graph at every vertex of clique degree 2.

    Blocks sharing a vertex of clique degree >= 3 stay together; each group
    of blocks is one part. Isolated vertices are singleton parts. Parts are
    sorted by their smallest vertex.
    """
    parent = list(range(len(bd.blocks)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v in bd.graph.vertices:
        at = bd.blocks_at[v]
        if len(at) >= 3:
            r = find(at[0])
            for b in at[1:]:
                parent[find(b)] = r
    groups: Dict[int, set] = {}
    for idx, b in enumerate(bd.blocks):
        groups.setdefault(find(idx), set()).update(b)
    parts = [tuple(sorted(s)) for s in groups.values()]
    parts.extend((v,) for v in bd.isolated)
    parts.sort()
    glue = frozenset(v for v in bd.graph.vertices if bd.cdeg(v) == 2)
    return IndecomposableSplit(tuple(parts), glue)
