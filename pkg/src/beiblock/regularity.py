"""Castelnuovo-Mumford regularity of S/J_G for block graphs, and related bounds."""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

from beiblock.blocks import BlockDecomposition, root_blocks, validate_block_graph
from beiblock.graph import Graph, GraphError, connected_components, induced_subgraph


class EndFlowerNotFound(RuntimeError):
    """A graph with a flower had no vertex passing the end-flower test."""


@dataclass(frozen=True)
class FlowerSignature:
    vertex: int
    eligible_blocks: FrozenSet[int]

    @property
    def max_cdeg_f(self) -> int:
        return len(self.eligible_blocks)

    @property
    def is_flower(self) -> bool:
        return self.max_cdeg_f >= 3


def eligible_block_count(bd: BlockDecomposition, v: int) -> FlowerSignature:
    """Blocks at ``v`` that can carry a petal of an induced flower centred at ``v``.

    A block of size >= 3 gives a triangle petal. An edge block {v, w} gives
    a claw petal exactly when w lies in two more blocks (cdeg(w) >= 3).
    """
    if not 1 <= v <= bd.n:
        raise GraphError(f"vertex {v} out of range 1..{bd.n}")
    eligible = set()
    for b in bd.blocks_at[v]:
        block = bd.blocks[b]
        if len(block) >= 3:
            eligible.add(b)
        else:
            w = block[0] if block[1] == v else block[1]
            if bd.cdeg(w) >= 3:
                eligible.add(b)
    return FlowerSignature(v, frozenset(eligible))


def flower_vertices(bd: BlockDecomposition) -> List[FlowerSignature]:
    sigs = (eligible_block_count(bd, v) for v in bd.graph.vertices if bd.cdeg(v) >= 3)
    return [s for s in sigs if s.is_flower]


def is_flower_free(bd: BlockDecomposition) -> bool:
    return not flower_vertices(bd)


def _branches(bd: BlockDecomposition, v: int) -> List[List[int]]:
    """For each block at ``v``: that block plus everything hanging off it, ``v`` included."""
    g = bd.graph
    out = []
    for b in bd.blocks_at[v]:
        seen = {v}
        stack = [w for w in bd.blocks[b] if w != v]
        seen.update(stack)
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        out.append(sorted(seen))
    return out


def is_end_flower(bd: BlockDecomposition, v: int) -> bool:
    """``v`` centres a flower and at most one branch at ``v`` contains a flower."""
    if not eligible_block_count(bd, v).is_flower:
        return False
    flowered = 0
    for branch in _branches(bd, v):
        sub = validate_block_graph(induced_subgraph(bd.graph, branch))
        if not is_flower_free(sub):
            flowered += 1
            if flowered > 1:
                return False
    return True


def find_end_flower(bd: BlockDecomposition) -> Optional[int]:
    """A vertex centring an end-flower, or None for a flower-free graph.

    Picks a flower centre of maximum depth in the block-cut tree rooted at
    the smallest vertex (ties to the smaller id): no flower can sit below it.
    """
    sigs = flower_vertices(bd)
    if not sigs:
        return None
    depth = root_blocks(bd).depth
    ranked = sorted((s.vertex for s in sigs), key=lambda v: (-depth[v], v))
    for v in ranked:
        if is_end_flower(bd, v):
            return v
    raise EndFlowerNotFound(f"no end-flower among flower centres {ranked}")


def _component_regularity(g: Graph, first: Optional[int] = None) -> Tuple[int, List[int]]:
    """Regularity of a graph with the end-flower recursion; also returns removed centres.

    ``first``, if given, is used as the first pinpoint instead of the
    deepest one and must itself be an end-flower of its component.
    """
    total = 0
    removed: List[int] = []
    work = connected_components(g)
    while work:
        verts = work.pop()
        if len(verts) == 1:
            continue
        sub = induced_subgraph(g, verts)
        bd = validate_block_graph(sub)
        if is_flower_free(bd):
            total += bd.inner_count + 1
            continue
        if first is not None and first in verts:
            local = verts.index(first) + 1
            if not is_end_flower(bd, local):
                raise ValueError(f"vertex {first} is not an end-flower centre")
            first = None
        else:
            local = find_end_flower(bd)
        v = sub.labels[local - 1]
        removed.append(v)
        rest = [x for x in verts if x != v]
        rest_g = induced_subgraph(g, rest)
        for comp in connected_components(rest_g):
            work.append([rest_g.labels[x - 1] for x in comp])
    return total, removed


def compute_regularity(bd: BlockDecomposition, first: Optional[int] = None) -> int:
    """reg S/J_G, summed over connected components (isolated vertices add 0)."""
    return _component_regularity(bd.graph, first)[0]


def regularity_trace(bd: BlockDecomposition) -> List[int]:
    """Flower centres removed by the recursion, in order."""
    return _component_regularity(bd.graph)[1]


def longest_induced_path(bd: BlockDecomposition) -> int:
    """Edges in a longest induced path.

    An induced path crosses each block on one edge, so a dynamic programme
    over the rooted block-cut tree suffices: ``down[v]`` is the longest
    induced path descending from ``v``.
    """
    rt = root_blocks(bd)
    down = [0] * (bd.n + 1)
    best = 0
    for v in reversed(rt.order):
        top = [0, 0]
        for b in rt.child_blocks(bd, v):
            kids = sorted((down[w] for w in bd.blocks[b] if w != v), reverse=True)
            # path inside this block between two children, skipping v
            if len(kids) >= 2:
                best = max(best, kids[0] + kids[1] + 1)
            val = kids[0] + 1
            if val > top[0]:
                top = [val, top[0]]
            elif val > top[1]:
                top[1] = val
        down[v] = top[0]
        best = max(best, top[0] + top[1])
    return best


@dataclass(frozen=True)
class RegBounds:
    flower_lower: int
    path_lower: int
    clique_upper: int


def reg_bounds(bd: BlockDecomposition) -> RegBounds:
    """Lower and upper bounds for a connected block graph with at least one edge.

    The flower bound is i(G) + max cdeg_F(v) - 1 over flower centres, or the
    exact value i(G) + 1 when there is no flower.
    """
    if len(bd.components) != 1 or bd.n < 2:
        raise ValueError("bounds need a connected graph that is not an isolated vertex")
    sigs = flower_vertices(bd)
    i = bd.inner_count
    if sigs:
        flower_lower = i + max(s.max_cdeg_f for s in sigs) - 1
    else:
        flower_lower = i + 1
    return RegBounds(flower_lower, longest_induced_path(bd), len(bd.blocks))


@dataclass(frozen=True)
class BettiEntry:
    homological: int   # i in beta_{i,j}
    degree: int        # j in beta_{i,j}
    value: int


@dataclass(frozen=True)
class BettiPair:
    first: BettiEntry
    second: BettiEntry


def flower_betti(h: int, k: int) -> BettiPair:
    """The two non-zero superextremal Betti numbers of S/J_G for G = F_{h,k}(v).

    With n = 2h+3k+1, i(G) = k+1, f(G) = 2h+2k and cdeg(v) = h+k:
    beta_{n-1, n+i} = f - 1 and beta_{n-cdeg+1, n+i} = 1.
    """
    if h < 0 or k < 0 or h + k < 3:
        raise ValueError("a flower needs h, k >= 0 and h + k >= 3")
    n = 2 * h + 3 * k + 1
    inner = k + 1
    free = 2 * h + 2 * k
    cdeg = h + k
    return BettiPair(
        BettiEntry(n - 1, n + inner, free - 1),
        BettiEntry(n - cdeg + 1, n + inner, 1),
    )


def depth_projdim(g: Graph) -> Tuple[int, int]:
    """(depth, projdim) of S/J_G = (n + c, n - c) for a block graph with c components."""
    bd = validate_block_graph(g)
    c = len(bd.components)
    return g.n + c, g.n - c
