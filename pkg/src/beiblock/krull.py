"""Krull dimension of S/J_G for block graphs in linear time.

The dimension is ``n + c(T) - |T|`` for a cutset ``T`` whose prime has
minimum height. ``T`` is built by peeling: a vertex lying in at least two
endblocks of an indecomposable piece goes into ``T`` and is removed together
with those endblocks, until every piece is a single block.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from beiblock.blocks import BlockDecomposition, root_blocks, split_indecomposable, validate_block_graph
from beiblock.graph import Graph, induced_subgraph
from beiblock.oracle import CutSet, NotACutset, component_count, cutset_stats

Peel = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class DimWitness:
    cutset: CutSet
    dimension: int
    peel_sequence: Peel  # (vertex, clique degree in its residual piece)


def _traverse(bd: BlockDecomposition) -> Tuple[int, Peel]:
    """One post-order pass over the block-cut forest.

    A child block of ``v`` is dead once all its other vertices are in T.
    ``v`` joins T when more than two of its blocks are still alive; that adds
    ``alive - 2`` to c(T) - |T|. Returns (c(T) - |T|, peel sequence).
    """
    rt = root_blocks(bd)
    in_t = [False] * (bd.n + 1)
    acc = len(bd.components)
    peel = []
    for v in reversed(rt.order):
        dead = 0
        for b in rt.child_blocks(bd, v):
            if all(in_t[w] for w in bd.blocks[b] if w != v):
                dead += 1
        alive = bd.cdeg(v) - dead
        if alive > 2:
            in_t[v] = True
            acc += alive - 2
            peel.append((v, alive))
    return acc, tuple(peel)


def krull_dim_linear(bd: BlockDecomposition) -> int:
    return bd.n + _traverse(bd)[0]


def traversal_witness(bd: BlockDecomposition) -> DimWitness:
    """The cutset found by :func:`krull_dim_linear`, peel in post-order."""
    acc, peel = _traverse(bd)
    t = tuple(sorted(v for v, _ in peel))
    cs = CutSet(t, acc + len(t), bd.n)
    return DimWitness(cs, bd.n + acc, peel)


@dataclass(frozen=True)
class _Piece:
    vertices: Tuple[int, ...]      # original vertex ids
    bd: BlockDecomposition         # on the relabelled induced subgraph
    index: dict                    # original id -> local id

    def local(self, v: int) -> int:
        return self.index[v]

    def original(self, local: int) -> int:
        return self.bd.graph.labels[local - 1]

    def endblocks_at(self, v: int) -> List[int]:
        lv = self.local(v)
        return [b for b in self.bd.blocks_at[lv] if self.bd.is_endblock(b)]


def _pieces(g: Graph, vertices: Sequence[int]) -> List[_Piece]:
    """Indecomposable pieces of G[vertices] that are not a single block."""
    if not vertices:
        return []
    sub = induced_subgraph(g, vertices)
    bd = validate_block_graph(sub)
    out = []
    for part in split_indecomposable(bd).parts:
        if len(part) <= 2:
            continue
        orig = [sub.labels[x - 1] for x in part]
        psub = induced_subgraph(g, orig)
        pbd = validate_block_graph(psub)
        if len(pbd.blocks) == 1:
            continue
        out.append(_Piece(tuple(orig), pbd, {v: i for i, v in enumerate(psub.labels, start=1)}))
    return out


def _peel_piece(piece: _Piece, v: int) -> List[int]:
    """Vertices left after removing ``v`` and its endblocks from ``piece``."""
    gone = {v}
    for b in piece.endblocks_at(v):
        gone.update(piece.original(x) for x in piece.bd.blocks[b])
    return [x for x in piece.vertices if x not in gone]


def min_cutset_witness(bd: BlockDecomposition) -> DimWitness:
    """Witness built by repeated decomposition and peeling.

    Pieces are handled in FIFO order; inside a piece the eligible vertex
    with the smallest id is peeled.
    """
    g = bd.graph
    queue = deque(_pieces(g, list(g.vertices)))
    peel = []
    while queue:
        piece = queue.popleft()
        cands = [piece.original(x) for x in piece.bd.graph.vertices]
        v = min(u for u in cands if len(piece.endblocks_at(u)) >= 2)
        peel.append((v, piece.bd.cdeg(piece.local(v))))
        queue.extend(_pieces(g, _peel_piece(piece, v)))
    t = tuple(sorted(v for v, _ in peel))
    cs = CutSet(t, component_count(g, t), g.n)
    return DimWitness(cs, cs.dim_term, tuple(peel))


@dataclass(frozen=True)
class Certification:
    ok: bool
    reason: str = "ok"

    def __bool__(self) -> bool:
        return self.ok


def certify_witness(g: Graph, w: DimWitness) -> Certification:
    """Replay the peel sequence and recheck every claim of the witness."""
    pieces = _pieces(g, list(g.vertices))
    seen = set()
    for step, (v, claimed) in enumerate(w.peel_sequence):
        if v in seen:
            return Certification(False, f"step {step}: vertex {v} peeled twice")
        seen.add(v)
        holders = [p for p in pieces if v in p.index and len(p.endblocks_at(v)) >= 2]
        if not holders:
            return Certification(False, f"step {step}: vertex {v} is not in two endblocks of any piece")
        piece = holders[0]
        cdeg = piece.bd.cdeg(piece.local(v))
        if cdeg != claimed:
            return Certification(False, f"step {step}: vertex {v} has clique degree {cdeg}, claimed {claimed}")
        pieces.remove(piece)
        pieces.extend(_pieces(g, _peel_piece(piece, v)))
    if pieces:
        return Certification(False, "residual is not decomposable into blocks")
    t = tuple(sorted(seen))
    if t != tuple(sorted(w.cutset.vertices)):
        return Certification(False, "peeled vertices differ from the cutset")
    try:
        cs = cutset_stats(g, t)
    except NotACutset as exc:
        return Certification(False, f"not a cutset: {exc}")
    if cs.num_components != w.cutset.num_components:
        return Certification(False, f"c(T) is {cs.num_components}, witness says {w.cutset.num_components}")
    if cs.dim_term != w.dimension:
        return Certification(False, f"n + c(T) - |T| is {cs.dim_term}, witness says {w.dimension}")
    peel_sum = g.n + component_count(g) + sum(d - 2 for _, d in w.peel_sequence)
    if peel_sum != w.dimension:
        return Certification(False, f"peel contributions give {peel_sum}, witness says {w.dimension}")
    return Certification(True)
