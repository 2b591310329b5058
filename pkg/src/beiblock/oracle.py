"""Exhaustive reference computations over cutsets.

Everything here is exponential in the number of vertices and is meant as a
referee for the linear-time code, so it works on raw adjacency and never
looks at the block structure. Inputs larger than the oracle limit are
refused.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple

from beiblock.graph import Graph

DEFAULT_ORACLE_LIMIT = 22


class OracleLimitExceeded(RuntimeError):
    def __init__(self, n: int, limit: int):
        super().__init__(f"graph has {n} vertices; oracle limit is {limit}")
        self.n = n
        self.limit = limit


class NotACutset(ValueError):
    def __init__(self, vertex: int, c_without: int, c_with: int):
        super().__init__(
            f"not a cutset: removing {vertex} from T gives {c_without} components, "
            f"T gives {c_with}"
        )
        self.vertex = vertex
        self.c_without = c_without
        self.c_with = c_with


def oracle_limit() -> int:
    raw = os.environ.get("BEI_ORACLE_LIMIT")
    return int(raw) if raw else DEFAULT_ORACLE_LIMIT


def _check_limit(g: Graph, limit: Optional[int]) -> None:
    cap = oracle_limit() if limit is None else limit
    if g.n > cap:
        raise OracleLimitExceeded(g.n, cap)


@dataclass(frozen=True)
class CutSet:
    vertices: Tuple[int, ...]
    num_components: int
    n: int

    @property
    def height(self) -> int:
        return self.n - self.num_components + len(self.vertices)

    @property
    def dim_term(self) -> int:
        return self.n + self.num_components - len(self.vertices)

    @property
    def key(self) -> Tuple[int, Tuple[int, ...]]:
        return (len(self.vertices), self.vertices)


def _adj_masks(g: Graph) -> List[int]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u - 1] |= 1 << (v - 1)
        masks[v - 1] |= 1 << (u - 1)
    return masks


def _components(adj: Sequence[int], remaining: int) -> List[int]:
    comps = []
    while remaining:
        comp = frontier = remaining & -remaining
        while frontier:
            grown = 0
            f = frontier
            while f:
                low = f & -f
                grown |= adj[low.bit_length() - 1]
                f ^= low
            frontier = grown & remaining & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def component_count(g: Graph, removed: Sequence[int] = ()) -> int:
    """c(T): number of connected components of G with ``removed`` deleted."""
    full = (1 << g.n) - 1
    mask = 0
    for v in removed:
        mask |= 1 << (v - 1)
    return len(_components(_adj_masks(g), full & ~mask))


def _is_simplicial(adj: Sequence[int], i: int) -> bool:
    nb = adj[i]
    f = nb
    while f:
        low = f & -f
        j = low.bit_length() - 1
        if (nb & ~low) & ~adj[j]:
            return False
        f ^= low
    return True


def _cutset_scan(g: Graph, prune_simplicial: bool) -> Iterator[CutSet]:
    adj = _adj_masks(g)
    full = (1 << g.n) - 1
    # A simplicial vertex sees a single clique outside T, hence at most one
    # component: it can never belong to a cutset.
    if prune_simplicial:
        pool = [i for i in range(g.n) if not _is_simplicial(adj, i)]
    else:
        pool = list(range(g.n))
    for size in range(len(pool) + 1):
        for combo in combinations(pool, size):
            t = 0
            for i in combo:
                t |= 1 << i
            comps = _components(adj, full & ~t)
            ok = True
            # c(T \ {i}) = c(T) - (#components touching i) + 1
            for i in combo:
                touching = 0
                for c in comps:
                    if adj[i] & c:
                        touching += 1
                        if touching == 2:
                            break
                if touching < 2:
                    ok = False
                    break
            if ok:
                yield CutSet(tuple(i + 1 for i in combo), len(comps), g.n)


def enumerate_cutsets(g: Graph, limit: Optional[int] = None, prune_simplicial: bool = True) -> List[CutSet]:
    """All cutsets of ``g``, ordered by size then lexicographically."""
    _check_limit(g, limit)
    return list(_cutset_scan(g, prune_simplicial))


def cutset_stats(g: Graph, t: Sequence[int]) -> CutSet:
    verts = tuple(sorted(set(t)))
    c = component_count(g, verts)
    for i in verts:
        c_without = component_count(g, [x for x in verts if x != i])
        if c_without >= c:
            raise NotACutset(i, c_without, c)
    return CutSet(verts, c, g.n)


def krull_dim_bruteforce(g: Graph, limit: Optional[int] = None) -> Tuple[int, CutSet]:
    """max over cutsets of n + c(T) - |T|, with the smallest witness."""
    best = None
    for cs in enumerate_cutsets(g, limit):
        if best is None or cs.dim_term > best.dim_term:
            best = cs
    return best.dim_term, best


@dataclass(frozen=True)
class MinimalPrimeSummary:
    all_cutsets: Tuple[CutSet, ...]
    minh: Tuple[CutSet, ...]
    maxh: Tuple[CutSet, ...]
    dim: int

    @property
    def minh_height(self) -> int:
        return self.minh[0].height

    @property
    def maxh_height(self) -> int:
        return self.maxh[0].height

    @property
    def maxh_is_empty_set_only(self) -> bool:
        return len(self.maxh) == 1 and self.maxh[0].vertices == ()


def minh_maxh(g: Graph, limit: Optional[int] = None) -> MinimalPrimeSummary:
    """Cutsets of extremal height (heights only; prime minimality is not modelled)."""
    cuts = enumerate_cutsets(g, limit)
    lo = min(c.height for c in cuts)
    hi = max(c.height for c in cuts)
    return MinimalPrimeSummary(
        all_cutsets=tuple(cuts),
        minh=tuple(c for c in cuts if c.height == lo),
        maxh=tuple(c for c in cuts if c.height == hi),
        dim=2 * g.n - lo,
    )


def _petal_candidates(g: Graph, v: int) -> List[Tuple[Tuple[int, ...], Tuple[Tuple[int, int], ...]]]:
    nv = g.neighbors(v)
    cands = []
    for a, b in combinations(sorted(nv), 2):
        if g.has_edge(a, b):
            cands.append(((a, b), ((v, a), (v, b), (a, b))))
    for c in sorted(nv):
        outer = sorted(x for x in g.neighbors(c) if x != v and x not in nv)
        for x, y in combinations(outer, 2):
            if not g.has_edge(x, y):
                cands.append(((c, x, y), ((v, c), (c, x), (c, y))))
    return cands


def _compatible(g: Graph, p: Tuple[int, ...], q: Tuple[int, ...]) -> bool:
    if set(p) & set(q):
        return False
    return not any(g.has_edge(a, b) for a in p for b in q)


def flower_search(g: Graph, v: int, limit: Optional[int] = None) -> Tuple[int, Tuple[int, ...]]:
    """Largest induced flower centred at ``v``: (petal count, vertex set).

    Petals are enumerated straight from adjacency: a triangle through ``v``,
    or a claw whose centre is a neighbour of ``v`` and whose other two
    leaves are non-adjacent to each other and to ``v``. A flower is a family
    of pairwise vertex-disjoint, mutually non-adjacent petals. Returns
    ``(0, ())`` when fewer than three petals fit.
    """
    _check_limit(g, limit)
    cands = _petal_candidates(g, v)
    m = len(cands)
    ok = [[_compatible(g, cands[i][0], cands[j][0]) for j in range(m)] for i in range(m)]
    best: List[int] = []

    def grow(chosen: List[int], rest: List[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        # each petal uses at least one neighbour of v, disjointly
        used = sum(1 for i in chosen for x in cands[i][0] if x in g.neighbors(v))
        cap = min(len(rest), g.degree(v) - used)
        if len(chosen) + cap <= len(best):
            return
        for pos, i in enumerate(rest):
            if len(chosen) + len(rest) - pos <= len(best):
                return
            grow(chosen + [i], [j for j in rest[pos + 1:] if ok[i][j]])

    grow([], list(range(m)))
    if len(best) < 3:
        return 0, ()
    verts = {v}
    flower_edges = set()
    for i in best:
        verts.update(cands[i][0])
        flower_edges.update(tuple(sorted(e)) for e in cands[i][1])
    induced = {(a, b) for a, b in g.edges if a in verts and b in verts}
    assert induced == flower_edges, "petal search produced a non-induced flower"
    return len(best), tuple(sorted(verts))


def flower_oracle(g: Graph, v: int, limit: Optional[int] = None) -> int:
    """Maximum h+k over induced flowers F_{h,k}(v) in ``g``; 0 if there is none."""
    return flower_search(g, v, limit)[0]


def longest_induced_path_bruteforce(g: Graph, limit: Optional[int] = None) -> int:
    """Longest chordless path (in edges) by depth-first extension."""
    _check_limit(g, limit)
    best = 0

    def extend(path: List[int], inside: set) -> None:
        nonlocal best
        best = max(best, len(path) - 1)
        tail = path[-1]
        for w in g.neighbors(tail):
            if w in inside:
                continue
            # w may touch only the current tail of the path
            if any(g.has_edge(w, x) for x in path[:-1]):
                continue
            path.append(w)
            inside.add(w)
            extend(path, inside)
            path.pop()
            inside.discard(w)

    for s in g.vertices:
        extend([s], {s})
    return best
