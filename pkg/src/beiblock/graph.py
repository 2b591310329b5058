"""Simple undirected graphs on vertices 1..n and the edge-list text format."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

Edge = Tuple[int, int]


class GraphError(ValueError):
    """Base class for malformed graph input."""


class ParseError(GraphError):
    """Raised by :func:`parse_graph`; ``kind`` names the failure."""

    def __init__(self, kind: str, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.kind = kind
        self.line_no = line_no


class MalformedLine(ParseError):
    def __init__(self, line_no: int, message: str):
        super().__init__("malformed_line", line_no, message)


class InvalidVertex(ParseError):
    def __init__(self, line_no: int, message: str):
        super().__init__("invalid_vertex", line_no, message)


class DuplicateEdge(ParseError):
    def __init__(self, line_no: int, message: str):
        super().__init__("duplicate_edge", line_no, message)


class SelfLoop(ParseError):
    def __init__(self, line_no: int, message: str):
        super().__init__("self_loop", line_no, message)


class HeaderTooSmall(ParseError):
    def __init__(self, line_no: int, message: str):
        super().__init__("header_too_small", line_no, message)


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on ``1..n``.

    ``edges`` is stored as a sorted tuple of pairs ``(u, v)`` with ``u < v``.
    ``labels`` maps each internal vertex back to a vertex id of the graph it
    was cut out of (identity for parsed or generated graphs).
    """

    n: int
    edges: Tuple[Edge, ...]
    labels: Tuple[int, ...] = ()
    _adj: Tuple[FrozenSet[int], ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphError(f"edge {u}-{v} out of range 1..{self.n}")
            if (u, v) in seen:
                raise GraphError(f"duplicate edge {u}-{v}")
            seen.add((u, v))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(1, self.n + 1)))
        elif len(self.labels) != self.n:
            raise GraphError("labels must have one entry per vertex")
        adj: List[set] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        normed = set()
        for u, v in edges:
            e = _norm(int(u), int(v))
            if e in normed:
                raise GraphError(f"duplicate edge {e[0]}-{e[1]}")
            normed.add(e)
        return cls(n, tuple(sorted(normed)))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def to_text(self) -> str:
        lines = [f"n {self.n}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format.

    An optional first content line ``n <count>`` fixes the vertex count;
    otherwise it is the largest endpoint. ``#`` starts a comment line.
    """
    declared = None
    header_line = 0
    edges: Dict[Edge, int] = {}
    max_v = 0
    first = True
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if first and parts[0] == "n":
            first = False
            if len(parts) != 2:
                raise MalformedLine(line_no, f"bad header {line!r}")
            try:
                declared = int(parts[1])
            except ValueError:
                raise MalformedLine(line_no, f"bad vertex count {parts[1]!r}") from None
            if declared < 1:
                raise InvalidVertex(line_no, "vertex count must be at least 1")
            header_line = line_no
            continue
        first = False
        if len(parts) != 2:
            raise MalformedLine(line_no, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLine(line_no, f"non-integer vertex in {line!r}") from None
        if u < 1 or v < 1:
            raise InvalidVertex(line_no, f"vertex ids must be >= 1, got {line!r}")
        if u == v:
            raise SelfLoop(line_no, f"self-loop at vertex {u}")
        e = _norm(u, v)
        if e in edges:
            raise DuplicateEdge(line_no, f"edge {e[0]}-{e[1]} repeats line {edges[e]}")
        edges[e] = line_no
        max_v = max(max_v, e[1])
    if declared is None:
        n = max_v
    else:
        if declared < max_v:
            raise HeaderTooSmall(header_line, f"header n={declared} but vertex {max_v} used")
        n = declared
    return Graph(n, tuple(sorted(edges)))


def connected_components(g: Graph) -> List[List[int]]:
    """Vertex sets of the connected components, each sorted, ordered by smallest member."""
    seen = [False] * (g.n + 1)
    comps = []
    for s in g.vertices:
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced on ``s``, relabelled to ``1..|s|`` in increasing order.

    The result's ``labels`` give, for each new vertex, the corresponding
    vertex label of ``g``.
    """
    keep = sorted(set(s))
    for v in keep:
        if not 1 <= v <= g.n:
            raise GraphError(f"vertex {v} out of range 1..{g.n}")
    index = {v: i for i, v in enumerate(keep, start=1)}
    edges = tuple(sorted((index[u], index[v]) for u, v in g.edges if u in index and v in index))
    return Graph(len(keep), edges, tuple(g.labels[v - 1] for v in keep))


def glue(g1: Graph, u1: int, g2: Graph, u2: int) -> Graph:
    """Disjoint union of ``g1`` and ``g2`` with ``u1`` and ``u2`` identified.

    Vertices of ``g1`` keep their ids; ``g2``'s vertices are shifted after
    them, and ``u2`` becomes ``u1``.
    """
    offset = g1.n
    remap = {}
    nxt = offset + 1
    for v in g2.vertices:
        if v == u2:
            remap[v] = u1
        else:
            remap[v] = nxt
            nxt += 1
    edges = list(g1.edges) + [(remap[a], remap[b]) for a, b in g2.edges]
    return Graph.from_edges(g1.n + g2.n - 1, edges)
