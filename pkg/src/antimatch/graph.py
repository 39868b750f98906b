"""Simple undirected graphs with O(1) adjacency lookups.

Vertices are the contiguous integers ``0..n-1``. A :class:`Graph` keeps three
views of the same edge set: sorted neighbour lists, a byte adjacency matrix
(one immutable ``bytes`` row per vertex) and a degree table. Nothing mutates a
graph after construction.
"""

from __future__ import annotations

from itertools import combinations
from math import isqrt
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence


class Edge(NamedTuple):
    """Unordered vertex pair in canonical form ``u < v``."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise ValueError(f"self-loop at vertex {a}")
        return cls(a, b) if a < b else cls(b, a)


class GraphError(ValueError):
    """Raised on invalid vertex ids or edges."""


class ParseError(GraphError):
    """Malformed edge-list text. ``line`` is 1-based."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class Graph:
    __slots__ = ("n", "m", "adjacency", "degrees", "_rows", "_edges", "meta")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), meta: Optional[Mapping] = None):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        rows = [bytearray(n) for _ in range(n)]
        nbrs: list[list[int]] = [[] for _ in range(n)]
        canon = []
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"edge ({a}, {b}) out of range for n={n}")
            if a == b:
                raise GraphError(f"self-loop at vertex {a}")
            if rows[a][b]:
                raise GraphError(f"duplicate edge ({a}, {b})")
            rows[a][b] = rows[b][a] = 1
            nbrs[a].append(b)
            nbrs[b].append(a)
            canon.append(Edge.of(a, b))
        self.n = n
        self.m = len(canon)
        self.adjacency = tuple(tuple(sorted(x)) for x in nbrs)
        self.degrees = tuple(len(x) for x in nbrs)
        self._rows = tuple(bytes(r) for r in rows)
        self._edges = tuple(sorted(canon))
        self.meta = MappingProxyType(dict(meta or {}))

    def __setattr__(self, name, value):
        if hasattr(self, name):
            raise AttributeError(f"Graph is immutable; cannot set {name!r}")
        object.__setattr__(self, name, value)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self):
        return hash((self.n, self._edges))

    @property
    def edges(self) -> tuple[Edge, ...]:
        """All edges, canonical and lexicographically sorted."""
        return self._edges

    @property
    def matrix(self) -> tuple[bytes, ...]:
        """Row ``u`` holds a 1 at position ``v`` iff ``uv`` is an edge."""
        return self._rows

    def has_edge(self, u: int, v: int) -> bool:
        # unchecked fast path for internal loops
        return self._rows[u][v] == 1

    def is_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError(f"is_edge called with u == v == {u}")
        return self._rows[u][v] == 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def incident_edges(self, v: int) -> list[Edge]:
        """The edge set E_v."""
        return [Edge.of(v, w) for w in self.neighbors(v)]

    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph on ``vertices``, relabelled to ``0..k-1`` in the given order."""
        rows = self._rows
        sub = [
            (i, j)
            for (i, a), (j, b) in combinations(enumerate(vertices), 2)
            if rows[a][b]
        ]
        return Graph(len(vertices), sub)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of 0..n-1")
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self._edges])

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range for n={self.n}")


def is_edge(g: Graph, u: int, v: int) -> bool:
    return g.is_edge(u, v)


def parse_edge_list(text: str) -> Graph:
    """Parse ``"<n> <m>"`` followed by exactly ``m`` lines ``"<u> <v>"``.

    Lines whose first non-blank character is ``#`` and blank lines are skipped.
    Every rejection raises :class:`ParseError` carrying the offending line.
    """
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[Edge] = set()
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            what = "header" if header is None else "edge line"
            raise ParseError(lineno, f"malformed {what}: expected two integers, got {raw!r}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            what = "header" if header is None else "edge line"
            raise ParseError(lineno, f"malformed {what}: {raw!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError(lineno, f"malformed header: negative count in {raw!r}")
            header = (a, b)
            continue
        n, m = header
        if len(edges) == m:
            raise ParseError(lineno, f"more than the declared {m} edges")
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(lineno, f"vertex index out of range [0, {n}): {raw!r}")
        if a == b:
            raise ParseError(lineno, f"self-loop at vertex {a}")
        e = Edge.of(a, b)
        if e in seen:
            raise ParseError(lineno, f"duplicate edge {a} {b}")
        seen.add(e)
        edges.append((a, b))
    if header is None:
        raise ParseError(max(last_line, 1), "missing header line '<n> <m>'")
    if len(edges) != header[1]:
        raise ParseError(max(last_line, 1), f"expected {header[1]} edges, found {len(edges)}")
    return Graph(header[0], edges)


def format_edge_list(g: Graph, comment: Optional[str] = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def find_quadrilateral(g: Graph) -> Optional[tuple[int, int, int, int]]:
    """Return some 4-cycle ``(a, b, c, d)`` or ``None`` if ``g`` is C4-free.

    For every vertex ``b`` and every pair of its neighbours ``(a, c)`` the
    pair is recorded with ``b`` as a common neighbour; the first pair seen
    twice closes a cycle. Cost is O(sum of squared degrees).
    """
    witness: dict[tuple[int, int], int] = {}
    for b in range(g.n):
        for a, c in combinations(g.adjacency[b], 2):
            d = witness.get((a, c))
            if d is not None:
                return canonical_cycle((a, b, c, d))
            witness[(a, c)] = b
    return None


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect a vertex cycle to start at its minimum, smaller neighbour second."""
    k = len(cycle)
    i = min(range(k), key=cycle.__getitem__)
    fwd = tuple(cycle[(i + j) % k] for j in range(k))
    if k > 2 and fwd[1] > fwd[-1]:
        return (fwd[0],) + fwd[:0:-1]
    return fwd


def is_c4_free(g: Graph) -> bool:
    return find_quadrilateral(g) is None


def extremal_edge_bound(n: int) -> int:
    """``floor(n/4 * (1 + sqrt(4n - 3)))``, the C4-free edge-count ceiling."""
    if n <= 0:
        return 0
    # floor(n * sqrt(x)) == isqrt(n*n*x) exactly, and n is an integer
    return (n + isqrt(n * n * (4 * n - 3))) // 4
