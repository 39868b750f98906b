"""Maximum neighbourly sets (antimatchings) in quadrilateral-free graphs.

Two edges are neighbourly when they share an endpoint or some edge of the
graph joins an endpoint of one to an endpoint of the other. In a *special*
neighbourly set that joining edge must itself belong to the set.

For C4-free graphs a maximum special set is always one of

* ``E_u | E_v`` for an edge ``uv``,
* ``E_a | E_b | E_c`` for a triangle ``abc``,
* the five edges of a pentagon,

and a maximum general set is one of those or a *spoke* configuration: all of
``E_x`` plus two or three outer edges ``u_i v_i`` (``u_i`` distinct neighbours
of ``x``) whose outer endpoints are pairwise adjacent. Each family is
maximised separately in O(n**2) total.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

from .graph import Edge, Graph, GraphError
from .triangles import Triangle, enumerate_triangles


class ContractError(RuntimeError):
    """An internal precondition was violated."""


class Kind(str, Enum):
    EMPTY = "empty"
    EDGE_PAIR = "edge_pair"
    TRIANGLE = "triangle"
    PENTAGON = "pentagon"
    SPOKES = "spokes"
    ORACLE = "oracle"


# preference among equal-cardinality candidates; higher wins
_RANK = {Kind.EMPTY: 0, Kind.EDGE_PAIR: 1, Kind.PENTAGON: 2, Kind.TRIANGLE: 3, Kind.SPOKES: 4, Kind.ORACLE: 0}


@dataclass(frozen=True)
class Witness:
    """A neighbourly set together with the structure that produced it.

    ``anchor`` depends on ``kind``: the edge ``(u, v)`` for EDGE_PAIR, the
    sorted triangle for TRIANGLE, the canonical 5-cycle for PENTAGON and
    ``(x,)`` for SPOKES, whose ``outer`` holds the k outer spoke edges.
    """

    kind: Kind
    edges: tuple[Edge, ...]
    anchor: tuple[int, ...] = ()
    outer: tuple[Edge, ...] = field(default=())

    @property
    def cardinality(self) -> int:
        return len(self.edges)

    @classmethod
    def build(cls, kind: Kind, edges: Iterable[Sequence[int]], anchor=(), outer=()) -> "Witness":
        canon = sorted({Edge.of(a, b) for a, b in edges})
        return cls(kind, tuple(canon), tuple(anchor), tuple(sorted(Edge.of(*e) for e in outer)))

    def to_dict(self) -> dict:
        return {
            "cardinality": self.cardinality,
            "kind": self.kind.value,
            "edges": [list(e) for e in self.edges],
            "anchor": list(self.anchor),
            "outer": [list(e) for e in self.outer],
        }


EMPTY = Witness(Kind.EMPTY, ())


def _better(new: Optional[Witness], cur: Witness) -> bool:
    if new is None:
        return False
    if new.cardinality != cur.cardinality:
        return new.cardinality > cur.cardinality
    return _RANK[new.kind] > _RANK[cur.kind]


def _require_edge(g: Graph, e: Sequence[int]) -> tuple[int, int]:
    a, b = e
    if not g.is_edge(a, b):
        raise GraphError(f"({a}, {b}) is not an edge of the graph")
    return a, b


def _joined(g: Graph, a: int, b: int, c: int, d: int) -> bool:
    rows = g.matrix
    return bool(rows[a][c] or rows[a][d] or rows[b][c] or rows[b][d])


def are_neighbourly(g: Graph, e: Sequence[int], f: Sequence[int]) -> bool:
    a, b = _require_edge(g, e)
    c, d = _require_edge(g, f)
    if a in (c, d) or b in (c, d):
        return True
    return _joined(g, a, b, c, d)


def verify_neighbourly(g: Graph, edges: Iterable[Sequence[int]], special: bool = False) -> bool:
    """Check that every pair of ``edges`` is neighbourly.

    With ``special=True`` a pair with no common endpoint must be joined by an
    edge that is itself in ``edges``.
    """
    canon = sorted({Edge.of(*_require_edge(g, e)) for e in edges})
    members = set(canon)
    for (a, b), (c, d) in combinations(canon, 2):
        if a in (c, d) or b in (c, d):
            continue
        if special:
            if not any(Edge.of(x, y) in members for x, y in ((a, c), (a, d), (b, c), (b, d))):
                return False
        elif not _joined(g, a, b, c, d):
            return False
    return True


def _star_union(g: Graph, centres: Iterable[int]) -> list[Edge]:
    return [Edge.of(c, w) for c in centres for w in g.adjacency[c]]


def best_edge_pair(g: Graph) -> Witness:
    """``E_u | E_v`` for the edge maximising ``deg(u) + deg(v)``; size ``deg(u)+deg(v)-1``."""
    deg = g.degrees
    best = None
    best_sum = -1
    for u, v in g.edges:  # sorted, so strict '>' keeps the lexicographically first
        s = deg[u] + deg[v]
        if s > best_sum:
            best, best_sum = (u, v), s
    if best is None:
        return EMPTY
    return Witness.build(Kind.EDGE_PAIR, _star_union(g, best), anchor=best)


def best_triangle(g: Graph, triangles: Iterable[Triangle]) -> Optional[Witness]:
    """``E_a | E_b | E_c`` for the triangle of largest degree sum; size ``sum - 3``."""
    deg = g.degrees
    tris = (Triangle.of(*t) for t in triangles)
    best = min(tris, key=lambda t: (-(deg[t.a] + deg[t.b] + deg[t.c]), t), default=None)
    if best is None:
        return None
    return Witness.build(Kind.TRIANGLE, _star_union(g, best), anchor=best)


PENTAGON_MAX_DEGREE = 4


def find_pentagon(g: Graph) -> Optional[Witness]:
    """First 5-cycle met by depth-5 path search from each vertex in id order.

    Only paths whose vertices all exceed the start vertex are followed and the
    second vertex must be smaller than the last, so each pentagon is met once
    in canonical orientation. Requires maximum degree at most 4, which bounds
    the work per start vertex by a constant.
    """
    if g.max_degree() > PENTAGON_MAX_DEGREE:
        raise ContractError(f"find_pentagon needs max degree <= {PENTAGON_MAX_DEGREE}, got {g.max_degree()}")
    adj = g.adjacency
    has = g.has_edge
    for s in range(g.n):
        for v1 in adj[s]:
            if v1 < s:
                continue
            for v2 in adj[v1]:
                if v2 <= s:
                    continue
                for v3 in adj[v2]:
                    if v3 <= s or v3 == v1:
                        continue
                    for v4 in adj[v3]:
                        if v4 <= v1 or v4 == v2 or not has(v4, s):
                            continue
                        cycle = (s, v1, v2, v3, v4)
                        ring = [(cycle[i], cycle[(i + 1) % 5]) for i in range(5)]
                        return Witness.build(Kind.PENTAGON, ring, anchor=cycle)
    return None


def max_special(g: Graph) -> Witness:
    """Maximum-cardinality special neighbourly set of a C4-free graph."""
    best = best_edge_pair(g)
    tri = best_triangle(g, enumerate_triangles(g))
    if _better(tri, best):
        best = tri
    if best.cardinality < 5:
        # every edge now has deg(u) + deg(v) <= 5, so max degree <= 4
        pent = find_pentagon(g)
        if _better(pent, best):
            best = pent
    return best


def _two_spokes(g: Graph, x: int) -> Optional[Witness]:
    adj = g.adjacency
    has = g.has_edge
    # neighbours all have degree <= 2: at most one outer vertex per spoke
    spokes = [(u, w) for u in adj[x] for w in adj[u] if w != x]
    for (u1, v1), (u2, v2) in combinations(spokes, 2):
        if u1 == u2 or v1 == v2 or not has(v1, v2):
            continue
        if u1 == v2 and u2 == v1:
            continue  # both "spokes" are the same edge
        outer = ((u1, v1), (u2, v2))
        return Witness.build(Kind.SPOKES, _star_union(g, (x,)) + list(outer), anchor=(x,), outer=outer)
    return None


def _three_spokes(g: Graph, x: int) -> Optional[Witness]:
    adj = g.adjacency
    nx = set(adj[x])
    ring = sorted({w for u in adj[x] for w in adj[u] if w != x})
    if len(ring) < 3:
        return None
    sub = g.induced_subgraph(ring)
    # candidate spoke midpoints for each outer vertex
    mids = {v: [u for u in adj[v] if u in nx] for v in ring}
    for t in sorted(enumerate_triangles(sub)):
        vs = (ring[t.a], ring[t.b], ring[t.c])
        for us in product(*(mids[v] for v in vs)):
            if len(set(us)) < 3:
                continue
            outer = tuple(zip(us, vs))
            if len({Edge.of(*e) for e in outer}) < 3:
                continue
            return Witness.build(Kind.SPOKES, _star_union(g, (x,)) + list(outer), anchor=(x,), outer=outer)
    return None


def spoke_search(g: Graph, k: int, best_so_far: int) -> Optional[Witness]:
    """Best spoke configuration at any centre with exactly ``k`` length-two spokes.

    Centres are tried in decreasing degree order (smaller id first on ties).
    A centre ``x`` is skipped unless ``deg(x) + k > best_so_far`` and every
    neighbour of ``x`` has degree at most ``k``; a heavier neighbour ``y``
    already makes ``E_x | E_y`` at least as large. The first hit has size
    ``deg(x) + k``, which is maximal among the remaining centres.
    """
    if k not in (2, 3):
        raise ValueError(f"k must be 2 or 3, got {k}")
    deg = g.degrees
    search = _two_spokes if k == 2 else _three_spokes
    for x in sorted(range(g.n), key=lambda v: (-deg[v], v)):
        if deg[x] + k <= best_so_far:
            break
        if deg[x] < k or any(deg[u] > k for u in g.adjacency[x]):
            continue
        w = search(g, x)
        if w is not None:
            return w
    return None


def max_neighbourly(g: Graph) -> Witness:
    """Maximum-cardinality neighbourly set of a C4-free graph.

    Starts from the best special set and runs the k=3 then k=2 spoke searches
    when the maximum degree leaves room for them. Spoke witnesses win ties.
    """
    best = max_special(g)
    top = g.max_degree()
    for k in (3, 2):
        if best.cardinality <= top + k:
            w = spoke_search(g, k, best.cardinality - 1)
            if _better(w, best):
                best = w
    return best


@dataclass(frozen=True)
class StructureReport:
    """Which of the three classical containment conditions a neighbourly set meets.

    ``condition1``: a triangle ``(a, b, c)`` with every set edge touching it.
    ``condition2``: an edge ``(u, v)`` of the graph with every set edge touching it.
    ``min_outside``: ``(u, count)`` minimising the number of set edges not at ``u``;
    ``min_outside_vertices`` lists every vertex attaining that count.
    """

    condition1: Optional[tuple[int, int, int]]
    condition2: Optional[tuple[int, int]]
    min_outside: tuple[int, int]
    min_outside_vertices: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "condition1": list(self.condition1) if self.condition1 else None,
            "condition2": list(self.condition2) if self.condition2 else None,
            "min_outside": {"vertex": self.min_outside[0], "count": self.min_outside[1]},
            "min_outside_vertices": list(self.min_outside_vertices),
        }


def structure_report(g: Graph, edges: Iterable[Sequence[int]]) -> StructureReport:
    A = sorted({Edge.of(*e) for e in edges})
    if not verify_neighbourly(g, A):
        raise ValueError("edge set is not a neighbourly set of the graph")
    if g.n == 0:
        raise ValueError("structure report needs at least one vertex")

    def covered(centres) -> bool:
        return all(u in centres or v in centres for u, v in A)

    cond1 = None
    adj, has = g.adjacency, g.has_edge
    # every triangle, lexicographically, without assuming C4-freeness
    for a, b in g.edges:
        for c in adj[b]:
            if c > b and has(a, c) and covered((a, b, c)):
                cond1 = (a, b, c)
                break
        if cond1:
            break
    cond2 = next((tuple(e) for e in g.edges if covered(e)), None)
    outside = [sum(1 for e in A if u not in e) for u in range(g.n)]
    low = min(outside)
    at = tuple(u for u, c in enumerate(outside) if c == low)
    return StructureReport(cond1, cond2, (at[0], low), at)
