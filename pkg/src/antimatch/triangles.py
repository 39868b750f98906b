"""Triangle listing for quadrilateral-free graphs.

In a C4-free graph every edge lies on at most one triangle, so peeling
minimum-degree vertices and deleting each triangle's edges as soon as it is
reported never loses a triangle. Each peel step costs O(d_min**2) and d_min
is O(sqrt(n)), giving O(n**2) overall.
"""

from __future__ import annotations

from itertools import combinations
from typing import NamedTuple

from .graph import Graph


class Triangle(NamedTuple):
    a: int
    b: int
    c: int

    @classmethod
    def of(cls, x: int, y: int, z: int) -> "Triangle":
        a, b, c = sorted((x, y, z))
        return cls(a, b, c)

    def edges(self):
        return ((self.a, self.b), (self.a, self.c), (self.b, self.c))


class PeelState:
    """Private mutable view of a graph during peeling.

    ``live[v]`` is the set of neighbours of ``v`` still joined by an undeleted
    edge; it is the edge-presence overlay, so the input graph's matrix is
    never touched. ``buckets[d]`` holds the live vertices of live degree ``d``.
    """

    __slots__ = ("live", "deleted", "buckets", "low")

    def __init__(self, g: Graph):
        self.live = [set(nb) for nb in g.adjacency]
        self.deleted = [False] * g.n
        self.buckets: list[set[int]] = [set() for _ in range(g.max_degree() + 1)]
        for v, d in enumerate(g.degrees):
            self.buckets[d].add(v)
        self.low = 0

    def degree(self, v: int) -> int:
        return len(self.live[v])

    def pop_min(self) -> int:
        """Remove and return a live vertex of least degree (smallest id on ties)."""
        buckets = self.buckets
        while not buckets[self.low]:
            self.low += 1
        bucket = buckets[self.low]
        v = min(bucket)
        bucket.remove(v)
        self.deleted[v] = True
        return v

    def delete_edge(self, u: int, w: int) -> None:
        for x, y in ((u, w), (w, u)):
            d = len(self.live[x])
            self.live[x].discard(y)
            if not self.deleted[x]:
                self.buckets[d].remove(x)
                self.buckets[d - 1].add(x)
                if d - 1 < self.low:
                    self.low = d - 1

    def check(self) -> None:
        """Assert the bucket invariant; test helper."""
        seen = set()
        for d, bucket in enumerate(self.buckets):
            for v in bucket:
                assert not self.deleted[v] and len(self.live[v]) == d
                seen.add(v)
        assert seen == {v for v, dead in enumerate(self.deleted) if not dead}


def enumerate_triangles(g: Graph) -> list[Triangle]:
    """All triangles of a C4-free graph, each exactly once.

    Output order is peel order, then lexicographic neighbour-pair order. On a
    graph that contains a C4 the result is only guaranteed to be a subset of
    the triangles; callers are expected to have checked C4-freeness.
    """
    state = PeelState(g)
    live = state.live
    found: list[Triangle] = []
    for _ in range(g.n):
        v = state.pop_min()
        nv = live[v]
        for u, w in combinations(sorted(nv), 2):
            # an earlier hit may already have removed u or w from N(v)
            if u in nv and w in nv and w in live[u]:
                found.append(Triangle.of(u, v, w))
                state.delete_edge(u, w)
                state.delete_edge(u, v)
                state.delete_edge(v, w)
        for u in list(nv):
            state.delete_edge(v, u)
    return found


def naive_triangles(g: Graph) -> list[Triangle]:
    """Every triangle by brute-force triple scan, sorted lexicographically. O(n**3)."""
    has = g.has_edge
    return [
        Triangle(a, b, c)
        for a, b, c in combinations(range(g.n), 3)
        if has(a, b) and has(b, c) and has(a, c)
    ]
