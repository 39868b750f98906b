"""Exact brute-force reference solvers for small graphs.

A set of edges is neighbourly exactly when it is a clique of the graph whose
vertices are the edges of G, two of them adjacent when they are neighbourly
(the square of the line graph). Maximum neighbourly sets are therefore
maximum cliques there, found by branch and bound with a greedy colouring
bound. Special sets are cliques too, but the property is not inherited by
subsets, so every clique that could still beat the incumbent is visited and
tested.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Edge, Graph
from .neighbourly import Kind, Witness, are_neighbourly, verify_neighbourly

ORACLE_MAX_EDGES = 64
ORACLE_SPECIAL_MAX_EDGES = 20
BRUTE_FORCE_MAX_EDGES = 12


class OracleLimitError(ValueError):
    """The graph has too many edges for an exponential-time oracle."""


@dataclass(frozen=True)
class EdgeIndexedGraph:
    """Neighbourly relation on the edges of a source graph.

    ``adjacency[i]`` is a bitmask whose bit ``j`` is set iff edges ``i`` and
    ``j`` are distinct and neighbourly.
    """

    edge_vertices: tuple[Edge, ...]
    adjacency: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.edge_vertices)

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)

    def pair_count(self) -> int:
        return sum(bin(a).count("1") for a in self.adjacency) // 2


def line_graph_square(g: Graph) -> EdgeIndexedGraph:
    edges = g.edges
    adj = [0] * len(edges)
    for i, j in combinations(range(len(edges)), 2):
        if are_neighbourly(g, edges[i], edges[j]):
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return EdgeIndexedGraph(edges, tuple(adj))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _colour_order(P: int, adj, rank) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring of ``P``; returns vertices by colour and colour bounds."""
    order, bounds = [], []
    remaining = sorted(_bits(P), key=rank.__getitem__)
    colour = 0
    while remaining:
        colour += 1
        taken, rest = 0, []
        for v in remaining:
            if adj[v] & taken:
                rest.append(v)
            else:
                taken |= 1 << v
                order.append(v)
                bounds.append(colour)
        remaining = rest
    return order, bounds


class _CliqueSearch:
    def __init__(self, lg: EdgeIndexedGraph, accept=None):
        self.adj = lg.adjacency
        degs = [bin(a).count("1") for a in self.adj]
        # higher derived degree first, then lower edge id
        by_priority = sorted(range(lg.size), key=lambda v: (-degs[v], v))
        self.rank = [0] * lg.size
        for r, v in enumerate(by_priority):
            self.rank[v] = r
        self.accept = accept
        self.best: list[int] = []

    def run(self) -> list[int]:
        if self.adj:
            self._expand([], (1 << len(self.adj)) - 1)
        return self.best

    def _expand(self, R: list[int], P: int) -> None:
        order, bounds = _colour_order(P, self.adj, self.rank)
        for i in range(len(order) - 1, -1, -1):
            if len(R) + bounds[i] <= len(self.best):
                return
            v = order[i]
            Rv = R + [v]
            if len(Rv) > len(self.best) and (self.accept is None or self.accept(Rv)):
                self.best = Rv
            NP = P & self.adj[v]
            if NP:
                self._expand(Rv, NP)
            P &= ~(1 << v)


def _check_limit(g: Graph, limit: int) -> None:
    if g.m > limit:
        raise OracleLimitError(f"oracle limited to {limit} edges, graph has {g.m}")


def oracle_max_neighbourly(g: Graph, limit: int = ORACLE_MAX_EDGES) -> Witness:
    """Maximum neighbourly set by exact maximum clique search."""
    _check_limit(g, limit)
    lg = line_graph_square(g)
    clique = _CliqueSearch(lg).run()
    return Witness.build(Kind.ORACLE, [lg.edge_vertices[i] for i in clique])


def oracle_max_special(g: Graph, limit: int = ORACLE_SPECIAL_MAX_EDGES) -> Witness:
    """Maximum special neighbourly set by exhaustive clique enumeration."""
    _check_limit(g, limit)
    lg = line_graph_square(g)
    ev = lg.edge_vertices
    index = {e: i for i, e in enumerate(ev)}
    # for each disjoint neighbourly pair, the bitmask of edges that join them
    joiners: dict[tuple[int, int], int] = {}
    for i, j in combinations(range(lg.size), 2):
        (a, b), (c, d) = ev[i], ev[j]
        if a in (c, d) or b in (c, d) or not lg.adjacent(i, j):
            continue
        mask = 0
        for x, y in ((a, c), (a, d), (b, c), (b, d)):
            k = index.get(Edge.of(x, y))
            if k is not None:
                mask |= 1 << k
        joiners[i, j] = mask

    def special(R: list[int]) -> bool:
        members = 0
        for v in R:
            members |= 1 << v
        for i, j in combinations(sorted(R), 2):
            need = joiners.get((i, j))
            if need is not None and not need & members:
                return False
        return True

    clique = _CliqueSearch(lg, accept=special).run()
    return Witness.build(Kind.ORACLE, [ev[i] for i in clique])


def brute_force_max(g: Graph, special: bool = False, limit: int = BRUTE_FORCE_MAX_EDGES) -> Witness:
    """Largest edge subset passing :func:`verify_neighbourly`, by plain enumeration.

    Subsets are tried in decreasing size; the first that passes is returned.
    """
    _check_limit(g, limit)
    edges = g.edges
    for size in range(len(edges), 0, -1):
        for subset in combinations(edges, size):
            if verify_neighbourly(g, subset, special=special):
                return Witness.build(Kind.ORACLE, subset)
    return Witness.build(Kind.ORACLE, ())
