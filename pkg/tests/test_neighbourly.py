from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antimatch.generators import cycle, fig19_set, fixture, path, small_corpus, star
from antimatch.graph import Edge, Graph, GraphError
from antimatch.neighbourly import (
    ContractError,
    Kind,
    are_neighbourly,
    best_edge_pair,
    best_triangle,
    find_pentagon,
    max_neighbourly,
    max_special,
    spoke_search,
    structure_report,
    verify_neighbourly,
)
from antimatch.oracle import oracle_max_neighbourly, oracle_max_special
from antimatch.triangles import enumerate_triangles

from conftest import complete
from graph_checks import edge_adjacency, longest_simple_path, paths_of_length_four, simple_cycles


def double_star():
    # centre 0 with leaves 2,3,4; centre 1 with leaves 5,6
    return Graph(7, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6)])


# -- predicates ------------------------------------------------------------


def test_are_neighbourly_paths():
    p5 = path(5)
    assert are_neighbourly(p5, (0, 1), (1, 2))
    assert are_neighbourly(p5, (0, 1), (2, 3))
    assert not are_neighbourly(p5, (0, 1), (3, 4))
    assert are_neighbourly(p5, (1, 0), (4, 3)) is False


def test_are_neighbourly_requires_edges():
    with pytest.raises(GraphError):
        are_neighbourly(path(5), (0, 2), (3, 4))


def test_verify_examples():
    c5 = cycle(5)
    assert verify_neighbourly(c5, c5.edges, special=True)
    p5 = path(5)
    assert not verify_neighbourly(p5, p5.edges)
    assert not verify_neighbourly(p5, p5.edges, special=True)
    tp = fixture("triangle_pendants")
    assert verify_neighbourly(tp, tp.edges, special=True)


def test_special_needs_member_joiner():
    p4 = path(4)
    assert verify_neighbourly(p4, [(0, 1), (2, 3)])
    assert not verify_neighbourly(p4, [(0, 1), (2, 3)], special=True)
    assert verify_neighbourly(p4, [(0, 1), (1, 2), (2, 3)], special=True)


def test_verify_rejects_non_edges():
    with pytest.raises(GraphError):
        verify_neighbourly(path(3), [(0, 2)])


# -- candidate families ------------------------------------------------------


def test_best_edge_pair():
    assert best_edge_pair(star(4)).cardinality == 4
    w = best_edge_pair(path(5))
    assert (w.cardinality, w.anchor) == (3, (1, 2))
    w = best_edge_pair(double_star())
    assert (w.cardinality, w.anchor) == (6, (0, 1))
    assert best_edge_pair(Graph(3)).kind is Kind.EMPTY


def test_best_triangle():
    assert best_triangle(path(4), []) is None
    assert best_triangle(complete(3), [(0, 1, 2)]).cardinality == 3
    g = fixture("triangle_pendants")
    w = best_triangle(g, enumerate_triangles(g))
    assert (w.cardinality, w.kind) == (6, Kind.TRIANGLE)


def test_find_pentagon():
    w = find_pentagon(cycle(5))
    assert (w.anchor, w.cardinality) == ((0, 1, 2, 3, 4), 5)
    w = find_pentagon(fixture("petersen"))
    assert w.cardinality == 5
    assert w.anchor == (0, 1, 2, 3, 4)
    tree = Graph(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
    assert find_pentagon(tree) is None


def test_find_pentagon_degree_contract():
    with pytest.raises(ContractError):
        find_pentagon(star(5))


def test_petersen_pentagon_count():
    # independent count of 5-cycles: every 5-subset, every cyclic order
    g = fixture("petersen")
    count = 0
    for vs in combinations(range(10), 5):
        first, rest = vs[0], vs[1:]
        for order in permutations(rest):
            if order[0] > order[-1]:
                continue
            ring = (first,) + order
            if all(g.has_edge(ring[i], ring[(i + 1) % 5]) for i in range(5)):
                count += 1
    assert count == 12


# -- solvers -----------------------------------------------------------------


@pytest.mark.parametrize(
    "name, special, general",
    [
        ("pentagon", 5, 5),
        ("petersen", 5, 5),
        ("triangle_pendants", 6, 6),
        ("pseudo_prism", 6, 6),
        ("three_spoke", 6, 6),
        ("two_spoke_leaf", 5, 5),
        ("fig19", 9, 9),
    ],
)
def test_fixture_values(name, special, general):
    g = fixture(name)
    assert max_special(g).cardinality == special == oracle_max_special(g).cardinality
    assert max_neighbourly(g).cardinality == general == oracle_max_neighbourly(g).cardinality


def test_named_kinds():
    assert max_special(cycle(5)).kind is Kind.PENTAGON
    w = max_special(fixture("fig19"))
    assert (w.kind, w.anchor) == (Kind.TRIANGLE, (1, 4, 7))
    w = max_neighbourly(fixture("three_spoke"))
    assert (w.kind, w.anchor) == (Kind.SPOKES, (0,))
    assert w.outer == (Edge(1, 4), Edge(2, 5), Edge(3, 6))


@pytest.mark.parametrize("k", range(1, 7))
def test_star(k):
    assert max_special(star(k)).cardinality == k
    assert max_neighbourly(star(k)).cardinality == k


def test_degenerate():
    assert max_neighbourly(Graph(0)).kind is Kind.EMPTY
    assert max_neighbourly(Graph(5)).cardinality == 0
    w = max_neighbourly(path(2))
    assert (w.kind, w.cardinality) == (Kind.EDGE_PAIR, 1)


def test_spoke_search():
    w = spoke_search(fixture("three_spoke"), 3, 0)
    assert w.cardinality == 6 and w.kind is Kind.SPOKES
    assert spoke_search(fixture("petersen"), 3, 0) is None
    w = spoke_search(fixture("two_spoke_leaf"), 2, 0)
    assert w.cardinality == 5
    assert w.outer == (Edge(1, 4), Edge(2, 5))
    with pytest.raises(ValueError):
        spoke_search(cycle(5), 4, 0)


def test_spoke_search_respects_threshold():
    g = fixture("three_spoke")
    assert spoke_search(g, 3, 6) is None
    assert spoke_search(g, 3, 5).cardinality == 6


def test_spoke_search_skips_heavy_neighbours():
    # x=0 spokes 1-4, 2-5 with edge 4-5, but neighbour 3 has degree 3
    g = Graph(8, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (4, 5), (3, 6), (3, 7)])
    w = spoke_search(g, 2, 0)
    # centres 0..3 all see a degree-3 neighbour; 4 has spokes 4-1-0 and 4-5-2 closed by edge 0-2
    assert w.anchor == (4,)
    assert w.outer == (Edge(0, 1), Edge(2, 5))
    assert w.cardinality == 4


def test_spokes_via_pendant_triangle_edges():
    # two spokes whose outer ends are themselves neighbours of x
    g = Graph(3, [(0, 1), (0, 2), (1, 2)])
    assert spoke_search(g, 2, 0) is None


def test_solvers_sound(corpus):
    for g in corpus:
        s = max_special(g)
        w = max_neighbourly(g)
        assert verify_neighbourly(g, s.edges, special=True)
        assert verify_neighbourly(g, w.edges)
        assert w.cardinality >= s.cardinality
        if g.m:
            assert s.cardinality >= g.max_degree()


def test_witness_shapes(corpus):
    for g in corpus:
        for w in (max_special(g), max_neighbourly(g)):
            assert w.cardinality == len(set(w.edges))
            centres = {
                Kind.EDGE_PAIR: w.anchor,
                Kind.TRIANGLE: w.anchor,
                Kind.SPOKES: w.anchor,
            }.get(w.kind)
            if w.kind is Kind.PENTAGON:
                ring = w.anchor
                assert set(w.edges) == {Edge.of(ring[i], ring[(i + 1) % 5]) for i in range(5)}
            elif w.kind is Kind.SPOKES:
                (x,) = w.anchor
                assert set(w.edges) == set(g.incident_edges(x)) | set(w.outer)
                assert w.cardinality == g.degrees[x] + len(w.outer)
                assert len(w.outer) in (2, 3)
            elif centres is not None:
                assert set(w.edges) == {e for c in centres for e in g.incident_edges(c)}


def test_equivalence_with_oracles(corpus_with_oracles):
    for g, gen, spec in corpus_with_oracles:
        assert max_neighbourly(g).cardinality == gen.cardinality, g.edges
        assert max_special(g).cardinality == spec.cardinality, g.edges


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6), st.randoms(use_true_random=False))
def test_relabel_invariance(idx, rnd):
    (g,) = small_corpus(1, base_seed=idx)
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert max_neighbourly(h).cardinality == max_neighbourly(g).cardinality
    assert max_special(h).cardinality == max_special(g).cardinality


# -- structural lemmas on exact maxima ---------------------------------------


def test_lemmas_on_oracle_witnesses(corpus_with_oracles):
    for g, gen, _ in corpus_with_oracles:
        A = set(gen.edges)
        adj = edge_adjacency(A)
        cycles = simple_cycles(adj)
        # no cycle longer than five
        assert all(len(c) <= 5 for c in cycles)
        # no simple path with five edges
        assert longest_simple_path(adj) <= 4
        # a triangle in A covers A
        for c in cycles:
            if len(c) == 3:
                assert all(u in c or v in c for u, v in A)
            if len(c) == 5:
                ring = {Edge.of(c[i], c[(i + 1) % 5]) for i in range(5)}
                assert not any((u in c or v in c) for u, v in A - ring)
        # length-4 paths: exactly one of the closing edge or the inner chord
        for a, b, c, d, e in paths_of_length_four(adj):
            assert g.has_edge(a, e) != g.has_edge(b, d)
        # single high-degree vertex: at most three length-two spokes
        high = [v for v in adj if len(adj[v]) >= 3]
        if len(high) == 1:
            (x,) = high
            assert sum(1 for u in adj[x] if len(adj[u]) >= 2) <= 3


def test_lemma_helpers():
    c6 = edge_adjacency(cycle(6).edges)
    found = simple_cycles(c6)
    assert {len(c) for c in found} == {6}
    assert len({frozenset(c) for c in found}) == 1
    assert longest_simple_path(edge_adjacency(path(6).edges)) == 5


# -- structure report --------------------------------------------------------


def test_report_fig19():
    g = fixture("fig19")
    rep = structure_report(g, fig19_set())
    assert rep.condition1 is None
    assert rep.condition2 is None
    assert rep.min_outside[1] == 5
    assert rep.min_outside_vertices == (1, 4, 7)


def test_report_small():
    rep = structure_report(complete(3), complete(3).edges)
    assert rep.condition1 == (0, 1, 2)
    rep = structure_report(star(3), star(3).edges)
    assert rep.condition2 is not None
    assert rep.min_outside == (0, 0)


def test_report_rejects_non_neighbourly():
    with pytest.raises(ValueError):
        structure_report(path(5), path(5).edges)


def test_report_witnesses_recheck(corpus_with_oracles):
    for g, gen, _ in corpus_with_oracles[:300]:
        if not gen.edges:
            continue
        rep = structure_report(g, gen.edges)
        if rep.condition1:
            assert all(u in rep.condition1 or v in rep.condition1 for u, v in gen.edges)
        if rep.condition2:
            assert g.has_edge(*rep.condition2)
            assert all(u in rep.condition2 or v in rep.condition2 for u, v in gen.edges)
        u, count = rep.min_outside
        assert count == sum(1 for e in gen.edges if u not in e)
