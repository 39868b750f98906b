import itertools

import pytest

from antimatch.generators import small_corpus
from antimatch.graph import Graph


@pytest.fixture(scope="session")
def corpus():
    return small_corpus()


@pytest.fixture(scope="session")
def corpus_with_oracles(corpus):
    from antimatch.oracle import oracle_max_neighbourly, oracle_max_special

    return [(g, oracle_max_neighbourly(g), oracle_max_special(g)) for g in corpus]


def has_c4_bruteforce(g: Graph) -> bool:
    """Any 4 vertices carrying one of their three possible 4-cycles."""
    has = g.has_edge
    for a, b, c, d in itertools.combinations(range(g.n), 4):
        for p, q, r, s in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            if has(p, q) and has(q, r) and has(r, s) and has(s, p):
                return True
    return False


def complete(n):
    return Graph(n, itertools.combinations(range(n), 2))
