"""Seeded C4-free random graphs and named fixture graphs.

Randomness comes from :class:`SplitMix64` rather than :mod:`random` so that a
``(n, target_m, seed, max_attempts)`` tuple names the same graph in any
language:

    state  <- (state + 0x9E3779B97F4A7C15) mod 2**64
    z      <- state
    z      <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2**64
    z      <- (z ^ (z >> 27)) * 0x94D049BB133111EB mod 2**64
    output    z ^ (z >> 31)

``below(b)`` maps one output ``x`` to ``(x * b) >> 64``. Each proposal draws
``u = below(n)`` then ``w = below(n - 1)`` and uses ``v = w + (w >= u)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, extremal_edge_bound, format_edge_list

MASK64 = (1 << 64) - 1


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        return (self.next() * bound) >> 64


@dataclass(frozen=True)
class GenConfig:
    n: int
    target_m: int
    seed: int = 0
    max_attempts: Optional[int] = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.target_m < 0:
            raise ValueError(f"target_m must be >= 0, got {self.target_m}")

    @property
    def attempts(self) -> int:
        if self.max_attempts is not None:
            return self.max_attempts
        return 1000 + 50 * self.target_m


def gen_c4free(cfg: GenConfig) -> Graph:
    """Grow a C4-free graph by rejection sampling uniform non-edges.

    A proposed pair ``uv`` is kept unless the graph already holds a path
    ``u - x - y - v`` (which the new edge would close into a 4-cycle) or two
    common neighbours of ``u`` and ``v``. Stops at ``target_m`` edges or once
    the attempt budget is spent; ``meta`` records the shortfall.
    """
    n = cfg.n
    rng = SplitMix64(cfg.seed)
    masks = [0] * n
    nbrs: list[list[int]] = [[] for _ in range(n)]
    edges = []
    budget = cfg.attempts
    attempts = 0
    while len(edges) < cfg.target_m and attempts < budget and n > 1:
        attempts += 1
        u = rng.below(n)
        v = rng.below(n - 1)
        if v >= u:
            v += 1
        if masks[u] >> v & 1:
            continue
        mv = masks[v]
        common = masks[u] & mv
        if common & (common - 1):
            continue
        # since uv is absent, masks[x] & mv never contains u or x
        if any(masks[x] & mv for x in nbrs[u]):
            continue
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        nbrs[u].append(v)
        nbrs[v].append(u)
        edges.append((u, v))
    meta = {
        "generator": "c4free",
        "seed": cfg.seed,
        "target_m": cfg.target_m,
        "attempts": attempts,
        "shortfall": cfg.target_m - len(edges),
    }
    return Graph(n, edges, meta=meta)


def small_corpus(count: int = 1000, base_seed: int = 0, max_n: int = 12, max_m: int = 20) -> list[Graph]:
    """Deterministic list of small C4-free graphs for oracle comparisons.

    Graph ``i`` draws ``n`` uniformly from ``3..max_n`` and, on even ``i``,
    aims for the densest allowed graph (``min(max_m, bound(n))`` edges);
    on odd ``i`` the target is uniform in ``0..min(max_m, bound(n))``.
    """
    graphs = []
    for i in range(count):
        rng = SplitMix64(base_seed + i)
        n = 3 + rng.below(max_n - 2)
        cap = min(max_m, extremal_edge_bound(n))
        target = cap if i % 2 == 0 else rng.below(cap + 1)
        graphs.append(gen_c4free(GenConfig(n, target, seed=rng.next())))
    return graphs


def density_target(n: int, density: float) -> int:
    """Edge count equal to ``density`` times the C4-free extremal bound."""
    return int(density * extremal_edge_bound(n))


# Letters used by the counterexample graph; there are no vertices j and k.
FIG19_LABELS = "abcdefghilm"


def _lettered(labels: str, pairs: str) -> list[tuple[int, int]]:
    idx = {c: i for i, c in enumerate(labels)}
    return [(idx[p[0]], idx[p[1]]) for p in pairs.split()]


def fig19() -> Graph:
    """Three length-two paths abc, def, ghi with an extra edge lm.

    The midpoints b, e, h form a triangle and lm is tied to every path by
    two edges. The graph is C4-free.
    """
    pairs = "ab bc de ef gh hi lm be bh eh al cm dl fm gl im"
    return Graph(len(FIG19_LABELS), _lettered(FIG19_LABELS, pairs), meta={"labels": FIG19_LABELS})


def fig19_set() -> list[tuple[int, int]]:
    """The 7-edge neighbourly set {ab, bc, de, ef, gh, hi, lm} of :func:`fig19`."""
    return _lettered(FIG19_LABELS, "ab bc de ef gh hi lm")


def path(k: int) -> Graph:
    """Path on ``k`` vertices ``0 - 1 - ... - k-1``."""
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def pentagon() -> Graph:
    return cycle(5)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + inner + [(i, i + 5) for i in range(5)])


def triangle_pendants() -> Graph:
    """Triangle 0-1-2 with pendant vertices 3, 4, 5 hanging off 0, 1, 2."""
    return Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


def pseudo_prism() -> Graph:
    """Pentagon a-b-c-d-e plus a', b' with edges aa', a'e, a'b', cb'."""
    labels = "abcdeAB"  # A = a', B = b'
    return Graph(7, _lettered(labels, "ab bc cd de ea aA Ae AB cB"))


def three_spoke() -> Graph:
    """Centre x with spokes x-a-a', x-b-b', x-c-c' and triangle a'b'c'.

    Labels: x=0, a=1, b=2, c=3, a'=4, b'=5, c'=6.
    """
    return Graph(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6), (4, 5), (5, 6), (4, 6)])


def two_spoke_leaf() -> Graph:
    """Centre x with neighbours a, b, l; spokes a-a', b-b'; edge a'b'; l a leaf.

    Labels: x=0, a=1, b=2, l=3, a'=4, b'=5.
    """
    return Graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (4, 5)])


FIXTURES = {
    "pentagon": pentagon,
    "petersen": petersen,
    "triangle_pendants": triangle_pendants,
    "pseudo_prism": pseudo_prism,
    "three_spoke": three_spoke,
    "two_spoke_leaf": two_spoke_leaf,
    "fig19": fig19,
}
PARAMETRIC = {"path": path, "star": star}


def fixture_names() -> list[str]:
    return sorted(FIXTURES) + [f"{k}(k)" for k in sorted(PARAMETRIC)]


def fixture(name: str) -> Graph:
    """Named graph. ``path(k)``/``star(k)`` also accept ``path:k`` or ``path5``."""
    key = name.strip()
    if key in FIXTURES:
        return FIXTURES[key]()
    for prefix, build in PARAMETRIC.items():
        if key.startswith(prefix):
            arg = key[len(prefix):].strip("():")
            if arg.isdigit():
                return build(int(arg))
    raise KeyError(f"unknown fixture {name!r}; known: {', '.join(fixture_names())}")


def fixture_text(name: str) -> str:
    return format_edge_list(fixture(name), comment=f"fixture {name}")
