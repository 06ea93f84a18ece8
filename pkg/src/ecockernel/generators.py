"""Seeded instance generators.

Randomness comes from SplitMix64 so that a ``(spec, seed)`` pair yields the
same graph on every platform. Probabilities are exact rationals; a draw
``u`` succeeds when ``u / 2**64 < p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, Instance

_MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection, no modulo bias."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            u = self.next_u64()
            if u < limit:
                return u % bound

    def bernoulli(self, p: Fraction) -> bool:
        return self.next_u64() * p.denominator < p.numerator << 64


def as_probability(p) -> Fraction:
    q = Fraction(p)
    if not 0 <= q <= 1:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    return q


@dataclass(frozen=True)
class GenSpec:
    kind: str
    size: int  # n for random instances, number of blocks for planted ones
    l: int
    k: int
    edge_prob: Fraction
    seed: int

    def __post_init__(self) -> None:
        if self.kind not in ("planted", "random"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.size < 0 or self.k < 0 or self.l < 1:
            raise ValueError("size and k must be non-negative and l positive")
        object.__setattr__(self, "edge_prob", as_probability(self.edge_prob))

    def build(self) -> Instance:
        if self.kind == "planted":
            return gen_planted(self.size, self.l, self.k, self.edge_prob, self.seed)
        return gen_random(self.size, self.edge_prob, self.l, self.k, self.seed)


def gen_planted(num_components: int, l: int, k: int, edge_prob, seed: int) -> Instance:
    """Yes-instance: ``num_components`` connected ``l``-blocks plus ``k`` solution vertices.

    Blocks occupy vertices ``0..num_components*l - 1`` in order, the solution
    vertices come last. Each block is a random recursive tree with extra
    internal edges; each pair involving a solution vertex becomes an edge
    with probability ``edge_prob``.
    """
    if num_components < 0 or k < 0 or l < 1:
        raise ValueError("num_components and k must be non-negative and l positive")
    p = as_probability(edge_prob)
    rng = SplitMix64(seed)
    edges = set()
    for b in range(num_components):
        base = b * l
        for i in range(1, l):
            edges.add((base + rng.below(i), base + i))
        for i in range(l):
            for j in range(i + 1, l):
                if (base + i, base + j) not in edges and rng.bernoulli(p):
                    edges.add((base + i, base + j))
    first = num_components * l
    n = first + k
    for s in range(first, n):
        for v in range(s):
            if rng.bernoulli(p):
                edges.add((v, s))
    return Instance(Graph.from_edges(n, sorted(edges)), k, l)


def gen_random(n: int, edge_prob, l: int, k: int, seed: int) -> Instance:
    """``G(n, p)`` graph with budget ``k``; no feasibility guarantee."""
    if n < 0 or k < 0 or l < 1:
        raise ValueError("n and k must be non-negative and l positive")
    p = as_probability(edge_prob)
    rng = SplitMix64(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.bernoulli(p)]
    return Instance(Graph.from_edges(n, edges), k, l)
