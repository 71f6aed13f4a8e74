"""Small test corpora: all connected multigraphs up to a size, plus random gain graphs."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from typing import NamedTuple, Sequence

from .graphs import (
    NAMED_GRAPHS,
    GainAssignment,
    Multigraph,
    Orientation,
    named_graph,
)

GAIN_POOL: tuple[Fraction, ...] = tuple(
    Fraction(x) for x in ("1", "-1", "2", "-2", "3", "-3", "1/2", "3", "5")
)


class CorpusEntry(NamedTuple):
    name: str
    graph: Multigraph


def _canonical(n: int, edges: Sequence[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    best = None
    for perm in permutations(range(n)):
        relabeled = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
        if best is None or relabeled < best:
            best = relabeled
    return best


@lru_cache(maxsize=None)
def connected_multigraphs(max_vertices: int = 4, max_edges: int = 6) -> tuple[Multigraph, ...]:
    """Connected multigraphs (loops and parallel edges allowed), one per isomorphism class.

    Includes the single vertex with no edges.  Graphs are listed by vertex
    count, edge count, then canonical edge list.
    """
    out = []
    for n in range(1, max_vertices + 1):
        slots = [(a, b) for a in range(n) for b in range(a, n)]
        seen = set()
        for m in range(max(n - 1, 0), max_edges + 1):
            for edges in combinations_with_replacement(slots, m):
                G = Multigraph(n, edges)
                if not G.is_connected():
                    continue
                key = _canonical(n, edges)
                if key in seen:
                    continue
                seen.add(key)
                out.append(Multigraph(n, key))
    out.sort(key=lambda G: (G.num_vertices, G.num_edges, G.edges))
    return tuple(out)


def builtin_corpus(max_vertices: int = 4, max_edges: int = 6, named: bool = True) -> list[CorpusEntry]:
    entries = [
        CorpusEntry(f"v{G.num_vertices}e{G.num_edges}-{i:04d}", G)
        for i, G in enumerate(connected_multigraphs(max_vertices, max_edges))
    ]
    if named:
        entries += [CorpusEntry(name, named_graph(name)) for name in NAMED_GRAPHS]
    return entries


def random_orientation(rng: random.Random, num_edges: int) -> Orientation:
    return Orientation(tuple(rng.random() < 0.5 for _ in range(num_edges)))


def random_gains(rng: random.Random, num_edges: int, pool: Sequence[Fraction] = GAIN_POOL) -> GainAssignment:
    return GainAssignment(tuple(rng.choice(pool) for _ in range(num_edges)))


def random_multigraph(rng: random.Random, max_vertices: int = 5, max_edges: int = 7) -> Multigraph:
    n = rng.randint(1, max_vertices)
    m = rng.randint(1, max_edges)
    return Multigraph(n, tuple((rng.randrange(n), rng.randrange(n)) for _ in range(m)))


def random_gain_graphs(
    seed: int, trials: int, max_vertices: int = 5, max_edges: int = 7, pool: Sequence[Fraction] = GAIN_POOL
) -> list[tuple[Multigraph, GainAssignment]]:
    rng = random.Random(seed)
    out = []
    for _ in range(trials):
        G = random_multigraph(rng, max_vertices, max_edges)
        out.append((G, random_gains(rng, G.num_edges, pool)))
    return out
