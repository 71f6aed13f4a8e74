"""Multigraphs, orientations, gains, and their incidence matrices.

Edges are stored as ordered ``(tail, head)`` pairs.  The stored order of
the edge list is the default linear ordering used for activities, and the
stored direction is the default orientation.  Loops and parallel edges are
allowed everywhere.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import NamedTuple, Sequence

from .linalg import ExactMatrix, format_fraction, to_fraction


class NotGeneralizedIncidenceError(ValueError):
    """A column has three or more nonzero entries."""


class LoopReorientationWarning(UserWarning):
    """Reorienting a loop does nothing."""


@dataclass(frozen=True)
class Multigraph:
    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple((int(t), int(h)) for t, h in self.edges)
        for t, h in edges:
            if not (0 <= t < self.num_vertices and 0 <= h < self.num_vertices):
                raise ValueError(f"edge ({t}, {h}) has an endpoint outside 0..{self.num_vertices - 1}")
        object.__setattr__(self, "edges", edges)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def is_loop(self, e: int) -> bool:
        t, h = self.edges[e]
        return t == h

    def loops(self) -> list[int]:
        return [e for e in range(self.num_edges) if self.is_loop(e)]

    def subgraph(self, edge_indices: Sequence[int]) -> "Multigraph":
        return Multigraph(self.num_vertices, tuple(self.edges[e] for e in edge_indices))

    def is_connected(self) -> bool:
        if self.num_vertices == 0:
            return True
        parent = list(range(self.num_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for t, h in self.edges:
            parent[find(t)] = find(h)
        return len({find(v) for v in range(self.num_vertices)}) == 1

    def to_json(self) -> dict:
        return {"vertices": self.num_vertices, "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class Orientation:
    """Per-edge flip flags; a flipped edge runs head -> tail."""

    flips: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "flips", tuple(bool(f) for f in self.flips))

    @classmethod
    def default(cls, num_edges: int) -> "Orientation":
        return cls((False,) * num_edges)

    @classmethod
    def from_bits(cls, bits: int, num_edges: int) -> "Orientation":
        return cls(tuple(bool(bits >> e & 1) for e in range(num_edges)))

    def __len__(self):
        return len(self.flips)

    def toggled(self, e: int) -> "Orientation":
        flips = list(self.flips)
        flips[e] = not flips[e]
        return Orientation(tuple(flips))


@dataclass(frozen=True)
class GainAssignment:
    gains: tuple[Fraction, ...]

    def __post_init__(self):
        gains = tuple(to_fraction(g) for g in self.gains)
        if any(g == 0 for g in gains):
            raise ValueError("gains must be nonzero")
        object.__setattr__(self, "gains", gains)

    @classmethod
    def constant(cls, value, num_edges: int) -> "GainAssignment":
        return cls((to_fraction(value),) * num_edges)

    def __len__(self):
        return len(self.gains)

    def __getitem__(self, e: int) -> Fraction:
        return self.gains[e]


def _check_lengths(G: Multigraph, sigma: Orientation | None, gamma: GainAssignment | None):
    if sigma is not None and len(sigma) != G.num_edges:
        raise ValueError(f"orientation has {len(sigma)} flags for {G.num_edges} edges")
    if gamma is not None and len(gamma) != G.num_edges:
        raise ValueError(f"gain assignment has {len(gamma)} values for {G.num_edges} edges")


def oriented_ends(G: Multigraph, sigma: Orientation | None, e: int) -> tuple[int, int]:
    """``(tail, head)`` of edge ``e`` after applying ``sigma``."""
    t, h = G.edges[e]
    if sigma is not None and sigma.flips[e]:
        return h, t
    return t, h


def directed_incidence(G: Multigraph, sigma: Orientation | None = None) -> ExactMatrix:
    """``-1`` at the tail, ``+1`` at the head; loop columns are zero."""
    _check_lengths(G, sigma, None)
    cols = []
    for e in range(G.num_edges):
        col = [0] * G.num_vertices
        t, h = oriented_ends(G, sigma, e)
        if t != h:
            col[t], col[h] = -1, 1
        cols.append(col)
    return ExactMatrix.from_columns(cols, G.num_vertices)


def undirected_incidence(G: Multigraph) -> ExactMatrix:
    """``1`` at both endpoints; a loop gets a single entry ``2``."""
    cols = []
    for t, h in G.edges:
        col = [0] * G.num_vertices
        if t == h:
            col[t] = 2
        else:
            col[t], col[h] = 1, 1
        cols.append(col)
    return ExactMatrix.from_columns(cols, G.num_vertices)


def gain_incidence(G: Multigraph, sigma: Orientation | None, gamma: GainAssignment) -> ExactMatrix:
    """``-1`` at the tail, ``gamma(e)`` at the head, ``gamma(e) - 1`` for a loop."""
    _check_lengths(G, sigma, gamma)
    cols = []
    for e in range(G.num_edges):
        col = [Fraction(0)] * G.num_vertices
        t, h = oriented_ends(G, sigma, e)
        g = gamma[e]
        if t == h:
            col[t] = g - 1
        else:
            col[t], col[h] = Fraction(-1), g
        cols.append(col)
    return ExactMatrix.from_columns(cols, G.num_vertices)


def reorient_edge(
    G: Multigraph, sigma: Orientation, gamma: GainAssignment, e: int
) -> tuple[Orientation, GainAssignment]:
    """Reverse edge ``e`` and invert its gain.

    The circulation algebra is unchanged up to the substitution
    ``x_e -> -x_e / gamma(e)``.  Loops are returned untouched with a
    :class:`LoopReorientationWarning`.
    """
    _check_lengths(G, sigma, gamma)
    if G.is_loop(e):
        warnings.warn(f"edge {e} is a loop; reorienting it has no effect", LoopReorientationWarning)
        return sigma, gamma
    gains = list(gamma.gains)
    gains[e] = 1 / gains[e]
    return sigma.toggled(e), GainAssignment(tuple(gains))


class GainGraph(NamedTuple):
    graph: Multigraph
    orientation: Orientation
    gains: GainAssignment
    scales: tuple[Fraction, ...]


def gain_graph_from_matrix(A: ExactMatrix) -> GainGraph:
    """Read a generalized incidence matrix as a directed gain graph.

    A column with two nonzero entries in rows ``v < u`` becomes the edge
    ``v -> u`` with gain ``-A[u, e] / A[v, e]``; a single entry ``a`` at row
    ``v`` becomes a loop with gain ``a + 1``.  ``scales[e]`` satisfies
    ``A[:, e] == scales[e] * gain_incidence(...)[:, e]``.
    """
    edges, gains, scales = [], [], []
    for e in range(A.cols):
        col = A.column(e)
        support = [v for v, a in enumerate(col) if a != 0]
        if len(support) > 2:
            raise NotGeneralizedIncidenceError(
                f"column {e} has {len(support)} nonzero entries"
            )
        if len(support) == 2:
            v, u = support
            edges.append((v, u))
            gains.append(-col[u] / col[v])
            scales.append(-col[v])
        elif len(support) == 1:
            (v,) = support
            a = col[v]
            edges.append((v, v))
            if a == -1:
                # a + 1 would be a zero gain; flip the column sign instead
                gains.append(Fraction(2))
                scales.append(Fraction(-1))
            else:
                gains.append(a + 1)
                scales.append(Fraction(1))
        else:
            if A.rows == 0:
                raise NotGeneralizedIncidenceError("zero column in a matrix with no rows")
            # balanced loop: its gain incidence column is zero
            edges.append((0, 0))
            gains.append(Fraction(1))
            scales.append(Fraction(1))
    G = Multigraph(A.rows, tuple(edges))
    return GainGraph(G, Orientation.default(A.cols), GainAssignment(tuple(gains)), tuple(scales))


def is_generalized_incidence(A: ExactMatrix) -> bool:
    return all(sum(1 for a in A.column(e) if a) <= 2 for e in range(A.cols))


# -- named graphs ---------------------------------------------------------


def cycle_graph(n: int) -> Multigraph:
    """``C_n`` with edges ``i -> i+1 (mod n)``; ``n = 1`` is a loop, ``n = 2`` a digon."""
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def path_graph(num_edges: int) -> Multigraph:
    return Multigraph(num_edges + 1, tuple((i, i + 1) for i in range(num_edges)))


def bouquet(num_loops: int) -> Multigraph:
    return Multigraph(1, ((0, 0),) * num_loops)


def figure_eight(a: int = 3, b: int = 3) -> Multigraph:
    """Cycles of lengths ``a`` and ``b`` glued at vertex 0."""
    edges = []
    first = [0] + list(range(1, a)) + [0]
    edges += [(first[i], first[i + 1]) for i in range(a)]
    second = [0] + list(range(a, a + b - 1)) + [0]
    edges += [(second[i], second[i + 1]) for i in range(b)]
    return Multigraph(a + b - 1, tuple(edges))


def handcuff(a: int = 3, b: int = 3, bridge: int = 1) -> Multigraph:
    """Vertex-disjoint cycles of lengths ``a`` and ``b`` joined by a path of ``bridge`` edges.

    Edges are listed as the first cycle, then the bridge, then the second cycle.
    """
    left = list(range(a))
    path_inner = list(range(a, a + bridge - 1))
    start2 = a + bridge - 1
    right = list(range(start2, start2 + b))
    edges = [(left[i], left[(i + 1) % a]) for i in range(a)]
    walk = [left[0]] + path_inner + [right[0]]
    edges += [(walk[i], walk[i + 1]) for i in range(bridge)]
    edges += [(right[i], right[(i + 1) % b]) for i in range(b)]
    return Multigraph(start2 + b, tuple(edges))


def named_graph(name: str) -> Multigraph:
    table = {
        "K3": lambda: complete_graph(3),
        "K4": lambda: complete_graph(4),
        "C4": lambda: cycle_graph(4),
        "C5": lambda: cycle_graph(5),
        "figure-eight": lambda: figure_eight(3, 3),
        "handcuff": lambda: handcuff(3, 3, 1),
        "bouquet": lambda: bouquet(3),
    }
    try:
        return table[name]()
    except KeyError:
        raise ValueError(f"unknown named graph {name!r}; choose from {sorted(table)}") from None


NAMED_GRAPHS = ("K3", "C4", "C5", "figure-eight", "handcuff", "bouquet")


# -- serialization ----------------------------------------------------------


def graph_to_json(
    G: Multigraph, sigma: Orientation | None = None, gamma: GainAssignment | None = None
) -> dict:
    out = G.to_json()
    if gamma is not None:
        out["gains"] = [format_fraction(g) for g in gamma.gains]
    if sigma is not None and any(sigma.flips):
        out["flips"] = list(sigma.flips)
    return out


def graph_from_json(obj) -> tuple[Multigraph, Orientation, GainAssignment | None]:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        edges = tuple((int(t), int(h)) for t, h in obj["edges"])
        G = Multigraph(int(obj["vertices"]), edges)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed graph object: {exc}") from exc
    sigma = Orientation(tuple(obj["flips"])) if "flips" in obj else Orientation.default(len(edges))
    gamma = GainAssignment(tuple(obj["gains"])) if "gains" in obj else None
    _check_lengths(G, sigma, gamma)
    return G, sigma, gamma


def parse_edge_list(text: str) -> tuple[Multigraph, Orientation, GainAssignment | None]:
    """Parse ``tail head [gain]`` lines; ``#`` starts a comment.

    The vertex count is one more than the largest endpoint.  Gains must be
    given on every line or on none.
    """
    edges, gains = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ValueError(f"line {lineno}: expected 'tail head [gain]', got {raw!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
            if len(parts) == 3:
                gains.append(Fraction(parts[2]))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
    if gains and len(gains) != len(edges):
        raise ValueError("gains must be given for every edge or for none")
    n = max((max(t, h) for t, h in edges), default=-1) + 1
    G = Multigraph(n, tuple(edges))
    return G, Orientation.default(len(edges)), GainAssignment(tuple(gains)) if gains else None


def load_graph(path: str | Path) -> tuple[Multigraph, Orientation, GainAssignment | None]:
    text = Path(path).read_text()
    return loads_graph(text)


def loads_graph(text: str) -> tuple[Multigraph, Orientation, GainAssignment | None]:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return graph_from_json(json.loads(text))
    return parse_edge_list(text)
