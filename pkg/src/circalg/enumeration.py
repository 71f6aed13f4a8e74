"""Brute-force combinatorics on edge subsets of a multigraph.

Edge subsets are plain ``int`` bitmasks (bit ``e`` set means edge ``e`` is
present).  Nothing in this module touches linear algebra: these are the
combinatorial oracles that the algebraic side is checked against.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .graphs import GainAssignment, Multigraph, Orientation, oriented_ends

DEFAULT_MAX_EDGES = 20


class SizeLimitError(RuntimeError):
    """An exhaustive enumeration would exceed the configured edge cap."""


def check_cap(G: Multigraph, max_edges: int):
    if G.num_edges > max_edges:
        raise SizeLimitError(f"graph has {G.num_edges} edges, cap is {max_edges}")


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_to_indices(mask: int) -> list[int]:
    out, e = [], 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return out


def indices_to_mask(indices) -> int:
    mask = 0
    for e in indices:
        mask |= 1 << e
    return mask


def format_subset(mask: int) -> str:
    """1-based edge labels, e.g. ``{e1,e3}``."""
    return "{" + ",".join(f"e{e + 1}" for e in mask_to_indices(mask)) + "}"


def _ordering_positions(G: Multigraph, ordering: Sequence[int] | None) -> list[int]:
    if ordering is None:
        return list(range(G.num_edges))
    if sorted(ordering) != list(range(G.num_edges)):
        raise ValueError(f"ordering {list(ordering)} is not a permutation of the edges")
    pos = [0] * G.num_edges
    for rank, e in enumerate(ordering):
        pos[e] = rank
    return pos


# -- structure of a subgraph ---------------------------------------------


@dataclass
class _Component:
    vertices: set[int] = field(default_factory=set)
    edges: int = 0  # bitmask

    @property
    def excess(self) -> int:
        """Number of edges minus number of vertices."""
        return popcount(self.edges) - len(self.vertices)


def components(G: Multigraph, mask: int) -> list[_Component]:
    """Connected components of the edge-induced subgraph (isolated vertices omitted)."""
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    idx = mask_to_indices(mask)
    for e in idx:
        t, h = G.edges[e]
        parent[find(t)] = find(h)
    comps: dict[int, _Component] = {}
    for e in idx:
        t, h = G.edges[e]
        c = comps.setdefault(find(t), _Component())
        c.vertices.update((t, h))
        c.edges |= 1 << e
    return list(comps.values())


def _degrees(G: Multigraph, mask: int) -> dict[int, int]:
    deg: dict[int, int] = {}
    for e in mask_to_indices(mask):
        t, h = G.edges[e]
        deg[t] = deg.get(t, 0) + 1
        deg[h] = deg.get(h, 0) + 1
    return deg


def two_core(G: Multigraph, mask: int) -> int:
    """Edges left after repeatedly deleting edges at degree-1 vertices."""
    deg = _degrees(G, mask)
    incident: dict[int, list[int]] = {}
    for e in mask_to_indices(mask):
        t, h = G.edges[e]
        incident.setdefault(t, []).append(e)
        if h != t:
            incident.setdefault(h, []).append(e)
    core = mask
    queue = deque(v for v, d in deg.items() if d == 1)
    while queue:
        v = queue.popleft()
        if deg[v] != 1:
            continue
        for e in incident[v]:
            if core >> e & 1:
                core &= ~(1 << e)
                t, h = G.edges[e]
                w = h if t == v else t
                deg[v] -= 1
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
                break
    return core


def is_forest(G: Multigraph, mask: int) -> bool:
    return all(c.excess == -1 for c in components(G, mask))


def is_pseudoforest(G: Multigraph, mask: int) -> bool:
    return all(c.excess <= 0 for c in components(G, mask))


def is_odd_circle_pseudoforest(G: Multigraph, mask: int) -> bool:
    comps = components(G, mask)
    if any(c.excess > 0 for c in comps):
        return False
    core = two_core(G, mask)
    # in a unicyclic component the 2-core is exactly its cycle
    return all(popcount(c.edges & core) % 2 == 1 for c in comps if c.excess == 0)


def is_cycle(G: Multigraph, mask: int) -> bool:
    """A connected edge set in which every vertex has degree 2 (loops count twice)."""
    if not mask:
        return False
    if len(components(G, mask)) != 1:
        return False
    return all(d == 2 for d in _degrees(G, mask).values())


def cycle_vertices(G: Multigraph, mask: int) -> set[int]:
    out = set()
    for e in mask_to_indices(mask):
        out.update(G.edges[e])
    return out


def enumerate_cycles(
    G: Multigraph, within: int | None = None, max_edges: int = DEFAULT_MAX_EDGES
) -> list[int]:
    """All simple cycles, as edge masks sorted by (length, mask).

    Loops are cycles of length 1 and two parallel edges form a cycle of
    length 2.  Depth-first search from each start vertex ``s`` through
    vertices larger than ``s`` only, so each cycle is rooted at its
    smallest vertex; the two traversal directions collapse in a set.
    """
    check_cap(G, max_edges)
    allowed = (1 << G.num_edges) - 1 if within is None else within
    found: set[int] = set()
    adj: dict[int, list[tuple[int, int]]] = {}
    for e in mask_to_indices(allowed):
        t, h = G.edges[e]
        if t == h:
            found.add(1 << e)
            continue
        adj.setdefault(t, []).append((e, h))
        adj.setdefault(h, []).append((e, t))

    for s in sorted(adj):
        stack = [(s, 0, frozenset((s,)))]
        while stack:
            v, used, visited = stack.pop()
            for e, w in adj.get(v, ()):
                if used >> e & 1:
                    continue
                if w == s:
                    found.add(used | 1 << e)
                elif w > s and w not in visited:
                    stack.append((w, used | 1 << e, visited | {w}))
    return sorted(found, key=lambda m: (popcount(m), m))


def _is_simple_path_between(G: Multigraph, mask: int, side_a: set[int], side_b: set[int]) -> bool:
    if not mask or len(components(G, mask)) != 1:
        return False
    deg = _degrees(G, mask)
    if any(G.is_loop(e) for e in mask_to_indices(mask)):
        return False
    ends = [v for v, d in deg.items() if d == 1]
    if len(ends) != 2 or any(d not in (1, 2) for d in deg.values()):
        return False
    a, b = ends
    if not ((a in side_a and b in side_b) or (a in side_b and b in side_a)):
        return False
    inner = [v for v, d in deg.items() if d == 2]
    return not any(v in side_a or v in side_b for v in inner)


def is_even_circuit(G: Multigraph, mask: int) -> bool:
    """Shape test: even cycle, odd figure-eight, or odd handcuff.

    Checked directly from the cycles contained in ``mask``: one even cycle
    using every edge; two edge-disjoint odd cycles meeting in one vertex
    and using every edge; or two vertex-disjoint odd cycles plus a simple
    path joining them.
    """
    if not mask:
        return False
    cycles = enumerate_cycles(G, within=mask, max_edges=max(G.num_edges, DEFAULT_MAX_EDGES))
    if len(cycles) == 1:
        return cycles[0] == mask and popcount(mask) % 2 == 0
    if len(cycles) != 2:
        return False
    c1, c2 = cycles
    if popcount(c1) % 2 == 0 or popcount(c2) % 2 == 0 or c1 & c2:
        return False
    v1, v2 = cycle_vertices(G, c1), cycle_vertices(G, c2)
    shared = v1 & v2
    if len(shared) == 1:
        return c1 | c2 == mask
    if shared:
        return False
    return _is_simple_path_between(G, mask & ~(c1 | c2), v1, v2)


class SubgraphKind(enum.Enum):
    FOREST = "forest"
    ODD_CIRCLE_PSEUDOFOREST = "odd-circle pseudoforest"
    CONTAINS_EVEN_CIRCUIT = "contains even circuit"


@dataclass(frozen=True)
class SubgraphClass:
    """Classification of an edge subset.

    ``kind`` is the first that applies of FOREST, ODD_CIRCLE_PSEUDOFOREST,
    CONTAINS_EVEN_CIRCUIT.  Every subset with a cycle that is not an
    odd-circle pseudoforest contains an even circuit, so the three kinds
    are exhaustive; ``witness`` is that circuit.  ``pseudoforest`` is
    reported separately since an even unicycle is both a pseudoforest and
    contains an even circuit.
    """

    kind: SubgraphKind
    pseudoforest: bool
    witness: int | None = None

    @property
    def has_even_circuit(self) -> bool:
        return self.kind is SubgraphKind.CONTAINS_EVEN_CIRCUIT


def _shortest_connector(G: Multigraph, mask: int, src: set[int], dst: set[int]) -> int | None:
    adj: dict[int, list[tuple[int, int]]] = {}
    for e in mask_to_indices(mask):
        t, h = G.edges[e]
        if t == h:
            continue
        adj.setdefault(t, []).append((e, h))
        adj.setdefault(h, []).append((e, t))
    prev: dict[int, tuple[int, int] | None] = {v: None for v in src}
    queue = deque(sorted(src))
    while queue:
        v = queue.popleft()
        if v in dst:
            path = 0
            while prev[v] is not None:
                e, u = prev[v]
                path |= 1 << e
                v = u
            return path
        for e, w in adj.get(v, ()):
            if w not in prev:
                prev[w] = (e, v)
                queue.append(w)
    return None


def _find_even_circuit(G: Multigraph, mask: int) -> int | None:
    cycles = enumerate_cycles(G, within=mask, max_edges=max(G.num_edges, DEFAULT_MAX_EDGES))
    even = [c for c in cycles if popcount(c) % 2 == 0]
    if even:
        return even[0]
    # All cycles odd: two distinct cycles then share at most one vertex,
    # otherwise they would bound a theta subgraph holding an even cycle.
    comp_of = {}
    for i, comp in enumerate(components(G, mask)):
        for v in comp.vertices:
            comp_of[v] = i
    best = None
    verts = [cycle_vertices(G, c) for c in cycles]
    for i in range(len(cycles)):
        for j in range(i + 1, len(cycles)):
            c1, c2 = cycles[i], cycles[j]
            v1, v2 = verts[i], verts[j]
            if comp_of[next(iter(v1))] != comp_of[next(iter(v2))] or c1 & c2:
                continue
            shared = v1 & v2
            if len(shared) == 1:
                cand = c1 | c2
            elif not shared:
                path = _shortest_connector(G, mask & ~(c1 | c2), v1, v2)
                if path is None:
                    continue
                cand = c1 | c2 | path
            else:
                continue
            if best is None or (popcount(cand), cand) < (popcount(best), best):
                best = cand
    return best


def classify_subgraph(G: Multigraph, mask: int) -> SubgraphClass:
    comps = components(G, mask)
    if all(c.excess == -1 for c in comps):
        return SubgraphClass(SubgraphKind.FOREST, True)
    pseudo = all(c.excess <= 0 for c in comps)
    if pseudo and is_odd_circle_pseudoforest(G, mask):
        return SubgraphClass(SubgraphKind.ODD_CIRCLE_PSEUDOFOREST, True)
    witness = _find_even_circuit(G, mask)
    if witness is None:
        raise RuntimeError(f"no even circuit found in {format_subset(mask)}")
    return SubgraphClass(SubgraphKind.CONTAINS_EVEN_CIRCUIT, pseudo, witness)


# -- exhaustive enumeration --------------------------------------------------


def all_subsets(G: Multigraph, max_edges: int = DEFAULT_MAX_EDGES) -> Iterator[int]:
    check_cap(G, max_edges)
    return iter(range(1 << G.num_edges))


def enumerate_spanning_forests(G: Multigraph, max_edges: int = DEFAULT_MAX_EDGES) -> Iterator[int]:
    """Acyclic edge subsets of every size, the empty set included."""
    return (m for m in all_subsets(G, max_edges) if is_forest(G, m))


def enumerate_pseudoforests(G: Multigraph, max_edges: int = DEFAULT_MAX_EDGES) -> Iterator[int]:
    return (m for m in all_subsets(G, max_edges) if is_pseudoforest(G, m))


def enumerate_odd_circle_pseudoforests(
    G: Multigraph, max_edges: int = DEFAULT_MAX_EDGES
) -> Iterator[int]:
    return (m for m in all_subsets(G, max_edges) if is_odd_circle_pseudoforest(G, m))


# -- activities --------------------------------------------------------------


def _forest_path(G: Multigraph, forest: int, a: int, b: int) -> int | None:
    return _shortest_connector(G, forest, {a}, {b})


def external_activity(G: Multigraph, F: int, ordering: Sequence[int] | None = None) -> int:
    """Number of edges outside the forest ``F`` that are the smallest edge
    of the cycle they close with ``F``."""
    if not is_forest(G, F):
        raise ValueError(f"{format_subset(F)} is not a forest")
    pos = _ordering_positions(G, ordering)
    act = 0
    for e in range(G.num_edges):
        if F >> e & 1:
            continue
        t, h = G.edges[e]
        if t == h:
            act += 1  # a loop is its own cycle
            continue
        path = _forest_path(G, F, t, h)
        if path is not None and all(pos[e] < pos[f] for f in mask_to_indices(path)):
            act += 1
    return act


def even_activity(G: Multigraph, F: int, ordering: Sequence[int] | None = None) -> int:
    """Number of edges ``e`` outside the odd-circle pseudoforest ``F`` such
    that ``F + e`` contains an even circuit whose smallest edge is ``e``.

    Such a circuit can only use ``e`` and edges of ``F`` above ``e``, and
    ``F`` alone has no even circuit, so it suffices to classify
    ``{e} + {f in F : f > e}``.
    """
    if not is_odd_circle_pseudoforest(G, F):
        raise ValueError(f"{format_subset(F)} is not an odd-circle pseudoforest")
    pos = _ordering_positions(G, ordering)
    act = 0
    for e in range(G.num_edges):
        if F >> e & 1:
            continue
        above = 1 << e
        for f in mask_to_indices(F):
            if pos[f] > pos[e]:
                above |= 1 << f
        if classify_subgraph(G, above).has_even_circuit:
            act += 1
    return act


@dataclass(frozen=True)
class ActivityProfile:
    """``counts[k]`` = number of independent sets with activity ``k``.

    ``graded[j]`` re-indexes by ``j = |E| - |I| - act(I)`` so it can be
    compared against a Hilbert function.
    """

    counts: dict[int, int]
    graded: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @classmethod
    def from_pairs(cls, num_edges: int, pairs) -> "ActivityProfile":
        counts: dict[int, int] = {}
        graded: dict[int, int] = {}
        for size, act in pairs:
            counts[act] = counts.get(act, 0) + 1
            j = num_edges - size - act
            if j < 0:
                raise ValueError("activity exceeds the number of outside elements")
            graded[j] = graded.get(j, 0) + 1
        top = max(graded, default=-1)
        return cls(dict(sorted(counts.items())), tuple(graded.get(j, 0) for j in range(top + 1)))

    def to_json(self) -> dict:
        return {str(k): v for k, v in self.counts.items()}


def forest_activity_profile(
    G: Multigraph, ordering: Sequence[int] | None = None, max_edges: int = DEFAULT_MAX_EDGES
) -> ActivityProfile:
    return ActivityProfile.from_pairs(
        G.num_edges,
        ((popcount(F), external_activity(G, F, ordering)) for F in enumerate_spanning_forests(G, max_edges)),
    )


def even_activity_profile(
    G: Multigraph, ordering: Sequence[int] | None = None, max_edges: int = DEFAULT_MAX_EDGES
) -> ActivityProfile:
    return ActivityProfile.from_pairs(
        G.num_edges,
        ((popcount(F), even_activity(G, F, ordering)) for F in enumerate_odd_circle_pseudoforests(G, max_edges)),
    )


# -- gains along cycles --------------------------------------------------------


def cycle_traversal(G: Multigraph, S: int, reverse: bool = False) -> list[tuple[int, int, int]]:
    """Walk the cycle ``S`` as ``(edge, from, to)`` steps.

    The walk starts on the lowest-indexed edge of ``S`` in its stored
    direction; ``reverse`` walks the other way round.
    """
    if not is_cycle(G, S):
        raise ValueError(f"{format_subset(S)} is not a simple cycle")
    idx = mask_to_indices(S)
    e0 = idx[0]
    t, h = G.edges[e0]
    if t == h:
        return [(e0, t, t)]
    a, b = (h, t) if reverse else (t, h)
    steps = [(e0, a, b)]
    used = {e0}
    cur = b
    while len(used) < len(idx):
        for e in idx:
            if e in used:
                continue
            u, w = G.edges[e]
            if cur in (u, w):
                nxt = w if u == cur else u
                steps.append((e, cur, nxt))
                used.add(e)
                cur = nxt
                break
        else:
            raise ValueError(f"{format_subset(S)} is not a simple cycle")
    return steps


def cycle_gain(
    G: Multigraph,
    sigma: Orientation | None,
    gamma: GainAssignment,
    S: int,
    reverse: bool = False,
) -> Fraction:
    """Product of ``gamma(e) ** eps(e)`` along the traversal of ``S``.

    ``eps(e)`` is +1 when the walk follows the orientation of ``e`` and -1
    otherwise.  A loop contributes ``gamma`` forwards and ``1/gamma`` in
    reverse.
    """
    steps = cycle_traversal(G, S, reverse)
    out = Fraction(1)
    for e, a, b in steps:
        if a == b:
            out *= 1 / gamma[e] if reverse else gamma[e]
            continue
        tail, head = oriented_ends(G, sigma, e)
        out *= gamma[e] if (a, b) == (tail, head) else 1 / gamma[e]
    return out


def is_gainless(G: Multigraph, sigma: Orientation | None, gamma: GainAssignment, S: int) -> bool:
    return cycle_gain(G, sigma, gamma, S) == 1
