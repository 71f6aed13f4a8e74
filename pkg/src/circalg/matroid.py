"""Vector matroids of exact matrices and orientation independence of gain graphs."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from .enumeration import (
    DEFAULT_MAX_EDGES,
    ActivityProfile,
    SizeLimitError,
    enumerate_cycles,
    format_subset,
    indices_to_mask,
    is_gainless,
    mask_to_indices,
    popcount,
)
from .graphs import GainAssignment, Multigraph, Orientation, gain_incidence
from .linalg import Echelon, ExactMatrix, integer_vector

DEFAULT_ORIENTATION_CAP = 12


class VectorMatroid:
    """Matroid on the columns of an exact matrix.

    Subsets of the ground set are bitmasks over column indices.  Ranks are
    cached per instance.
    """

    def __init__(self, matrix: ExactMatrix):
        self.matrix = matrix
        self._cols = [
            {i: c for i, c in enumerate(integer_vector(matrix.column(j))) if c}
            for j in range(matrix.cols)
        ]
        self._rank_cache: dict[int, int] = {0: 0}

    @property
    def size(self) -> int:
        return self.matrix.cols

    def rank(self, S: int) -> int:
        r = self._rank_cache.get(S)
        if r is None:
            ech = Echelon()
            for j in mask_to_indices(S):
                ech.add(self._cols[j])
            r = self._rank_cache[S] = len(ech)
        return r

    def is_independent(self, S: int) -> bool:
        return self.rank(S) == popcount(S)

    def independent_sets(self, max_edges: int = DEFAULT_MAX_EDGES) -> frozenset[int]:
        """All independent subsets, built upward from the empty set."""
        if self.size > max_edges:
            raise SizeLimitError(f"{self.size} columns exceeds cap {max_edges}")
        layer = [0]
        found = {0}
        while layer:
            nxt = set()
            for S in layer:
                top = S.bit_length()  # extend only above the largest element
                for j in range(top, self.size):
                    T = S | 1 << j
                    if all((T & ~(1 << i)) in found for i in mask_to_indices(S)) and self.is_independent(T):
                        nxt.add(T)
            found |= nxt
            layer = sorted(nxt)
        return frozenset(found)

    def circuits(self, max_edges: int = DEFAULT_MAX_EDGES) -> list[int]:
        """Minimal dependent subsets, by size then mask."""
        if self.size > max_edges:
            raise SizeLimitError(f"{self.size} columns exceeds cap {max_edges}")
        out: list[int] = []
        for k in range(1, min(self.size, self.matrix.rows + 1) + 1):
            for combo in combinations(range(self.size), k):
                S = indices_to_mask(combo)
                if any(C & S == C for C in out):
                    continue
                if not self.is_independent(S):
                    out.append(S)
        return out


def vector_external_activity(M: VectorMatroid, I: int, ordering: Sequence[int] | None = None) -> int:
    """Number of ``v`` outside ``I`` that are the smallest element of some
    dependent ``J`` with ``J - v`` inside ``I``.

    Dependence is monotone, so the best candidate is ``{v}`` together with
    every element of ``I`` above ``v``.
    """
    if not M.is_independent(I):
        raise ValueError(f"{format_subset(I)} is dependent")
    pos = _positions(M.size, ordering)
    act = 0
    for v in range(M.size):
        if I >> v & 1:
            continue
        J = 1 << v
        for i in mask_to_indices(I):
            if pos[i] > pos[v]:
                J |= 1 << i
        if not M.is_independent(J):
            act += 1
    return act


def vector_activity_profile(
    M: VectorMatroid, ordering: Sequence[int] | None = None, max_edges: int = DEFAULT_MAX_EDGES
) -> ActivityProfile:
    return ActivityProfile.from_pairs(
        M.size,
        ((popcount(I), vector_external_activity(M, I, ordering)) for I in sorted(M.independent_sets(max_edges))),
    )


def _positions(n: int, ordering: Sequence[int] | None) -> list[int]:
    if ordering is None:
        return list(range(n))
    if sorted(ordering) != list(range(n)):
        raise ValueError(f"ordering {list(ordering)} is not a permutation of 0..{n - 1}")
    pos = [0] * n
    for r, e in enumerate(ordering):
        pos[e] = r
    return pos


# -- orientation independence ---------------------------------------------------


class Method(enum.Enum):
    CRITERION = "criterion"
    BRUTE_FORCE = "brute force"


@dataclass(frozen=True)
class OrientationReport:
    """Verdict on whether a gain graph's matroid survives every reorientation.

    For the criterion, ``clause`` is 1 or 2 when every cycle passed (the
    weakest clause needed across cycles: 2 if any cycle needed it), and
    ``independent_proper`` is the verdict when only nonempty proper
    subsets ``P`` are tested in clause (2).  For the brute force,
    ``orientation`` is a flip pattern whose independent sets differ from
    the reference.
    """

    independent: bool
    method: Method
    cycle: int | None = None
    subset: int | None = None
    clause: int | None = None
    independent_proper: bool | None = None
    orientation: Orientation | None = None

    def describe(self) -> str:
        if self.independent:
            return f"INDEPENDENT ({self.method.value}" + (f", clause {self.clause})" if self.clause else ")")
        text = f"DEPENDENT; witness cycle {format_subset(self.cycle)}"
        if self.subset is not None:
            text += f", P={format_subset(self.subset)}"
        return text

    def to_json(self) -> dict:
        return {
            "independent": self.independent,
            "method": self.method.value,
            "cycle": mask_to_indices(self.cycle) if self.cycle is not None else None,
            "subset": mask_to_indices(self.subset) if self.subset is not None else None,
            "clause": self.clause,
            "independent_proper": self.independent_proper,
            "flips": list(self.orientation.flips) if self.orientation is not None else None,
        }


def _product(gamma: GainAssignment, edges) -> Fraction:
    out = Fraction(1)
    for e in edges:
        out *= gamma[e]
    return out


def balanced_splits(gamma: GainAssignment, S: int, include_trivial: bool = True) -> Iterator[int]:
    """Subsets ``P`` of ``S`` with ``prod_P gamma == prod_{S - P} gamma``.

    Yielded nonempty ones first, by size then mask; with
    ``include_trivial`` the empty set is tried last (``P = S`` is always
    among the nonempty ones).
    """
    idx = mask_to_indices(S)
    total = _product(gamma, idx)
    sizes = range(1, len(idx) + 1) if include_trivial else range(1, len(idx))
    for k in sizes:
        for combo in combinations(idx, k):
            p = _product(gamma, combo)
            if p * p == total:
                yield indices_to_mask(combo)
    if include_trivial and total == 1:
        yield 0


def subset_products_distinct(
    G: Multigraph, gamma: GainAssignment, include_empty: bool = True, max_edges: int = DEFAULT_MAX_EDGES
) -> tuple[bool, int | None, int | None]:
    """Check that no cycle splits into two parts with equal gain products.

    Returns ``(ok, cycle, P)`` with a witness when ``ok`` is false.
    """
    for S in enumerate_cycles(G, max_edges=max_edges):
        P = next(balanced_splits(gamma, S, include_trivial=include_empty), None)
        if P is not None:
            return False, S, P
    return True, None, None


def _clause_one(gamma: GainAssignment, S: int) -> bool:
    return all(gamma[e] in (1, -1) for e in mask_to_indices(S))


def orientation_independent_criterion(
    G: Multigraph, gamma: GainAssignment, max_edges: int = DEFAULT_MAX_EDGES
) -> OrientationReport:
    """Decide orientation independence cycle by cycle.

    A cycle is harmless when its gains are all +-1, or when no subset ``P``
    has the same gain product as its complement.  The verdict quantifies
    over every ``P`` including ``P = S``; the verdict for nonempty proper
    ``P`` only is reported alongside.
    """
    if len(gamma) != G.num_edges:
        raise ValueError("gain assignment length does not match the edge count")
    witness = None
    proper_ok = True
    used_two = False
    for S in enumerate_cycles(G, max_edges=max_edges):
        if _clause_one(gamma, S):
            continue
        P = next(balanced_splits(gamma, S, include_trivial=True), None)
        if next(balanced_splits(gamma, S, include_trivial=False), None) is not None:
            proper_ok = False
        if P is None:
            used_two = True
        elif witness is None:
            witness = (S, P)
    if witness is not None:
        S, P = witness
        return OrientationReport(False, Method.CRITERION, cycle=S, subset=P, independent_proper=proper_ok)
    return OrientationReport(
        True, Method.CRITERION, clause=2 if used_two else 1, independent_proper=proper_ok
    )


def orientation_independent_bruteforce(
    G: Multigraph,
    gamma: GainAssignment,
    sigma0: Orientation | None = None,
    max_edges: int = DEFAULT_ORIENTATION_CAP,
) -> OrientationReport:
    """Compare independent-set families over all ``2^|E|`` orientations.

    Gains stay attached to edges while the directions change, so each
    orientation is a genuinely different gain graph.
    """
    if G.num_edges > max_edges:
        raise SizeLimitError(f"{G.num_edges} edges exceeds orientation cap {max_edges}")
    m = G.num_edges
    sigma0 = sigma0 or Orientation.default(m)
    reference = VectorMatroid(gain_incidence(G, sigma0, gamma)).independent_sets(max_edges)
    loop_bits = indices_to_mask(G.loops())
    base = indices_to_mask(e for e in range(m) if sigma0.flips[e])
    for bits in range(1 << m):
        if bits & loop_bits:
            continue  # flipping a loop leaves its column unchanged
        sigma = Orientation.from_bits(base ^ bits, m)
        family = VectorMatroid(gain_incidence(G, sigma, gamma)).independent_sets(max_edges)
        if family != reference:
            diff = sorted(family ^ reference, key=lambda s: (popcount(s), s))
            return OrientationReport(
                False,
                Method.BRUTE_FORCE,
                cycle=_witness_cycle(G, gamma, sigma0, sigma, diff),
                orientation=sigma,
            )
    return OrientationReport(True, Method.BRUTE_FORCE)


def _witness_cycle(G, gamma, sigma0, sigma, diff) -> int | None:
    for S in enumerate_cycles(G, max_edges=max(G.num_edges, DEFAULT_MAX_EDGES)):
        if is_gainless(G, sigma0, gamma, S) != is_gainless(G, sigma, gamma, S):
            return S
    return diff[0] if diff else None


def distinct_prime_gains(num_edges: int) -> GainAssignment:
    """Edge ``e`` gets the ``e``-th odd prime (3, 5, 7, ...)."""
    primes: list[int] = []
    n = 3
    while len(primes) < num_edges:
        if all(n % p for p in primes if p * p <= n):
            primes.append(n)
        n += 2
    return GainAssignment(tuple(primes))
