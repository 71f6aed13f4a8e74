"""Cross-checks between Hilbert functions and combinatorial counts.

Each verifier runs both engines on one instance and returns a
:class:`VerificationRecord`.  ``status`` is ``"match"``, ``"mismatch"``
or ``"hypothesis-not-met"``; only ``"mismatch"`` signals a failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .algebra import hilbert_function
from .enumeration import (
    enumerate_pseudoforests,
    even_activity_profile,
    forest_activity_profile,
    mask_to_indices,
)
from .graphs import (
    GainAssignment,
    Multigraph,
    Orientation,
    directed_incidence,
    gain_incidence,
    graph_to_json,
    undirected_incidence,
)
from .linalg import ExactMatrix
from .matroid import (
    DEFAULT_ORIENTATION_CAP,
    VectorMatroid,
    orientation_independent_bruteforce,
    orientation_independent_criterion,
    subset_products_distinct,
    vector_activity_profile,
)

MATCH = "match"
MISMATCH = "mismatch"
HYPOTHESIS_NOT_MET = "hypothesis-not-met"


@dataclass
class VerificationRecord:
    theorem: str
    instance: dict
    claimed: Any
    computed: Any
    status: str
    witness: Any = None
    name: str = ""

    @property
    def match(self) -> bool | None:
        if self.status == HYPOTHESIS_NOT_MET:
            return None
        return self.status == MATCH

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "name": self.name,
            "instance": self.instance,
            "claimed": self.claimed,
            "computed": self.computed,
            "match": self.match,
            "status": self.status,
            "witness": self.witness,
        }


def _dims_record(theorem, instance, claimed_dims, computed_dims, name="") -> VerificationRecord:
    claimed = {"dims": list(claimed_dims), "total": sum(claimed_dims)}
    computed = {"dims": list(computed_dims), "total": sum(computed_dims)}
    if claimed == computed:
        return VerificationRecord(theorem, instance, claimed, computed, MATCH, name=name)
    width = max(len(claimed_dims), len(computed_dims))
    pad = lambda d: list(d) + [0] * (width - len(d))  # noqa: E731
    first = next(k for k, (a, b) in enumerate(zip(pad(claimed_dims), pad(computed_dims))) if a != b)
    return VerificationRecord(
        theorem, instance, claimed, computed, MISMATCH, witness={"degree": first}, name=name
    )


def verify_A(
    G: Multigraph, sigma: Orientation | None = None, ordering: Sequence[int] | None = None, name: str = ""
) -> VerificationRecord:
    """Hilbert function of the directed incidence matrix vs forests graded by
    ``|E| - |F| - act(F)``."""
    profile = forest_activity_profile(G, ordering)
    hf = hilbert_function(directed_incidence(G, sigma))
    return _dims_record("A", graph_to_json(G, sigma), profile.graded, hf.dims, name)


def verify_B(A: ExactMatrix, ordering: Sequence[int] | None = None, name: str = "") -> VerificationRecord:
    profile = vector_activity_profile(VectorMatroid(A), ordering)
    hf = hilbert_function(A)
    return _dims_record("B", A.to_json(), profile.graded, hf.dims, name)


def verify_1(G: Multigraph, ordering: Sequence[int] | None = None, name: str = "") -> VerificationRecord:
    """Undirected incidence matrix vs odd-circle pseudoforests graded by even activity."""
    profile = even_activity_profile(G, ordering)
    hf = hilbert_function(undirected_incidence(G))
    return _dims_record("1", graph_to_json(G), profile.graded, hf.dims, name)


def verify_2(
    G: Multigraph,
    gamma: GainAssignment,
    sigma: Orientation | None = None,
    max_edges: int = DEFAULT_ORIENTATION_CAP,
    name: str = "",
) -> VerificationRecord:
    """Generic gains: total dimension equals the pseudoforest count and the
    Hilbert function is the same for every orientation.

    The hypothesis is checked with every subset ``P`` of each cycle,
    including the empty one.
    """
    sigma = sigma or Orientation.default(G.num_edges)
    instance = graph_to_json(G, sigma, gamma)
    ok, S, P = subset_products_distinct(G, gamma, include_empty=True)
    if not ok:
        return VerificationRecord(
            "2", instance, None, None, HYPOTHESIS_NOT_MET,
            witness={"cycle": mask_to_indices(S), "P": mask_to_indices(P)}, name=name,
        )
    if G.num_edges > max_edges:
        raise ValueError(f"{G.num_edges} edges exceeds orientation cap {max_edges}")
    pseudo = sum(1 for _ in enumerate_pseudoforests(G))
    m = G.num_edges
    loop_bits = sum(1 << e for e in G.loops())
    base = sum(1 << e for e in range(m) if sigma.flips[e])
    reference = hilbert_function(gain_incidence(G, sigma, gamma))
    seen = {reference.dims}
    witness = None
    for bits in range(1 << m):
        if bits & loop_bits:
            continue
        flipped = Orientation.from_bits(base ^ bits, m)
        hf = hilbert_function(gain_incidence(G, flipped, gamma))
        if hf.dims != reference.dims and witness is None:
            witness = {"flips": list(flipped.flips), "dims": list(hf.dims)}
        seen.add(hf.dims)
    claimed = {"total": pseudo, "orientation_independent": True}
    computed = {
        "total": reference.total,
        "orientation_independent": len(seen) == 1,
        "dims": list(reference.dims),
    }
    good = reference.total == pseudo and len(seen) == 1
    return VerificationRecord("2", instance, claimed, computed, MATCH if good else MISMATCH, witness, name)


def verify_main(
    G: Multigraph, gamma: GainAssignment, max_edges: int = DEFAULT_ORIENTATION_CAP, name: str = ""
) -> VerificationRecord:
    """Cycle criterion vs the all-orientations sweep."""
    crit = orientation_independent_criterion(G, gamma)
    brute = orientation_independent_bruteforce(G, gamma, max_edges=max_edges)
    status = MATCH if crit.independent == brute.independent else MISMATCH
    return VerificationRecord(
        "main",
        graph_to_json(G, None, gamma),
        crit.to_json(),
        brute.to_json(),
        status,
        witness=None if status == MATCH else {"criterion": crit.describe(), "brute_force": brute.describe()},
        name=name,
    )


VERIFIERS = {"A": verify_A, "B": verify_B, "1": verify_1, "2": verify_2, "main": verify_main}


def verify_theorem(kind: str, *args, **kwargs) -> VerificationRecord:
    try:
        fn = VERIFIERS[kind]
    except KeyError:
        raise ValueError(f"unknown theorem {kind!r}; choose from {sorted(VERIFIERS)}") from None
    return fn(*args, **kwargs)
