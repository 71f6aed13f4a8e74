"""Circulation algebras of graphs and matrices, with combinatorial cross-checks."""

from .algebra import (
    DimensionMismatchError,
    HilbertFunction,
    SquareFreeElement,
    generators_from_matrix,
    graded_dimension,
    hilbert_function,
    sf_add,
    sf_mul,
)
from .enumeration import (
    ActivityProfile,
    SizeLimitError,
    SubgraphClass,
    SubgraphKind,
    classify_subgraph,
    cycle_gain,
    enumerate_cycles,
    enumerate_odd_circle_pseudoforests,
    enumerate_pseudoforests,
    enumerate_spanning_forests,
    even_activity,
    even_activity_profile,
    external_activity,
    forest_activity_profile,
    is_even_circuit,
    is_gainless,
)
from .graphs import (
    GainAssignment,
    GainGraph,
    LoopReorientationWarning,
    Multigraph,
    NotGeneralizedIncidenceError,
    Orientation,
    directed_incidence,
    gain_graph_from_matrix,
    gain_incidence,
    reorient_edge,
    undirected_incidence,
)
from .linalg import ExactMatrix, kernel_basis, matrix_rank
from .matroid import (
    OrientationReport,
    VectorMatroid,
    distinct_prime_gains,
    orientation_independent_bruteforce,
    orientation_independent_criterion,
    vector_activity_profile,
    vector_external_activity,
)
from .verify import VerificationRecord, verify_theorem

__version__ = "0.1.0"
