"""Szegedy-style quantum walks on regular uniform hypergraphs.

The pipeline: a hypergraph's incidence matrix defines a two-step classical
walk (vertex -> hyperedge -> vertex); quantizing it on the bipartite
incidence structure gives a two-reflection walk operator whose eigensystem
is fully determined by the singular value decomposition of the discriminant
matrix sqrt(p_ve * p_ev). This package builds every piece and verifies the
predicted eigensystem against brute-force eigendecomposition.
"""

from .classical import (
    Distribution,
    TransitionSystem,
    build_transitions,
    classical_step,
    sample_trajectory,
    stationary_distribution,
)
from .errors import (
    CountMismatchError,
    DimensionMismatchError,
    DimensionTooLargeError,
    EmptyEdgeError,
    GenerationFailedError,
    HgSyntaxError,
    HyperwalkError,
    IndexOutOfRangeError,
    InfeasibleParametersError,
    InvalidToleranceError,
    IsolatedVertexError,
    NoConvergenceError,
)
from .hypergraph import (
    BipartiteModel,
    DegreeProfile,
    Hypergraph,
    degree_profile,
    from_edge_lists,
    is_connected,
    parse,
    random_feasible_parameters,
    random_regular_uniform,
    serialize,
    to_bipartite,
)
from .operators import (
    DEFAULT_DENSE_CAP,
    DENSE_CAP_ENV,
    IsometryPair,
    PairSpace,
    StateVector,
    WalkOperator,
    apply_walk,
    basis_pair_state,
    build_isometries,
    build_pair_space,
    build_walk,
    dense_cap,
    edge_distribution,
    evolve,
    vertex_distribution,
    vertex_superposition,
    walk_action,
)
from .spectral import (
    BruteForceSpectrum,
    CLASSIFY_TOL_DEFAULT,
    Discriminant,
    SpectralReport,
    SpectrumPrediction,
    SvdResult,
    VERIFY_TOL_DEFAULT,
    Verdict,
    analyze,
    brute_force_spectrum,
    classify_singular_values,
    discriminant,
    full_svd,
    group_eigenvalues,
    pairing_distance,
    predict_spectrum,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteModel",
    "BruteForceSpectrum",
    "CLASSIFY_TOL_DEFAULT",
    "CountMismatchError",
    "DEFAULT_DENSE_CAP",
    "DENSE_CAP_ENV",
    "DegreeProfile",
    "DimensionMismatchError",
    "DimensionTooLargeError",
    "Discriminant",
    "Distribution",
    "EmptyEdgeError",
    "GenerationFailedError",
    "HgSyntaxError",
    "Hypergraph",
    "HyperwalkError",
    "IndexOutOfRangeError",
    "InfeasibleParametersError",
    "InvalidToleranceError",
    "IsolatedVertexError",
    "IsometryPair",
    "NoConvergenceError",
    "PairSpace",
    "SpectralReport",
    "SpectrumPrediction",
    "StateVector",
    "SvdResult",
    "TransitionSystem",
    "VERIFY_TOL_DEFAULT",
    "Verdict",
    "WalkOperator",
    "analyze",
    "apply_walk",
    "basis_pair_state",
    "brute_force_spectrum",
    "build_isometries",
    "build_pair_space",
    "build_transitions",
    "build_walk",
    "classical_step",
    "classify_singular_values",
    "degree_profile",
    "dense_cap",
    "discriminant",
    "edge_distribution",
    "evolve",
    "from_edge_lists",
    "full_svd",
    "group_eigenvalues",
    "is_connected",
    "pairing_distance",
    "parse",
    "predict_spectrum",
    "random_feasible_parameters",
    "random_regular_uniform",
    "sample_trajectory",
    "serialize",
    "stationary_distribution",
    "to_bipartite",
    "vertex_distribution",
    "vertex_superposition",
    "verify",
    "walk_action",
]
