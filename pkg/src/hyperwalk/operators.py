"""Quantum walk space and operators.

Conventions
-----------
The walk lives on the span of incident (vertex, hyperedge) pairs, ordered
lexicographically; non-incident pairs carry zero amplitude under every
operator and are simply not represented. Both tensor orderings of the
literature are identified with this single pair basis, which is the only
reading under which the two reflections compose on one space.

The vertex isometry has one column per vertex v: the unit state spread over
the pairs (v, e) with amplitudes sqrt(p_ve). The edge isometry has one
column per hyperedge e: the unit state spread over the pairs (v, e) with
amplitudes sqrt(p_ev). A walk step is the reflection about the span of the
vertex columns followed by the reflection about the span of the edge
columns, applied in factored form so the dense matrix is never required.

Amplitudes are complex throughout, even though the walk matrix is real
orthogonal, because its eigenvectors are genuinely complex.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .classical import Distribution, TransitionSystem
from .errors import DimensionMismatchError, DimensionTooLargeError
from .hypergraph import Hypergraph

DENSE_CAP_ENV = "HYPERWALK_DENSE_CAP"
DEFAULT_DENSE_CAP = 4096
_NORM_HARD_TOL = 1e-9


def dense_cap() -> int:
    """Dense materialization cap, overridable via HYPERWALK_DENSE_CAP."""
    raw = os.environ.get(DENSE_CAP_ENV)
    if raw is None:
        return DEFAULT_DENSE_CAP
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{DENSE_CAP_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{DENSE_CAP_ENV} must be >= 1, got {value}")
    return value


@dataclass(frozen=True)
class PairSpace:
    """Ordered basis of incident (vertex, hyperedge) pairs."""

    n: int
    m: int
    pair_v: np.ndarray
    pair_e: np.ndarray
    index_of: dict

    @property
    def size(self) -> int:
        return self.pair_v.size

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.pair_v.tolist(), self.pair_e.tolist()))


@dataclass(frozen=True)
class IsometryPair:
    """The vertex and edge isometries, with the pair space they act on.

    vertex_isometry is N x n and edge_isometry is N x m; both have
    orthonormal columns. pair_space is None for synthetic isometries that do
    not come from a hypergraph.
    """

    vertex_isometry: np.ndarray
    edge_isometry: np.ndarray
    pair_space: PairSpace | None = None


@dataclass(frozen=True)
class WalkOperator:
    """One walk step, as a factored pair of reflections plus optional dense form."""

    isometries: IsometryPair
    dense: np.ndarray | None

    @property
    def pair_space(self) -> PairSpace | None:
        return self.isometries.pair_space

    @property
    def size(self) -> int:
        return self.isometries.vertex_isometry.shape[0]


@dataclass(frozen=True)
class StateVector:
    """Unit-norm complex amplitude vector over the pair basis."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.ndim != 1:
            raise ValueError("amplitudes must be a flat vector")
        norm = np.linalg.norm(amps)
        # Hard bound is loose (1e-9): long evolutions legitimately drift past
        # the 1e-12 a freshly built state satisfies.
        if abs(norm - 1.0) > _NORM_HARD_TOL:
            raise ValueError(f"state norm {norm!r} is not 1")
        amps = amps.copy()
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def build_pair_space(hg: Hypergraph) -> PairSpace:
    """Enumerate incident pairs in lexicographic (vertex, edge) order."""
    pair_v, pair_e = np.nonzero(hg.incidence)
    index_of = {(int(v), int(e)): i for i, (v, e) in enumerate(zip(pair_v, pair_e))}
    return PairSpace(n=hg.n, m=hg.m, pair_v=pair_v, pair_e=pair_e, index_of=index_of)


def build_isometries(hg: Hypergraph, ts: TransitionSystem, ps: PairSpace) -> IsometryPair:
    """Assemble the vertex and edge isometries from the transition matrices."""
    if (hg.n, hg.m) != (ts.n, ts.m) or (ps.n, ps.m) != (hg.n, hg.m):
        raise DimensionMismatchError("hypergraph, transitions and pair space disagree")
    size = ps.size
    rows = np.arange(size)
    vertex_isometry = np.zeros((size, hg.n))
    vertex_isometry[rows, ps.pair_v] = np.sqrt(ts.vertex_to_edge[ps.pair_v, ps.pair_e])
    edge_isometry = np.zeros((size, hg.m))
    edge_isometry[rows, ps.pair_e] = np.sqrt(ts.edge_to_vertex[ps.pair_e, ps.pair_v])
    return IsometryPair(vertex_isometry, edge_isometry, ps)


def build_walk(iso: IsometryPair, materialize: bool | None = None) -> WalkOperator:
    """Walk operator from an isometry pair.

    materialize=None (default) builds the dense matrix only when the pair
    dimension fits under the dense cap; True insists on it and raises
    DimensionTooLargeError above the cap; False keeps the factored form only.
    """
    size = iso.vertex_isometry.shape[0]
    cap = dense_cap()
    if materialize is None:
        materialize = size <= cap
    elif materialize and size > cap:
        raise DimensionTooLargeError(f"pair dimension {size} exceeds dense cap {cap}")
    dense = None
    if materialize:
        eye = np.eye(size)
        reflect_v = 2.0 * (iso.vertex_isometry @ iso.vertex_isometry.T) - eye
        reflect_e = 2.0 * (iso.edge_isometry @ iso.edge_isometry.T) - eye
        dense = reflect_e @ reflect_v
    return WalkOperator(isometries=iso, dense=dense)


def _apply_factored(iso: IsometryPair, amplitudes: np.ndarray) -> np.ndarray:
    """Apply one walk step to a complex vector via the two factored reflections.

    Real and imaginary parts ride as two columns so the real isometries are
    never upcast to complex.
    """
    x = np.column_stack((amplitudes.real, amplitudes.imag))
    a = iso.vertex_isometry
    b = iso.edge_isometry
    x = 2.0 * (a @ (a.T @ x)) - x
    x = 2.0 * (b @ (b.T @ x)) - x
    return x[:, 0] + 1j * x[:, 1]


def walk_action(iso: IsometryPair, states: np.ndarray) -> np.ndarray:
    """Walk step applied to the columns of a (possibly complex) matrix."""
    y = 2.0 * (iso.vertex_isometry @ (iso.vertex_isometry.T @ states)) - states
    return 2.0 * (iso.edge_isometry @ (iso.edge_isometry.T @ y)) - y


def apply_walk(walk: WalkOperator, psi: StateVector) -> StateVector:
    """One walk step on a state, always through the factored form."""
    if psi.amplitudes.size != walk.size:
        raise DimensionMismatchError(
            f"state has {psi.amplitudes.size} amplitudes, walk space has {walk.size}"
        )
    return StateVector(_apply_factored(walk.isometries, psi.amplitudes))


def evolve(walk: WalkOperator, psi0: StateVector, steps: int, keep_all: bool = False):
    """Repeated walk steps; returns the final state, or all states when keep_all."""
    if steps < 0:
        raise ValueError("steps must be >= 0")
    psi = psi0
    history = [psi0]
    for _ in range(steps):
        psi = apply_walk(walk, psi)
        if keep_all:
            history.append(psi)
    return history if keep_all else psi


def basis_pair_state(ps: PairSpace, v: int, e: int) -> StateVector:
    """Computational basis state at the incident pair (v, e)."""
    key = (int(v), int(e))
    if key not in ps.index_of:
        raise ValueError(f"({v}, {e}) is not an incident (vertex, hyperedge) pair")
    amps = np.zeros(ps.size, dtype=np.complex128)
    amps[ps.index_of[key]] = 1.0
    return StateVector(amps)


def vertex_superposition(iso: IsometryPair, v: int) -> StateVector:
    """The unit state anchored at vertex v: column v of the vertex isometry."""
    n = iso.vertex_isometry.shape[1]
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} outside [0, {n})")
    return StateVector(iso.vertex_isometry[:, v].astype(np.complex128))


def vertex_distribution(ps: PairSpace, psi: StateVector) -> Distribution:
    """Measurement marginal over vertices: summed squared magnitudes per vertex."""
    if psi.amplitudes.size != ps.size:
        raise DimensionMismatchError("state and pair space sizes differ")
    weights = np.abs(psi.amplitudes) ** 2
    return Distribution(np.bincount(ps.pair_v, weights=weights, minlength=ps.n))


def edge_distribution(ps: PairSpace, psi: StateVector) -> Distribution:
    """Measurement marginal over hyperedges."""
    if psi.amplitudes.size != ps.size:
        raise DimensionMismatchError("state and pair space sizes differ")
    weights = np.abs(psi.amplitudes) ** 2
    return Distribution(np.bincount(ps.pair_e, weights=weights, minlength=ps.m))
