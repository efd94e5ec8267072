"""Classical two-step random walk on a hypergraph.

One step goes vertex -> hyperedge -> vertex: from a vertex, pick an incident
hyperedge uniformly, then a destination vertex inside it uniformly. The
vertex chain and the dual edge chain are the two round-trip products of the
one-sided transition matrices D_v^-1 H (vertex to edge) and D_e^-1 H^T
(edge to vertex).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, NoConvergenceError
from .hypergraph import Hypergraph

POWER_ITERATION_CAP = 100_000
POWER_ITERATION_TOL = 1e-12
# Hard bound is loose (1e-9): marginals of long evolutions legitimately
# drift past the 1e-12 a freshly built distribution satisfies.
_DIST_SUM_TOL = 1e-9


@dataclass(frozen=True)
class TransitionSystem:
    """The four stochastic matrices of the two-step walk.

    vertex_to_edge is n x m, edge_to_vertex is m x n; vertex_chain is their
    n x n product and edge_chain the m x m product in the other order.
    """

    vertex_to_edge: np.ndarray
    edge_to_vertex: np.ndarray
    vertex_chain: np.ndarray
    edge_chain: np.ndarray

    @property
    def n(self) -> int:
        return self.vertex_to_edge.shape[0]

    @property
    def m(self) -> int:
        return self.vertex_to_edge.shape[1]


@dataclass(frozen=True)
class Distribution:
    """Probability vector over vertices or hyperedges."""

    probabilities: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.probabilities, dtype=np.float64)
        if p.ndim != 1:
            raise ValueError("distribution must be a flat vector")
        if p.min(initial=0.0) < 0.0:
            raise ValueError("negative probability entry")
        if abs(p.sum() - 1.0) > _DIST_SUM_TOL:
            raise ValueError(f"probabilities sum to {p.sum()!r}, not 1")
        p = p.copy()
        p.setflags(write=False)
        object.__setattr__(self, "probabilities", p)

    def __len__(self) -> int:
        return self.probabilities.size


def build_transitions(hg: Hypergraph) -> TransitionSystem:
    """Transition matrices of the two-step walk on a hypergraph."""
    h = hg.incidence.astype(np.float64)
    vertex_degrees = h.sum(axis=1)
    edge_degrees = h.sum(axis=0)
    vertex_to_edge = h / vertex_degrees[:, None]
    edge_to_vertex = h.T / edge_degrees[:, None]
    return TransitionSystem(
        vertex_to_edge=vertex_to_edge,
        edge_to_vertex=edge_to_vertex,
        vertex_chain=vertex_to_edge @ edge_to_vertex,
        edge_chain=edge_to_vertex @ vertex_to_edge,
    )


def stationary_distribution(ts: TransitionSystem, which: str = "vertex") -> Distribution:
    """Fixed point of the vertex chain (or edge chain) by power iteration.

    Starts from the uniform vector and stops when successive iterates differ
    by less than 1e-12 in max-norm. For a disconnected hypergraph the result
    is the fixed point this particular start converges to, not a unique
    stationary law; check connectivity separately if that matters.
    """
    if which == "vertex":
        chain = ts.vertex_chain
    elif which == "edge":
        chain = ts.edge_chain
    else:
        raise ValueError(f"which must be 'vertex' or 'edge', got {which!r}")
    x = np.full(chain.shape[0], 1.0 / chain.shape[0])
    for _ in range(POWER_ITERATION_CAP):
        x_next = x @ chain
        if np.abs(x_next - x).max() < POWER_ITERATION_TOL:
            return Distribution(x_next)
        x = x_next
    raise NoConvergenceError(
        f"power iteration did not converge within {POWER_ITERATION_CAP} steps"
    )


def classical_step(ts: TransitionSystem, dist: Distribution) -> Distribution:
    """One vertex-to-vertex step: the row vector dist times the vertex chain."""
    if len(dist) != ts.n:
        raise DimensionMismatchError(f"distribution has {len(dist)} entries, chain has {ts.n}")
    return Distribution(dist.probabilities @ ts.vertex_chain)


def sample_trajectory(ts: TransitionSystem, start_vertex: int, steps: int, seed: int = 0) -> list[int]:
    """Sample v0, e0, v1, e1, ..., v_steps as alternating vertex/edge indices.

    Each hyperedge is drawn from the current vertex's row of vertex_to_edge
    and each next vertex from that hyperedge's row of edge_to_vertex.
    Deterministic for a fixed seed; length is 2*steps + 1.
    """
    if not 0 <= start_vertex < ts.n:
        raise DimensionMismatchError(f"start vertex {start_vertex} outside [0, {ts.n})")
    if steps < 0:
        raise ValueError("steps must be >= 0")
    rng = np.random.default_rng(seed)
    cum_ve = np.cumsum(ts.vertex_to_edge, axis=1)
    cum_ev = np.cumsum(ts.edge_to_vertex, axis=1)
    draws = rng.random(2 * steps)
    path = [start_vertex]
    v = start_vertex
    for i in range(steps):
        e = min(int(np.searchsorted(cum_ve[v], draws[2 * i], side="right")), ts.m - 1)
        v = min(int(np.searchsorted(cum_ev[e], draws[2 * i + 1], side="right")), ts.n - 1)
        path.append(e)
        path.append(v)
    return path
