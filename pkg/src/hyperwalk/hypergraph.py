"""Hypergraphs as 0/1 incidence matrices.

A hypergraph here is n vertices plus m hyperedges, each hyperedge a
non-empty subset of the vertices, stored as an n-by-m incidence matrix with
a 1 at (v, e) exactly when vertex v belongs to hyperedge e. Isolated
vertices and empty hyperedges are rejected outright: every downstream
transition matrix divides by the vertex and edge degrees.

Also defined here: degree profiles, the bipartite incidence-graph model
(vertices on one side, hyperedges on the other), a configuration-model
generator for d-regular k-uniform instances, and the plain-text .hg format.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    EmptyEdgeError,
    GenerationFailedError,
    HgSyntaxError,
    IndexOutOfRangeError,
    InfeasibleParametersError,
    IsolatedVertexError,
)

GENERATOR_RETRY_BUDGET = 1000
_REPAIR_PASSES = 200


@dataclass(frozen=True)
class Hypergraph:
    """Immutable hypergraph: vertex count, edge count, incidence matrix."""

    n: int
    m: int
    incidence: np.ndarray

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError("hypergraph needs at least one vertex and one hyperedge")
        h = np.asarray(self.incidence)
        if h.shape != (self.n, self.m):
            raise ValueError(f"incidence shape {h.shape} != ({self.n}, {self.m})")
        if not np.isin(h, (0, 1)).all():
            raise ValueError("incidence entries must be exactly 0 or 1")
        h = h.astype(np.int64, copy=True)
        empty = np.flatnonzero(h.sum(axis=0) == 0)
        if empty.size:
            raise EmptyEdgeError(f"hyperedge {empty[0]} contains no vertices")
        isolated = np.flatnonzero(h.sum(axis=1) == 0)
        if isolated.size:
            raise IsolatedVertexError(f"vertex {isolated[0]} appears in no hyperedge")
        h.setflags(write=False)
        object.__setattr__(self, "incidence", h)

    def edge_sets(self) -> list[list[int]]:
        """Vertex indices of each hyperedge, sorted ascending, in edge order."""
        return [np.flatnonzero(self.incidence[:, j]).tolist() for j in range(self.m)]


@dataclass(frozen=True)
class DegreeProfile:
    """Row and column sums of the incidence matrix, with regularity flags.

    ``d`` is the common vertex degree when the hypergraph is regular, else
    None; ``k`` is the common hyperedge size when uniform, else None.
    """

    vertex_degrees: np.ndarray
    edge_degrees: np.ndarray
    d: int | None
    k: int | None

    @property
    def is_regular(self) -> bool:
        return self.d is not None

    @property
    def is_uniform(self) -> bool:
        return self.k is not None


@dataclass(frozen=True)
class BipartiteModel:
    """Biadjacency matrix [[0, H], [H^T, 0]] of the vertex/edge bipartite graph."""

    biadjacency: np.ndarray


def from_edge_lists(n: int, edges) -> Hypergraph:
    """Build a hypergraph on n vertices from an ordered collection of vertex sets."""
    edges = list(edges)
    if n < 1:
        raise ValueError("need at least one vertex")
    h = np.zeros((n, len(edges)), dtype=np.int64)
    for j, edge in enumerate(edges):
        members = list(edge)
        if not members:
            raise EmptyEdgeError(f"hyperedge {j} is empty")
        if len(set(members)) != len(members):
            raise ValueError(f"hyperedge {j} repeats a vertex")
        for v in members:
            v = int(v)
            if not 0 <= v < n:
                raise IndexOutOfRangeError(f"hyperedge {j}: vertex {v} outside [0, {n})")
            h[v, j] = 1
    return Hypergraph(n, len(edges), h)


def degree_profile(hg: Hypergraph) -> DegreeProfile:
    """Vertex degrees d(v), hyperedge sizes, and regular/uniform flags."""
    vertex_degrees = hg.incidence.sum(axis=1)
    edge_degrees = hg.incidence.sum(axis=0)
    d = int(vertex_degrees[0]) if (vertex_degrees == vertex_degrees[0]).all() else None
    k = int(edge_degrees[0]) if (edge_degrees == edge_degrees[0]).all() else None
    return DegreeProfile(vertex_degrees, edge_degrees, d, k)


def to_bipartite(hg: Hypergraph) -> BipartiteModel:
    """Biadjacency matrix of the bipartite incidence graph, size (n+m) x (n+m)."""
    h = hg.incidence
    biadjacency = np.block(
        [
            [np.zeros((hg.n, hg.n), dtype=np.int64), h],
            [h.T, np.zeros((hg.m, hg.m), dtype=np.int64)],
        ]
    )
    return BipartiteModel(biadjacency)


def is_connected(hg: Hypergraph) -> bool:
    """True when the bipartite incidence graph is a single component."""
    seen_v = np.zeros(hg.n, dtype=bool)
    seen_e = np.zeros(hg.m, dtype=bool)
    stack = [0]
    seen_v[0] = True
    while stack:
        v = stack.pop()
        for e in np.flatnonzero(hg.incidence[v]):
            if seen_e[e]:
                continue
            seen_e[e] = True
            for u in np.flatnonzero(hg.incidence[:, e]):
                if not seen_v[u]:
                    seen_v[u] = True
                    stack.append(int(u))
    return bool(seen_v.all() and seen_e.all())


def _repair_pairing(rng, stub_v, stub_e):
    """Swap colliding edge stubs until every (v, e) incidence is distinct.

    Plain reject-and-reshuffle has acceptance probability roughly
    exp(-(d-1)(k-1)/2), which is hopeless already at d = k = 5, so collisions
    are repaired in place instead. Returns the repaired edge stubs or None.
    """
    size = stub_v.size
    m = int(stub_e.max()) + 1
    e = stub_e.copy()
    for _ in range(_REPAIR_PASSES):
        codes = stub_v * m + e
        order = np.argsort(codes, kind="stable")
        sorted_codes = codes[order]
        extra = order[np.concatenate(([False], sorted_codes[1:] == sorted_codes[:-1]))]
        if extra.size == 0:
            return e
        for i in extra:
            j = int(rng.integers(size))
            e[i], e[j] = e[j], e[i]
    return None


def random_regular_uniform(n: int, m: int, k: int, d: int, seed: int = 0) -> Hypergraph:
    """Random d-regular k-uniform hypergraph via a biregular configuration model.

    Vertex stubs (each vertex d times) are paired with a shuffled list of
    edge stubs (each hyperedge k times); duplicate incidences are repaired by
    stub swaps, with a fresh shuffle after a stalled repair. Deterministic
    for a fixed seed.
    """
    if min(n, m, k, d) < 1:
        raise InfeasibleParametersError("infeasible: all of n, m, k, d must be >= 1")
    if n * d != m * k:
        raise InfeasibleParametersError(f"infeasible: n*d != m*k ({n * d} != {m * k})")
    if k > n:
        raise InfeasibleParametersError(f"infeasible: k > n ({k} > {n})")
    if d > m:
        raise InfeasibleParametersError(f"infeasible: d > m ({d} > {m})")
    rng = np.random.default_rng(seed)
    stub_v = np.repeat(np.arange(n), d)
    stub_e = np.repeat(np.arange(m), k)
    for _ in range(GENERATOR_RETRY_BUDGET):
        paired = _repair_pairing(rng, stub_v, rng.permutation(stub_e))
        if paired is None:
            continue
        h = np.zeros((n, m), dtype=np.int64)
        h[stub_v, paired] = 1
        return Hypergraph(n, m, h)
    raise GenerationFailedError(
        f"no simple incidence structure found for (n={n}, m={m}, k={k}, d={d}) "
        f"within {GENERATOR_RETRY_BUDGET} attempts"
    )


def random_feasible_parameters(rng, max_n: int = 60, max_pairs: int = 512):
    """Draw a feasible (n, m, k, d) with k in 2..5 and d in 1..5.

    Uses n = t*k, m = t*d so that n*d == m*k holds by construction, with t
    capped so n <= max_n and the pair-space dimension n*d <= max_pairs.
    """
    while True:
        k = int(rng.integers(2, 6))
        d = int(rng.integers(1, 6))
        t_max = min(max_n // k, max_pairs // (k * d))
        if t_max < 1:
            continue
        t = int(rng.integers(1, t_max + 1))
        return t * k, t * d, k, d


def parse(text: str) -> Hypergraph:
    """Parse the .hg plain-text format.

    Lines starting with '#' are comments and blank lines are skipped. The
    first remaining line must be ``n <N>``; every later line lists one
    hyperedge as whitespace-separated 0-based vertex indices, and the line
    order defines the edge indices.
    """
    n = None
    edges = []
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise HgSyntaxError(lineno, f"expected header 'n <count>', got {line!r}")
            try:
                n = int(tokens[1])
            except ValueError:
                raise HgSyntaxError(lineno, f"vertex count {tokens[1]!r} is not an integer") from None
            if n < 1:
                raise HgSyntaxError(lineno, f"vertex count must be >= 1, got {n}")
            continue
        try:
            members = [int(tok) for tok in tokens]
        except ValueError:
            raise HgSyntaxError(lineno, f"non-integer vertex index in {line!r}") from None
        if len(set(members)) != len(members):
            raise HgSyntaxError(lineno, f"duplicate vertex in hyperedge {line!r}")
        for v in members:
            if not 0 <= v < n:
                raise IndexOutOfRangeError(f"line {lineno}: vertex {v} outside [0, {n})")
        edges.append(members)
    if n is None:
        raise HgSyntaxError(last_line or 1, "missing 'n <count>' header")
    if not edges:
        raise HgSyntaxError(last_line, "no hyperedge lines")
    return from_edge_lists(n, edges)


def serialize(hg: Hypergraph) -> str:
    """Canonical .hg text: header, then each edge's vertices sorted ascending."""
    lines = [f"n {hg.n}"]
    lines += [" ".join(str(v) for v in edge) for edge in hg.edge_sets()]
    return "\n".join(lines) + "\n"
