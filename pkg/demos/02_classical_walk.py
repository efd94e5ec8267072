"""The classical two-step random walk: vertex -> hyperedge -> vertex.

Run with: python3 demos/02_classical_walk.py
"""

import numpy as np

import hyperwalk as hw

triangle = hw.from_edge_lists(3, [{0, 1}, {1, 2}, {0, 2}])
ts = hw.build_transitions(triangle)

# One walk step first picks an incident hyperedge uniformly, then a vertex
# inside it uniformly (the current vertex included, so the chain has
# self-loops). The two half-step matrices are row-stochastic.
print("vertex -> edge matrix:")
print(ts.vertex_to_edge)
print("edge -> vertex matrix:")
print(ts.edge_to_vertex)
print("row sums:", ts.vertex_to_edge.sum(axis=1), ts.edge_to_vertex.sum(axis=1))

# Their product is the vertex chain; for a regular uniform hypergraph it is
# symmetric, here with 1/2 on the diagonal and 1/4 off it.
print("\nvertex chain P:")
print(ts.vertex_chain)

# Push a point mass through a few steps.
dist = hw.Distribution(np.array([1.0, 0.0, 0.0]))
for t in range(4):
    print(f"t={t}:", np.round(dist.probabilities, 6))
    dist = hw.classical_step(ts, dist)

# The fixed point of a regular uniform instance is the uniform law, found
# here by power iteration.
pi = hw.stationary_distribution(ts, "vertex")
print("\nstationary distribution:", pi.probabilities)

# Sampled trajectories alternate vertex, edge, vertex, ... and their
# vertex-visit frequencies converge to the stationary law.
path = hw.sample_trajectory(ts, start_vertex=0, steps=20000, seed=11)
print("first few trajectory entries (v, e, v, e, ...):", path[:9])
visits = np.bincount(path[::2], minlength=3) / len(path[::2])
print("empirical vertex frequencies:", np.round(visits, 4))
