"""Building, generating and serializing hypergraphs.

Run with: python3 demos/01_hypergraphs.py
"""

import numpy as np

import hyperwalk as hw

# A hypergraph is a set of vertices plus hyperedges, each hyperedge an
# arbitrary non-empty subset of the vertices. The triangle graph, read as a
# hypergraph, has three 2-element hyperedges.
triangle = hw.from_edge_lists(3, [{0, 1}, {1, 2}, {0, 2}])
print("triangle incidence matrix:")
print(triangle.incidence)

profile = hw.degree_profile(triangle)
print("vertex degrees:", profile.vertex_degrees, "-> regular with d =", profile.d)
print("edge sizes:    ", profile.edge_degrees, "-> uniform with k =", profile.k)

# The degree handshake: both totals count the incident (vertex, edge) pairs.
print("sum d(v) =", profile.vertex_degrees.sum(), "== sum delta(e) =", profile.edge_degrees.sum())

# The bipartite model puts vertices on one side, hyperedges on the other,
# and connects v to e exactly when v is a member of e.
model = hw.to_bipartite(triangle)
print("\nbiadjacency matrix (vertices 0-2, hyperedges 3-5):")
print(model.biadjacency)
print("symmetric:", np.array_equal(model.biadjacency, model.biadjacency.T))

# Random d-regular k-uniform instances come from a stub-pairing
# configuration model and are deterministic per seed.
hg = hw.random_regular_uniform(n=6, m=4, k=3, d=2, seed=7)
print("\nrandom 2-regular 3-uniform instance on 6 vertices, 4 hyperedges:")
print(hg.incidence)
print("row sums:", hg.incidence.sum(axis=1), " column sums:", hg.incidence.sum(axis=0))
print("connected:", hw.is_connected(hg))

# The .hg text format round-trips through a canonical form: edges keep file
# order, vertices inside an edge are sorted ascending.
text = hw.serialize(hg)
print("\nserialized .hg text:")
print(text, end="")
print("round-trip identical:", hw.serialize(hw.parse(text)) == text)
