"""Six distance-based matrices of one small graph, and their energies."""
import numpy as np

import rdenergy as rd
from rdenergy.matrices import MatrixKind, build, dense_energy

np.set_printoptions(precision=4, suppress=True)
spacer = "-" * 60

g = rd.complete_multipartite((2, 2, 1))
dm = rd.apsp(g)
print("K_{2,2,1}:", g.n, "vertices,", g.num_edges, "edges, diameter", dm.diam)
print("distances:")
print(dm.matrix)
print(spacer)

for kind in MatrixKind:
    m = build(kind, g, dm)
    print(f"{kind.value:>6}  energy {dense_energy(g, kind):10.6f}   first row {m[0]}")
print(spacer)

# a graph from an edge list: a path on four vertices has diameter 3
p4 = rd.graphs.from_edges(4, [(0, 1), (1, 2), (2, 3)])
print("P4 reciprocal distance matrix:")
print(rd.reciprocal_distance(rd.apsp(p4)))
print("its spectrum:", rd.eig_sym(rd.reciprocal_distance(rd.apsp(p4))))
