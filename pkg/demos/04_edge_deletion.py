"""Removing one edge from K_{q,q}: energy drops for small q and rises from q = 8."""
import rdenergy as rd
from rdenergy.closed_forms import kmn_minus_edge_spectrum, kpqr_minus_edge_spectrum

spacer = "-" * 60

print("K_{2,2} minus an edge is P4:", kmn_minus_edge_spectrum(2, 2))
print(spacer)

rep = rd.edge_deletion_sweep("kqq", 2, 12)
print("   q   before      after       delta")
for r in rep.rows:
    print(f"{r.params[0]:4d}  {r.energy_before:9.5f}  {r.energy_after:9.5f}  {r.delta:+.5f}")
print("closed form vs dense, worst gap:", rep.max_disagreement)
print(spacer)

s = kpqr_minus_edge_spectrum(3, 2, 2)
print("K_{3,2,2} minus an edge:", s)
print("only one positive eigenvalue, so energy = 2 * lambda_1 =", 2 * s.lambda_max)
print("energy of K_{3,2,2} itself:", rd.closed_forms.rd_energy_multipartite((3, 2, 2)))
