"""Which complete k-partite graph on n vertices has the smallest and largest RD energy."""
import rdenergy as rd
from rdenergy.extremal import balance, perron_check, shift_gain

spacer = "-" * 60

rep = rd.scan(9, 3)
for spec, e in rep.rows:
    mark = " <- min" if spec == rep.argmin else " <- max" if spec == rep.argmax else ""
    print(f"{str(spec):>8}  {e:.6f}{mark}")
print("min is the complete split graph:", rep.verified[0])
print("max is the Turan graph:", rep.verified[1])
print(spacer)

print("balancing (7,1,1) one vertex at a time:")
for spec in balance((7, 1, 1)):
    print(f"  {str(spec):>8}  lambda_1 = {rd.closed_forms.rd_lambda1_multipartite(spec):.6f}")
print("gain of the first shift:", shift_gain((7, 1, 1), 1))
print(spacer)

chk = perron_check((5, 3, 1))
print("Perron vector of RD(K_{5,3,1}), one value per part:", chk.part_values)
print("spread inside parts", chk.max_part_deviation, "formula error", chk.max_relative_error)
