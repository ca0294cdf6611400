"""Spectra of block matrices from a small quotient matrix.

A symmetric matrix made of regular diagonal blocks joined by a constant
``a`` has the eigenvalues of each block (minus one copy of its row sum)
plus those of a k x k quotient.
"""
import numpy as np

from rdenergy.eigen import eig_sym, energy
from rdenergy.quotient import (assemble_dense, assemble_spectrum, build_quotient,
                               classify_case, energy_via_cases, validate_blocks)

np.set_printoptions(precision=4, suppress=True)
spacer = "-" * 60


def jmi(n):
    return np.ones((n, n)) - np.eye(n)


cycle5 = np.roll(np.eye(5), 1, axis=1)
cycle5 = cycle5 + cycle5.T
bs = validate_blocks([0.5 * jmi(3), cycle5, np.zeros((1, 1))], a=1.0)
print("block sizes", bs.sizes, "row sums", bs.row_sums, "coupling", bs.a)
print("quotient:")
print(build_quotient(bs))
print(spacer)

fast = assemble_spectrum(bs)
dense = eig_sym(assemble_dense(bs))
print("assembled:", fast)
print("dense:    ", dense)
print("largest difference", np.max(np.abs(fast.eigenvalues - dense.eigenvalues)))
print(spacer)

for name, spec in [("distance K_{3,3,2}", validate_blocks([2 * jmi(3), 2 * jmi(3), 2 * jmi(2)], 1.0)),
                   ("Seidel K_{2,2,2}", validate_blocks([jmi(2)] * 3, -1.0)),
                   ("RD K_{4,1}", validate_blocks([0.5 * jmi(4), np.zeros((1, 1))], 1.0))]:
    rep = energy_via_cases(spec)
    print(f"{name:<20} case {classify_case(spec).value:<8} energy {rep.energy:.6f} "
          f"(dense {energy(eig_sym(assemble_dense(spec))):.6f})")
