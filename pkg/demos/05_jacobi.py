"""The cyclic Jacobi eigensolver next to LAPACK."""
import time

import numpy as np

from rdenergy.eigen import jacobi_eigh

rng = np.random.default_rng(0)
for n in (5, 40, 120):
    b = rng.normal(size=(n, n))
    m = b + b.T
    t0 = time.perf_counter()
    vals, vecs = jacobi_eigh(m)
    t1 = time.perf_counter()
    ref = np.sort(np.linalg.eigvalsh(m))[::-1]
    resid = np.linalg.norm(m @ vecs - vecs * vals) / np.linalg.norm(m)
    print(f"n={n:4d}  {t1 - t0:7.3f}s  max |diff vs LAPACK| {np.max(np.abs(vals - ref)):.1e}  "
          f"relative residual {resid:.1e}")
