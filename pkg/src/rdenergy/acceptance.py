"""Acceptance checks, shared by the test suite and ``rdenergy verify``.

Each ``check_*`` function runs one criterion at its fixed tolerance and
returns a :class:`CriterionResult`. Random inputs come from seeded
generators, so every run sees the same cases.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import closed_forms as cf
from .eigen import eig_sym, energy, inertia, jacobi_eigh
from .extremal import (edge_deletion_sweep, legal_shifts, partitions, perron_check, scan,
                       shift_gain)
from .graphs import (PartitionSpec, complete_multipartite, complete_split,
                     multipartite_minus_edge, turan)
from .matrices import MatrixKind, dense_spectrum
from .quotient import (BlockSpec, assemble_dense, assemble_spectrum, build_quotient,
                       congruent_form, validate_blocks)

DEFAULT_SEED = 20240607


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d} {self.name}: {self.detail} ({self.seconds:.1f}s)"


# -- random generators -------------------------------------------------------

def random_regular_block(rng: np.random.Generator, size: int, row_sum: float) -> np.ndarray:
    """Random symmetric zero-trace matrix with every row summing to ``row_sum``."""
    if size == 1:
        return np.zeros((1, 1))
    b = rng.uniform(-2, 2, (size, size))
    b = b + b.T
    proj = np.eye(size) - np.full((size, size), 1.0 / size)
    core = proj @ b @ proj
    m = core - (np.trace(core) + row_sum) / (size - 1) * proj + row_sum / size * np.ones((size, size))
    return 0.5 * (m + m.T)


def random_block_spec(rng: np.random.Generator, max_k: int = 6, max_size: int = 12) -> BlockSpec:
    k = int(rng.integers(2, max_k + 1))
    sizes = rng.integers(1, max_size + 1, k)
    blocks = [random_regular_block(rng, int(s), 0.0 if s == 1 else float(rng.uniform(0, 3)))
              for s in sizes]
    a = 0.0
    while abs(a) < 1e-3:
        a = float(rng.uniform(-3, 3))
    return validate_blocks(blocks, a)


def random_symmetric(rng: np.random.Generator, n: int) -> np.ndarray:
    b = rng.normal(size=(n, n))
    return b + b.T


def random_partition(rng: np.random.Generator, max_k: int, max_n: int) -> PartitionSpec:
    k = int(rng.integers(2, max_k + 1))
    n = int(rng.integers(k, max_n + 1))
    cuts = np.sort(rng.choice(np.arange(1, n), size=k - 1, replace=False))
    return PartitionSpec(tuple(np.diff(np.concatenate([[0], cuts, [n]])).tolist()))


def random_e_spec(rng: np.random.Generator) -> cf.EMatrixSpec:
    p, q = (int(x) for x in rng.integers(1, 9, 2))
    a, c = rng.uniform(-2, 2, 2)
    b = 0.0
    while abs(b) < 1e-3:
        b = float(rng.uniform(-2, 2))
    return cf.EMatrixSpec(p, q, float(a), b, float(c))


def all_partitions_up_to(n_max: int, k_min: int = 2) -> list[PartitionSpec]:
    return [spec for n in range(k_min, n_max + 1) for k in range(k_min, n + 1)
            for spec in partitions(n, k)]


# -- criteria ------------------------------------------------------------------

def check_k22_values(tol: float = 1e-9) -> tuple[bool, str]:
    target_full, target_cut = 5.0, 4.0 / 3.0 + math.sqrt(85) / 3.0
    values = {
        "closed K22": cf.rd_energy_multipartite((2, 2)),
        "dense K22": energy(dense_spectrum(complete_multipartite((2, 2)))),
        "closed K22-e": cf.kqq_minus_edge_energy(2),
        "dense K22-e": energy(dense_spectrum(multipartite_minus_edge((2, 2)))),
    }
    errs = {k: abs(v - (target_full if "-e" not in k else target_cut)) for k, v in values.items()}
    return max(errs.values()) <= tol, f"max error {max(errs.values()):.2e}"


def check_spectrum_union(count: int = 200, seed: int = DEFAULT_SEED,
                         tol: float = 1e-8) -> tuple[bool, str]:
    rng = np.random.default_rng(seed)
    worst, inertia_bad = 0.0, 0
    for _ in range(count):
        bs = random_block_spec(rng)
        assembled = assemble_spectrum(bs)
        dense = eig_sym(assemble_dense(bs))
        worst = max(worst, float(np.max(np.abs(assembled.eigenvalues - dense.eigenvalues))))
        if inertia(eig_sym(build_quotient(bs))) != inertia(eig_sym(congruent_form(bs))):
            inertia_bad += 1
    ok = worst <= tol and inertia_bad == 0
    return ok, f"{count} specs, max |diff| {worst:.2e}, inertia mismatches {inertia_bad}"


def _identity_cases(spec: PartitionSpec):
    n, k = spec.n, spec.k
    yield MatrixKind.RD, cf.rd_energy_multipartite, lambda s: 2 * s.lambda_max
    yield MatrixKind.CD, cf.cd_energy_multipartite, lambda s: 2 * s.lambda_max
    yield MatrixKind.A, cf.adjacency_energy_multipartite, lambda s: 2 * s.lambda_max
    if spec.parts[-1] >= 2:
        yield MatrixKind.D, cf.distance_energy_multipartite, lambda s: 4.0 * (n - k)
        yield MatrixKind.RCD, cf.rcd_energy_multipartite, lambda s: 2.0 * (n - k)
    if k >= 3:
        yield (MatrixKind.SEIDEL, cf.seidel_energy_multipartite,
               lambda s: 2.0 * (n - k) - 2 * s.lambda_min)


def check_energy_identities(n_max: int = 14, tol: float = 1e-8) -> tuple[bool, str]:
    worst, cases = 0.0, 0
    for spec in all_partitions_up_to(n_max):
        g = complete_multipartite(spec)
        for kind, closed, identity in _identity_cases(spec):
            s = dense_spectrum(g, kind)
            dense_e = energy(s)
            worst = max(worst, abs(closed(spec) - dense_e), abs(identity(s) - dense_e))
            cases += 1
    return worst <= tol, f"{cases} (partition, matrix) cases, max |diff| {worst:.2e}"


def check_extremal_ordering(n_lo: int = 6, n_hi: int = 18, k_max: int = 6) -> tuple[bool, str]:
    failures, scans = [], 0
    for n in range(n_lo, n_hi + 1):
        for k in range(2, min(k_max, n - 1) + 1):
            rep = scan(n, k)
            scans += 1
            if rep.argmin != complete_split(n, k - 1) or rep.argmax != turan(n, k):
                failures.append((n, k))
    return not failures, f"{scans} scans, failures {failures or 'none'}"


def check_shift_monotonicity(n_max: int = 18, margin: float = 1e-10) -> tuple[bool, str]:
    worst, count = math.inf, 0
    for spec in all_partitions_up_to(n_max):
        for s in legal_shifts(spec):
            worst = min(worst, shift_gain(spec, s))
            count += 1
    return worst > margin, f"{count} shifts, smallest gain {worst:.3e}"


def check_kqq_threshold(tol: float = 1e-8) -> tuple[bool, str]:
    rep = edge_deletion_sweep("kqq", 2, 16)
    signs = {r.params[0]: r.sign for r in rep.rows}
    dense_signs = {r.params[0]: int(np.sign(r.dense_after - r.dense_before)) for r in rep.rows}
    expected = {q: (-1 if q <= 7 else 1) for q in range(2, 17)}
    ok = signs == expected and dense_signs == expected and rep.max_disagreement <= tol
    return ok, f"signs {'as expected' if signs == expected else signs}, path gap {rep.max_disagreement:.2e}"


def check_tripartite(limit: int = 7, slack: float = 1e-10, tol: float = 1e-8) -> tuple[bool, str]:
    rep = edge_deletion_sweep("kpqr", 1, limit)
    worst_delta = max(r.delta for r in rep.rows)
    structure_bad = []
    for p, q, r in (row.params for row in rep.rows):
        roots = cf.kpqr_minus_edge_roots(p, q, r)
        positives = int(np.sum(roots.eigenvalues > roots.default_tol()))
        if positives != 1 or cf.descartes_positive_bound(cf.kpqr_polynomial(p, q, r)) != 1:
            structure_bad.append((p, q, r))
    ok = worst_delta <= slack and not structure_bad and rep.max_disagreement <= tol
    return ok, (f"{len(rep.rows)} triples, max delta {worst_delta:.3e}, "
                f"structure failures {structure_bad or 'none'}, path gap {rep.max_disagreement:.2e}")


def check_e_matrix(count: int = 50, seed: int = DEFAULT_SEED, tol: float = 1e-8) -> tuple[bool, str]:
    rng = np.random.default_rng(seed + 1)
    worst, mult_bad = 0.0, 0
    for _ in range(count):
        spec = random_e_spec(rng)
        fast = cf.e_matrix_spectrum(spec)
        dense = eig_sym(cf.e_matrix(spec))
        worst = max(worst, float(np.max(np.abs(fast.eigenvalues - dense.eigenvalues))))
        if dense.multiplicity(-spec.b, 1e-7) < spec.p + spec.q - 2:
            mult_bad += 1
    return worst <= tol and mult_bad == 0, f"{count} specs, max |diff| {worst:.2e}, multiplicity failures {mult_bad}"


def check_perron(count: int = 50, seed: int = DEFAULT_SEED, tol: float = 1e-7) -> tuple[bool, str]:
    rng = np.random.default_rng(seed + 2)
    dev, rel = 0.0, 0.0
    for _ in range(count):
        res = perron_check(random_partition(rng, 5, 40))
        dev = max(dev, res.max_part_deviation)
        rel = max(rel, res.max_relative_error)
    return dev < tol and rel < tol, f"{count} partitions, deviation {dev:.2e}, relative error {rel:.2e}"


def check_eigensolver(count: int = 100, seed: int = DEFAULT_SEED) -> tuple[bool, str]:
    rng = np.random.default_rng(seed + 3)
    worst_res, interlace_bad, mono_bad = 0.0, 0, 0
    for _ in range(count):
        n = int(rng.integers(1, 31))
        m = random_symmetric(rng, n)
        vals, vecs = jacobi_eigh(m)
        fro = float(np.linalg.norm(m))
        res = np.linalg.norm(m @ vecs - vecs * vals, axis=0).max() / fro
        worst_res = max(worst_res, float(res))

        k = int(rng.integers(1, n + 1))
        idx = np.sort(rng.choice(n, size=k, replace=False))
        sub = eig_sym(m[np.ix_(idx, idx)]).eigenvalues
        i = np.arange(k)
        if np.any(vals[n - k + i] > sub + 1e-9) or np.any(sub > vals[i] + 1e-9):
            interlace_bad += 1

        lower = np.abs(random_symmetric(rng, n))
        upper = lower + np.abs(random_symmetric(rng, n))
        if eig_sym(lower).lambda_max > eig_sym(upper).lambda_max + 1e-9:
            mono_bad += 1
    ok = worst_res <= 1e-8 and interlace_bad == 0 and mono_bad == 0
    return ok, (f"{count} matrices, max residual/||M|| {worst_res:.2e}, "
                f"interlacing failures {interlace_bad}, monotonicity failures {mono_bad}")


CRITERIA: list[tuple[int, str, Callable[[], tuple[bool, str]]]] = [
    (1, "K22 and K22-e energies", check_k22_values),
    (2, "spectrum union and inertia congruence", check_spectrum_union),
    (3, "multipartite energy identities", check_energy_identities),
    (4, "extremal ordering CS/Turan", check_extremal_ordering),
    (5, "shift monotonicity", check_shift_monotonicity),
    (6, "Kqq edge-deletion threshold", check_kqq_threshold),
    (7, "tripartite edge deletion", check_tripartite),
    (8, "E-matrix spectrum", check_e_matrix),
    (9, "Perron vector structure", check_perron),
    (10, "eigensolver sanity", check_eigensolver),
]


def run_criterion(number: int) -> CriterionResult:
    for num, name, fn in CRITERIA:
        if num == number:
            start = time.perf_counter()
            try:
                ok, detail = fn()
            except Exception as exc:  # a crash is a failed criterion, reported as such
                ok, detail = False, f"raised {type(exc).__name__}: {exc}"
            return CriterionResult(num, name, ok, detail, time.perf_counter() - start)
    raise KeyError(number)


def run_all() -> list[CriterionResult]:
    return [run_criterion(num) for num, _, _ in CRITERIA]
