"""Spectra and energies of block matrices ``M[M_1, ..., M_k, a]``.

``M`` carries symmetric blocks ``M_i`` (order ``n_i``, zero trace, constant
row sum ``r_i >= 0``) on the diagonal and the constant ``a`` everywhere
else. Its spectrum is the union of every block spectrum with one copy of
``r_i`` removed, together with the spectrum of the k x k quotient

    M''[i, i] = r_i,    M''[i, j] = a * sqrt(n_i * n_j).

``M''`` is congruent to ``a(J - I) + D`` with ``D = diag(r_i / n_i)``, and
the inertia of that small matrix decides which closed energy formula holds.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .eigen import (EnergyReport, Method, Spectrum, eig_sym, energy,
                    energy_report)
from .errors import InternalInconsistency, InvalidBlockSpec

log = logging.getLogger(__name__)

STRUCTURE_ATOL = 1e-10
RATIO_SLACK = 1e-12
MATCH_TOL = 1e-7


@dataclass(frozen=True, eq=False)
class BlockSpec:
    blocks: tuple[np.ndarray, ...]
    row_sums: tuple[float, ...]
    a: float

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(b.shape[0] for b in self.blocks)

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def ratios(self) -> np.ndarray:
        return np.array(self.row_sums) / np.array(self.sizes)


class CaseLabel(str, enum.Enum):
    CASE_I = "CaseI"
    CASE_II = "CaseII"
    CASE_III = "CaseIII"
    NO_CASE = "NoCase"


def validate_blocks(blocks: Sequence[np.ndarray], a: float,
                    atol: float = STRUCTURE_ATOL) -> BlockSpec:
    """Check the block hypotheses and extract the row sums ``r_i``."""
    if len(blocks) < 2:
        raise InvalidBlockSpec(f"need k >= 2 blocks, got {len(blocks)}")
    if a == 0:
        raise InvalidBlockSpec("coupling constant a must be nonzero")
    checked, sums = [], []
    for i, raw in enumerate(blocks):
        b = np.array(raw, dtype=float)
        if b.ndim != 2 or b.shape[0] != b.shape[1] or b.shape[0] == 0:
            raise InvalidBlockSpec(f"block {i} is not a non-empty square matrix")
        if not np.array_equal(b, b.T):
            raise InvalidBlockSpec(f"block {i} is not symmetric")
        rows = b.sum(axis=1)
        r = float(rows.mean())
        if np.max(np.abs(rows - r)) > atol:
            raise InvalidBlockSpec(f"block {i} has non-constant row sums")
        if r < -atol:
            raise InvalidBlockSpec(f"block {i} has negative row sum {r}")
        if abs(np.trace(b)) > atol:
            raise InvalidBlockSpec(f"block {i} has nonzero trace {np.trace(b)}")
        b.setflags(write=False)
        checked.append(b)
        sums.append(max(r, 0.0))
    return BlockSpec(tuple(checked), tuple(sums), float(a))


def build_quotient(bs: BlockSpec) -> np.ndarray:
    # sqrt of the integer product keeps the result exactly symmetric
    q = bs.a * np.sqrt(np.outer(bs.sizes, bs.sizes).astype(float))
    np.fill_diagonal(q, bs.row_sums)
    return q


def congruent_form(bs: BlockSpec) -> np.ndarray:
    """``a(J - I) + diag(r_i / n_i)``; congruent to the quotient."""
    k = bs.k
    return bs.a * (np.ones((k, k)) - np.eye(k)) + np.diag(bs.ratios)


def assemble_dense(bs: BlockSpec) -> np.ndarray:
    rows = []
    for i, bi in enumerate(bs.blocks):
        row = [bi if i == j else np.full((bi.shape[0], bj.shape[0]), bs.a)
               for j, bj in enumerate(bs.blocks)]
        rows.append(row)
    return np.block(rows)


def block_spectra(bs: BlockSpec) -> list[Spectrum]:
    return [eig_sym(b) for b in bs.blocks]


def _drop_nearest(s: Spectrum, value: float, tol: float) -> np.ndarray:
    vals = s.eigenvalues
    idx = int(np.argmin(np.abs(vals - value)))
    if abs(vals[idx] - value) > tol:
        raise InternalInconsistency(
            f"row sum {value} is not an eigenvalue of its block (nearest {vals[idx]})")
    return np.delete(vals, idx)


def assemble_spectrum(bs: BlockSpec, match_tol: float = MATCH_TOL) -> Spectrum:
    parts = [_drop_nearest(s, r, match_tol) for s, r in zip(block_spectra(bs), bs.row_sums)]
    parts.append(eig_sym(build_quotient(bs)).eigenvalues)
    return Spectrum(np.concatenate(parts))


def case_iii_predicates(bs: BlockSpec, spectra: Sequence[Spectrum] | None = None) -> tuple[bool, bool]:
    """Evaluate the third hypothesis with the largest and with the smallest ratio.

    The largest-ratio form is the one the energy formula is derived from;
    the smallest-ratio form is the weaker variant. Returns both.
    """
    if bs.a >= 0:
        return False, False
    spectra = block_spectra(bs) if spectra is None else spectra
    lows = np.array([s.lambda_min for s in spectra])
    tols = np.array([s.default_tol() for s in spectra])
    if np.any(lows > tols):
        return False, False
    base = bs.a * (bs.k - 1)
    with_max = bool(np.all(base + bs.ratios.max() <= lows + RATIO_SLACK))
    with_min = bool(np.all(base + bs.ratios.min() <= lows + RATIO_SLACK))
    return with_max, with_min


def _at_most_one_positive(s: Spectrum, r: float) -> bool:
    positive = s.eigenvalues[s.eigenvalues > s.default_tol()]
    if positive.size == 0:
        return True
    return positive.size == 1 and abs(positive[0] - r) <= MATCH_TOL


def classify_case(bs: BlockSpec) -> CaseLabel:
    spectra = block_spectra(bs)
    ratios = bs.ratios
    if bs.a > 0 and -bs.a + ratios.min() >= -RATIO_SLACK:
        return CaseLabel.CASE_I
    if (-bs.a + ratios.max() <= RATIO_SLACK
            and all(_at_most_one_positive(s, r) for s, r in zip(spectra, bs.row_sums))):
        return CaseLabel.CASE_II
    with_max, with_min = case_iii_predicates(bs, spectra)
    if with_max != with_min:
        log.info("third-case hypothesis differs by ratio choice: max-ratio=%s, min-ratio=%s",
                 with_max, with_min)
    if with_max:
        return CaseLabel.CASE_III
    return CaseLabel.NO_CASE


def energy_via_cases(bs: BlockSpec) -> EnergyReport:
    """Energy from block energies and the quotient spectrum.

    Falls back to a dense eigensolve of the assembled matrix when none of
    the three hypotheses holds.
    """
    case = classify_case(bs)
    if case is CaseLabel.NO_CASE:
        return energy_report(eig_sym(assemble_dense(bs)), Method.DENSE)

    quotient = eig_sym(build_quotient(bs))
    if case is CaseLabel.CASE_I:
        value = sum(energy(s) for s in block_spectra(bs))
    elif case is CaseLabel.CASE_II:
        value = 2.0 * quotient.lambda_max
    else:
        value = sum(energy(s) for s in block_spectra(bs)) - 2.0 * quotient.lambda_min

    full = assemble_spectrum(bs)
    rep = energy_report(full, Method.QUOTIENT)
    return EnergyReport(value, rep.spectral_radius, rep.negative_sum, rep.inertia, Method.QUOTIENT)


def uniform_block_spec(parts: Sequence[int], inside: float, a: float) -> BlockSpec:
    """Blocks ``inside * (J - I)`` of the given sizes with coupling ``a``."""
    blocks = [inside * (np.ones((s, s)) - np.eye(s)) for s in parts]
    return validate_blocks(blocks, a)
