"""Closed-form energies of complete multipartite graphs and their edge-deleted variants.

Energies of ``K_{n_1,...,n_k}`` come from k x k quotient matrices. Spectra
of graphs with one edge removed come from small reduced quotients over
vertex classes in which every entry between two classes is the same.
No full n x n eigensolve happens in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .eigen import EnergyReport, Method, Spectrum, eig_sym, energy, energy_report
from .errors import InternalInconsistency, PreconditionViolated
from .graphs import PartitionSpec, as_partition
from .matrices import MatrixKind
from .quotient import (BlockSpec, assemble_spectrum, build_quotient,
                       energy_via_cases, uniform_block_spec)

POLY_RTOL = 1e-6


def _needs_k(spec: PartitionSpec, k_min: int) -> None:
    if spec.k < k_min:
        raise PreconditionViolated(f"need at least {k_min} parts, got {spec.parts}")


def _needs_parts_ge2(spec: PartitionSpec) -> None:
    if spec.parts[-1] < 2:
        raise PreconditionViolated(f"formula needs every part >= 2, got {spec.parts}")


def multipartite_block_spec(parts: PartitionSpec | Sequence[int],
                            kind: MatrixKind | str) -> BlockSpec:
    """The block form of a graph matrix of ``K_{n_1,...,n_k}``.

    Pairs in the same part sit at distance 2 and pairs in different parts
    at distance 1, except for ``K_n`` (all parts of size 1) whose diameter
    is 1. Only the complementary kinds depend on the diameter.
    """
    spec = as_partition(parts)
    _needs_k(spec, 2)
    kind = MatrixKind(kind)
    diam = 2 if spec.parts[0] >= 2 else 1
    inside, a = {
        MatrixKind.RD: (0.5, 1.0),
        MatrixKind.D: (2.0, 1.0),
        MatrixKind.A: (0.0, 1.0),
        MatrixKind.SEIDEL: (1.0, -1.0),
        MatrixKind.CD: (diam - 1.0, float(diam)),
        MatrixKind.RCD: (1.0, 1.0 / diam),
    }[kind]
    return uniform_block_spec(spec.parts, inside, a)


def rd_quotient(parts: PartitionSpec | Sequence[int]) -> np.ndarray:
    """k x k matrix with diagonal (n_i - 1)/2 and off-diagonal sqrt(n_i n_j)."""
    return build_quotient(multipartite_block_spec(parts, MatrixKind.RD))


def rd_lambda1_multipartite(parts: PartitionSpec | Sequence[int]) -> float:
    return eig_sym(rd_quotient(parts)).lambda_max


def rd_energy_multipartite(parts: PartitionSpec | Sequence[int]) -> float:
    return 2.0 * rd_lambda1_multipartite(parts)


def rd_lambda1_bipartite(m: int, n: int) -> float:
    if m < 1 or n < 1:
        raise PreconditionViolated("part sizes must be positive")
    return 0.25 * (m + n - 2 + math.sqrt(m * m + 14 * m * n + n * n))


def adjacency_energy_multipartite(parts: PartitionSpec | Sequence[int]) -> float:
    return 2.0 * eig_sym(build_quotient(multipartite_block_spec(parts, MatrixKind.A))).lambda_max


def distance_energy_multipartite(parts: PartitionSpec | Sequence[int]) -> float:
    spec = as_partition(parts)
    _needs_k(spec, 2)
    _needs_parts_ge2(spec)
    return 4.0 * (spec.n - spec.k)


def seidel_energy_multipartite(parts: PartitionSpec | Sequence[int]) -> float:
    spec = as_partition(parts)
    _needs_k(spec, 3)
    lam_min = eig_sym(build_quotient(multipartite_block_spec(spec, MatrixKind.SEIDEL))).lambda_min
    if spec.parts[0] >= 2:
        lam_min = min(lam_min, -1.0)
    return 2.0 * (spec.n - spec.k) - 2.0 * lam_min


def cd_energy_multipartite(parts: PartitionSpec | Sequence[int]) -> float:
    return 2.0 * eig_sym(build_quotient(multipartite_block_spec(parts, MatrixKind.CD))).lambda_max


def rcd_energy_multipartite(parts: PartitionSpec | Sequence[int]) -> float:
    spec = as_partition(parts)
    _needs_k(spec, 2)
    _needs_parts_ge2(spec)
    return 2.0 * (spec.n - spec.k)


_CLOSED_FORMS = {
    MatrixKind.RD: rd_energy_multipartite,
    MatrixKind.D: distance_energy_multipartite,
    MatrixKind.A: adjacency_energy_multipartite,
    MatrixKind.SEIDEL: seidel_energy_multipartite,
    MatrixKind.CD: cd_energy_multipartite,
    MatrixKind.RCD: rcd_energy_multipartite,
}


def multipartite_energy(parts: PartitionSpec | Sequence[int],
                        kind: MatrixKind | str = MatrixKind.RD) -> EnergyReport:
    """Energy report for ``K_{n_1,...,n_k}``.

    Uses the closed formula when its hypotheses hold and the quotient case
    analysis otherwise. Spectral radius and inertia come from the quotient
    spectrum union, never from an n x n eigensolve.
    """
    kind = MatrixKind(kind)
    bs = multipartite_block_spec(parts, kind)
    try:
        value = _CLOSED_FORMS[kind](parts)
    except PreconditionViolated:
        return energy_via_cases(bs)
    rep = energy_report(assemble_spectrum(bs), Method.CLOSED_FORM)
    return EnergyReport(value, rep.spectral_radius, rep.negative_sum, rep.inertia,
                        Method.CLOSED_FORM)


# -- reduced quotients over uniform vertex classes ---------------------------

@dataclass(frozen=True, eq=False)
class ReducedQuotient:
    """Class-level view of a matrix that is constant between vertex classes.

    ``weights[i, j]`` is the common entry between distinct vertices of
    classes i and j. ``coupling`` is the class-sum matrix (row i sums one
    vertex of class i against all of class j); ``symmetric`` is its
    similarity transform by ``diag(sqrt(sizes))``.
    """

    sizes: tuple[int, ...]
    weights: np.ndarray

    @property
    def coupling(self) -> np.ndarray:
        s = np.array(self.sizes, dtype=float)
        out = self.weights * s[None, :]
        np.fill_diagonal(out, self.weights.diagonal() * (s - 1))
        return out

    @property
    def symmetric(self) -> np.ndarray:
        out = self.weights * np.sqrt(np.outer(self.sizes, self.sizes).astype(float))
        np.fill_diagonal(out, self.weights.diagonal() * (np.array(self.sizes) - 1))
        return out

    def roots(self) -> Spectrum:
        return eig_sym(self.symmetric)

    def fillers(self) -> np.ndarray:
        """Eigenvalues of vectors summing to zero inside one class."""
        return np.concatenate([np.full(s - 1, -self.weights[i, i])
                               for i, s in enumerate(self.sizes)] + [np.empty(0)])

    def spectrum(self) -> Spectrum:
        return Spectrum(np.concatenate([self.fillers(), self.roots().eigenvalues]))

    def expand(self) -> np.ndarray:
        """The full matrix, classes laid out consecutively."""
        labels = np.repeat(np.arange(len(self.sizes)), self.sizes)
        out = self.weights[labels[:, None], labels[None, :]].copy()
        np.fill_diagonal(out, 0.0)
        return out


def reduced_quotient(sizes: Sequence[int], weights: np.ndarray) -> ReducedQuotient:
    """Drop empty classes and wrap the rest."""
    w = np.asarray(weights, dtype=float)
    if not np.array_equal(w, w.T):
        raise PreconditionViolated("class weights must be symmetric")
    keep = [i for i, s in enumerate(sizes) if s > 0]
    w = w[np.ix_(keep, keep)].copy()
    w.setflags(write=False)
    return ReducedQuotient(tuple(int(sizes[i]) for i in keep), w)


@dataclass(frozen=True)
class EMatrixSpec:
    """Parameters of the (p+q+2)-order matrix with two apex rows.

    Vertices 1 and 2 are joined by ``a``; vertex 1 sees block P with ``b``
    and block Q with ``c``; vertex 2 the reverse. P and Q are internally
    ``b(J - I)`` and joined by ``c``.
    """

    p: int
    q: int
    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        if self.p < 1 or self.q < 1:
            raise PreconditionViolated(f"need p, q >= 1, got p={self.p}, q={self.q}")


def _e_weights(spec: EMatrixSpec) -> np.ndarray:
    a, b, c = spec.a, spec.b, spec.c
    return np.array([[0, a, b, c],
                     [a, 0, c, b],
                     [b, c, b, c],
                     [c, b, c, b]], dtype=float)


def e_matrix(spec: EMatrixSpec) -> np.ndarray:
    """Explicit dense form, used as an oracle."""
    p, q, a, b, c = spec.p, spec.q, spec.a, spec.b, spec.c
    n = p + q + 2
    e = np.zeros((n, n))
    P = slice(2, 2 + p)
    Q = slice(2 + p, n)
    e[0, 1] = e[1, 0] = a
    e[0, P] = e[P, 0] = b
    e[0, Q] = e[Q, 0] = c
    e[1, P] = e[P, 1] = c
    e[1, Q] = e[Q, 1] = b
    e[P, P] = b * (np.ones((p, p)) - np.eye(p))
    e[Q, Q] = b * (np.ones((q, q)) - np.eye(q))
    e[P, Q] = c
    e[Q, P] = c
    return e


def e_matrix_reduced(spec: EMatrixSpec) -> ReducedQuotient:
    return reduced_quotient((1, 1, spec.p, spec.q), _e_weights(spec))


def e_matrix_spectrum(spec: EMatrixSpec) -> Spectrum:
    """``-b`` with multiplicity p+q-2 plus the four reduced-quotient roots."""
    rq = e_matrix_reduced(spec)
    return Spectrum(np.concatenate([np.full(spec.p + spec.q - 2, -spec.b),
                                    rq.roots().eigenvalues]))


def e_matrix_charpoly(spec: EMatrixSpec) -> list[float]:
    """Monic quartic whose roots are the non-filler eigenvalues, highest degree first."""
    p, q, a, b, c = spec.p, spec.q, spec.a, spec.b, spec.c
    return [
        1.0,
        -b * p - b * q + 2 * b,
        (b**2 * p * q - c**2 * p * q - 2 * b**2 * p - 2 * b**2 * q
         - c**2 * p - c**2 * q - a**2 + b**2),
        (2 * b**3 * p * q - 2 * b * c**2 * p * q + a**2 * b * p + a**2 * b * q
         - 2 * a * b * c * p - 2 * a * b * c * q - b**3 * p - b**3 * q
         - b * c**2 * p - b * c**2 * q - 2 * a**2 * b),
        (-a**2 * b**2 * p * q + a**2 * c**2 * p * q + 2 * p * q * a * b**2 * c
         - 2 * p * q * a * c**3 + b**4 * p * q - 2 * p * q * b**2 * c**2 + c**4 * p * q
         + a**2 * b**2 * p + q * a**2 * b**2 - 2 * a * b**2 * c * p
         - 2 * a * b**2 * c * q - a**2 * b**2),
    ]


def _kmn_spec(m: int, n: int) -> EMatrixSpec:
    if m < 2 or n < 2:
        raise PreconditionViolated(f"K_{{m,n}} minus an edge needs m, n >= 2, got {m}, {n}")
    return EMatrixSpec(m - 1, n - 1, 1.0 / 3.0, 0.5, 1.0)


def kmn_minus_edge_spectrum(m: int, n: int) -> Spectrum:
    """Reciprocal distance spectrum of ``K_{m,n}`` with one edge removed.

    The endpoints of the removed edge end up at distance 3.
    """
    return e_matrix_spectrum(_kmn_spec(m, n))


def kmn_minus_edge_charpoly(m: int, n: int) -> list[float]:
    """Integer-scaled quartic for the non-filler eigenvalues (leading coefficient 144)."""
    return [144.0 * x for x in e_matrix_charpoly(_kmn_spec(m, n))]


def kqq_minus_edge_roots(q: int) -> list[float]:
    """The four non-filler eigenvalues of ``K_{q,q}`` minus an edge, in closed form."""
    x = math.sqrt(81 * q * q + 72 * q - 128) / 12
    y = math.sqrt(9 * q * q + 24 * q - 32) / 12
    return [0.75 * q - 5 / 6 + x, 0.75 * q - 5 / 6 - x,
            -0.25 * q - 1 / 6 + y, -0.25 * q - 1 / 6 - y]


def kqq_minus_edge_energy(q: int) -> float:
    if q < 2:
        raise PreconditionViolated(f"need q >= 2, got {q}")
    if q == 2:
        # the third root is negative only at q = 2
        return energy(kmn_minus_edge_spectrum(2, 2))
    x = math.sqrt(81 * q * q + 72 * q - 128) / 12
    y = math.sqrt(9 * q * q + 24 * q - 32) / 12
    return 2.0 * (q / 2 - 1 + x + y)


# -- complete tripartite graph minus an edge -------------------------------

def kpqr_minus_edge_reduced(p: int, q: int, r: int) -> ReducedQuotient:
    """Reduced quotient for ``K_{p,q,r}`` minus an edge between parts 1 and 2.

    Classes: the two endpoints, the rest of part 1, the rest of part 2 and
    part 3. The endpoints move to distance 2 through part 3; every other
    distance is unchanged.
    """
    if min(p, q, r) < 1:
        raise PreconditionViolated(f"need p, q, r >= 1, got {p}, {q}, {r}")
    h = 0.5
    weights = np.array([[0, h, h, 1, 1],
                        [h, 0, 1, h, 1],
                        [h, 1, h, 1, 1],
                        [1, h, 1, h, 1],
                        [1, 1, 1, 1, h]], dtype=float)
    return reduced_quotient((1, 1, p - 1, q - 1, r), weights)


def kpqr_case(p: int, q: int) -> str:
    if p >= 2 and q >= 2:
        return "I"
    if p == 1 and q == 1:
        return "II"
    return "III"


def kpqr_filler_multiplicity(p: int, q: int, r: int) -> int:
    case = kpqr_case(p, q)
    if case == "I":
        return p + q + r - 5
    if case == "II":
        return r - 1
    return max(p, q) + r - 3


def kpqr_polynomial(p: int, q: int, r: int) -> list[float]:
    """Integer polynomial for the non-filler eigenvalues, highest degree first.

    When only one of p, q equals 1 the two parts are swapped so the larger
    part comes first; the graph is the same up to relabelling.
    """
    case = kpqr_case(p, q)
    if case == "I":
        return [32,
                -16 * p - 16 * q - 16 * r + 80,
                (-24 * q - 24 * r - 32) * p + (-24 * r - 32) * q - 32 * r + 104,
                ((-20 * r - 36) * q - 36 * r - 20) * p + (-36 * r - 20) * q - 4 * r + 68,
                ((-20 * r - 12) * q - 12 * r - 10) * p + 26 + (-12 * r - 10) * q,
                (-5 * r - 3) * p + (-5 * r - 3) * q + 3 * r + 5]
    if case == "II":
        return [8, 4 - 4 * r, -16 * r - 2, -7 * r - 1]
    p = max(p, q)
    return [16,
            -8 * p - 8 * r + 24,
            (-12 * r - 24) * p - 24 * r + 24,
            (-22 * r - 16) * p - 8 * r + 12,
            (-5 * r - 3) * p - 2 * r + 2]


def polynomial_residual(coeffs: Sequence[float], x: float) -> float:
    """``|p(x)|`` relative to the sum of the absolute terms."""
    powers = x ** np.arange(len(coeffs) - 1, -1, -1)
    terms = np.asarray(coeffs, dtype=float) * powers
    scale = float(np.sum(np.abs(terms)))
    return abs(float(np.sum(terms))) / scale if scale else 0.0


def kpqr_minus_edge_roots(p: int, q: int, r: int) -> Spectrum:
    roots = kpqr_minus_edge_reduced(p, q, r).roots()
    coeffs = kpqr_polynomial(p, q, r)
    if len(coeffs) - 1 != roots.order:
        raise InternalInconsistency("reduced quotient order does not match the polynomial degree")
    for x in roots:
        if polynomial_residual(coeffs, x) > POLY_RTOL:
            raise InternalInconsistency(f"root {x} does not satisfy the tripartite polynomial")
    return roots


def kpqr_minus_edge_spectrum(p: int, q: int, r: int) -> Spectrum:
    roots = kpqr_minus_edge_roots(p, q, r)
    fillers = np.full(kpqr_filler_multiplicity(p, q, r), -0.5)
    return Spectrum(np.concatenate([fillers, roots.eigenvalues]))


def descartes_positive_bound(coeffs: Sequence[float]) -> int:
    """Sign changes in the coefficient sequence, zeros skipped.

    An upper bound on the number of positive roots, of the same parity.
    """
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)
