"""Dense symmetric eigensolver and spectrum-derived quantities.

The solver is a cyclic Jacobi method. Each sweep visits every index pair
exactly once using a round-robin (tournament) ordering, so that the
rotations of one round act on disjoint index pairs and can be applied
together with vectorised row/column updates.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NotSymmetric

OFF_DIAGONAL_RTOL = 1e-12
MAX_SWEEPS = 100


@lru_cache(maxsize=None)
def _round_robin(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    players = list(range(n)) + ([-1] if n % 2 else [])
    m = len(players)
    rounds = []
    for _ in range(m - 1):
        pairs = [(players[i], players[m - 1 - i]) for i in range(m // 2)]
        pairs = [(min(p, q), max(p, q)) for p, q in pairs if p >= 0 and q >= 0]
        if pairs:
            p, q = np.array(pairs, dtype=np.intp).T
            rounds.append((p, q))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def _off_norm(a: np.ndarray) -> float:
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def jacobi_eigh(m: np.ndarray, rtol: float = OFF_DIAGONAL_RTOL,
                max_sweeps: int = MAX_SWEEPS) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and orthonormal eigenvectors of a real symmetric matrix.

    Returns ``(values, vectors)`` in descending order of ``values``; column
    ``i`` of ``vectors`` belongs to ``values[i]``. Sweeps stop once the
    off-diagonal Frobenius norm drops below ``rtol * ||m||_F``.
    """
    a = np.array(m, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    if n > 1:
        target = rtol * float(np.linalg.norm(a))
        schedule = _round_robin(n)
        for _ in range(max_sweeps):
            if _off_norm(a) <= target:
                break
            for p, q in schedule:
                apq = a[p, q]
                app = a[p, p]
                aqq = a[q, q]
                active = apq != 0.0
                # tiny apq overflows theta to inf, which correctly gives t = 0
                with np.errstate(over="ignore", divide="ignore"):
                    theta = np.where(active, (aqq - app) / np.where(active, 2.0 * apq, 1.0), 0.0)
                    t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
                t = np.where(active, t, 0.0)
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c

                cp, sp = c[None, :], s[None, :]
                ap, aq = a[:, p], a[:, q]
                a[:, p], a[:, q] = cp * ap - sp * aq, sp * ap + cp * aq
                ap, aq = a[p, :], a[q, :]
                a[p, :], a[q, :] = c[:, None] * ap - s[:, None] * aq, s[:, None] * ap + c[:, None] * aq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp, vq = v[:, p], v[:, q]
                v[:, p], v[:, q] = cp * vp - sp * vq, sp * vp + cp * vq
            a = 0.5 * (a + a.T)
    values = a.diagonal().copy()
    order = np.argsort(-values, kind="stable")
    return values[order], v[:, order]


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues of a real symmetric matrix, sorted descending."""

    eigenvalues: np.ndarray

    def __post_init__(self) -> None:
        vals = np.sort(np.asarray(self.eigenvalues, dtype=float).ravel(), kind="stable")[::-1].copy()
        vals.setflags(write=False)
        object.__setattr__(self, "eigenvalues", vals)

    @property
    def order(self) -> int:
        return self.eigenvalues.size

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.eigenvalues.tolist())

    @property
    def lambda_max(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def lambda_min(self) -> float:
        return float(self.eigenvalues[-1])

    @property
    def frobenius(self) -> float:
        return float(np.sqrt(np.sum(self.eigenvalues ** 2)))

    def default_tol(self) -> float:
        return default_tol_for_norm(self.frobenius)

    def multiplicity(self, value: float, tol: float = 1e-7) -> int:
        return int(np.sum(np.abs(self.eigenvalues - value) <= tol))

    def union(self, *others: "Spectrum") -> "Spectrum":
        return Spectrum(np.concatenate([self.eigenvalues] + [o.eigenvalues for o in others]))

    def allclose(self, other: "Spectrum", atol: float) -> bool:
        return self.order == other.order and bool(
            np.all(np.abs(self.eigenvalues - other.eigenvalues) <= atol))

    def __repr__(self) -> str:
        return f"Spectrum({np.array2string(self.eigenvalues, precision=6)})"


def default_tol_for_norm(frobenius: float) -> float:
    return 1e-8 * (1.0 + frobenius)


def check_symmetric(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {m.shape}")
    if not np.array_equal(m, m.T):
        raise NotSymmetric("matrix is not exactly symmetric")
    return m


def eig_sym(m: np.ndarray) -> Spectrum:
    values, _ = jacobi_eigh(check_symmetric(m))
    return Spectrum(values)


def eigh_sym(m: np.ndarray) -> tuple[Spectrum, np.ndarray]:
    """Like :func:`eig_sym` but also returns eigenvectors as columns."""
    values, vectors = jacobi_eigh(check_symmetric(m))
    return Spectrum(values), vectors


def perron_vector(m: np.ndarray) -> tuple[float, np.ndarray]:
    """Top eigenpair of a symmetric matrix, eigenvector signed to sum >= 0."""
    spec, vecs = eigh_sym(m)
    x = vecs[:, 0]
    if x.sum() < 0:
        x = -x
    return spec.lambda_max, x


def energy(s: Spectrum) -> float:
    return float(np.sum(np.abs(s.eigenvalues)))


def negative_part_sum(s: Spectrum, tol: float | None = None) -> float:
    tol = s.default_tol() if tol is None else tol
    vals = s.eigenvalues
    return float(np.sum(vals[vals < -tol]))


def inertia(s: Spectrum, tol: float | None = None) -> tuple[int, int, int]:
    """Counts of eigenvalues above ``tol``, within ``±tol``, below ``-tol``."""
    tol = s.default_tol() if tol is None else tol
    vals = s.eigenvalues
    pos = int(np.sum(vals > tol))
    neg = int(np.sum(vals < -tol))
    return pos, vals.size - pos - neg, neg


class Method(str, enum.Enum):
    DENSE = "dense"
    QUOTIENT = "quotient"
    CLOSED_FORM = "closed_form"


@dataclass(frozen=True)
class EnergyReport:
    energy: float
    spectral_radius: float
    negative_sum: float
    inertia: tuple[int, int, int]
    method: Method

    def as_dict(self) -> dict:
        return {
            "energy": self.energy,
            "spectral_radius": self.spectral_radius,
            "negative_sum": self.negative_sum,
            "inertia": list(self.inertia),
            "method": self.method.value,
        }


def energy_report(s: Spectrum, method: Method = Method.DENSE,
                  tol: float | None = None) -> EnergyReport:
    return EnergyReport(
        energy=energy(s),
        spectral_radius=float(np.max(np.abs(s.eigenvalues))) if s.order else 0.0,
        negative_sum=negative_part_sum(s, tol),
        inertia=inertia(s, tol),
        method=Method(method),
    )
