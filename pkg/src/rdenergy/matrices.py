"""Builders for the six graph matrices.

Every builder applies one elementwise formula to a symmetric integer
input, so the result is symmetric to the bit. Diagonals are zero.
"""

from __future__ import annotations

import enum

import numpy as np

from .eigen import Spectrum, eig_sym, energy
from .graphs import DistanceMatrix, Graph, apsp


class MatrixKind(str, enum.Enum):
    RD = "rd"
    D = "d"
    A = "a"
    SEIDEL = "seidel"
    CD = "cd"
    RCD = "rcd"


def _off_diagonal(values: np.ndarray) -> np.ndarray:
    out = np.array(values, dtype=float)
    np.fill_diagonal(out, 0.0)
    return out


def reciprocal_distance(dm: DistanceMatrix) -> np.ndarray:
    """Harary matrix: ``1/d(i, j)`` off the diagonal."""
    d = dm.matrix.astype(float)
    with np.errstate(divide="ignore"):
        return _off_diagonal(1.0 / d)


def distance(dm: DistanceMatrix) -> np.ndarray:
    return _off_diagonal(dm.matrix)


def adjacency(g: Graph) -> np.ndarray:
    return g.adj.astype(float)


def seidel(g: Graph) -> np.ndarray:
    # -1 adjacent, +1 distinct non-adjacent
    return _off_diagonal(np.where(g.adj, -1.0, 1.0))


def complementary_distance(dm: DistanceMatrix) -> np.ndarray:
    """Entries ``1 + diam - d(i, j)``, using the graph's own diameter."""
    return _off_diagonal(1 + dm.diam - dm.matrix)


def reciprocal_complementary_distance(dm: DistanceMatrix) -> np.ndarray:
    return _off_diagonal(1.0 / (1.0 + dm.diam - dm.matrix))


def build(kind: MatrixKind | str, g: Graph, dm: DistanceMatrix | None = None) -> np.ndarray:
    """Build the matrix of the given kind for ``g``.

    ``dm`` may be passed to reuse a distance matrix already computed.
    Distance based kinds require ``g`` to be connected.
    """
    kind = MatrixKind(kind)
    if kind is MatrixKind.A:
        return adjacency(g)
    if kind is MatrixKind.SEIDEL:
        return seidel(g)
    if dm is None:
        dm = apsp(g)
    return {
        MatrixKind.RD: reciprocal_distance,
        MatrixKind.D: distance,
        MatrixKind.CD: complementary_distance,
        MatrixKind.RCD: reciprocal_complementary_distance,
    }[kind](dm)


def dense_spectrum(g: Graph, kind: MatrixKind | str = MatrixKind.RD) -> Spectrum:
    """Spectrum by full eigensolve of the n x n matrix."""
    return eig_sym(build(kind, g))


def dense_energy(g: Graph, kind: MatrixKind | str = MatrixKind.RD) -> float:
    return energy(dense_spectrum(g, kind))
