"""Exhaustive scans over complete k-partite graphs and edge-deletion sweeps."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .closed_forms import (kmn_minus_edge_spectrum, kpqr_minus_edge_spectrum,
                           kqq_minus_edge_energy, rd_energy_multipartite,
                           rd_lambda1_multipartite)
from .eigen import energy, perron_vector
from .errors import PreconditionViolated
from .graphs import (PartitionSpec, apsp, as_partition, block_ranges, complete_multipartite,
                     complete_split, multipartite_minus_edge, turan)
from .matrices import dense_energy, reciprocal_distance


def _partitions(n: int, k: int, largest: int) -> Iterator[tuple[int, ...]]:
    if k == 1:
        if 1 <= n <= largest:
            yield (n,)
        return
    for first in range(min(largest, n - k + 1), -(-n // k) - 1, -1):
        for rest in _partitions(n - first, k - 1, first):
            yield (first,) + rest


def partitions(n: int, k: int) -> list[PartitionSpec]:
    """All partitions of n into exactly k parts, lexicographically descending."""
    if not 1 <= k <= n:
        raise PreconditionViolated(f"need 1 <= k <= n, got n={n}, k={k}")
    return [PartitionSpec(p) for p in _partitions(n, k, n)]


def transfer(parts: PartitionSpec | Sequence[int], i: int, j: int) -> PartitionSpec:
    """Move one vertex from part ``i`` to part ``j`` (1-based), then re-sort.

    Part order is only a labelling, so this is the shift move applied to a
    relabelled partition. Requires ``n_i - n_j >= 2``.
    """
    spec = as_partition(parts)
    if not (1 <= i <= spec.k and 1 <= j <= spec.k) or i == j:
        raise PreconditionViolated(f"part indices {i}, {j} invalid for {spec.k} parts")
    sizes = list(spec.parts)
    if sizes[i - 1] - sizes[j - 1] < 2:
        raise PreconditionViolated(
            f"move needs a size gap >= 2, got {sizes[i - 1]} and {sizes[j - 1]}")
    sizes[i - 1] -= 1
    sizes[j - 1] += 1
    return PartitionSpec(tuple(sizes))


def shift(parts: PartitionSpec | Sequence[int], s: int) -> PartitionSpec:
    """Move one vertex from part ``s`` to part ``s + 1`` (1-based).

    Requires ``n_s - n_{s+1} >= 2``, which keeps the order non-increasing.
    """
    spec = as_partition(parts)
    if not 1 <= s < spec.k:
        raise PreconditionViolated(f"shift index {s} out of range for {spec.k} parts")
    return transfer(spec, s, s + 1)


def legal_shifts(parts: PartitionSpec) -> list[int]:
    return [s for s in range(1, parts.k) if parts[s - 1] - parts[s] >= 2]


def balance(parts: PartitionSpec | Sequence[int]) -> list[PartitionSpec]:
    """Chain of single-vertex moves ending at the Turan partition.

    Adjacent shifts are used while one is available. A partition such as
    (4, 4, 3, 2) has none, so the largest part then feeds the smallest.
    """
    chain = [as_partition(parts)]
    while True:
        cur = chain[-1]
        moves = legal_shifts(cur)
        if moves:
            chain.append(shift(cur, moves[0]))
        elif cur.parts[0] - cur.parts[-1] >= 2:
            chain.append(transfer(cur, 1, cur.k))
        else:
            return chain


@dataclass(frozen=True)
class ScanReport:
    n: int
    k: int
    rows: tuple[tuple[PartitionSpec, float], ...]
    argmin: PartitionSpec
    argmax: PartitionSpec
    verified: tuple[bool, bool]
    ties: tuple[int, int] = (0, 0)


def _pick(rows, target_value, preferred):
    hits = [spec for spec, e in rows if e == target_value]
    chosen = preferred if preferred in hits else hits[0]
    return chosen, len(hits) - 1


def scan(n: int, k: int) -> ScanReport:
    """RD energy of every complete k-partite graph on n vertices."""
    if not 2 <= k <= n - 1:
        raise PreconditionViolated(f"scan needs 2 <= k <= n-1, got n={n}, k={k}")
    specs = partitions(n, k)
    if not specs:
        raise PreconditionViolated(f"no partitions of {n} into {k} parts")
    rows = tuple((spec, rd_energy_multipartite(spec)) for spec in specs)
    energies = [e for _, e in rows]
    lo, hi = complete_split(n, k - 1), turan(n, k)
    argmin, min_ties = _pick(rows, min(energies), lo)
    argmax, max_ties = _pick(rows, max(energies), hi)
    return ScanReport(n, k, rows, argmin, argmax, (argmin == lo, argmax == hi),
                      (min_ties, max_ties))


def perron_part_components(parts: PartitionSpec | Sequence[int]) -> list[float]:
    """Per-part entries of the unit Perron vector of RD(K_{n_1,...,n_k}).

    Taken from the dense eigensolver; each value is the mean over its part.
    """
    spec = as_partition(parts)
    _, x = perron_vector(reciprocal_distance(apsp(complete_multipartite(spec))))
    return [float(x[list(block)].mean()) for block in block_ranges(spec)]


@dataclass(frozen=True)
class PerronCheck:
    lambda1: float
    part_values: tuple[float, ...]
    max_part_deviation: float
    max_relative_error: float


def perron_check(parts: PartitionSpec | Sequence[int]) -> PerronCheck:
    """Compare the dense Perron vector to the per-part formula.

    Each part value should equal ``2 X / (2 lambda_1 + n_i + 1)`` with
    ``X = sum_p n_p x_p``.
    """
    spec = as_partition(parts)
    lam, x = perron_vector(reciprocal_distance(apsp(complete_multipartite(spec))))
    blocks = block_ranges(spec)
    values = np.array([x[list(b)].mean() for b in blocks])
    deviation = max(float(np.max(np.abs(x[list(b)] - v))) for b, v in zip(blocks, values))
    sizes = np.array(spec.parts, dtype=float)
    total = float(np.dot(sizes, values))
    predicted = 2.0 * total / (2.0 * lam + sizes + 1.0)
    rel = float(np.max(np.abs(values - predicted) / np.abs(predicted)))
    return PerronCheck(lam, tuple(values.tolist()), deviation, rel)


class Family(str, enum.Enum):
    KQQ = "kqq"
    KMN = "kmn"
    KPQR = "kpqr"


_FAMILY_MIN = {Family.KQQ: 2, Family.KMN: 2, Family.KPQR: 1}


@dataclass(frozen=True)
class SweepRow:
    params: tuple[int, ...]
    energy_before: float
    energy_after: float
    dense_before: float
    dense_after: float
    delta: float = field(init=False)
    sign: int = field(init=False)

    def __post_init__(self) -> None:
        delta = self.energy_after - self.energy_before
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "sign", int(np.sign(delta)))

    @property
    def path_disagreement(self) -> float:
        return max(abs(self.energy_before - self.dense_before),
                   abs(self.energy_after - self.dense_after))


@dataclass(frozen=True)
class SweepReport:
    family: Family
    param_range: tuple[int, int]
    rows: tuple[SweepRow, ...]

    @property
    def max_disagreement(self) -> float:
        return max((r.path_disagreement for r in self.rows), default=0.0)


def _sweep_row(family: Family, params: tuple[int, ...]) -> SweepRow:
    if family is Family.KQQ:
        (q,) = params
        sizes = (q, q)
        after = kqq_minus_edge_energy(q)
    elif family is Family.KMN:
        sizes = params
        after = energy(kmn_minus_edge_spectrum(*params))
    else:
        sizes = params
        after = energy(kpqr_minus_edge_spectrum(*params))
    before = rd_energy_multipartite(sizes)
    return SweepRow(params, before, after,
                    dense_energy(complete_multipartite(sizes)),
                    dense_energy(multipartite_minus_edge(sizes, 0, 1)))


def edge_deletion_sweep(family: Family | str, lo: int, hi: int) -> SweepReport:
    """RD energy before and after deleting one edge, over a parameter box.

    ``kqq`` sweeps q; ``kmn`` every pair (m, n); ``kpqr`` every triple
    (p, q, r), always deleting an edge between the first two parts. Each
    row carries both the closed-form and the dense values.
    """
    family = Family(family)
    if lo < _FAMILY_MIN[family] or hi < lo:
        raise PreconditionViolated(
            f"invalid range {lo}..{hi} for {family.value} (minimum {_FAMILY_MIN[family]})")
    values = range(lo, hi + 1)
    arity = {Family.KQQ: 1, Family.KMN: 2, Family.KPQR: 3}[family]
    rows = tuple(_sweep_row(family, params) for params in itertools.product(values, repeat=arity))
    return SweepReport(family, (lo, hi), rows)


def shift_gain(parts: PartitionSpec | Sequence[int], s: int) -> float:
    """Increase of lambda_1(RD) caused by one shift."""
    return rd_lambda1_multipartite(shift(parts, s)) - rd_lambda1_multipartite(parts)


def transfer_gain(parts: PartitionSpec | Sequence[int], i: int, j: int) -> float:
    return rd_lambda1_multipartite(transfer(parts, i, j)) - rd_lambda1_multipartite(parts)
