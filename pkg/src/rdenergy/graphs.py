"""Graphs, complete multipartite families and all-pairs shortest paths.

Graphs are small and dense, so adjacency is a boolean ``numpy`` array.
All objects here are immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import DisconnectedGraph, NoSuchEdge, PreconditionViolated


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class PartitionSpec:
    """Part sizes of a complete multipartite graph, kept non-increasing."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if len(parts) == 0:
            raise PreconditionViolated("a partition needs at least one part")
        if any(p < 1 for p in parts):
            raise PreconditionViolated(f"part sizes must be positive, got {parts}")
        object.__setattr__(self, "parts", tuple(sorted(parts, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "PartitionSpec":
        """Parse a comma separated string such as ``"3,2,2"``."""
        try:
            parts = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
        except ValueError as exc:
            raise PreconditionViolated(f"malformed partition string {text!r}") from exc
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


def as_partition(parts: PartitionSpec | Sequence[int]) -> PartitionSpec:
    if isinstance(parts, PartitionSpec):
        return parts
    return PartitionSpec(tuple(parts))


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    adj: np.ndarray
    partition: PartitionSpec | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        adj = np.array(self.adj, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise PreconditionViolated("adjacency must be a square matrix")
        if adj.diagonal().any():
            raise PreconditionViolated("self-loops are not allowed")
        if not np.array_equal(adj, adj.T):
            raise PreconditionViolated("adjacency must be symmetric")
        object.__setattr__(self, "adj", _frozen(adj))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and np.array_equal(self.adj, other.adj)

    __hash__ = None  # type: ignore[assignment]

    @property
    def n(self) -> int:
        return self.adj.shape[0]

    @property
    def num_edges(self) -> int:
        return int(self.adj.sum()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def edges(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self.adj, 1))
        return list(zip(us.tolist(), vs.tolist()))

    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1)

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return bool((_bfs_levels(self.adj, 0) >= 0).all())


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    matrix: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "matrix", _frozen(np.array(self.matrix, dtype=np.int64)))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DistanceMatrix) and np.array_equal(self.matrix, other.matrix)

    __hash__ = None  # type: ignore[assignment]

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def diam(self) -> int:
        return int(self.matrix.max()) if self.n else 0


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise PreconditionViolated(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise PreconditionViolated(f"self-loop at vertex {u}")
        adj[u, v] = adj[v, u] = True
    return Graph(adj)


def read_edge_list(path: str | Path) -> Graph:
    """Read a graph from a text file with one ``u v`` pair per line.

    Vertices are 0-indexed; ``#`` starts a comment. The vertex count is
    one more than the largest label seen.
    """
    edges = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 2:
            raise PreconditionViolated(f"{path}:{lineno}: expected 'u v', got {line!r}")
        try:
            edges.append((int(toks[0]), int(toks[1])))
        except ValueError as exc:
            raise PreconditionViolated(f"{path}:{lineno}: non-integer vertex") from exc
    if not edges:
        raise PreconditionViolated(f"{path}: no edges")
    n = 1 + max(max(e) for e in edges)
    if min(min(e) for e in edges) < 0:
        raise PreconditionViolated(f"{path}: negative vertex label")
    return from_edges(n, edges)


def block_ranges(parts: PartitionSpec | Sequence[int]) -> list[range]:
    """Vertex ranges of the consecutive blocks, in the given part order."""
    out, start = [], 0
    for size in parts:
        out.append(range(start, start + size))
        start += size
    return out


def complete_multipartite(parts: PartitionSpec | Sequence[int]) -> Graph:
    spec = as_partition(parts)
    if spec.k < 2:
        raise DisconnectedGraph(f"K_{{{spec}}} has one part and no edges")
    labels = np.repeat(np.arange(spec.k), spec.parts)
    adj = labels[:, None] != labels[None, :]
    return Graph(adj, partition=spec)


def complete_split(n: int, k: int) -> PartitionSpec:
    """CS(n, k): a k-clique joined to n - k independent vertices."""
    if not 1 <= k <= n - 1:
        raise PreconditionViolated(f"complete split graph needs 1 <= k <= n-1, got n={n}, k={k}")
    return PartitionSpec((n - k,) + (1,) * k)


def turan(n: int, k: int) -> PartitionSpec:
    if not 2 <= k <= n:
        raise PreconditionViolated(f"Turan graph needs 2 <= k <= n, got n={n}, k={k}")
    q, r = divmod(n, k)
    return PartitionSpec((q + 1,) * r + (q,) * (k - r))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise NoSuchEdge(f"no edge between {u} and {v}")
    adj = g.adj.copy()
    adj[u, v] = adj[v, u] = False
    return Graph(adj)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise PreconditionViolated("self-loops are not allowed")
    adj = g.adj.copy()
    adj[u, v] = adj[v, u] = True
    return Graph(adj)


def _bfs_levels(adj: np.ndarray, source: int) -> np.ndarray:
    n = adj.shape[0]
    dist = np.full(n, -1, dtype=np.int64)
    dist[source] = 0
    frontier = np.zeros(n, dtype=bool)
    frontier[source] = True
    level = 0
    while frontier.any():
        level += 1
        reached = adj[frontier].any(axis=0) & (dist < 0)
        dist[reached] = level
        frontier = reached
    return dist


def apsp(g: Graph) -> DistanceMatrix:
    """Unweighted all-pairs shortest paths, one BFS per source."""
    rows = [_bfs_levels(g.adj, s) for s in range(g.n)]
    dist = np.array(rows, dtype=np.int64).reshape(g.n, g.n)
    if g.n == 0 or (dist < 0).any():
        raise DisconnectedGraph("shortest-path distances need a connected graph")
    return DistanceMatrix(dist)


def multipartite_minus_edge(sizes: Sequence[int], i: int = 0, j: int = 1) -> Graph:
    """Complete multipartite graph in the given part order minus one edge.

    The removed edge joins the first vertex of part ``i`` to the first
    vertex of part ``j``. The result may be disconnected; ``apsp`` checks.
    """
    if i == j:
        raise PreconditionViolated("the deleted edge must join two different parts")
    as_partition(sizes)  # validates sizes
    labels = np.repeat(np.arange(len(sizes)), list(sizes))
    adj = labels[:, None] != labels[None, :]
    blocks = block_ranges(sizes)
    u, v = blocks[i][0], blocks[j][0]
    adj[u, v] = adj[v, u] = False
    return Graph(adj)
