"""All-pairs shortest paths and single-digraph distance statistics.

``floyd_warshall`` is the production path; ``bfs_distances`` is a
deliberately separate plain-Python implementation kept as its oracle:
the two must agree exactly on every digraph, reachable or not.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from .digraph import Digraph, adjacency_matrix
from .errors import NotStronglyConnectedError, OrderTooSmallError

# Sentinel for "no path" inside the integer kernel. Far above any real
# distance (those are < n), and small enough that sentinel + sentinel
# still fits comfortably in int64.
_INF = np.int64(1) << 31


@dataclass(frozen=True)
class DistanceMatrix:
    """Shortest directed-path lengths; ``None`` marks unreachable pairs."""

    n: int
    entries: tuple[tuple[int | None, ...], ...]

    def entry(self, i: int, j: int) -> int | None:
        return self.entries[i][j]

    @cached_property
    def all_finite(self) -> bool:
        return all(e is not None for row in self.entries for e in row)

    def finite_array(self) -> np.ndarray:
        """Dense int64 copy of the entries; every pair must be reachable."""
        if not self.all_finite:
            raise NotStronglyConnectedError("distance matrix has unreachable pairs")
        return np.array(self.entries, dtype=np.int64)


def _initial_distances(g: Digraph) -> np.ndarray:
    # Adjacency with off-diagonal zeros promoted to "infinity", diagonal zero.
    d = np.where(adjacency_matrix(g) == 1, np.int64(1), _INF)
    np.fill_diagonal(d, 0)
    return d


def _relax(d: np.ndarray) -> None:
    """One full relaxation sweep in place: k outermost, whole (m, n) plane per k.

    Row k and column k cannot improve during pass k, so the vectorized form
    is entry-for-entry identical to the sequential in-place triple loop.
    """
    for k in range(d.shape[0]):
        np.minimum(d, d[:, k, None] + d[None, k, :], out=d)


def _as_matrix(d: np.ndarray) -> DistanceMatrix:
    entries = tuple(
        tuple(int(e) if e < _INF else None for e in row) for row in d
    )
    return DistanceMatrix(d.shape[0], entries)


def floyd_warshall(g: Digraph) -> DistanceMatrix:
    """All-pairs shortest directed path lengths of ``g``.

    Unreachable pairs come back as ``None`` rather than raising;
    downstream metrics decide whether that is an error.
    """
    d = _initial_distances(g)
    _relax(d)
    return _as_matrix(d)


def bfs_distances(g: Digraph, source: int) -> tuple[int | None, ...]:
    """Breadth-first distances from ``source``; one row of the matrix."""
    if not 0 <= source < g.n:
        raise IndexError(f"source {source} outside [0, {g.n})")
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.successors[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1  # type: ignore[operator]
                queue.append(w)
    return tuple(dist)


def diameter(d: DistanceMatrix) -> int:
    """Maximum distance over ordered vertex pairs; 0 for a single vertex."""
    best = 0
    for i, row in enumerate(d.entries):
        for j, e in enumerate(row):
            if i == j:
                continue
            if e is None:
                raise NotStronglyConnectedError(
                    f"no directed path from {i} to {j}"
                )
            if e > best:
                best = e
    return best


def average_distance(d: DistanceMatrix) -> Fraction:
    """Exact mean distance over ordered pairs of distinct vertices."""
    if d.n < 2:
        raise OrderTooSmallError("average distance needs at least 2 vertices")
    total = 0
    for i, row in enumerate(d.entries):
        for j, e in enumerate(row):
            if e is None:
                raise NotStronglyConnectedError(
                    f"no directed path from {i} to {j}"
                )
            total += e
    return Fraction(total, d.n * (d.n - 1))
