"""Finite simple digraphs: construction, edge-list I/O, connectivity.

Vertices are the integers ``0..n-1``. Arcs are ordered pairs without
self-loops, at most one per pair. All values are immutable after
construction and safe to share across threads.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np

from .errors import (
    ArcCountError,
    ArcLineError,
    DuplicateArcError,
    EmptyGraphError,
    MalformedHeaderError,
    NegativeValueError,
    SelfLoopError,
    VertexRangeError,
)


@dataclass(frozen=True)
class EdgeListDocument:
    """Parsed edge-list file: declared counts plus arcs in file order."""

    n: int
    m: int
    arcs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Digraph:
    """Simple digraph on ``n`` vertices with a frozen set of ordered arcs.

    Construction validates the simplicity invariants: at least one vertex,
    endpoints in ``[0, n)``, no self-loops. Duplicate detection belongs to
    :func:`build_digraph`, where input order still exists.
    """

    n: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise EmptyGraphError("digraph must have at least one vertex")
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        for u, v in arcs:
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise VertexRangeError(f"arc ({u}, {v}) outside [0, {self.n})")

    @property
    def m(self) -> int:
        return len(self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    @cached_property
    def successors(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].append(v)
        return tuple(tuple(sorted(vs)) for vs in out)

    @cached_property
    def predecessors(self) -> tuple[tuple[int, ...], ...]:
        inn: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            inn[v].append(u)
        return tuple(tuple(sorted(us)) for us in inn)


def _data_lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield (1-based line number, stripped content), skipping blanks and #-comments."""
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield number, stripped


def parse_edge_list(text: str) -> EdgeListDocument:
    """Parse edge-list text into an :class:`EdgeListDocument`.

    The format is a header line ``n m`` followed by exactly ``m`` arc lines
    ``u v``; tokens are whitespace-separated decimal integers. Blank lines
    and lines starting with ``#`` are ignored.
    """
    lines = _data_lines(text)
    try:
        header_line, header = next(lines)
    except StopIteration:
        raise MalformedHeaderError("missing 'n m' header line") from None
    tokens = header.split()
    if len(tokens) != 2:
        raise MalformedHeaderError(f"expected 'n m', got {header!r}", line=header_line)
    try:
        n, m = int(tokens[0]), int(tokens[1])
    except ValueError:
        raise MalformedHeaderError(
            f"expected two integers, got {header!r}", line=header_line
        ) from None
    if n < 0 or m < 0:
        raise NegativeValueError("counts must be nonnegative", line=header_line)

    arcs: list[tuple[int, int]] = []
    for number, content in lines:
        if len(arcs) == m:
            raise ArcCountError(f"more than the declared {m} arc lines", line=number)
        tokens = content.split()
        if len(tokens) != 2:
            raise ArcLineError(f"expected 'u v', got {content!r}", line=number)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ArcLineError(
                f"expected two integers, got {content!r}", line=number
            ) from None
        if u < 0 or v < 0:
            raise NegativeValueError(f"negative vertex in arc ({u}, {v})", line=number)
        arcs.append((u, v))
    if len(arcs) != m:
        raise ArcCountError(f"declared {m} arcs, found {len(arcs)}")
    return EdgeListDocument(n=n, m=m, arcs=tuple(arcs))


def build_digraph(doc: EdgeListDocument) -> Digraph:
    """Validate a parsed document into a :class:`Digraph`."""
    if doc.n == 0:
        raise EmptyGraphError("digraph must have at least one vertex")
    seen: set[tuple[int, int]] = set()
    for u, v in doc.arcs:
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < doc.n and 0 <= v < doc.n):
            raise VertexRangeError(f"arc ({u}, {v}) outside [0, {doc.n})")
        if (u, v) in seen:
            raise DuplicateArcError(f"arc ({u}, {v}) listed more than once")
        seen.add((u, v))
    return Digraph(doc.n, frozenset(seen))


def load_digraph(path: str | Path) -> Digraph:
    return build_digraph(parse_edge_list(Path(path).read_text(encoding="utf-8")))


def write_edge_list(g: Digraph, comments: Sequence[str] = ()) -> str:
    """Render ``g`` in the edge-list format, arcs in lexicographic order.

    Inverse of ``parse_edge_list`` + ``build_digraph`` (comments aside).
    """
    lines = [f"# {comment}" for comment in comments]
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in sorted(g.arcs))
    return "\n".join(lines) + "\n"


def adjacency_matrix(g: Digraph) -> np.ndarray:
    """Dense (0,1) matrix with entry ``[i, j] = 1`` iff the arc (i, j) exists."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.arcs:
        a[u, v] = 1
    return a


def _reaches_all(n: int, adjacency: Sequence[Sequence[int]]) -> bool:
    seen = bytearray(n)
    seen[0] = 1
    count = 1
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adjacency[u]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                queue.append(w)
    return count == n


def is_strongly_connected(g: Digraph) -> bool:
    """True iff every ordered vertex pair is joined by a directed path.

    Two linear-time traversals (forward from vertex 0, then along reversed
    arcs) instead of an all-pairs computation: a digraph is strongly
    connected iff vertex 0 reaches everything and everything reaches it.
    """
    if g.n == 1:
        return True
    return _reaches_all(g.n, g.successors) and _reaches_all(g.n, g.predecessors)
