"""Explicit strong product construction and the flat-index vertex codec.

A product vertex is a tuple of factor coordinates; its flat index is the
row-major mixed-radix encoding with the leftmost factor most significant.
The binary product uses that codec directly, and the n-ary product is a
left fold of the binary one, which lands on the same numbering.
"""

from __future__ import annotations

from collections.abc import Sequence
from math import prod

from .digraph import Digraph
from .errors import (
    ArityMismatchError,
    CoordRangeError,
    EmptyFactorListError,
    ProductTooLargeError,
)

# Explicit products exist to cross-check the factor-based metrics, which
# have no such limit; keep the oracle path from accidentally exploding.
DEFAULT_MAX_PRODUCT_VERTICES = 20_000


def encode_label(coords: Sequence[int], dims: Sequence[int]) -> int:
    """Flat index of a coordinate tuple under the row-major codec."""
    if len(coords) != len(dims):
        raise ArityMismatchError(
            f"{len(coords)} coordinates for {len(dims)} factors"
        )
    flat = 0
    for x, dim in zip(coords, dims):
        if not 0 <= x < dim:
            raise CoordRangeError(f"coordinate {x} outside [0, {dim})")
        flat = flat * dim + x
    return flat


def decode_label(flat: int, dims: Sequence[int]) -> tuple[int, ...]:
    """Coordinate tuple of a flat index; inverse of :func:`encode_label`."""
    if not 0 <= flat < prod(dims):
        raise CoordRangeError(f"flat index {flat} outside [0, {prod(dims)})")
    coords = []
    for dim in reversed(dims):
        coords.append(flat % dim)
        flat //= dim
    return tuple(reversed(coords))


def strong_product(
    g1: Digraph,
    g2: Digraph,
    max_vertices: int = DEFAULT_MAX_PRODUCT_VERTICES,
) -> Digraph:
    """Strong product of two digraphs on ``g1.n * g2.n`` vertices.

    Arc x1x2 -> y1y2 exists when one factor holds its vertex while the
    other steps along an arc, or both factors step simultaneously. The
    three arc families are disjoint, so the arc count is
    ``v1*e2 + v2*e1 + e1*e2``.
    """
    n = g1.n * g2.n
    if n > max_vertices:
        raise ProductTooLargeError(
            f"product has {n} vertices, limit is {max_vertices}"
        )
    v2 = g2.n
    arcs: set[tuple[int, int]] = set()
    for x1 in range(g1.n):
        base = x1 * v2
        for x2, y2 in g2.arcs:
            arcs.add((base + x2, base + y2))
    for x1, y1 in g1.arcs:
        for x2 in range(v2):
            arcs.add((x1 * v2 + x2, y1 * v2 + x2))
        for x2, y2 in g2.arcs:
            arcs.add((x1 * v2 + x2, y1 * v2 + y2))
    return Digraph(n, frozenset(arcs))


def strong_product_n(
    gs: Sequence[Digraph],
    max_vertices: int = DEFAULT_MAX_PRODUCT_VERTICES,
) -> Digraph:
    """Left fold of :func:`strong_product` over one or more factors."""
    if not gs:
        raise EmptyFactorListError("need at least one factor")
    out = gs[0]
    for g in gs[1:]:
        out = strong_product(out, g, max_vertices=max_vertices)
    return out
