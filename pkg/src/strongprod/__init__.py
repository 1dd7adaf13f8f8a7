"""Distances, diameters, and average distances of strong product digraphs."""

from .apsp import (
    DistanceMatrix,
    average_distance,
    bfs_distances,
    diameter,
    floyd_warshall,
)
from .digraph import (
    Digraph,
    EdgeListDocument,
    adjacency_matrix,
    build_digraph,
    is_strongly_connected,
    load_digraph,
    parse_edge_list,
    write_edge_list,
)
from .metrics import (
    MetricsReport,
    average_distance_oracle,
    average_distance_oracle_n,
    average_distance_product,
    average_distance_product_n,
    product_distance,
    product_distance_n,
    sigma_counting,
    sigma_counting_n,
    sigma_naive,
    sigma_naive_n,
)
from .product import (
    DEFAULT_MAX_PRODUCT_VERTICES,
    decode_label,
    encode_label,
    strong_product,
    strong_product_n,
)

__all__ = [
    "DEFAULT_MAX_PRODUCT_VERTICES",
    "Digraph",
    "DistanceMatrix",
    "EdgeListDocument",
    "MetricsReport",
    "adjacency_matrix",
    "average_distance",
    "average_distance_oracle",
    "average_distance_oracle_n",
    "average_distance_product",
    "average_distance_product_n",
    "bfs_distances",
    "build_digraph",
    "decode_label",
    "diameter",
    "encode_label",
    "floyd_warshall",
    "is_strongly_connected",
    "load_digraph",
    "parse_edge_list",
    "product_distance",
    "product_distance_n",
    "sigma_counting",
    "sigma_counting_n",
    "sigma_naive",
    "sigma_naive_n",
    "strong_product",
    "strong_product_n",
    "write_edge_list",
]
