"""Diagram monoid computations backed by a C++ core."""

from ._core import (
    Diagram,
    balanced_subgraph_count,
    bratteli_paths,
    compose,
    dim_partition_algebra,
    family_size,
    jones_f,
    partition_gsets,
    projection_labels,
    rank_ideal,
    rbr_generates,
    strong_tournaments,
    table,
    verify,
)

__all__ = [
    "Diagram",
    "balanced_subgraph_count",
    "bratteli_paths",
    "compose",
    "dim_partition_algebra",
    "family_size",
    "jones_f",
    "partition_gsets",
    "projection_labels",
    "rank_ideal",
    "rbr_generates",
    "strong_tournaments",
    "table",
    "verify",
]
