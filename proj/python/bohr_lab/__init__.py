"""Bohr radii of the close-to-convex harmonic class P0_H(alpha)."""

from ._core import (
    SolverError,
    alt_log_tail,
    area_bound,
    dilog,
    distance_bound,
    kinds,
    lhs,
    lhs_series,
    log_tail,
    majorant,
    minorant,
    radius,
    reproduce,
    run_suite,
    table_ids,
)

__all__ = [
    "SolverError",
    "alt_log_tail",
    "area_bound",
    "dilog",
    "distance_bound",
    "kinds",
    "lhs",
    "lhs_series",
    "log_tail",
    "majorant",
    "minorant",
    "radius",
    "reproduce",
    "run_suite",
    "table_ids",
]
