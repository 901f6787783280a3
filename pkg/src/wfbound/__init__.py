"""Partition combinatorics of nilpotent orbits, nilpotent Langlands parameters
of depth-zero supercuspidal representations, and their wavefront sets."""

from .partitions import (
    Dominance,
    Partition,
    PartitionSet,
    concat,
    dominance,
    leq,
    parse_partition,
    psum,
    set_leq,
    string_interval,
    transpose,
)
from .orbits import NilpotentOrbit, OrbitKind, collapse, dual, enumerate_orbits, is_valid

__all__ = [
    "Dominance",
    "NilpotentOrbit",
    "OrbitKind",
    "Partition",
    "PartitionSet",
    "collapse",
    "concat",
    "dominance",
    "dual",
    "enumerate_orbits",
    "is_valid",
    "leq",
    "parse_partition",
    "psum",
    "set_leq",
    "string_interval",
    "transpose",
]

__version__ = "0.1.0"
