"""Error-correcting codes over Gaussian, Lipschitz and Hurwitz residue rings.

Exact integer arithmetic throughout; quaternions are stored in doubled
coordinates so Hurwitz half-integers stay integral.
"""

from .algebra import (
    E1,
    E2,
    E3,
    ONE,
    W,
    Family,
    GaussianInt,
    Quat,
    RingDescriptor,
    canonical_key,
    cardinality,
    congruent,
    enumerate_residues,
    reduce,
)
from .codes import ParityCheckCode, Verdict, check_perfect, decode, min_distance, read_code
from .grammar import format_element, parse_element, parse_ring, parse_vector
from .metrics import MetricKind, build_weight_table, distance, weight

__version__ = "0.1.0"

__all__ = [
    "E1", "E2", "E3", "ONE", "W",
    "Family", "GaussianInt", "Quat", "RingDescriptor",
    "canonical_key", "cardinality", "congruent", "enumerate_residues", "reduce",
    "ParityCheckCode", "Verdict", "check_perfect", "decode", "min_distance", "read_code",
    "format_element", "parse_element", "parse_ring", "parse_vector",
    "MetricKind", "build_weight_table", "distance", "weight",
]
