"""Kostant's cascade of strongly orthogonal roots and the objects built from it.

Typical use::

    from cascade_kit import cascade_of, cascade_element, orbit_data
    c = cascade_of("E7")
    cascade_element(c)      # x_K in simple-root coordinates
    orbit_data(c).dim       # 84
"""

from .cascade import Cascade, CascadeNode, cascade_of, compute_cascade, hasse_diagram, longest_element
from .cascade_element import cascade_element, frobenius_spectrum_check, spectrum_of, tap_data
from .errors import (
    CascadeKitError,
    DecompositionMismatch,
    InvalidRank,
    InvalidType,
    InvariantViolation,
    NoChain,
    NotAdmissible,
    NotApplicable,
    NotClassical,
    OrderOverflow,
    PreconditionFailed,
)
from .involution import regular_certificate, z2_grading
from .kostant_ideal import anti_dominant_walk, grade, kostant_for_cascade
from .orbit import OrbitData, orbit_data
from .root_system import RootSystem, WeightVector, WeylElement, build
from .simple_type import SimpleType, canonical_types
from .verify import VerifyReport, verify_all, verify_type

__version__ = "0.1.0"

__all__ = [
    "Cascade",
    "CascadeKitError",
    "CascadeNode",
    "DecompositionMismatch",
    "InvalidRank",
    "InvalidType",
    "InvariantViolation",
    "NoChain",
    "NotAdmissible",
    "NotApplicable",
    "NotClassical",
    "OrbitData",
    "OrderOverflow",
    "PreconditionFailed",
    "RootSystem",
    "SimpleType",
    "VerifyReport",
    "WeightVector",
    "WeylElement",
    "anti_dominant_walk",
    "build",
    "canonical_types",
    "cascade_element",
    "cascade_of",
    "compute_cascade",
    "frobenius_spectrum_check",
    "grade",
    "hasse_diagram",
    "kostant_for_cascade",
    "longest_element",
    "orbit_data",
    "regular_certificate",
    "spectrum_of",
    "tap_data",
    "verify_all",
    "verify_type",
    "z2_grading",
]
