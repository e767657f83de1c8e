"""Exact rainbow matching on edge-colored multigraphs with CM colour classes."""

from .alpha import AlphaExceeded, HardnessReport, UnsupportedMultiplicity, solve, solve_alpha_cm
from .cm import (
    ClassReport,
    CmDecomposition,
    ForbiddenWitness,
    WitnessKind,
    classify_graph,
    cm_decompose,
)
from .dcs import DegreeGraph, max_lu_matching, max_matching, verify_lu
from .formats import ParseError, parse_instance, serialize_instance
from .gadgets import (
    CnfFormula,
    GadgetInstance,
    build_2k2_instance,
    build_p4_instance,
    build_paw_instance,
    parse_dimacs,
    sat_bruteforce,
)
from .graph import (
    EdgeColoredMultigraph,
    IdOutOfRange,
    LoopEdge,
    color_class_view,
    validate_matching,
)
from .oracle import TooLarge, brute_max_lu_matching, brute_max_rainbow_matching
from .reduction import NotStrictlyCm, build_lu_instance, solve_strict_cm

__all__ = [
    "AlphaExceeded", "ClassReport", "CmDecomposition", "CnfFormula", "DegreeGraph",
    "EdgeColoredMultigraph", "ForbiddenWitness", "GadgetInstance", "HardnessReport",
    "IdOutOfRange", "LoopEdge", "NotStrictlyCm", "ParseError", "TooLarge",
    "UnsupportedMultiplicity", "WitnessKind", "brute_max_lu_matching",
    "brute_max_rainbow_matching", "build_2k2_instance", "build_lu_instance",
    "build_p4_instance", "build_paw_instance", "classify_graph", "cm_decompose",
    "color_class_view", "max_lu_matching", "max_matching", "parse_dimacs",
    "parse_instance", "sat_bruteforce", "serialize_instance", "solve", "solve_alpha_cm",
    "solve_strict_cm", "validate_matching", "verify_lu",
]
