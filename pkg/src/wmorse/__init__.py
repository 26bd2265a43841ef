"""Weighted simplicial complexes: homology, collapses, discrete Morse tools.

The package computes homology of integer-weighted simplicial complexes
exactly, decides when elementary collapses and removals preserve it,
certifies discrete-Morse collapses between level complexes, and turns
symbol sequences into weighted order complexes of their substring
posets.
"""

__version__ = "0.1.0"

from .errors import (
    DivisibilityViolation,
    DocumentError,
    DuplicateSimplex,
    DuplicateVertex,
    ExtraCritical,
    HypothesisError,
    HypothesisFailed,
    MorseViolation,
    NoValidAPrime,
    NotACycle,
    NotCritical,
    NotFaceClosed,
    NotFreeFace,
    NotMaximal,
    UnweightedSymbol,
    ValidationError,
    WmorseError,
    WSimpleFailed,
    ZeroLetterWeight,
    ZeroWeight,
)
from .complexes import (
    Simplex,
    SimplicialComplex,
    WeightedComplex,
    faces,
    simplex,
    validate_complex,
)
from .collapse import (
    CollapseStep,
    PreservationVerdict,
    RemovalReport,
    Verdict,
    check_preservation,
    collapse_sequence,
    elementary_collapse,
    elementary_removal,
    greedy_collapse,
)
from .homology import (
    ClassOrder,
    HomologyGroup,
    WeightedBoundary,
    boundary_matrices,
    chain_bases,
    group_at,
    homology,
    homology_class_order,
)
from .morse import (
    CellClassification,
    CriticalWindow,
    LevelSubcomplex,
    MorseCollapse,
    MorseFunction,
    classify,
    critical_window,
    in_level,
    level_subcomplex,
    morse_collapse,
    validate_morse,
)
from .sequence import (
    ALPHABETS,
    OrderComplex,
    SubstringPoset,
    WocType,
    build_woc,
    order_complex,
    sequence_fingerprint,
    substrings,
)
from .snf import IntMatrix, SmithDecomposition, rank, smith_normal_form

__all__ = [
    "ALPHABETS",
    "CellClassification",
    "ClassOrder",
    "CollapseStep",
    "CriticalWindow",
    "DivisibilityViolation",
    "DocumentError",
    "DuplicateSimplex",
    "DuplicateVertex",
    "ExtraCritical",
    "HomologyGroup",
    "HypothesisError",
    "HypothesisFailed",
    "IntMatrix",
    "LevelSubcomplex",
    "MorseCollapse",
    "MorseFunction",
    "MorseViolation",
    "NoValidAPrime",
    "NotACycle",
    "NotCritical",
    "NotFaceClosed",
    "NotFreeFace",
    "NotMaximal",
    "OrderComplex",
    "PreservationVerdict",
    "RemovalReport",
    "Simplex",
    "SimplicialComplex",
    "SmithDecomposition",
    "SubstringPoset",
    "UnweightedSymbol",
    "ValidationError",
    "Verdict",
    "WSimpleFailed",
    "WeightedBoundary",
    "WeightedComplex",
    "WmorseError",
    "WocType",
    "ZeroLetterWeight",
    "ZeroWeight",
    "boundary_matrices",
    "chain_bases",
    "check_preservation",
    "classify",
    "collapse_sequence",
    "critical_window",
    "elementary_collapse",
    "elementary_removal",
    "faces",
    "greedy_collapse",
    "group_at",
    "homology",
    "homology_class_order",
    "in_level",
    "level_subcomplex",
    "morse_collapse",
    "order_complex",
    "rank",
    "sequence_fingerprint",
    "simplex",
    "smith_normal_form",
    "substrings",
    "validate_complex",
    "validate_morse",
    "build_woc",
]
