"""Cycle-supermagic labelings of disjoint unions of fans, ladders, wheels, books and antiprisms."""

__version__ = "0.1.0"

from .errors import (
    DomainMismatch,
    ForeignCycle,
    NoCovering,
    NonIntegralLabel,
    NotConsecutive,
    ParameterOutOfRange,
    UnsupportedLength,
)
from .families import Family, FamilySpec, sizes
from .graph import Cycle, Graph, build_graph, check_covering, covering_cycles, enumerate_cycles
from .labelers import (
    TYPOS,
    label,
    label_antiprism,
    label_books,
    label_fan_union,
    label_fans,
    label_ladder_union,
    label_ladders,
    label_triangular_ladders,
    label_wheels,
)
from .labeling import PartialVertexLabeling, TotalLabeling, eav_path_forest, sem_extend
from .search import SearchConfig, SearchOutcome, find_labelings, fit_check
from .verify import VerificationReport, predicted_constant, printed_constant, verify

__all__ = [
    "Cycle", "DomainMismatch", "Family", "FamilySpec", "ForeignCycle", "Graph", "NoCovering",
    "NonIntegralLabel", "NotConsecutive", "ParameterOutOfRange", "PartialVertexLabeling",
    "SearchConfig", "SearchOutcome", "TYPOS", "TotalLabeling", "UnsupportedLength",
    "VerificationReport", "build_graph", "check_covering", "covering_cycles", "eav_path_forest",
    "enumerate_cycles", "find_labelings", "fit_check", "label", "label_antiprism", "label_books",
    "label_fan_union", "label_fans", "label_ladder_union", "label_ladders",
    "label_triangular_ladders", "label_wheels", "predicted_constant", "printed_constant",
    "sem_extend", "sizes", "verify",
]
