"""Two-lane highway analysis kernel with a rule-graph validation gate."""

from .analysis import (
    CoefficientSet,
    FacilityResult,
    HighwayFacility,
    SegmentInput,
    SegmentResult,
    analyze_facility,
    facility_from_dict,
)
from .graph import KnowledgeGraph, load_rules
from .opendrive import ComplianceReport, OdrNetwork, parse_opendrive, validate_asset
from .stress import CategoryMix, StressReport, generate_vectors, run_stress
from .validator import (
    RelationalBindings,
    ValidationRejected,
    ValidationReport,
    Violation,
    enforce,
    normalize,
    r_min,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "CoefficientSet",
    "FacilityResult",
    "HighwayFacility",
    "SegmentInput",
    "SegmentResult",
    "analyze_facility",
    "facility_from_dict",
    "KnowledgeGraph",
    "load_rules",
    "ComplianceReport",
    "OdrNetwork",
    "parse_opendrive",
    "validate_asset",
    "CategoryMix",
    "StressReport",
    "generate_vectors",
    "run_stress",
    "RelationalBindings",
    "ValidationRejected",
    "ValidationReport",
    "Violation",
    "enforce",
    "normalize",
    "r_min",
    "validate",
    "__version__",
]
