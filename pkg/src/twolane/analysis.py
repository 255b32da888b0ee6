"""Two-lane highway performance pipeline.

Per segment: demand is adjusted to a flow rate, average speed and percent
followers come from an explicit surrogate speed-flow model, follower density
ties the three together, and level of service is graded from follower
density. Facility results aggregate segment follower densities by length.

Every model coefficient lives in CoefficientSet and can be replaced from a
JSON file without code changes; the functional forms (linear speed-flow,
exponential follower saturation) are fixed here. All functions are pure;
segments may be computed in any order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Mapping

from .graph import KnowledgeGraph
from .validator import (
    RelationalBindings,
    ValidationReport,
    ValidationRejected,
    Violation,
    validate,
)

PASSING_TYPES = ("Constrained", "Zone", "Lane")
LOS_LETTERS = ("A", "B", "C", "D", "E", "F")

# Average speed never drops below this floor (oversaturated inputs).
MIN_AVG_SPEED_MPH = 10.0

# Passenger-car equivalent for heavy vehicles in the demand adjustment.
HEAVY_VEHICLE_PCE = 2.0


class FacilityInputError(ValueError):
    """Facility document fails structural (schema-level) checks."""


@dataclass(frozen=True)
class Subsegment:
    length_mi: float
    radius_ft: float
    superelevation_pct: float = 0.0


@dataclass(frozen=True)
class SegmentInput:
    index: int
    length_mi: float
    lane_width_ft: float
    shoulder_width_ft: float
    posted_speed_mph: float
    demand_vph: float
    phf: float
    passing_type: str
    horizontal_class: int
    opposing_demand_vph: float = 0.0
    heavy_pct: float = 0.0
    grade_pct: float = 0.0
    subsegments: tuple[Subsegment, ...] = ()


@dataclass(frozen=True)
class SegmentResult:
    avg_speed_mph: float
    percent_followers: float
    follower_density: float
    los: str
    flow_rate_pch: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "as_mph": self.avg_speed_mph,
            "pf_pct": self.percent_followers,
            "fd_fol_per_mi": self.follower_density,
            "los": self.los,
            "flow_rate_pch": self.flow_rate_pch,
        }


@dataclass(frozen=True)
class HighwayFacility:
    facility_type: str
    segments: tuple[SegmentInput, ...]


@dataclass(frozen=True)
class FacilityResult:
    segments: tuple[SegmentResult, ...]
    overall_fd: float
    overall_los: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "segments": [s.to_dict() for s in self.segments],
            "overall_fd": self.overall_fd,
            "overall_los": self.overall_los,
        }


@dataclass(frozen=True)
class CoefficientSet:
    """Externalized model coefficients; defaults are shipped configuration.

    ``los_thresholds`` holds inclusive follower-density upper bounds for
    letters A through D, one table for posted speeds of 50 mph and above and
    one for below; anything past D that is under capacity grades E.
    """

    bffs_offset: float = 2.5
    lane_width_speed_coeff: float = 0.6
    shoulder_width_speed_coeff: float = 0.5
    horizontal_class_speed_coeff: float = 1.0
    slope_by_passing_type: Mapping[str, float] = field(
        default_factory=lambda: {"Constrained": 4.0, "Zone": 3.5, "Lane": 3.0}
    )
    pf_rate_by_passing_type: Mapping[str, float] = field(
        default_factory=lambda: {"Constrained": 1.48, "Zone": 1.30, "Lane": 1.00}
    )
    capacity: float = 1700.0
    los_thresholds: Mapping[str, Mapping[str, float]] = field(
        default_factory=lambda: {
            "high_speed": {"A": 2.0, "B": 4.0, "C": 8.0, "D": 12.0},
            "low_speed": {"A": 2.5, "B": 5.0, "C": 10.0, "D": 15.0},
        }
    )

    def __post_init__(self):
        for name in (
            "bffs_offset",
            "lane_width_speed_coeff",
            "shoulder_width_speed_coeff",
            "horizontal_class_speed_coeff",
            "capacity",
        ):
            if getattr(self, name) < 0:
                raise ValueError(f"coefficient {name} must be >= 0")
        for table_name, table in self.los_thresholds.items():
            bounds = [table[letter] for letter in ("A", "B", "C", "D")]
            if bounds != sorted(bounds) or len(set(bounds)) != 4:
                raise ValueError(
                    f"LOS threshold table '{table_name}' must be strictly increasing"
                )

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "CoefficientSet":
        kwargs: dict[str, Any] = {}
        for name in (
            "bffs_offset",
            "lane_width_speed_coeff",
            "shoulder_width_speed_coeff",
            "horizontal_class_speed_coeff",
            "capacity",
        ):
            if name in data:
                kwargs[name] = float(data[name])
        for name in ("slope_by_passing_type", "pf_rate_by_passing_type"):
            if name in data:
                kwargs[name] = {k: float(v) for k, v in data[name].items()}
        if "los_thresholds" in data:
            kwargs["los_thresholds"] = {
                table: {k: float(v) for k, v in bounds.items()}
                for table, bounds in data["los_thresholds"].items()
            }
        return cls(**kwargs)

    def to_dict(self) -> dict[str, Any]:
        return {
            "bffs_offset": self.bffs_offset,
            "lane_width_speed_coeff": self.lane_width_speed_coeff,
            "shoulder_width_speed_coeff": self.shoulder_width_speed_coeff,
            "horizontal_class_speed_coeff": self.horizontal_class_speed_coeff,
            "slope_by_passing_type": dict(self.slope_by_passing_type),
            "pf_rate_by_passing_type": dict(self.pf_rate_by_passing_type),
            "capacity": self.capacity,
            "los_thresholds": {
                table: dict(bounds) for table, bounds in self.los_thresholds.items()
            },
        }


def demand_flow(seg: SegmentInput, pce: float = HEAVY_VEHICLE_PCE) -> float:
    """Demand adjusted to a flow rate in pc/h.

    v = demand / (PHF * f_HV), f_HV = 1 / (1 + (heavy%/100) * (PCE - 1)).
    """
    if not 0.0 < seg.phf <= 1.0:
        raise FacilityInputError(f"segment {seg.index}: phf must be in (0, 1]")
    f_hv = 1.0 / (1.0 + (seg.heavy_pct / 100.0) * (pce - 1.0))
    return seg.demand_vph / (seg.phf * f_hv)


def free_flow_speed(seg: SegmentInput, coeffs: CoefficientSet) -> float:
    """Free-flow speed: posted plus offset, less narrow lane/shoulder penalties."""
    return (
        seg.posted_speed_mph
        + coeffs.bffs_offset
        - coeffs.lane_width_speed_coeff * max(0.0, 12.0 - seg.lane_width_ft)
        - coeffs.shoulder_width_speed_coeff * max(0.0, 6.0 - seg.shoulder_width_ft)
    )


def average_speed(seg: SegmentInput, v: float, coeffs: CoefficientSet) -> float:
    """Linear speed-flow model, floored at 10 mph and capped at FFS."""
    ffs = free_flow_speed(seg, coeffs)
    slope = coeffs.slope_by_passing_type[seg.passing_type]
    raw = (
        ffs
        - slope * (v / 1000.0)
        - coeffs.horizontal_class_speed_coeff * seg.horizontal_class
    )
    return min(ffs, max(MIN_AVG_SPEED_MPH, raw))


def percent_followers(seg: SegmentInput, v: float, coeffs: CoefficientSet) -> float:
    """Exponential follower saturation: 0 at zero flow, asymptote below 100."""
    k = coeffs.pf_rate_by_passing_type[seg.passing_type]
    # expm1 keeps tiny flows strictly above zero followers.
    return -100.0 * math.expm1(-k * v / 1000.0)


def follower_density(pf: float, v: float, avg_speed_mph: float) -> float:
    """Followers per mile: (PF/100) * v / AS."""
    if avg_speed_mph <= 0:
        raise ValueError(f"average speed must be positive, got {avg_speed_mph}")
    if not 0.0 <= pf <= 100.0:
        raise ValueError(f"percent followers must be within [0, 100], got {pf}")
    return (pf / 100.0) * v / avg_speed_mph


def segment_los(
    fd: float, posted_speed_mph: float, v: float, coeffs: CoefficientSet
) -> str:
    """Letter grade from follower density; F whenever demand exceeds capacity."""
    if fd < 0:
        raise ValueError(f"follower density must be >= 0, got {fd}")
    if v > coeffs.capacity:
        return "F"
    table = (
        coeffs.los_thresholds["high_speed"]
        if posted_speed_mph >= 50.0
        else coeffs.los_thresholds["low_speed"]
    )
    for letter in ("A", "B", "C", "D"):
        if fd <= table[letter]:
            return letter
    return "E"


def analyze_segment(seg: SegmentInput, coeffs: CoefficientSet) -> SegmentResult:
    v = demand_flow(seg)
    avg = average_speed(seg, v, coeffs)
    pf = percent_followers(seg, v, coeffs)
    fd = follower_density(pf, v, avg)
    return SegmentResult(
        avg_speed_mph=avg,
        percent_followers=pf,
        follower_density=fd,
        los=segment_los(fd, seg.posted_speed_mph, v, coeffs),
        flow_rate_pch=v,
    )


def segment_validation_doc(seg: SegmentInput) -> dict[str, Any]:
    """Flat parameter document the validator checks for one segment.

    Posted speed stands in for design speed; the most restrictive subsegment
    radius is checked (the minimum violates the radius rule iff any does).
    """
    doc: dict[str, Any] = {
        "lane_width": seg.lane_width_ft,
        "shoulder_width": seg.shoulder_width_ft,
        "horizontal_class": seg.horizontal_class,
        "passing_type": seg.passing_type,
        "grade": seg.grade_pct,
        "design_speed": seg.posted_speed_mph,
    }
    radii = [sub.radius_ft for sub in seg.subsegments]
    if radii:
        doc["design_radius"] = min(radii)
    return doc


def validate_facility(
    graph: KnowledgeGraph,
    facility: HighwayFacility,
    bindings: RelationalBindings,
    lenient: bool = False,
) -> ValidationReport:
    """Validate every segment; violations are tagged with the segment path."""
    violations: list[Violation] = []
    unknown: list[str] = []
    checks = 0
    elapsed = 0.0
    status = "pass"
    for seg in facility.segments:
        report = validate(
            graph, segment_validation_doc(seg), bindings, lenient=lenient
        )
        prefix = f"segments[{seg.index}]."
        violations.extend(
            Violation(
                rule_id=v.rule_id,
                parameter=prefix + v.parameter,
                observed=v.observed,
                constraint=v.constraint,
                severity=v.severity,
                citation=v.citation,
            )
            for v in report.violations
        )
        unknown.extend(prefix + k for k in report.unknown_keys)
        checks += report.checks_performed
        elapsed += report.elapsed_us
        if report.status == "reject":
            status = "reject"
    return ValidationReport(
        status=status,
        violations=violations,
        unknown_keys=unknown,
        checks_performed=checks,
        elapsed_us=elapsed,
    )


def analyze_facility(
    facility: HighwayFacility,
    coeffs: CoefficientSet,
    graph: KnowledgeGraph,
    bindings: RelationalBindings,
) -> FacilityResult:
    """Validation-gated facility analysis.

    Raises ValidationRejected before any computation when a segment violates
    an active rule; no partial results exist for rejected inputs. Overall LOS
    grades the length-weighted follower density, with the capacity check
    applied to the highest segment flow rate.
    """
    if not facility.segments:
        raise FacilityInputError("facility has no segments")
    report = validate_facility(graph, facility, bindings)
    if report.status == "reject":
        raise ValidationRejected(report)
    results = tuple(analyze_segment(seg, coeffs) for seg in facility.segments)
    total_length = sum(seg.length_mi for seg in facility.segments)
    overall_fd = (
        sum(r.follower_density * seg.length_mi
            for r, seg in zip(results, facility.segments))
        / total_length
    )
    weighted_posted = (
        sum(seg.posted_speed_mph * seg.length_mi for seg in facility.segments)
        / total_length
    )
    peak_flow = max(r.flow_rate_pch for r in results)
    overall_los = segment_los(overall_fd, weighted_posted, peak_flow, coeffs)
    return FacilityResult(
        segments=results, overall_fd=overall_fd, overall_los=overall_los
    )


def facility_from_dict(data: Mapping[str, Any]) -> HighwayFacility:
    """Parse and structurally check the facility JSON document."""
    if not isinstance(data, Mapping):
        raise FacilityInputError("facility document must be a JSON object")
    facility_type = data.get("facility_type")
    if not isinstance(facility_type, str) or not facility_type:
        raise FacilityInputError("facility needs a 'facility_type' string")
    raw_segments = data.get("segments")
    if not isinstance(raw_segments, list) or not raw_segments:
        raise FacilityInputError("facility needs a non-empty 'segments' array")
    segments = tuple(
        _segment_from_dict(i, entry) for i, entry in enumerate(raw_segments)
    )
    return HighwayFacility(facility_type=facility_type, segments=segments)


_REQUIRED_SEGMENT_FIELDS = (
    "length_mi",
    "lane_width_ft",
    "shoulder_width_ft",
    "posted_speed_mph",
    "demand_vph",
    "phf",
    "passing_type",
    "horizontal_class",
)


def _segment_from_dict(index: int, entry: Any) -> SegmentInput:
    if not isinstance(entry, Mapping):
        raise FacilityInputError(f"segment {index} must be an object")
    for name in _REQUIRED_SEGMENT_FIELDS:
        if name not in entry:
            raise FacilityInputError(f"segment {index} is missing '{name}'")
    length = _number(index, "length_mi", entry["length_mi"])
    if length <= 0:
        raise FacilityInputError(f"segment {index}: length_mi must be > 0")
    phf = _number(index, "phf", entry["phf"])
    if not 0.0 < phf <= 1.0:
        raise FacilityInputError(f"segment {index}: phf must be in (0, 1]")
    posted = _number(index, "posted_speed_mph", entry["posted_speed_mph"])
    if posted <= 0:
        raise FacilityInputError(f"segment {index}: posted_speed_mph must be > 0")
    demand = _number(index, "demand_vph", entry["demand_vph"])
    if demand < 0:
        raise FacilityInputError(f"segment {index}: demand_vph must be >= 0")
    horizontal_class = entry["horizontal_class"]
    if isinstance(horizontal_class, float) and horizontal_class.is_integer():
        horizontal_class = int(horizontal_class)
    if isinstance(horizontal_class, bool) or not isinstance(horizontal_class, int):
        raise FacilityInputError(
            f"segment {index}: horizontal_class must be an integer"
        )
    subsegments = []
    for j, sub in enumerate(entry.get("subsegments", ())):
        if not isinstance(sub, Mapping) or "radius_ft" not in sub:
            raise FacilityInputError(
                f"segment {index} subsegment {j} needs a 'radius_ft'"
            )
        subsegments.append(
            Subsegment(
                length_mi=float(sub.get("length_mi", 0.0)),
                radius_ft=_number(index, f"subsegments[{j}].radius_ft", sub["radius_ft"]),
                superelevation_pct=float(sub.get("superelevation_pct", 0.0)),
            )
        )
    return SegmentInput(
        index=index,
        length_mi=length,
        lane_width_ft=_number(index, "lane_width_ft", entry["lane_width_ft"]),
        shoulder_width_ft=_number(index, "shoulder_width_ft", entry["shoulder_width_ft"]),
        posted_speed_mph=posted,
        demand_vph=demand,
        phf=phf,
        passing_type=entry["passing_type"],
        horizontal_class=horizontal_class,
        opposing_demand_vph=_number(
            index, "opposing_demand_vph", entry.get("opposing_demand_vph", 0.0)
        ),
        heavy_pct=_number(index, "heavy_pct", entry.get("heavy_pct", 0.0)),
        grade_pct=_number(index, "grade_pct", entry.get("grade_pct", 0.0)),
        subsegments=tuple(subsegments),
    )


def _number(index: int, name: str, value: Any) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise FacilityInputError(f"segment {index}: '{name}' must be a number")
    result = float(value)
    if not math.isfinite(result):
        raise FacilityInputError(f"segment {index}: '{name}' must be finite")
    return result
