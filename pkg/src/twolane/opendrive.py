"""OpenDRIVE road-network ingest and compliance auditing.

Parses .xodr XML (1.4 through 1.6 tolerated, unknown elements skipped),
extracts lane widths, minimum curve radii, and design speeds in canonical
units, and audits every extracted parameter against the rule graph. One
check is counted per (parameter, active rule) pair; the per-asset tally has
the Asset / Roads / Params / Valid / Invalid / Pass Rate shape.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from typing import Any

from .graph import KnowledgeGraph
from .validator import (
    MissingOperandError,
    NormalizedParameter,
    PredicateEvalError,
    RelationalBindings,
    evaluate_predicate,
)
from .units import kmh_to_mph, m_to_ft, ms_to_mph

AUDIT_CONTEXT = {"facility_type": "two_lane_highway"}


class OpenDriveParseError(ValueError):
    """Malformed .xodr input; message carries line/column when known."""


@dataclass(frozen=True)
class OdrGeometry:
    s: float
    length: float
    shape: str  # "line" | "arc" | "spiral" | "other"
    curvature: float = 0.0
    curv_start: float = 0.0
    curv_end: float = 0.0


@dataclass(frozen=True)
class OdrLane:
    lane_id: int
    lane_type: str
    width_poly: tuple[float, float, float, float] | None


@dataclass(frozen=True)
class OdrLaneSection:
    s: float
    lanes: tuple[OdrLane, ...]


@dataclass(frozen=True)
class OdrRoad:
    id: str
    length_m: float
    geometry: tuple[OdrGeometry, ...]
    lane_sections: tuple[OdrLaneSection, ...]
    speed_limit: tuple[float, str] | None = None
    road_type: str | None = None


@dataclass(frozen=True)
class OdrNetwork:
    name: str
    roads: tuple[OdrRoad, ...]


@dataclass
class IngestConfig:
    default_design_speed_mph: float = 55.0
    passing_type: str = "Constrained"
    samples_per_section: int = 1


@dataclass
class ComplianceReport:
    asset: str
    roads: int
    params_checked: int
    valid: int
    invalid: int
    pass_rate: float | None  # percent; None when nothing was checked
    violations_by_rule: dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "asset": self.asset,
            "roads": self.roads,
            "params_checked": self.params_checked,
            "valid": self.valid,
            "invalid": self.invalid,
            "pass_rate": self.pass_rate,
            "violations_by_rule": dict(sorted(self.violations_by_rule.items())),
        }


def parse_opendrive(data: bytes | str, name: str = "asset") -> OdrNetwork:
    """Parse .xodr bytes into a network; unsupported elements are skipped."""
    try:
        root = ET.fromstring(data)
    except ET.ParseError as exc:
        line, column = exc.position
        raise OpenDriveParseError(
            f"{name}: XML parse error at line {line}, column {column}: {exc.msg}"
        ) from exc
    if root.tag != "OpenDRIVE":
        raise OpenDriveParseError(f"{name}: root element is '{root.tag}', not 'OpenDRIVE'")
    if root.find("header") is None:
        raise OpenDriveParseError(f"{name}: missing 'header' element")
    roads = []
    seen_ids: set[str] = set()
    for road_el in root.findall("road"):
        road = _parse_road(name, road_el)
        if road.id in seen_ids:
            raise OpenDriveParseError(f"{name}: duplicate road id '{road.id}'")
        seen_ids.add(road.id)
        roads.append(road)
    return OdrNetwork(name=name, roads=tuple(roads))


def _parse_road(name: str, road_el: ET.Element) -> OdrRoad:
    road_id = road_el.get("id", "")
    geometry = []
    plan_view = road_el.find("planView")
    last_s = float("-inf")
    if plan_view is not None:
        for geo_el in plan_view.findall("geometry"):
            geo = _parse_geometry(name, road_id, geo_el)
            if geo.s < last_s:
                raise OpenDriveParseError(
                    f"{name}: road '{road_id}' geometry s-offsets decrease at s={geo.s}"
                )
            last_s = geo.s
            geometry.append(geo)
    sections = []
    lanes_el = road_el.find("lanes")
    if lanes_el is not None:
        for section_el in lanes_el.findall("laneSection"):
            sections.append(_parse_lane_section(section_el))
    type_el = road_el.find("type")
    road_type = type_el.get("type") if type_el is not None else None
    speed = None
    if type_el is not None:
        speed_el = type_el.find("speed")
        if speed_el is not None and speed_el.get("max") is not None:
            speed = (float(speed_el.get("max")), speed_el.get("unit", "m/s"))
    return OdrRoad(
        id=road_id,
        length_m=float(road_el.get("length", 0.0)),
        geometry=tuple(geometry),
        lane_sections=tuple(sections),
        speed_limit=speed,
        road_type=road_type,
    )


def _parse_geometry(name: str, road_id: str, geo_el: ET.Element) -> OdrGeometry:
    s = float(geo_el.get("s", 0.0))
    length = float(geo_el.get("length", 0.0))
    arc = geo_el.find("arc")
    if arc is not None:
        curvature = float(arc.get("curvature", 0.0))
        if curvature == 0.0:
            raise OpenDriveParseError(
                f"{name}: road '{road_id}' has an arc with zero curvature at s={s}"
            )
        return OdrGeometry(s=s, length=length, shape="arc", curvature=curvature)
    spiral = geo_el.find("spiral")
    if spiral is not None:
        return OdrGeometry(
            s=s,
            length=length,
            shape="spiral",
            curv_start=float(spiral.get("curvStart", 0.0)),
            curv_end=float(spiral.get("curvEnd", 0.0)),
        )
    if geo_el.find("line") is not None:
        return OdrGeometry(s=s, length=length, shape="line")
    return OdrGeometry(s=s, length=length, shape="other")


def _parse_lane_section(section_el: ET.Element) -> OdrLaneSection:
    lanes = []
    # Center lane (id 0) carries no width and is never a travel lane.
    for side in ("left", "right"):
        side_el = section_el.find(side)
        if side_el is None:
            continue
        for lane_el in side_el.findall("lane"):
            width_el = lane_el.find("width")
            width_poly = None
            if width_el is not None:
                width_poly = (
                    float(width_el.get("a", 0.0)),
                    float(width_el.get("b", 0.0)),
                    float(width_el.get("c", 0.0)),
                    float(width_el.get("d", 0.0)),
                )
            lanes.append(
                OdrLane(
                    lane_id=int(lane_el.get("id", 0)),
                    lane_type=lane_el.get("type", "none"),
                    width_poly=width_poly,
                )
            )
    return OdrLaneSection(s=float(section_el.get("s", 0.0)), lanes=tuple(lanes))


def _min_curve_radius_m(road: OdrRoad) -> float | None:
    """Tightest curve on the road; spirals use their peak curvature."""
    radii = []
    for geo in road.geometry:
        if geo.shape == "arc":
            radii.append(1.0 / abs(geo.curvature))
        elif geo.shape == "spiral":
            peak = max(abs(geo.curv_start), abs(geo.curv_end))
            if peak > 0:
                radii.append(1.0 / peak)
    return min(radii) if radii else None


def _design_speed_mph(road: OdrRoad, config: IngestConfig) -> float:
    if road.speed_limit is None:
        return config.default_design_speed_mph
    value, unit = road.speed_limit
    if unit == "mph":
        return value
    if unit in ("km/h", "kmh"):
        return kmh_to_mph(value)
    return ms_to_mph(value)


def extract_parameters(
    road: OdrRoad, config: IngestConfig | None = None
) -> list[NormalizedParameter]:
    """Canonical-unit audit parameters for one road.

    One lane_width per driving lane per lane section and one shoulder_width
    per shoulder lane (width polynomial sampled at the section start); one
    design_radius when the road curves; a design_speed from the speed record
    or the configured default; the two-lane passing_type constant.
    """
    config = config or IngestConfig()
    params: list[NormalizedParameter] = []
    for section in road.lane_sections:
        for lane in section.lanes:
            if lane.width_poly is None:
                continue
            width_ft = m_to_ft(lane.width_poly[0])
            if lane.lane_type == "driving":
                params.append(NormalizedParameter("lane_width", width_ft, "ft"))
            elif lane.lane_type == "shoulder":
                params.append(NormalizedParameter("shoulder_width", width_ft, "ft"))
    radius_m = _min_curve_radius_m(road)
    if radius_m is not None:
        params.append(NormalizedParameter("design_radius", m_to_ft(radius_m), "ft"))
    params.append(
        NormalizedParameter("design_speed", _design_speed_mph(road, config), "mph")
    )
    params.append(NormalizedParameter("passing_type", config.passing_type, "enum"))
    return params


def audit_road(
    road: OdrRoad,
    graph: KnowledgeGraph,
    bindings: RelationalBindings,
    config: IngestConfig | None = None,
) -> tuple[int, int, dict[str, int]]:
    """(checks, valid, violations-by-rule) for one road."""
    params = extract_parameters(road, config)
    operands = {p.key: p for p in params if p.key == "design_speed"}
    checks = 0
    valid = 0
    violations: dict[str, int] = {}
    for param in params:
        node = graph.find_parameter(param.key)
        if node is None:
            continue
        for rule in graph.active_rules(node, AUDIT_CONTEXT):
            checks += 1
            try:
                ok = evaluate_predicate(
                    rule, param, {**operands, param.key: param}, bindings
                )
            except (MissingOperandError, PredicateEvalError):
                ok = False
            if ok:
                valid += 1
            else:
                violations[rule.id] = violations.get(rule.id, 0) + 1
    return checks, valid, violations


def validate_asset(
    net: OdrNetwork,
    graph: KnowledgeGraph,
    bindings: RelationalBindings,
    config: IngestConfig | None = None,
) -> ComplianceReport:
    """Audit every extracted parameter of every road in the asset."""
    checks = 0
    valid = 0
    violations: dict[str, int] = {}
    for road in net.roads:
        road_checks, road_valid, road_violations = audit_road(
            road, graph, bindings, config
        )
        checks += road_checks
        valid += road_valid
        for rule_id, count in road_violations.items():
            violations[rule_id] = violations.get(rule_id, 0) + count
    invalid = checks - valid
    pass_rate = (100.0 * valid / checks) if checks else None
    return ComplianceReport(
        asset=net.name,
        roads=len(net.roads),
        params_checked=checks,
        valid=valid,
        invalid=invalid,
        pass_rate=pass_rate,
        violations_by_rule=violations,
    )


def aggregate_reports(reports: list[ComplianceReport]) -> ComplianceReport:
    """TOTAL row across assets."""
    checks = sum(r.params_checked for r in reports)
    valid = sum(r.valid for r in reports)
    violations: dict[str, int] = {}
    for report in reports:
        for rule_id, count in report.violations_by_rule.items():
            violations[rule_id] = violations.get(rule_id, 0) + count
    return ComplianceReport(
        asset="TOTAL",
        roads=sum(r.roads for r in reports),
        params_checked=checks,
        valid=valid,
        invalid=checks - valid,
        pass_rate=(100.0 * valid / checks) if checks else None,
        violations_by_rule=violations,
    )


def render_table(reports: list[ComplianceReport]) -> str:
    """Aligned-column compliance table (Asset / Roads / Params / ... / Pass Rate)."""
    header = ("Asset", "Roads", "Params", "Valid", "Invalid", "Pass Rate")
    rows = [header]
    for r in reports:
        rate = f"{r.pass_rate:.2f}%" if r.pass_rate is not None else "n/a"
        rows.append(
            (r.asset, str(r.roads), str(r.params_checked), str(r.valid),
             str(r.invalid), rate)
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = []
    for row in rows:
        cells = [row[0].ljust(widths[0])]
        cells += [row[i].rjust(widths[i]) for i in range(1, len(header))]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)
