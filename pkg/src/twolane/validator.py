"""Rule validation pipeline that gates every analysis.

Four phases run per request: input keys are mapped onto parameter nodes with
unit normalization (unknown keys are collected, never dropped), the context
selects the active rule set, each active predicate is evaluated, and the
outcome is enforced as either a proceed token or a structured rejection
payload carrying one cited violation per failed check. All failures
accumulate; nothing short-circuits on the first violation.

``validate`` is a pure function of (graph, input, bindings) and is safe to
call from any number of threads.
"""

from __future__ import annotations

import json
import math
import time
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any

from .graph import (
    CONTEXT_VOCABULARY,
    CategoricalPredicate,
    DesignRuleNode,
    KnowledgeGraph,
    RangePredicate,
    RelationalPredicate,
)
from .units import FT_PER_M, MPH_PER_KMH

DEFAULT_FACILITY_TYPE = "two_lane_highway"

# Metric input suffixes accepted by normalize: "<key>_m" feeds an ft-unit
# parameter, "<key>_kmh" an mph-unit parameter.
_METRIC_SUFFIXES = {
    "_m": ("ft", FT_PER_M),
    "_kmh": ("mph", MPH_PER_KMH),
}


class InputError(ValueError):
    """Malformed analysis-input document (wrong types, non-finite numbers)."""


class MissingOperandError(ValueError):
    """Relational rule evaluated without its operand parameter present."""


class PredicateEvalError(ValueError):
    """Predicate could not be evaluated against the observed value."""


class ValidationRejected(Exception):
    """Raised when a gated computation is attempted on rejected input."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__(f"input rejected with {len(report.violations)} violation(s)")

    def payload(self) -> dict[str, Any]:
        return reject_payload(self.report)


@dataclass(frozen=True)
class NormalizedParameter:
    key: str
    value: Any
    unit: str


NormalizedParameterSet = dict[str, NormalizedParameter]


@dataclass(frozen=True)
class ValidationContext:
    """Global state the condition nodes are matched against."""

    entries: Mapping[str, Any]

    def __post_init__(self):
        if not self.entries.keys() <= CONTEXT_VOCABULARY:
            unknown = sorted(set(self.entries) - CONTEXT_VOCABULARY)
            raise InputError(f"unknown context keys: {unknown}")

    def get(self, key: str, default: Any = None) -> Any:
        return self.entries.get(key, default)


@dataclass(frozen=True)
class RelationalBindings:
    """Coefficients behind the minimum-curve-radius relation.

    ``e_max`` is the maximum superelevation rate in percent; ``f_table`` maps
    design speed (mph) to the maximum side-friction factor. These are shipped
    configuration values, not normative data; swap them via a bindings file.
    """

    e_max: float = 8.0
    f_table: tuple[tuple[float, float], ...] = (
        (20.0, 0.27),
        (30.0, 0.20),
        (40.0, 0.16),
        (50.0, 0.14),
        (55.0, 0.13),
        (60.0, 0.12),
        (70.0, 0.10),
        (80.0, 0.08),
    )

    def __post_init__(self):
        if not 0.0 <= self.e_max <= 12.0:
            raise ValueError(f"e_max {self.e_max} outside [0, 12] %")
        if not self.f_table:
            raise ValueError("f_table must not be empty")
        speeds = [s for s, _ in self.f_table]
        if speeds != sorted(speeds):
            raise ValueError("f_table speeds must be ascending")
        for speed, f in self.f_table:
            if not 0.0 < f < 1.0:
                raise ValueError(f"side-friction factor {f} at {speed} mph outside (0, 1)")

    @property
    def max_speed(self) -> float:
        return self.f_table[-1][0]

    def friction_at(self, design_speed: float) -> float:
        """Side friction at the nearest table speed at or above the input."""
        for speed, f in self.f_table:
            if design_speed <= speed:
                return f
        raise PredicateEvalError(
            f"design_speed {design_speed} mph above the bindings table "
            f"range (max {self.max_speed} mph)"
        )

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "RelationalBindings":
        table = tuple(
            sorted((float(k), float(v)) for k, v in data["f_table"].items())
        )
        return cls(e_max=float(data["e_max"]), f_table=table)

    def to_dict(self) -> dict[str, Any]:
        return {
            "e_max": self.e_max,
            "f_table": {_num_key(s): f for s, f in self.f_table},
        }


def _num_key(speed: float) -> str:
    return str(int(speed)) if speed == int(speed) else str(speed)


@dataclass(frozen=True)
class Violation:
    rule_id: str
    parameter: str
    observed: Any
    constraint: str
    severity: str
    citation: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "rule_id": self.rule_id,
            "parameter": self.parameter,
            "observed": self.observed,
            "constraint": self.constraint,
            "severity": self.severity,
            "citation": self.citation,
        }


@dataclass
class ValidationReport:
    status: str  # "pass" | "reject"
    violations: list[Violation]
    unknown_keys: list[str]
    checks_performed: int
    elapsed_us: float
    normalized: NormalizedParameterSet = field(default_factory=dict)

    def error_violations(self) -> list[Violation]:
        return [v for v in self.violations if v.severity == "error"]

    def to_dict(self, include_timing: bool = True) -> dict[str, Any]:
        out: dict[str, Any] = {
            "status": self.status,
            "violations": [v.to_dict() for v in self.violations],
            "unknown_keys": list(self.unknown_keys),
            "checks_performed": self.checks_performed,
        }
        if include_timing:
            out["elapsed_us"] = self.elapsed_us
        return out


@dataclass(frozen=True)
class Proceed:
    """Token a passing report is exchanged for; wraps the normalized input."""

    validated: dict[str, Any]
    status: int = 200

    def to_dict(self) -> dict[str, Any]:
        return {"status": self.status, "validated": dict(self.validated)}


def normalize(
    document: Mapping[str, Any], graph: KnowledgeGraph
) -> tuple[NormalizedParameterSet, ValidationContext, list[str]]:
    """Map raw input keys onto parameter nodes in canonical units.

    A key is recognized as a canonical parameter key, as a schema binding
    (e.g. ``lane_width_ft``), or with a metric suffix (``lane_width_m``,
    ``design_speed_kmh``) that triggers unit conversion. Unrecognized keys
    are collected and reported, never silently dropped.
    """
    if not isinstance(document, Mapping):
        raise InputError("analysis input must be a JSON object")
    params: NormalizedParameterSet = {}
    unknown: list[str] = []
    for raw_key, raw_value in document.items():
        resolved = _resolve_key(graph, raw_key)
        if resolved is None:
            unknown.append(raw_key)
            continue
        node, factor = resolved
        value = _coerce_value(raw_key, raw_value, node.kind, factor)
        if node.key in params:
            raise InputError(
                f"'{raw_key}' and another input key both map to '{node.key}'"
            )
        params[node.key] = NormalizedParameter(key=node.key, value=value, unit=node.unit)
    context_entries: dict[str, Any] = {"facility_type": DEFAULT_FACILITY_TYPE}
    if "design_speed" in params:
        context_entries["design_speed"] = params["design_speed"].value
    return params, ValidationContext(entries=context_entries), unknown


def _resolve_key(graph: KnowledgeGraph, raw_key: str):
    node = graph.find_parameter(raw_key)
    if node is not None and node.binding is not None:
        return node, 1.0
    node = graph.find_by_binding(raw_key)
    if node is not None:
        return node, 1.0
    for suffix, (unit, factor) in _METRIC_SUFFIXES.items():
        if raw_key.endswith(suffix):
            base = graph.find_parameter(raw_key[: -len(suffix)])
            if base is not None and base.unit == unit:
                return base, factor
    return None


def _coerce_value(key: str, value: Any, kind: str, factor: float) -> Any:
    if isinstance(value, bool):
        raise InputError(f"'{key}': boolean is not a valid parameter value")
    if kind == "continuous":
        if not isinstance(value, (int, float)):
            raise InputError(f"'{key}': expected a number, got {type(value).__name__}")
        value = float(value) * factor
        if not math.isfinite(value):
            raise InputError(f"'{key}': value must be finite")
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            raise InputError(f"'{key}': value must be finite")
        if value.is_integer():
            return int(value)
        return value
    return value


def r_min(design_speed: float, bindings: RelationalBindings) -> float:
    """Minimum safe curve radius (ft) at a design speed (mph).

    V^2 / (15 * (0.01 * e_max + f)), with f looked up at the nearest table
    speed at or above V. Monotonically increasing in V; zero at V = 0.
    """
    if design_speed < 0:
        raise PredicateEvalError(f"design_speed {design_speed} mph is negative")
    if design_speed == 0:
        return 0.0
    f = bindings.friction_at(design_speed)
    return design_speed * design_speed / (15.0 * (0.01 * bindings.e_max + f))


def _canonical_token(value: Any) -> Any:
    if isinstance(value, float) and value.is_integer():
        return int(value)
    return value


def evaluate_predicate(
    rule: DesignRuleNode,
    value: NormalizedParameter,
    all_params: NormalizedParameterSet,
    bindings: RelationalBindings,
) -> bool:
    """True when the observed value satisfies the rule predicate.

    Range bounds are inclusive; categorical matching is exact on tokens;
    relational ``min_radius`` compares against r_min at the operand design
    speed. Raises MissingOperandError when a relational operand is absent and
    PredicateEvalError when the value cannot be compared.
    """
    predicate = rule.predicate
    if isinstance(predicate, RangePredicate):
        v = value.value
        if not isinstance(v, (int, float)) or isinstance(v, bool):
            raise PredicateEvalError(
                f"{value.key}: range rule needs a numeric value, got {v!r}"
            )
        return predicate.min <= v <= predicate.max
    if isinstance(predicate, CategoricalPredicate):
        return _canonical_token(value.value) in predicate.allowed
    if predicate.expression != "min_radius":
        raise PredicateEvalError(
            f"rule '{rule.id}' uses unknown relational expression "
            f"'{predicate.expression}'"
        )
    operand_key = predicate.operands[0]
    if operand_key not in all_params:
        raise MissingOperandError(f"{operand_key} required by {rule.id}")
    speed = all_params[operand_key].value
    if not isinstance(speed, (int, float)) or isinstance(speed, bool):
        raise PredicateEvalError(f"{operand_key}: expected a number, got {speed!r}")
    v = value.value
    if not isinstance(v, (int, float)) or isinstance(v, bool):
        raise PredicateEvalError(
            f"{value.key}: relational rule needs a numeric value, got {v!r}"
        )
    return v >= r_min(float(speed), bindings)


def describe_constraint(
    rule: DesignRuleNode,
    graph: KnowledgeGraph,
    all_params: NormalizedParameterSet,
    bindings: RelationalBindings,
) -> str:
    """Human-readable constraint text for messages ({constraint} placeholder)."""
    node = graph.find_parameter(rule.validates)
    unit = node.unit if node is not None else ""
    predicate = rule.predicate
    if isinstance(predicate, RangePredicate):
        return f"range [{_fmt(predicate.min)}, {_fmt(predicate.max)}] {unit}".rstrip()
    if isinstance(predicate, CategoricalPredicate):
        allowed = ", ".join(str(a) for a in predicate.allowed)
        return f"one of {{{allowed}}}"
    operand_key = predicate.operands[0]
    operand = all_params.get(operand_key)
    if operand is None or not isinstance(operand.value, (int, float)):
        return f"minimum radius at the {operand_key} in effect"
    try:
        minimum = r_min(float(operand.value), bindings)
    except PredicateEvalError:
        return f"minimum radius at {operand_key} {_fmt(operand.value)} mph"
    return (
        f"minimum radius {minimum:.2f} ft at {operand_key} "
        f"{_fmt(operand.value)} mph"
    )


def _fmt(value: Any) -> str:
    if isinstance(value, float) and value.is_integer():
        return str(int(value))
    return str(value)


def _render_message(template: str, param: str, value: Any, constraint: str) -> str:
    return template.format(param=param, value=_fmt(value), constraint=constraint)


def build_violation(
    graph: KnowledgeGraph,
    rule: DesignRuleNode,
    parameter: str,
    observed: Any,
    all_params: NormalizedParameterSet,
    bindings: RelationalBindings,
    reason: str | None = None,
) -> Violation:
    constraint = reason or _render_message(
        rule.message_template,
        parameter,
        observed,
        describe_constraint(rule, graph, all_params, bindings),
    )
    return Violation(
        rule_id=rule.id,
        parameter=parameter,
        observed=observed,
        constraint=constraint,
        severity=rule.severity,
        citation=graph.citation(rule),
    )


def validate(
    graph: KnowledgeGraph,
    document: Mapping[str, Any],
    bindings: RelationalBindings,
    context: ValidationContext | None = None,
    lenient: bool = False,
) -> ValidationReport:
    """Run all four phases and report every violation with its citation.

    ``lenient`` downgrades unknown input keys from rejection to a warning
    (used for exploratory asset audits); rule violations always count.
    """
    start = time.perf_counter_ns()
    params, derived_context, unknown = normalize(document, graph)
    ctx = context if context is not None else derived_context
    violations: list[Violation] = []
    checks = 0
    for key, param in params.items():
        node = graph.find_parameter(key)
        for rule in graph.active_rules(node, ctx.entries):
            checks += 1
            try:
                ok = evaluate_predicate(rule, param, params, bindings)
            except (MissingOperandError, PredicateEvalError) as exc:
                violations.append(
                    build_violation(
                        graph, rule, key, param.value, params, bindings,
                        reason=str(exc),
                    )
                )
                continue
            if not ok:
                violations.append(
                    build_violation(graph, rule, key, param.value, params, bindings)
                )
    has_errors = any(v.severity == "error" for v in violations)
    rejected = has_errors or (bool(unknown) and not lenient)
    elapsed_us = (time.perf_counter_ns() - start) / 1000.0
    return ValidationReport(
        status="reject" if rejected else "pass",
        violations=violations,
        unknown_keys=unknown,
        checks_performed=checks,
        elapsed_us=elapsed_us,
        normalized=params,
    )


def reject_payload(report: ValidationReport) -> dict[str, Any]:
    """Structured rejection payload (the 400-equivalent response body)."""
    return {
        "status": 400,
        "errors": [v.to_dict() for v in report.violations],
        "unknown_keys": list(report.unknown_keys),
    }


def enforce(report: ValidationReport) -> Proceed | dict[str, Any]:
    """Exchange a report for a proceed token or the rejection payload.

    Pass reports yield a Proceed wrapping the normalized values for the
    computational core; reject reports yield the payload dict with status 400.
    """
    if report.status == "pass":
        return Proceed(validated={k: p.value for k, p in report.normalized.items()})
    return reject_payload(report)


def dumps_payload(payload: Proceed | dict[str, Any]) -> str:
    if isinstance(payload, Proceed):
        return json.dumps(payload.to_dict(), indent=2)
    return json.dumps(payload, indent=2)
