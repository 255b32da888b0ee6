"""In-memory property graph of highway design knowledge.

The graph holds four node classes (parameters, design rules, conditions,
provenance records) wired by typed edges: a rule VALIDATES one parameter,
REQUIRES zero or more conditions, and is CITED_IN one source; a parameter
AFFECTS downstream parameters. The graph is loaded once from a declarative
JSON rules document, checked for referential closure, and is immutable
afterwards, so every read operation is safe under unrestricted concurrency.
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any

# Context keys a condition is allowed to match on. ValidationContext entries
# are checked against the same vocabulary.
CONTEXT_VOCABULARY = frozenset({"facility_type", "design_speed"})

PARAMETER_KINDS = ("continuous", "categorical")
RULE_TYPES = ("range", "categorical", "relational")
SEVERITIES = ("error", "warning")
CONDITION_OPS = ("eq", "in", "ge", "le")


class RulesDocumentError(ValueError):
    """Base error for a rules document that cannot be loaded."""


class SchemaError(RulesDocumentError):
    pass


class DuplicateIdError(RulesDocumentError):
    pass


class DanglingReferenceError(RulesDocumentError):
    pass


class UnknownParameterError(KeyError):
    pass


@dataclass(frozen=True)
class ProvenanceNode:
    """Source record a rule cites; renders to a deterministic citation."""

    id: str
    doc: str
    edition: str
    ref: str

    def citation(self) -> str:
        return f"{self.doc} {self.edition}, {self.ref}"


@dataclass(frozen=True)
class ConditionClause:
    key: str
    op: str
    value: Any

    def matches(self, context: Mapping[str, Any]) -> bool:
        if self.key not in context:
            return False
        observed = context[self.key]
        if self.op == "eq":
            return observed == self.value
        if self.op == "in":
            return observed in self.value
        try:
            if self.op == "ge":
                return observed >= self.value
            if self.op == "le":
                return observed <= self.value
        except TypeError:
            return False
        raise AssertionError(f"unreachable op {self.op!r}")


@dataclass(frozen=True)
class ConditionNode:
    """Context gate; all clauses must hold for the condition to match."""

    id: str
    match: tuple[ConditionClause, ...]

    def matches(self, context: Mapping[str, Any]) -> bool:
        return all(clause.matches(context) for clause in self.match)


@dataclass(frozen=True)
class ParameterNode:
    """Atomic engineering variable.

    ``binding`` names the field in the analysis-input schema that feeds this
    parameter (None for derived quantities that are outputs, not inputs).
    ``domain`` lists the allowed tokens for categorical parameters.
    """

    id: str
    key: str
    kind: str
    unit: str
    binding: str | None = None
    affects: tuple[str, ...] = ()
    domain: tuple[Any, ...] | None = None


@dataclass(frozen=True)
class RangePredicate:
    min: float
    max: float


@dataclass(frozen=True)
class CategoricalPredicate:
    allowed: tuple[Any, ...]


@dataclass(frozen=True)
class RelationalPredicate:
    expression: str
    operands: tuple[str, ...]


Predicate = RangePredicate | CategoricalPredicate | RelationalPredicate


@dataclass(frozen=True)
class DesignRuleNode:
    id: str
    rule_type: str
    severity: str
    predicate: Predicate
    validates: str
    requires: tuple[str, ...]
    cited_in: str
    message_template: str


@dataclass(frozen=True)
class KnowledgeGraph:
    """Referentially closed, immutable rule graph.

    Lookup indexes are precomputed at load so per-call validation work stays
    in the microsecond range.
    """

    version: str
    parameters: Mapping[str, ParameterNode]
    rules: Mapping[str, DesignRuleNode]
    conditions: Mapping[str, ConditionNode]
    sources: Mapping[str, ProvenanceNode]
    _by_key: Mapping[str, ParameterNode] = field(repr=False, default_factory=dict)
    _by_binding: Mapping[str, ParameterNode] = field(repr=False, default_factory=dict)
    _rules_by_key: Mapping[str, tuple[DesignRuleNode, ...]] = field(
        repr=False, default_factory=dict
    )
    _rule_conditions: Mapping[str, tuple[ConditionNode, ...]] = field(
        repr=False, default_factory=dict
    )

    @property
    def context_vocabulary(self) -> frozenset[str]:
        return CONTEXT_VOCABULARY

    def find_parameter(self, key: str) -> ParameterNode | None:
        """Exact-match lookup on the canonical key; None when absent."""
        return self._by_key.get(key)

    def find_by_binding(self, binding: str) -> ParameterNode | None:
        return self._by_binding.get(binding)

    def active_rules(
        self, parameter: ParameterNode, context: Mapping[str, Any]
    ) -> list[DesignRuleNode]:
        """Rules validating ``parameter`` whose conditions all match ``context``.

        A rule with no REQUIRES edge is unconditionally active. Conditions
        conjoin: every required condition must match. Result is sorted by
        rule id.
        """
        active = []
        for rule in self._rules_by_key.get(parameter.key, ()):
            conditions = self._rule_conditions[rule.id]
            if all(condition.matches(context) for condition in conditions):
                active.append(rule)
        return active

    def citation(self, rule: DesignRuleNode) -> str:
        """Audit-trail string for the source the rule is cited in."""
        return self.sources[rule.cited_in].citation()

    def affects_closure(self, key: str) -> set[str]:
        """Transitive closure over AFFECTS edges, excluding the start key.

        Terminates on cyclic graphs via the visited set.
        """
        start = self.find_parameter(key)
        if start is None:
            raise UnknownParameterError(key)
        closure: set[str] = set()
        stack = list(start.affects)
        while stack:
            current = stack.pop()
            if current in closure:
                continue
            closure.add(current)
            stack.extend(self._by_key[current].affects)
        closure.discard(key)
        return closure

    def to_document(self) -> dict[str, Any]:
        """Canonical document form; identical loads serialize identically."""
        return {
            "version": self.version,
            "sources": [
                {"id": s.id, "doc": s.doc, "edition": s.edition, "ref": s.ref}
                for s in sorted(self.sources.values(), key=lambda s: s.id)
            ],
            "conditions": [
                {
                    "id": c.id,
                    "match": [
                        {"key": m.key, "op": m.op, "value": m.value} for m in c.match
                    ],
                }
                for c in sorted(self.conditions.values(), key=lambda c: c.id)
            ],
            "parameters": [
                _parameter_entry(p)
                for p in sorted(self.parameters.values(), key=lambda p: p.id)
            ],
            "rules": [
                _rule_entry(r) for r in sorted(self.rules.values(), key=lambda r: r.id)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_document(), sort_keys=True, separators=(",", ":"))


def _parameter_entry(p: ParameterNode) -> dict[str, Any]:
    entry: dict[str, Any] = {
        "id": p.id,
        "key": p.key,
        "kind": p.kind,
        "unit": p.unit,
        "binding": p.binding,
        "affects": list(p.affects),
    }
    if p.domain is not None:
        entry["domain"] = list(p.domain)
    return entry


def _rule_entry(r: DesignRuleNode) -> dict[str, Any]:
    if isinstance(r.predicate, RangePredicate):
        predicate: dict[str, Any] = {"min": r.predicate.min, "max": r.predicate.max}
    elif isinstance(r.predicate, CategoricalPredicate):
        predicate = {"allowed": list(r.predicate.allowed)}
    else:
        predicate = {
            "expression": r.predicate.expression,
            "operands": list(r.predicate.operands),
        }
    return {
        "id": r.id,
        "rule_type": r.rule_type,
        "severity": r.severity,
        "validates": r.validates,
        "predicate": predicate,
        "requires": list(r.requires),
        "cited_in": r.cited_in,
        "message_template": r.message_template,
    }


def load_rules(document: bytes | str) -> KnowledgeGraph:
    """Parse a rules document and build the immutable graph.

    Raises SchemaError / DuplicateIdError / DanglingReferenceError naming the
    offending entry; a graph that loads is guaranteed referentially closed.
    """
    if isinstance(document, bytes):
        document = document.decode("utf-8")
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"rules document is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("rules document root must be an object")

    version = doc.get("version")
    if not isinstance(version, str) or not version:
        raise SchemaError("rules document needs a non-empty 'version' string")
    for section in ("sources", "conditions", "parameters", "rules"):
        if not isinstance(doc.get(section), list):
            raise SchemaError(f"rules document needs a '{section}' array")

    sources = _load_sources(doc["sources"])
    conditions = _load_conditions(doc["conditions"])
    parameters = _load_parameters(doc["parameters"])
    rules = _load_rules_section(doc["rules"])

    _check_closure(parameters, rules, conditions, sources)

    by_key = {p.key: p for p in parameters.values()}
    by_binding = {p.binding: p for p in parameters.values() if p.binding}
    rules_by_key: dict[str, tuple[DesignRuleNode, ...]] = {}
    rule_conditions: dict[str, tuple[ConditionNode, ...]] = {}
    for rule in sorted(rules.values(), key=lambda r: r.id):
        rules_by_key.setdefault(rule.validates, ())
        rules_by_key[rule.validates] += (rule,)
        rule_conditions[rule.id] = tuple(conditions[cid] for cid in rule.requires)

    return KnowledgeGraph(
        version=version,
        parameters=MappingProxyType(parameters),
        rules=MappingProxyType(rules),
        conditions=MappingProxyType(conditions),
        sources=MappingProxyType(sources),
        _by_key=MappingProxyType(by_key),
        _by_binding=MappingProxyType(by_binding),
        _rules_by_key=MappingProxyType(rules_by_key),
        _rule_conditions=MappingProxyType(rule_conditions),
    )


def _require(entry: dict, field_name: str, entry_kind: str) -> Any:
    if field_name not in entry:
        ident = entry.get("id", "<missing id>")
        raise SchemaError(f"{entry_kind} '{ident}' is missing field '{field_name}'")
    return entry[field_name]


def _load_sources(entries: list) -> dict[str, ProvenanceNode]:
    sources: dict[str, ProvenanceNode] = {}
    for entry in entries:
        node = ProvenanceNode(
            id=_require(entry, "id", "source"),
            doc=_require(entry, "doc", "source"),
            edition=_require(entry, "edition", "source"),
            ref=_require(entry, "ref", "source"),
        )
        if not node.doc:
            raise SchemaError(f"source '{node.id}' has an empty doc title")
        if node.id in sources:
            raise DuplicateIdError(f"duplicate source id '{node.id}'")
        sources[node.id] = node
    return sources


def _load_conditions(entries: list) -> dict[str, ConditionNode]:
    conditions: dict[str, ConditionNode] = {}
    for entry in entries:
        cid = _require(entry, "id", "condition")
        raw_match = _require(entry, "match", "condition")
        if not raw_match:
            raise SchemaError(f"condition '{cid}' has an empty match list")
        clauses = []
        for clause in raw_match:
            key = _require(clause, "key", f"condition '{cid}' clause")
            op = _require(clause, "op", f"condition '{cid}' clause")
            if op not in CONDITION_OPS:
                raise SchemaError(f"condition '{cid}' has unknown op '{op}'")
            if key not in CONTEXT_VOCABULARY:
                raise SchemaError(
                    f"condition '{cid}' matches on '{key}', not in the context vocabulary"
                )
            value = _require(clause, "value", f"condition '{cid}' clause")
            if op == "in":
                value = tuple(value)
            clauses.append(ConditionClause(key=key, op=op, value=value))
        if cid in conditions:
            raise DuplicateIdError(f"duplicate condition id '{cid}'")
        conditions[cid] = ConditionNode(id=cid, match=tuple(clauses))
    return conditions


def _load_parameters(entries: list) -> dict[str, ParameterNode]:
    parameters: dict[str, ParameterNode] = {}
    seen_keys: set[str] = set()
    for entry in entries:
        kind = _require(entry, "kind", "parameter")
        if kind not in PARAMETER_KINDS:
            raise SchemaError(
                f"parameter '{entry.get('id')}' has unknown kind '{kind}'"
            )
        domain = entry.get("domain")
        node = ParameterNode(
            id=_require(entry, "id", "parameter"),
            key=_require(entry, "key", "parameter"),
            kind=kind,
            unit=_require(entry, "unit", "parameter"),
            binding=entry.get("binding"),
            affects=tuple(entry.get("affects", ())),
            domain=tuple(domain) if domain is not None else None,
        )
        if node.kind == "continuous" and not node.unit:
            raise SchemaError(f"continuous parameter '{node.id}' has no unit")
        if node.kind == "categorical" and not node.domain:
            raise SchemaError(
                f"categorical parameter '{node.id}' has no enumeration domain"
            )
        if node.id in parameters:
            raise DuplicateIdError(f"duplicate parameter id '{node.id}'")
        if node.key in seen_keys:
            raise DuplicateIdError(f"duplicate parameter key '{node.key}'")
        parameters[node.id] = node
        seen_keys.add(node.key)
    return parameters


def _load_rules_section(entries: list) -> dict[str, DesignRuleNode]:
    rules: dict[str, DesignRuleNode] = {}
    for entry in entries:
        rid = _require(entry, "id", "rule")
        rule_type = _require(entry, "rule_type", "rule")
        if rule_type not in RULE_TYPES:
            raise SchemaError(f"rule '{rid}' has unknown rule_type '{rule_type}'")
        severity = _require(entry, "severity", "rule")
        if severity not in SEVERITIES:
            raise SchemaError(f"rule '{rid}' has unknown severity '{severity}'")
        raw_predicate = _require(entry, "predicate", "rule")
        predicate = _load_predicate(rid, rule_type, raw_predicate)
        rule = DesignRuleNode(
            id=rid,
            rule_type=rule_type,
            severity=severity,
            predicate=predicate,
            validates=_require(entry, "validates", "rule"),
            requires=tuple(entry.get("requires", ())),
            cited_in=_require(entry, "cited_in", "rule"),
            message_template=_require(entry, "message_template", "rule"),
        )
        if rid in rules:
            raise DuplicateIdError(f"duplicate rule id '{rid}'")
        rules[rid] = rule
    return rules


def _load_predicate(rid: str, rule_type: str, raw: dict) -> Predicate:
    if rule_type == "range":
        if "min" not in raw or "max" not in raw:
            raise SchemaError(f"range rule '{rid}' predicate needs 'min' and 'max'")
        lo, hi = float(raw["min"]), float(raw["max"])
        if lo > hi:
            raise SchemaError(f"range rule '{rid}' has min > max")
        return RangePredicate(min=lo, max=hi)
    if rule_type == "categorical":
        allowed = raw.get("allowed")
        if not allowed:
            raise SchemaError(
                f"categorical rule '{rid}' predicate needs a non-empty 'allowed' set"
            )
        return CategoricalPredicate(allowed=tuple(allowed))
    expression = raw.get("expression")
    operands = raw.get("operands")
    if not expression or not operands:
        raise SchemaError(
            f"relational rule '{rid}' predicate needs 'expression' and 'operands'"
        )
    return RelationalPredicate(expression=expression, operands=tuple(operands))


def _check_closure(
    parameters: dict[str, ParameterNode],
    rules: dict[str, DesignRuleNode],
    conditions: dict[str, ConditionNode],
    sources: dict[str, ProvenanceNode],
) -> None:
    keys = {p.key for p in parameters.values()}
    for param in parameters.values():
        for target in param.affects:
            if target not in keys:
                raise DanglingReferenceError(
                    f"parameter '{param.id}' AFFECTS unknown key '{target}'"
                )
    for rule in rules.values():
        if rule.validates not in keys:
            raise DanglingReferenceError(
                f"rule '{rule.id}' validates unknown parameter '{rule.validates}'"
            )
        for cid in rule.requires:
            if cid not in conditions:
                raise DanglingReferenceError(
                    f"rule '{rule.id}' requires unknown condition '{cid}'"
                )
        if rule.cited_in not in sources:
            raise DanglingReferenceError(
                f"rule '{rule.id}' is cited in unknown source '{rule.cited_in}'"
            )
        if isinstance(rule.predicate, RelationalPredicate):
            for operand in rule.predicate.operands:
                if operand not in keys:
                    raise DanglingReferenceError(
                        f"rule '{rule.id}' uses unknown operand '{operand}'"
                    )
