"""Seeded adversarial stress harness for the validation pipeline.

Generates labeled test vectors by boundary value analysis (values exactly on
and exactly 0.01 outside limits), negative dimensions, invalid category
tokens, speed/radius conflicts, and excessive grades. Ground-truth labels
come from the generator's own predicate arithmetic so the harness stays
independent of the validator it measures; a deliberately weakened run (rules
skipped) must therefore show up as false negatives.

Vectors are deterministic for (n, seed, mix). The generator is splitmix64,
a 64-bit counter-based scheme that ports across languages, but the vector
list itself is the compatibility contract, not the raw stream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from time import perf_counter_ns
from typing import Any, Callable, Iterable, Mapping

from .graph import KnowledgeGraph
from .validator import RelationalBindings, ValidationReport, validate

VALID_CATEGORIES = ("in_range", "boundary_valid")
INVALID_CATEGORIES = (
    "boundary_attack",
    "negative_dimension",
    "categorical_invalid",
    "relational_conflict",
    "excessive_grade",
)
ALL_CATEGORIES = VALID_CATEGORIES + INVALID_CATEGORIES

BOUNDARY_EPS = 0.01

# Table-1-shaped limits the generator reasons about on its own. These mirror
# the shipped rules document by design; the stress suite exists to prove the
# two stay in agreement.
LANE_WIDTH_LIMITS = (9.0, 12.0)
SHOULDER_WIDTH_LIMITS = (0.0, 8.0)
GRADE_LIMITS = (-11.0, 11.0)
HORIZONTAL_CLASSES = (0, 1, 2, 3, 4, 5)
PASSING_TYPES = ("Constrained", "Zone", "Lane")
BAD_HORIZONTAL_CLASSES = (6, 7, 8, 9, -1, -2)
BAD_PASSING_TYPES = ("Expressway", "Freeway", "TwoWay", "zone", "none")

DEFAULT_CONTEXT = {"facility_type": "two_lane_highway"}


class SplitMix64:
    """Counter-based 64-bit generator (splitmix64)."""

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.next_u64() % (hi - lo + 1)

    def choice(self, seq):
        return seq[self.next_u64() % len(seq)]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.next_u64() % (i + 1)
            items[i], items[j] = items[j], items[i]


@dataclass(frozen=True)
class TestVector:
    __test__ = False  # not a pytest class

    params: Mapping[str, Any]
    context: Mapping[str, Any]
    ground_truth: str  # "valid" | "invalid"
    category: str

    def to_row(self) -> dict[str, Any]:
        row = dict(self.params)
        row["category"] = self.category
        row["ground_truth"] = self.ground_truth
        return row


@dataclass(frozen=True)
class ConfusionMatrix:
    """Positive class = an invalid input correctly rejected."""

    tp: int
    tn: int
    fp: int
    fn: int

    @property
    def total(self) -> int:
        return self.tp + self.tn + self.fp + self.fn

    def to_dict(self) -> dict[str, int]:
        return {"tp": self.tp, "tn": self.tn, "fp": self.fp, "fn": self.fn}


@dataclass(frozen=True)
class StressReport:
    matrix: ConfusionMatrix
    precision: float | None
    recall: float | None
    f1: float | None
    latency_median_us: float
    latency_p99_us: float
    seed: int
    n: int

    def to_dict(self, include_timing: bool = True) -> dict[str, Any]:
        out: dict[str, Any] = {
            "n": self.n,
            "seed": self.seed,
            "matrix": self.matrix.to_dict(),
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
        }
        if include_timing:
            out["latency_us"] = {
                "median": self.latency_median_us,
                "p99": self.latency_p99_us,
            }
        return out


@dataclass(frozen=True)
class CategoryMix:
    """Fraction of vectors per category; fractions must sum to 1."""

    weights: Mapping[str, float] = field(
        default_factory=lambda: _default_weights(invalid_share=0.74)
    )

    def __post_init__(self):
        unknown = set(self.weights) - set(ALL_CATEGORIES)
        if unknown:
            raise ValueError(f"unknown categories in mix: {sorted(unknown)}")
        if any(w < 0 for w in self.weights.values()):
            raise ValueError("mix weights must be >= 0")
        total = sum(self.weights.values())
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"mix weights sum to {total}, expected 1.0")

    @classmethod
    def from_invalid_share(cls, invalid_share: float) -> "CategoryMix":
        if not 0.0 <= invalid_share <= 1.0:
            raise ValueError("invalid share must be within [0, 1]")
        return cls(weights=_default_weights(invalid_share))

    def counts(self, n: int) -> dict[str, int]:
        """Exact per-category counts via largest-remainder apportionment."""
        raw = {c: n * self.weights.get(c, 0.0) for c in ALL_CATEGORIES}
        counts = {c: int(raw[c]) for c in ALL_CATEGORIES}
        remainder = n - sum(counts.values())
        by_fraction = sorted(
            ALL_CATEGORIES, key=lambda c: (counts[c] - raw[c], ALL_CATEGORIES.index(c))
        )
        for c in by_fraction[:remainder]:
            counts[c] += 1
        return counts


def _default_weights(invalid_share: float) -> dict[str, float]:
    valid_share = 1.0 - invalid_share
    weights = {c: valid_share / len(VALID_CATEGORIES) for c in VALID_CATEGORIES}
    weights.update(
        {c: invalid_share / len(INVALID_CATEGORIES) for c in INVALID_CATEGORIES}
    )
    return weights


DEFAULT_MIX = CategoryMix()


def _min_radius(design_speed: float, bindings: RelationalBindings) -> float:
    # Generator-side arithmetic, kept free of the validator implementation.
    if design_speed == 0:
        return 0.0
    f = None
    for speed, value in bindings.f_table:
        if design_speed <= speed:
            f = value
            break
    if f is None:
        raise ValueError(f"design_speed {design_speed} above the bindings table")
    return design_speed * design_speed / (15.0 * (0.01 * bindings.e_max + f))


def brute_force_is_valid(
    params: Mapping[str, Any], bindings: RelationalBindings
) -> bool:
    """Direct evaluation of every constraint the shipped rules encode."""
    lw = params.get("lane_width")
    if lw is not None and not LANE_WIDTH_LIMITS[0] <= lw <= LANE_WIDTH_LIMITS[1]:
        return False
    sw = params.get("shoulder_width")
    if sw is not None and not SHOULDER_WIDTH_LIMITS[0] <= sw <= SHOULDER_WIDTH_LIMITS[1]:
        return False
    hc = params.get("horizontal_class")
    if hc is not None and hc not in HORIZONTAL_CLASSES:
        return False
    pt = params.get("passing_type")
    if pt is not None and pt not in PASSING_TYPES:
        return False
    grade = params.get("grade")
    if grade is not None and not GRADE_LIMITS[0] <= grade <= GRADE_LIMITS[1]:
        return False
    radius = params.get("design_radius")
    if radius is not None:
        speed = params.get("design_speed")
        if speed is None:
            return False
        if radius < _min_radius(float(speed), bindings):
            return False
    return True


def _table_speeds(bindings: RelationalBindings) -> tuple[float, ...]:
    return tuple(s for s, _ in bindings.f_table)


def _base_params(rng: SplitMix64, bindings: RelationalBindings) -> dict[str, Any]:
    """In-range draw for every parameter; attacks overwrite single fields."""
    speed = rng.choice(_table_speeds(bindings))
    return {
        "lane_width": round(rng.uniform(9.25, 11.75), 2),
        "shoulder_width": round(rng.uniform(0.5, 7.5), 2),
        "horizontal_class": rng.randint(0, 5),
        "passing_type": rng.choice(PASSING_TYPES),
        "grade": round(rng.uniform(-8.0, 8.0), 2),
        "design_speed": speed,
        "design_radius": round(_min_radius(speed, bindings) * rng.uniform(1.1, 3.0), 2),
    }


def _apply_category(
    category: str,
    params: dict[str, Any],
    rng: SplitMix64,
    bindings: RelationalBindings,
) -> None:
    if category == "in_range":
        return
    if category == "boundary_valid":
        target = rng.choice(("lane_width", "shoulder_width", "grade",
                             "horizontal_class", "design_radius"))
        if target == "lane_width":
            params[target] = rng.choice(LANE_WIDTH_LIMITS)
        elif target == "shoulder_width":
            params[target] = rng.choice(SHOULDER_WIDTH_LIMITS)
        elif target == "grade":
            params[target] = rng.choice(GRADE_LIMITS)
        elif target == "horizontal_class":
            params[target] = rng.choice((HORIZONTAL_CLASSES[0], HORIZONTAL_CLASSES[-1]))
        else:
            params["design_radius"] = _min_radius(params["design_speed"], bindings)
        return
    if category == "boundary_attack":
        target = rng.choice(("lane_width", "shoulder_width", "grade", "design_radius"))
        if target == "lane_width":
            params[target] = rng.choice(
                (LANE_WIDTH_LIMITS[0] - BOUNDARY_EPS, LANE_WIDTH_LIMITS[1] + BOUNDARY_EPS)
            )
        elif target == "shoulder_width":
            params[target] = rng.choice(
                (SHOULDER_WIDTH_LIMITS[0] - BOUNDARY_EPS,
                 SHOULDER_WIDTH_LIMITS[1] + BOUNDARY_EPS)
            )
        elif target == "grade":
            params[target] = rng.choice(
                (GRADE_LIMITS[0] - BOUNDARY_EPS, GRADE_LIMITS[1] + BOUNDARY_EPS)
            )
        else:
            params["design_radius"] = (
                _min_radius(params["design_speed"], bindings) - BOUNDARY_EPS
            )
        return
    if category == "negative_dimension":
        target = rng.choice(("lane_width", "shoulder_width"))
        params[target] = -round(rng.uniform(0.5, 20.0), 2)
        return
    if category == "categorical_invalid":
        if rng.random() < 0.5:
            params["horizontal_class"] = rng.choice(BAD_HORIZONTAL_CLASSES)
        else:
            params["passing_type"] = rng.choice(BAD_PASSING_TYPES)
        return
    if category == "relational_conflict":
        speeds = [s for s in _table_speeds(bindings) if s >= 40.0]
        speed = rng.choice(tuple(speeds))
        params["design_speed"] = speed
        params["design_radius"] = round(
            _min_radius(speed, bindings) * rng.uniform(0.1, 0.9), 2
        )
        return
    if category == "excessive_grade":
        sign = 1.0 if rng.random() < 0.5 else -1.0
        params["grade"] = sign * round(rng.uniform(11.01, 30.0), 2)
        return
    raise ValueError(f"unknown category '{category}'")


def generate_vectors(
    n: int,
    seed: int,
    mix: CategoryMix = DEFAULT_MIX,
    bindings: RelationalBindings | None = None,
) -> list[TestVector]:
    """Deterministic labeled vectors for (n, seed, mix)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    bindings = bindings or RelationalBindings()
    rng = SplitMix64(seed)
    schedule: list[str] = []
    for category, count in mix.counts(n).items():
        schedule.extend([category] * count)
    rng.shuffle(schedule)
    vectors = []
    for category in schedule:
        params = _base_params(rng, bindings)
        _apply_category(category, params, rng, bindings)
        label = "valid" if brute_force_is_valid(params, bindings) else "invalid"
        expected = "valid" if category in VALID_CATEGORIES else "invalid"
        if label != expected:
            raise AssertionError(
                f"generator produced a {label} vector for category {category}: {params}"
            )
        vectors.append(
            TestVector(
                params=params,
                context=dict(DEFAULT_CONTEXT),
                ground_truth=label,
                category=category,
            )
        )
    return vectors


def f1_score(tp: int, fp: int, fn: int) -> float:
    """2*tp / (2*tp + fp + fn); undefined when the denominator is zero."""
    if tp < 0 or fp < 0 or fn < 0:
        raise ValueError("counts must be >= 0")
    denominator = 2 * tp + fp + fn
    if denominator == 0:
        raise ZeroDivisionError("F1 undefined for all-zero counts")
    return 2 * tp / denominator


def _percentile(sorted_values: list[float], fraction: float) -> float:
    if not sorted_values:
        return 0.0
    index = math.ceil(len(sorted_values) * fraction) - 1
    return sorted_values[max(0, min(len(sorted_values) - 1, index))]


def run_stress(
    graph: KnowledgeGraph,
    bindings: RelationalBindings,
    vectors: Iterable[TestVector],
    skip_rules: frozenset[str] = frozenset(),
    validate_fn: Callable[..., ValidationReport] | None = None,
    predictions_out: list[str] | None = None,
) -> StressReport:
    """Validate every vector and tally the confusion matrix.

    ``skip_rules`` drops violations of the named rules before enforcement,
    simulating a validator missing those rules; it exists so tests can prove
    the harness detects false negatives. ``validate_fn`` swaps the function
    under test (defaults to the real pipeline). ``predictions_out`` receives
    one "valid"/"invalid" prediction per vector when a list is supplied.
    """
    check = validate_fn or validate
    tp = tn = fp = fn = 0
    latencies_us: list[float] = []
    for vector in vectors:
        start = perf_counter_ns()
        report = check(graph, vector.params, bindings)
        latencies_us.append((perf_counter_ns() - start) / 1000.0)
        rejected = _is_rejected(report, skip_rules)
        if predictions_out is not None:
            predictions_out.append("invalid" if rejected else "valid")
        if vector.ground_truth == "invalid":
            if rejected:
                tp += 1
            else:
                fn += 1
        else:
            if rejected:
                fp += 1
            else:
                tn += 1
    matrix = ConfusionMatrix(tp=tp, tn=tn, fp=fp, fn=fn)
    latencies_us.sort()
    precision = tp / (tp + fp) if (tp + fp) else None
    recall = tp / (tp + fn) if (tp + fn) else None
    f1 = f1_score(tp, fp, fn) if (2 * tp + fp + fn) else None
    return StressReport(
        matrix=matrix,
        precision=precision,
        recall=recall,
        f1=f1,
        latency_median_us=_percentile(latencies_us, 0.5),
        latency_p99_us=_percentile(latencies_us, 0.99),
        seed=-1,
        n=matrix.total,
    )


def _is_rejected(report: ValidationReport, skip_rules: frozenset[str]) -> bool:
    if not skip_rules:
        return report.status == "reject"
    errors = [
        v for v in report.violations
        if v.severity == "error" and v.rule_id not in skip_rules
    ]
    return bool(errors) or bool(report.unknown_keys)


def run_experiment(
    graph: KnowledgeGraph,
    bindings: RelationalBindings,
    n: int,
    seed: int,
    mix: CategoryMix = DEFAULT_MIX,
    skip_rules: frozenset[str] = frozenset(),
) -> StressReport:
    """Generate and evaluate in one step, stamping seed and n."""
    vectors = generate_vectors(n, seed, mix, bindings)
    report = run_stress(graph, bindings, vectors, skip_rules=skip_rules)
    return StressReport(
        matrix=report.matrix,
        precision=report.precision,
        recall=report.recall,
        f1=report.f1,
        latency_median_us=report.latency_median_us,
        latency_p99_us=report.latency_p99_us,
        seed=seed,
        n=n,
    )


def vectors_to_csv_rows(
    vectors: list[TestVector], predictions: list[str] | None = None
) -> list[dict[str, Any]]:
    rows = []
    for i, vector in enumerate(vectors):
        row = vector.to_row()
        if predictions is not None:
            row["predicted"] = predictions[i]
        rows.append(row)
    return rows
