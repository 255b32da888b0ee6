from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from twolane.stress import (
    BOUNDARY_EPS,
    CategoryMix,
    ConfusionMatrix,
    INVALID_CATEGORIES,
    SplitMix64,
    TestVector,
    VALID_CATEGORIES,
    brute_force_is_valid,
    f1_score,
    generate_vectors,
    run_stress,
)
from twolane.validator import r_min


class TestSplitMix64:
    def test_matches_reference_outputs(self):
        # Reference stream of the canonical splitmix64 for seed 1234567.
        rng = SplitMix64(1234567)
        assert [rng.next_u64() for _ in range(5)] == [
            6457827717110365317,
            3203168211198807973,
            9817491932198370423,
            4593380528125082431,
            16408922859458223821,
        ]

    def test_unit_floats(self):
        rng = SplitMix64(99)
        for _ in range(1000):
            assert 0.0 <= rng.random() < 1.0

    def test_randint_covers_inclusive_range(self):
        rng = SplitMix64(3)
        seen = {rng.randint(0, 5) for _ in range(500)}
        assert seen == {0, 1, 2, 3, 4, 5}


class TestCategoryMix:
    def test_default_counts_at_1000(self):
        counts = CategoryMix().counts(1000)
        assert sum(counts[c] for c in INVALID_CATEGORIES) == 740
        assert sum(counts[c] for c in VALID_CATEGORIES) == 260

    def test_weights_must_sum_to_one(self):
        with pytest.raises(ValueError):
            CategoryMix(weights={"in_range": 0.5})

    def test_unknown_category_rejected(self):
        with pytest.raises(ValueError):
            CategoryMix(weights={"in_range": 0.5, "martian": 0.5})

    @given(n=st.integers(min_value=0, max_value=5000),
           share=st.floats(min_value=0.0, max_value=1.0))
    def test_counts_always_sum_to_n(self, n, share):
        counts = CategoryMix.from_invalid_share(share).counts(n)
        assert sum(counts.values()) == n
        assert all(v >= 0 for v in counts.values())


class TestGenerateVectors:
    def test_zero_vectors(self):
        assert generate_vectors(0, 42) == []

    def test_paper_mix_produces_exact_label_counts(self):
        vectors = generate_vectors(1000, 42)
        labels = Counter(v.ground_truth for v in vectors)
        assert labels == {"invalid": 740, "valid": 260}

    def test_reproducible_for_same_inputs(self):
        assert generate_vectors(200, 7) == generate_vectors(200, 7)

    def test_different_seeds_differ(self):
        assert generate_vectors(200, 7) != generate_vectors(200, 8)

    def test_boundary_attacks_sit_exactly_epsilon_outside(self, bindings):
        vectors = [v for v in generate_vectors(2000, 11)
                   if v.category == "boundary_attack"]
        assert vectors
        for v in vectors:
            p = v.params
            on_lane = p["lane_width"] in (9.0 - BOUNDARY_EPS, 12.0 + BOUNDARY_EPS)
            on_shoulder = p["shoulder_width"] in (0.0 - BOUNDARY_EPS, 8.0 + BOUNDARY_EPS)
            on_grade = p["grade"] in (-11.0 - BOUNDARY_EPS, 11.0 + BOUNDARY_EPS)
            on_radius = p["design_radius"] == pytest.approx(
                r_min(p["design_speed"], bindings) - BOUNDARY_EPS
            )
            assert on_lane or on_shoulder or on_grade or on_radius, p

    def test_boundary_valid_sits_exactly_on_limits(self, bindings):
        vectors = [v for v in generate_vectors(2000, 11)
                   if v.category == "boundary_valid"]
        assert vectors
        for v in vectors:
            p = v.params
            on_limit = (
                p["lane_width"] in (9.0, 12.0)
                or p["shoulder_width"] in (0.0, 8.0)
                or p["grade"] in (-11.0, 11.0)
                or p["horizontal_class"] in (0, 5)
                or p["design_radius"] == r_min(p["design_speed"], bindings)
            )
            assert on_limit, p

    def test_relational_conflicts_are_below_r_min_by_construction(self, bindings):
        vectors = [v for v in generate_vectors(2000, 13)
                   if v.category == "relational_conflict"]
        assert vectors
        for v in vectors:
            assert v.params["design_radius"] < r_min(
                v.params["design_speed"], bindings
            )

    def test_ground_truth_matches_brute_force(self, bindings):
        for v in generate_vectors(1500, 21):
            expected = "valid" if brute_force_is_valid(v.params, bindings) else "invalid"
            assert v.ground_truth == expected

    def test_generator_r_min_agrees_bitwise_with_validator(self, bindings):
        from twolane.stress import _min_radius
        for speed, _ in bindings.f_table:
            assert _min_radius(speed, bindings) == r_min(speed, bindings)


class TestF1:
    def test_perfect_score(self):
        assert f1_score(740, 0, 0) == 1.0

    def test_all_zero_counts_undefined(self):
        with pytest.raises(ZeroDivisionError):
            f1_score(0, 0, 0)

    def test_mixed_counts(self):
        assert f1_score(8, 2, 2) == pytest.approx(0.8)

    def test_negative_counts_rejected(self):
        with pytest.raises(ValueError):
            f1_score(-1, 0, 0)


class TestRunStress:
    def test_paper_mix_run_is_perfect(self, graph, bindings):
        report = run_stress(graph, bindings, generate_vectors(1000, 42))
        assert report.matrix.to_dict() == {"tp": 740, "tn": 260, "fp": 0, "fn": 0}
        assert report.f1 == 1.0
        assert report.precision == 1.0 and report.recall == 1.0

    def test_hand_labeled_vectors(self, graph, bindings):
        good = {"lane_width": 11.0, "shoulder_width": 4.0, "horizontal_class": 1,
                "passing_type": "Zone", "grade": 2.0}
        bad = dict(good, lane_width=14.0)
        vectors = (
            [TestVector(params=bad, context={}, ground_truth="invalid",
                        category="in_range")] * 7
            + [TestVector(params=good, context={}, ground_truth="valid",
                          category="in_range")] * 3
        )
        report = run_stress(graph, bindings, vectors)
        assert report.matrix == ConfusionMatrix(tp=7, tn=3, fp=0, fn=0)

    def test_matrix_total_conserves_vector_count(self, graph, bindings):
        report = run_stress(graph, bindings, generate_vectors(137, 5))
        assert report.matrix.total == 137

    def test_skipping_a_rule_creates_false_negatives(self, graph, bindings):
        vectors = generate_vectors(1000, 42)
        weakened = run_stress(graph, bindings, vectors,
                              skip_rules=frozenset({"SF-005"}))
        assert weakened.matrix.fn > 0
        assert weakened.f1 < 1.0

    def test_zero_false_negatives_across_twenty_seeds(self, graph, bindings):
        for seed in range(1, 21):
            report = run_stress(graph, bindings, generate_vectors(300, seed))
            assert report.matrix.fn == 0, f"seed {seed}"
            assert report.matrix.fp == 0, f"seed {seed}"

    def test_latency_is_recorded(self, graph, bindings):
        report = run_stress(graph, bindings, generate_vectors(100, 42))
        assert report.latency_median_us > 0
        assert report.latency_p99_us >= report.latency_median_us

    def test_predictions_out_collects_per_vector(self, graph, bindings):
        vectors = generate_vectors(50, 9)
        predictions: list[str] = []
        run_stress(graph, bindings, vectors, predictions_out=predictions)
        assert len(predictions) == 50
        assert predictions == [v.ground_truth for v in vectors]

    @given(seed=st.integers(min_value=0, max_value=2**32))
    @settings(max_examples=20, deadline=None)
    def test_property_no_misclassification_for_any_seed(self, graph, bindings, seed):
        report = run_stress(graph, bindings, generate_vectors(100, seed))
        assert report.matrix.fn == 0 and report.matrix.fp == 0
