from __future__ import annotations

import json
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from conftest import run_cli

from twolane import analysis, validator
from twolane.graph import load_rules


@pytest.fixture()
def params_file(tmp_path):
    def write(payload) -> str:
        path = tmp_path / "params.json"
        path.write_text(json.dumps(payload))
        return str(path)
    return write


class TestValidateCommand:
    def test_passing_parameter_exits_zero(self, params_file):
        code, out, _ = run_cli(["validate", params_file({"lane_width": 10})])
        assert code == 0 and "pass" in out

    def test_boundary_attack_exits_two(self, params_file):
        code, out, _ = run_cli(["validate", params_file({"lane_width": 12.01})])
        assert code == 2 and "SF-001" in out

    def test_string_horizontal_class_cites_sf003(self, params_file):
        code, out, _ = run_cli(["validate", params_file({"horizontal_class": "7"})])
        assert code == 2 and "SF-003" in out

    def test_missing_file_exits_one(self):
        code, _, err = run_cli(["validate", "/nonexistent/params.json"])
        assert code == 1 and "error" in err

    def test_json_output_matches_in_process_report(self, params_file, graph, bindings):
        doc = {"lane_width": 12.01, "grade": 14.0}
        code, out, _ = run_cli(
            ["validate", "--output-format", "json", params_file(doc)]
        )
        assert code == 2
        expected = validator.validate(graph, doc, bindings).to_dict(include_timing=False)
        assert json.loads(out) == expected

    def test_timing_flag_adds_elapsed(self, params_file):
        path = params_file({"lane_width": 10})
        _, without, _ = run_cli(["validate", "--output-format", "json", path])
        _, with_timing, _ = run_cli(
            ["validate", "--output-format", "json", "--timing", path]
        )
        assert "elapsed_us" not in json.loads(without)
        assert "elapsed_us" in json.loads(with_timing)

    def test_lenient_downgrades_unknown_keys(self, params_file):
        path = params_file({"lane_widht": 10})
        assert run_cli(["validate", path])[0] == 2
        assert run_cli(["validate", "--lenient", path])[0] == 0

    def test_facility_documents_are_validated_per_segment(self, river_falls_path):
        code, _, _ = run_cli(["validate", str(river_falls_path)])
        assert code == 0

    def test_custom_rules_file(self, params_file, tmp_path, rules_bytes):
        custom = json.loads(rules_bytes)
        custom["rules"] = [r for r in custom["rules"] if r["id"] != "SF-001"]
        rules_path = tmp_path / "rules.json"
        rules_path.write_text(json.dumps(custom))
        path = params_file({"lane_width": 14})
        assert run_cli(["validate", path])[0] == 2
        assert run_cli(["validate", "--rules", str(rules_path), path])[0] == 0

    def test_rules_env_var(self, params_file, tmp_path, rules_bytes, monkeypatch):
        custom = json.loads(rules_bytes)
        custom["rules"] = []
        rules_path = tmp_path / "norules.json"
        rules_path.write_text(json.dumps(custom))
        monkeypatch.setenv("TWOLANE_RULES", str(rules_path))
        assert run_cli(["validate", params_file({"lane_width": 14})])[0] == 0

    def test_broken_rules_document_exits_one(self, params_file, tmp_path):
        rules_path = tmp_path / "broken.json"
        rules_path.write_text("{}")
        code, _, err = run_cli(
            ["validate", "--rules", str(rules_path), params_file({"lane_width": 10})]
        )
        assert code == 1 and "error" in err


class TestAnalyzeCommand:
    def test_river_falls_table_output(self, river_falls_path):
        code, out, _ = run_cli(["analyze", str(river_falls_path)])
        assert code == 0
        assert "Overall" in out and out.strip().endswith("C")

    def test_rejected_facility_emits_payload_on_stderr(self, tmp_path,
                                                       river_falls_doc):
        doc = json.loads(json.dumps(river_falls_doc))
        doc["segments"][2]["lane_width_ft"] = 13.12
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        code, out, err = run_cli(["analyze", str(path)])
        assert code == 2 and out == ""
        payload = json.loads(err)
        assert payload["status"] == 400
        assert payload["errors"][0]["rule_id"] == "SF-001"
        assert "HCM 7th Ed." in payload["errors"][0]["citation"]

    def test_json_output_matches_in_process_result(
        self, river_falls_path, river_falls_doc, graph, bindings, coeffs
    ):
        code, out, _ = run_cli(
            ["analyze", "--output-format", "json", str(river_falls_path)]
        )
        assert code == 0
        facility = analysis.facility_from_dict(river_falls_doc)
        expected = analysis.analyze_facility(facility, coeffs, graph, bindings)
        assert json.loads(out) == expected.to_dict()

    def test_missing_file_exits_one(self):
        assert run_cli(["analyze", "/nope.json"])[0] == 1

    def test_schema_error_exits_one(self, tmp_path):
        path = tmp_path / "notafacility.json"
        path.write_text(json.dumps({"facility_type": "two_lane_highway",
                                    "segments": [{}]}))
        assert run_cli(["analyze", str(path)])[0] == 1

    def test_custom_coefficients_change_results(self, river_falls_path, tmp_path,
                                                coeffs):
        relaxed = coeffs.to_dict()
        relaxed["slope_by_passing_type"] = {"Constrained": 0.5, "Zone": 0.5, "Lane": 0.5}
        relaxed["pf_rate_by_passing_type"] = {"Constrained": 0.2, "Zone": 0.2, "Lane": 0.2}
        coeffs_path = tmp_path / "coeffs.json"
        coeffs_path.write_text(json.dumps(relaxed))
        _, default_out, _ = run_cli(
            ["analyze", "--output-format", "json", str(river_falls_path)]
        )
        _, relaxed_out, _ = run_cli(
            ["analyze", "--output-format", "json", "--coeffs", str(coeffs_path),
             str(river_falls_path)]
        )
        default_fd = json.loads(default_out)["overall_fd"]
        relaxed_fd = json.loads(relaxed_out)["overall_fd"]
        assert relaxed_fd < default_fd


class TestIngestCommand:
    def test_directory_renders_rows_plus_total(self, xodr_dir):
        code, out, _ = run_cli(["ingest", str(xodr_dir)])
        assert code == 0
        for token in ("highway_a", "urban_grid", "tight_curves", "TOTAL",
                      "Pass Rate"):
            assert token in out

    def test_single_asset_json(self, xodr_dir, graph, bindings):
        code, out, _ = run_cli(
            ["ingest", "--output-format", "json", str(xodr_dir / "urban_grid.xodr")]
        )
        assert code == 0
        payload = json.loads(out)
        assert payload[0]["pass_rate"] == 25.0
        assert payload[0]["violations_by_rule"] == {"SF-001": 8, "SF-005": 4}

    def test_exit_zero_regardless_of_pass_rate(self, xodr_dir):
        assert run_cli(["ingest", str(xodr_dir / "urban_grid.xodr")])[0] == 0

    def test_empty_directory(self, tmp_path):
        code, out, _ = run_cli(["ingest", str(tmp_path)])
        assert code == 0

    def test_bad_asset_fails_without_skip_flag(self, tmp_path):
        bad = tmp_path / "broken.xodr"
        bad.write_text("<OpenDRIVE><header/>")
        assert run_cli(["ingest", str(bad)])[0] == 1

    def test_skip_bad_continues(self, tmp_path, xodr_dir):
        bad = tmp_path / "broken.xodr"
        bad.write_text("<OpenDRIVE><header/>")
        good = tmp_path / "good.xodr"
        good.write_bytes((xodr_dir / "highway_a.xodr").read_bytes())
        code, out, err = run_cli(["ingest", "--skip-bad", str(tmp_path)])
        assert code == 0 and "skipping" in err and "good" in out


class TestStressCommand:
    def test_seeded_run_is_perfect(self):
        code, out, _ = run_cli(["stress", "--n", "1000", "--seed", "42"])
        assert code == 0
        assert "true positives:  740" in out
        assert "false negatives: 0" in out
        assert "f1 score:        1.00" in out

    def test_small_run_sums_to_n(self):
        code, out, _ = run_cli(
            ["stress", "--n", "10", "--seed", "1", "--output-format", "json"]
        )
        assert code == 0
        matrix = json.loads(out)["matrix"]
        assert sum(matrix.values()) == 10

    def test_mutation_mode_detects_missing_rule(self):
        code, out, _ = run_cli(
            ["stress", "--n", "500", "--seed", "42",
             "--mutate-skip-rule", "SF-005", "--output-format", "json"]
        )
        assert code != 0
        assert json.loads(out)["matrix"]["fn"] > 0

    def test_bad_config_exits_one(self):
        assert run_cli(["stress", "--n", "0"])[0] == 1
        assert run_cli(["stress", "--n", "10", "--invalid-share", "1.5"])[0] == 1

    def test_csv_dump(self, tmp_path):
        csv_path = tmp_path / "vectors.csv"
        code, _, _ = run_cli(
            ["stress", "--n", "25", "--seed", "3", "--dump-csv", str(csv_path)]
        )
        assert code == 0
        lines = csv_path.read_text().strip().splitlines()
        assert len(lines) == 26  # header + one row per vector
        assert "ground_truth" in lines[0] and "predicted" in lines[0]

    def test_json_report_shape(self):
        _, out, _ = run_cli(
            ["stress", "--n", "50", "--seed", "42", "--output-format", "json",
             "--timing"]
        )
        payload = json.loads(out)
        assert set(payload) == {"n", "seed", "matrix", "precision", "recall",
                                "f1", "latency_us"}
        assert set(payload["latency_us"]) == {"median", "p99"}


class TestExportSumoCommand:
    def test_river_falls_plain_network(self, river_falls_path, river_falls_doc,
                                       tmp_path):
        out_dir = tmp_path / "net"
        code, out, _ = run_cli(
            ["export-sumo", str(river_falls_path), "--out", str(out_dir)]
        )
        assert code == 0
        nodes = ET.parse(out_dir / "river_falls.nod.xml").getroot()
        edges = ET.parse(out_dir / "river_falls.edg.xml").getroot()
        assert len(nodes.findall("node")) == 6
        assert len(edges.findall("edge")) == 5
        lengths = [float(e.get("length")) for e in edges.findall("edge")]
        expected = [s["length_mi"] * 1609.344 for s in river_falls_doc["segments"]]
        for got, want in zip(lengths, expected):
            assert got == pytest.approx(want, abs=1e-3)
        xs = [float(n.get("x")) for n in nodes.findall("node")]
        for i, edge in enumerate(edges.findall("edge")):
            assert xs[i + 1] - xs[i] == pytest.approx(expected[i], abs=1e-2)

    def test_posted_speed_converts_to_ms(self, tmp_path):
        doc = {
            "facility_type": "two_lane_highway",
            "segments": [{
                "length_mi": 1.0, "lane_width_ft": 12.0, "shoulder_width_ft": 6.0,
                "posted_speed_mph": 60, "demand_vph": 100, "phf": 1.0,
                "passing_type": "Zone", "horizontal_class": 0,
            }],
        }
        path = tmp_path / "one.json"
        path.write_text(json.dumps(doc))
        out_dir = tmp_path / "net"
        code, _, _ = run_cli(["export-sumo", str(path), "--out", str(out_dir)])
        assert code == 0
        edge = ET.parse(out_dir / "one.edg.xml").getroot().find("edge")
        assert float(edge.get("speed")) == pytest.approx(26.8224, abs=1e-3)

    def test_rejected_facility_writes_nothing(self, tmp_path, river_falls_doc):
        doc = json.loads(json.dumps(river_falls_doc))
        doc["segments"][0]["shoulder_width_ft"] = 9.5
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        out_dir = tmp_path / "net"
        code, _, err = run_cli(["export-sumo", str(path), "--out", str(out_dir)])
        assert code == 2
        assert not out_dir.exists()
        assert json.loads(err)["status"] == 400


class TestDeterminism:
    @pytest.mark.parametrize("argv", [
        ["validate", "--output-format", "json", "FIXTURE"],
        ["analyze", "--output-format", "json", "FIXTURE"],
        ["stress", "--n", "200", "--seed", "42", "--output-format", "json"],
    ])
    def test_repeated_runs_are_byte_identical(self, argv, river_falls_path):
        resolved = [str(river_falls_path) if a == "FIXTURE" else a for a in argv]
        first = run_cli(resolved)
        second = run_cli(resolved)
        assert first == second

    def test_ingest_is_byte_identical(self, xodr_dir):
        argv = ["ingest", "--output-format", "json", str(xodr_dir)]
        assert run_cli(argv) == run_cli(argv)


class TestShippedConfigs:
    def test_default_config_files_match_in_code_defaults(self, coeffs, bindings):
        from conftest import REPO_ROOT
        coeffs_doc = json.loads((REPO_ROOT / "config" / "coefficients.default.json").read_text())
        bindings_doc = json.loads((REPO_ROOT / "config" / "bindings.default.json").read_text())
        assert analysis.CoefficientSet.from_dict(coeffs_doc) == coeffs
        assert validator.RelationalBindings.from_dict(bindings_doc) == bindings

    def test_packaged_rules_equal_repo_rules(self, rules_bytes):
        from twolane.cli import _load_default_rules_bytes
        assert load_rules(_load_default_rules_bytes()).to_json() == \
            load_rules(rules_bytes).to_json()

    def test_explicit_config_files_accepted(self, river_falls_path):
        from conftest import REPO_ROOT
        code, _, _ = run_cli([
            "analyze",
            "--coeffs", str(REPO_ROOT / "config" / "coefficients.default.json"),
            "--bindings", str(REPO_ROOT / "config" / "bindings.default.json"),
            str(river_falls_path),
        ])
        assert code == 0

    def test_custom_mix_json(self):
        mix = json.dumps({"in_range": 0.5, "boundary_attack": 0.5})
        code, out, _ = run_cli(
            ["stress", "--n", "40", "--seed", "2", "--mix", mix,
             "--output-format", "json"]
        )
        assert code == 0
        matrix = json.loads(out)["matrix"]
        assert matrix["tp"] == 20 and matrix["tn"] == 20

    def test_unparseable_mix_exits_one(self):
        assert run_cli(["stress", "--n", "10", "--mix", "{bad"])[0] == 1
