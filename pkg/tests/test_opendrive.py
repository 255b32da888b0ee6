from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from twolane.opendrive import (
    IngestConfig,
    OpenDriveParseError,
    aggregate_reports,
    extract_parameters,
    parse_opendrive,
    render_table,
    validate_asset,
)
from twolane.units import FT_PER_M

MINIMAL = """<?xml version="1.0"?>
<OpenDRIVE>
  <header revMajor="1" revMinor="4" name="mini"/>
  <road name="only" length="100.0" id="1" junction="-1">
    <planView>
      <geometry s="0.0" x="0.0" y="0.0" hdg="0.0" length="100.0"><line/></geometry>
    </planView>
    <lanes>
      <laneSection s="0.0">
        <left>
          <lane id="1" type="driving"><width a="3.5" b="0" c="0" d="0"/></lane>
        </left>
        <center><lane id="0" type="none"/></center>
        <right>
          <lane id="-1" type="driving"><width a="3.5" b="0" c="0" d="0"/></lane>
        </right>
      </laneSection>
    </lanes>
  </road>
</OpenDRIVE>
"""


def road_xml(width="3.5", curvature=None, speed=None, lane_type="driving",
             road_id="1"):
    speed_el = ""
    if speed is not None:
        speed_el = f'<type s="0.0" type="rural"><speed max="{speed[0]}" unit="{speed[1]}"/></type>'
    geometry = '<geometry s="0.0" x="0" y="0" hdg="0" length="50"><line/></geometry>'
    if curvature is not None:
        geometry += (f'<geometry s="50.0" x="50" y="0" hdg="0" length="50">'
                     f'<arc curvature="{curvature}"/></geometry>')
    return f"""<?xml version="1.0"?>
<OpenDRIVE>
  <header revMajor="1" revMinor="4" name="t"/>
  <road name="r" length="100.0" id="{road_id}" junction="-1">
    {speed_el}
    <planView>{geometry}</planView>
    <lanes>
      <laneSection s="0.0">
        <right>
          <lane id="-1" type="{lane_type}"><width a="{width}" b="0" c="0" d="0"/></lane>
        </right>
      </laneSection>
    </lanes>
  </road>
</OpenDRIVE>
"""


class TestParse:
    def test_minimal_network(self):
        net = parse_opendrive(MINIMAL, name="mini")
        assert len(net.roads) == 1
        road = net.roads[0]
        assert [g.shape for g in road.geometry] == ["line"]
        assert len(road.lane_sections) == 1
        assert len(road.lane_sections[0].lanes) == 2  # center excluded

    def test_headers_only_network_is_empty(self):
        net = parse_opendrive("<OpenDRIVE><header/></OpenDRIVE>")
        assert net.roads == ()

    def test_truncated_file_reports_position(self):
        truncated = MINIMAL[: len(MINIMAL) // 2]
        with pytest.raises(OpenDriveParseError, match="line"):
            parse_opendrive(truncated)

    def test_wrong_root_rejected(self):
        with pytest.raises(OpenDriveParseError, match="root"):
            parse_opendrive("<Road/>")

    def test_missing_header_rejected(self):
        with pytest.raises(OpenDriveParseError, match="header"):
            parse_opendrive("<OpenDRIVE></OpenDRIVE>")

    def test_duplicate_road_ids_rejected(self):
        net = MINIMAL.replace("</OpenDRIVE>", "")
        body = net.split("<road", 1)[1]
        doubled = net + "<road" + body + "</OpenDRIVE>"
        with pytest.raises(OpenDriveParseError, match="duplicate road id"):
            parse_opendrive(doubled)

    def test_zero_curvature_arc_rejected(self):
        with pytest.raises(OpenDriveParseError, match="zero curvature"):
            parse_opendrive(road_xml(curvature="0.0"))

    def test_decreasing_s_offsets_rejected(self):
        bad = road_xml(curvature="0.01").replace(
            '<geometry s="0.0" x="0" y="0" hdg="0" length="50">',
            '<geometry s="60.0" x="0" y="0" hdg="0" length="50">',
        )
        with pytest.raises(OpenDriveParseError, match="s-offsets"):
            parse_opendrive(bad)

    def test_reparse_is_stable(self):
        first = parse_opendrive(MINIMAL)
        second = parse_opendrive(MINIMAL)
        assert first == second

    def test_unknown_elements_are_skipped(self):
        decorated = MINIMAL.replace(
            "<planView>", "<objects><object id='5'/></objects><planView>"
        )
        assert len(parse_opendrive(decorated).roads) == 1

    def test_corrupted_corpus_raises_only_typed_errors(self, xodr_dir):
        for path in sorted(xodr_dir.glob("*.xodr")):
            data = path.read_bytes()
            for cut in (10, len(data) // 3, len(data) - 20):
                try:
                    parse_opendrive(data[:cut], name=path.stem)
                except OpenDriveParseError:
                    pass
            mangled = data.replace(b"width", b"wxdth")
            try:
                parse_opendrive(mangled, name=path.stem)
            except OpenDriveParseError:
                pass


class TestExtract:
    def test_four_meter_lane_converts_to_feet(self):
        net = parse_opendrive(road_xml(width="4.0"))
        params = extract_parameters(net.roads[0])
        widths = [p for p in params if p.key == "lane_width"]
        assert len(widths) == 1
        assert widths[0].value == pytest.approx(13.12336)

    def test_arc_curvature_becomes_radius(self):
        net = parse_opendrive(road_xml(curvature="0.02"))
        params = {p.key: p.value for p in extract_parameters(net.roads[0])}
        assert params["design_radius"] == pytest.approx(50.0 * FT_PER_M)

    def test_straight_road_has_no_radius_parameter(self):
        net = parse_opendrive(road_xml())
        keys = [p.key for p in extract_parameters(net.roads[0])]
        assert "design_radius" not in keys

    def test_missing_speed_record_defaults_to_55(self):
        net = parse_opendrive(road_xml())
        params = {p.key: p.value for p in extract_parameters(net.roads[0])}
        assert params["design_speed"] == 55.0

    def test_speed_units_convert(self):
        net = parse_opendrive(road_xml(speed=("90", "km/h")))
        params = {p.key: p.value for p in extract_parameters(net.roads[0])}
        assert params["design_speed"] == pytest.approx(90 * 0.621371)
        net = parse_opendrive(road_xml(speed=("25", "m/s")))
        params = {p.key: p.value for p in extract_parameters(net.roads[0])}
        assert params["design_speed"] == pytest.approx(25 / 0.44704)

    def test_shoulder_lane_maps_to_shoulder_width(self):
        net = parse_opendrive(road_xml(width="2.0", lane_type="shoulder"))
        params = {p.key: p.value for p in extract_parameters(net.roads[0])}
        assert params["shoulder_width"] == pytest.approx(2.0 * FT_PER_M)
        assert "lane_width" not in params

    def test_sidewalks_are_ignored(self):
        net = parse_opendrive(road_xml(lane_type="sidewalk"))
        keys = [p.key for p in extract_parameters(net.roads[0])]
        assert "lane_width" not in keys and "shoulder_width" not in keys

    def test_passing_type_constant(self):
        net = parse_opendrive(road_xml())
        params = {p.key: p.value for p in extract_parameters(net.roads[0])}
        assert params["passing_type"] == "Constrained"

    def test_spiral_uses_peak_curvature(self):
        xml = road_xml().replace(
            "<planView>",
            '<planView><geometry s="0" x="0" y="0" hdg="0" length="10">'
            '<spiral curvStart="0.0" curvEnd="0.04"/></geometry>',
        ).replace('<geometry s="0.0"', '<geometry s="10.0"')
        net = parse_opendrive(xml)
        params = {p.key: p.value for p in extract_parameters(net.roads[0])}
        assert params["design_radius"] == pytest.approx(25.0 * FT_PER_M)

    @given(meters=st.floats(min_value=0.1, max_value=1000))
    def test_unit_round_trip(self, meters):
        assert (meters * FT_PER_M) / FT_PER_M == pytest.approx(meters, abs=1e-6)


class TestValidateAsset:
    def test_highway_fixture_fully_compliant(self, graph, bindings, xodr_dir):
        net = parse_opendrive((xodr_dir / "highway_a.xodr").read_bytes(), "highway_a")
        report = validate_asset(net, graph, bindings)
        assert report.roads == 3
        assert report.params_checked == 12
        assert report.valid == 12 and report.invalid == 0
        assert report.pass_rate == 100.0

    def test_urban_fixture_exact_counts(self, graph, bindings, xodr_dir):
        net = parse_opendrive((xodr_dir / "urban_grid.xodr").read_bytes(), "urban_grid")
        report = validate_asset(net, graph, bindings)
        assert report.roads == 4
        # 4 roads x (2 oversized lanes + 1 tight radius + 1 valid passing type)
        assert report.params_checked == 16
        assert report.valid == 4 and report.invalid == 12
        assert report.pass_rate == pytest.approx(25.0)
        assert report.violations_by_rule == {"SF-001": 8, "SF-005": 4}

    def test_tight_curve_fixture(self, graph, bindings, xodr_dir):
        net = parse_opendrive(
            (xodr_dir / "tight_curves.xodr").read_bytes(), "tight_curves"
        )
        report = validate_asset(net, graph, bindings)
        assert report.params_checked == 8
        assert report.valid == 6 and report.invalid == 2
        assert report.violations_by_rule == {"SF-005": 2}

    def test_urban_pass_rate_below_highway(self, graph, bindings, xodr_dir):
        highway = validate_asset(
            parse_opendrive((xodr_dir / "highway_a.xodr").read_bytes(), "h"),
            graph, bindings,
        )
        urban = validate_asset(
            parse_opendrive((xodr_dir / "urban_grid.xodr").read_bytes(), "u"),
            graph, bindings,
        )
        assert urban.pass_rate < highway.pass_rate

    def test_empty_network_reports_na(self, graph, bindings):
        net = parse_opendrive("<OpenDRIVE><header/></OpenDRIVE>", "empty")
        report = validate_asset(net, graph, bindings)
        assert report.params_checked == 0 and report.pass_rate is None
        assert "n/a" in render_table([report])

    def test_counts_conserve(self, graph, bindings, xodr_dir):
        for path in sorted(xodr_dir.glob("*.xodr")):
            net = parse_opendrive(path.read_bytes(), path.stem)
            report = validate_asset(net, graph, bindings)
            assert report.valid + report.invalid == report.params_checked
            assert report.invalid == sum(report.violations_by_rule.values())

    def test_widening_lanes_strictly_reduces_invalid_count(
        self, graph, bindings, xodr_dir
    ):
        data = (xodr_dir / "urban_grid.xodr").read_text()
        narrow = parse_opendrive(data, "narrow")
        widened = parse_opendrive(data.replace('a="4.0"', 'a="3.5"'), "wide")
        invalid_narrow = validate_asset(narrow, graph, bindings).invalid
        invalid_wide = validate_asset(widened, graph, bindings).invalid
        assert invalid_wide < invalid_narrow

    def test_determinism(self, graph, bindings, xodr_dir):
        data = (xodr_dir / "urban_grid.xodr").read_bytes()
        a = validate_asset(parse_opendrive(data, "u"), graph, bindings)
        b = validate_asset(parse_opendrive(data, "u"), graph, bindings)
        assert a == b

    def test_aggregate_total_row(self, graph, bindings, xodr_dir):
        reports = [
            validate_asset(parse_opendrive(p.read_bytes(), p.stem), graph, bindings)
            for p in sorted(xodr_dir.glob("*.xodr"))
        ]
        total = aggregate_reports(reports)
        assert total.asset == "TOTAL"
        assert total.params_checked == sum(r.params_checked for r in reports)
        assert total.valid == sum(r.valid for r in reports)

    def test_custom_default_speed_changes_radius_verdicts(
        self, graph, bindings, xodr_dir
    ):
        net = parse_opendrive(
            (xodr_dir / "tight_curves.xodr").read_bytes(), "tight"
        )
        relaxed = validate_asset(
            net, graph, bindings, IngestConfig(default_design_speed_mph=30.0)
        )
        assert relaxed.invalid == 0  # 150 m radius clears r_min(30)
