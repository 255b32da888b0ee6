"""Command-line entry point.

Subcommands: analyze, validate, ingest, stress, export-sumo. Exit codes are
stable across subcommands: 0 for a pass, 2 for a semantic rejection (or a
detected misclassification in stress mode), 1 for operational errors such as
unreadable files or bad configuration.

Timing fields vary run to run, so they are left out of machine-readable
output unless --timing is given; everything else is byte-identical across
repeated runs on the same input.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from importlib import resources
from pathlib import Path

from . import analysis, opendrive, stress, sumo, validator
from .graph import KnowledgeGraph, RulesDocumentError, load_rules

RULES_ENV_VAR = "TWOLANE_RULES"

EXIT_PASS = 0
EXIT_ERROR = 1
EXIT_REJECT = 2


class CliError(Exception):
    """Operational failure; maps to exit code 1."""


def _load_default_rules_bytes() -> bytes:
    return (resources.files("twolane") / "data/two_lane_highway.json").read_bytes()


def load_graph(rules_path: str | None) -> KnowledgeGraph:
    if rules_path is None:
        rules_path = os.environ.get(RULES_ENV_VAR)
    if rules_path is None:
        return load_rules(_load_default_rules_bytes())
    return load_rules(_read_bytes(Path(rules_path)))


def _read_bytes(path: Path) -> bytes:
    try:
        return path.read_bytes()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _read_json(path: Path):
    raw = _read_bytes(path).decode("utf-8")
    try:
        return json.loads(raw, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: invalid JSON: {exc}") from exc


def _reject_constant(token: str):
    raise CliError(f"non-finite JSON constant '{token}' is not accepted")


def _load_bindings(path: str | None) -> validator.RelationalBindings:
    if path is None:
        return validator.RelationalBindings()
    data = _read_json(Path(path))
    try:
        return validator.RelationalBindings.from_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(f"{path}: bad bindings file: {exc}") from exc


def _load_coeffs(path: str | None) -> analysis.CoefficientSet:
    if path is None:
        return analysis.CoefficientSet()
    data = _read_json(Path(path))
    try:
        return analysis.CoefficientSet.from_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(f"{path}: bad coefficients file: {exc}") from exc


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def _violation_lines(violations) -> list[str]:
    return [
        f"  [{v.rule_id}] {v.parameter}={v.observed}: {v.constraint} "
        f"({v.severity}; {v.citation})"
        for v in violations
    ]


def cmd_validate(args: argparse.Namespace) -> int:
    graph = load_graph(args.rules)
    bindings = _load_bindings(args.bindings)
    document = _read_json(Path(args.input))
    if isinstance(document, dict) and "segments" in document:
        facility = analysis.facility_from_dict(document)
        report = analysis.validate_facility(
            graph, facility, bindings, lenient=args.lenient
        )
    else:
        report = validator.validate(graph, document, bindings, lenient=args.lenient)
    if args.output_format == "json":
        _emit_json(report.to_dict(include_timing=args.timing))
    else:
        print(f"status: {report.status}")
        print(f"checks performed: {report.checks_performed}")
        if report.unknown_keys:
            print(f"unknown keys: {', '.join(report.unknown_keys)}")
        for line in _violation_lines(report.violations):
            print(line)
    return EXIT_PASS if report.status == "pass" else EXIT_REJECT


def cmd_analyze(args: argparse.Namespace) -> int:
    graph = load_graph(args.rules)
    bindings = _load_bindings(args.bindings)
    coeffs = _load_coeffs(args.coeffs)
    document = _read_json(Path(args.input))
    facility = analysis.facility_from_dict(document)
    try:
        result = analysis.analyze_facility(facility, coeffs, graph, bindings)
    except validator.ValidationRejected as exc:
        print(json.dumps(exc.payload(), indent=2), file=sys.stderr)
        return EXIT_REJECT
    if args.output_format == "json":
        _emit_json(result.to_dict())
    else:
        print(f"{'Segment':>7}  {'AS (mph)':>9}  {'PF (%)':>7}  "
              f"{'FD (fol/mi)':>11}  LOS")
        for i, seg in enumerate(result.segments, start=1):
            print(
                f"{i:>7}  {seg.avg_speed_mph:>9.2f}  {seg.percent_followers:>7.2f}  "
                f"{seg.follower_density:>11.2f}  {seg.los:>3}"
            )
        print(f"{'Overall':>7}  {'':>9}  {'':>7}  {result.overall_fd:>11.2f}  "
              f"{result.overall_los:>3}")
    return EXIT_PASS


def cmd_ingest(args: argparse.Namespace) -> int:
    graph = load_graph(args.rules)
    bindings = _load_bindings(args.bindings)
    config = opendrive.IngestConfig()
    paths: list[Path] = []
    for raw in args.inputs:
        path = Path(raw)
        if path.is_dir():
            paths.extend(sorted(path.glob("*.xodr")))
        else:
            paths.append(path)
    reports = []
    for path in paths:
        try:
            net = opendrive.parse_opendrive(_read_bytes(path), name=path.stem)
        except opendrive.OpenDriveParseError as exc:
            if args.skip_bad:
                print(f"skipping {path}: {exc}", file=sys.stderr)
                continue
            raise CliError(str(exc)) from exc
        reports.append(opendrive.validate_asset(net, graph, bindings, config))
    rows = list(reports)
    if len(reports) > 1:
        rows.append(opendrive.aggregate_reports(reports))
    if args.output_format == "json":
        _emit_json([r.to_dict() for r in rows])
    else:
        print(opendrive.render_table(rows))
        histogram = {}
        for report in reports:
            for rule_id, count in report.violations_by_rule.items():
                histogram[rule_id] = histogram.get(rule_id, 0) + count
        if histogram:
            print("violations by rule: " + ", ".join(
                f"{rule}={count}" for rule, count in sorted(histogram.items())
            ))
    return EXIT_PASS


def cmd_stress(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise CliError("--n must be >= 1")
    graph = load_graph(args.rules)
    bindings = _load_bindings(args.bindings)
    try:
        if args.mix:
            weights = json.loads(args.mix)
            mix = stress.CategoryMix(weights=weights)
        else:
            mix = stress.CategoryMix.from_invalid_share(args.invalid_share)
    except (ValueError, TypeError) as exc:
        raise CliError(f"bad mix: {exc}") from exc
    skip = frozenset(args.mutate_skip_rule or ())
    vectors = stress.generate_vectors(args.n, args.seed, mix, bindings)
    predictions: list[str] = []
    report = stress.run_stress(
        graph, bindings, vectors, skip_rules=skip, predictions_out=predictions
    )
    report = stress.StressReport(
        matrix=report.matrix, precision=report.precision, recall=report.recall,
        f1=report.f1, latency_median_us=report.latency_median_us,
        latency_p99_us=report.latency_p99_us, seed=args.seed, n=args.n,
    )
    if args.dump_csv:
        _write_vector_csv(Path(args.dump_csv), vectors, predictions)
    if args.output_format == "json":
        _emit_json(report.to_dict(include_timing=args.timing))
    else:
        m = report.matrix
        print(f"n={report.n} seed={report.seed}")
        print(f"true positives:  {m.tp}")
        print(f"true negatives:  {m.tn}")
        print(f"false positives: {m.fp}")
        print(f"false negatives: {m.fn}")
        f1 = "n/a" if report.f1 is None else f"{report.f1:.2f}"
        print(f"f1 score:        {f1}")
        if args.timing:
            print(f"latency median:  {report.latency_median_us:.2f} us")
            print(f"latency p99:     {report.latency_p99_us:.2f} us")
    return EXIT_PASS if report.matrix.fp == 0 and report.matrix.fn == 0 else EXIT_REJECT


def _write_vector_csv(path: Path, vectors, predictions) -> None:
    rows = stress.vectors_to_csv_rows(vectors, predictions)
    fieldnames = list(rows[0].keys()) if rows else []
    with path.open("w", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=fieldnames)
        writer.writeheader()
        writer.writerows(rows)


def cmd_export_sumo(args: argparse.Namespace) -> int:
    graph = load_graph(args.rules)
    bindings = _load_bindings(args.bindings)
    document = _read_json(Path(args.input))
    facility = analysis.facility_from_dict(document)
    report = analysis.validate_facility(graph, facility, bindings)
    if report.status == "reject":
        print(json.dumps(validator.reject_payload(report), indent=2), file=sys.stderr)
        return EXIT_REJECT
    out_dir = Path(args.out)
    stem = Path(args.input).stem
    try:
        nodes_path, edges_path = sumo.export_plain_network(facility, out_dir, stem)
    except OSError as exc:
        raise CliError(f"cannot write to {out_dir}: {exc}") from exc
    print(f"wrote {nodes_path}")
    print(f"wrote {edges_path}")
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--rules",
        help=f"rules document path (default: ${RULES_ENV_VAR} or the packaged "
             "two-lane document)",
    )
    common.add_argument("--coeffs", help="model coefficients JSON")
    common.add_argument("--bindings", help="minimum-radius bindings JSON")
    common.add_argument(
        "--output-format", choices=("json", "table"), default="table"
    )
    common.add_argument(
        "--lenient", action="store_true",
        help="downgrade unknown input keys from rejection to a warning",
    )
    common.add_argument(
        "--timing", action="store_true",
        help="include run-dependent timing fields in the output",
    )

    parser = argparse.ArgumentParser(
        prog="twolane",
        description="Two-lane highway analysis with rule-graph validation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common],
                       help="validation-gated facility analysis")
    p.add_argument("input", help="facility JSON file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("validate", parents=[common],
                       help="validate a parameter or facility document")
    p.add_argument("input", help="parameters JSON file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("ingest", parents=[common],
                       help="audit OpenDRIVE assets for rule compliance")
    p.add_argument("inputs", nargs="+", help=".xodr files or directories")
    p.add_argument("--skip-bad", action="store_true",
                   help="skip unparseable assets instead of failing")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("stress", parents=[common],
                       help="adversarial stress test of the validator")
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--invalid-share", type=float, default=0.74,
                   help="fraction of generated vectors that are invalid")
    p.add_argument("--mix", help="JSON mapping of category weights (overrides "
                                 "--invalid-share)")
    p.add_argument("--dump-csv", help="write all vectors with labels to CSV")
    p.add_argument("--mutate-skip-rule", action="append", metavar="RULE_ID",
                   help="self-check mode: pretend the validator lacks this rule")
    p.set_defaults(func=cmd_stress)

    p = sub.add_parser("export-sumo", parents=[common],
                       help="export a validated facility as SUMO plain files")
    p.add_argument("input", help="facility JSON file")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_export_sumo)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (RulesDocumentError, validator.InputError,
            analysis.FacilityInputError, opendrive.OpenDriveParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
