"""
Scenario commands: run, schema, theorem
"""

import argparse
import json
import sys
from pathlib import Path
from typing import List

from app.api.schemas.scenario_schemas import ScenarioConfig
from app.models.errors import ScenarioConfigError
from app.services.plot_service import PlotService
from app.services.report_service import ReportService
from app.services.scenario_service import ScenarioService
from app.utils.logging_config import app_logger


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("scenario", help="golden scenario runs")
    commands = parser.add_subparsers(dest="scenario_command", required=True)

    run_parser = commands.add_parser("run", help="run scenarios by genus, path or 'all'")
    run_parser.add_argument("targets", nargs="+", help="genus (7..14), scenario file, or 'all'")
    run_parser.add_argument("--json", dest="json_out", help="report file ('-' for stdout); a directory for several targets")
    run_parser.add_argument("--svg", dest="svg_out", help="diagram file; a directory for several targets")
    run_parser.set_defaults(handler=run)

    schema_parser = commands.add_parser("schema", help="print the JSON schema of reports")
    schema_parser.set_defaults(handler=schema)

    theorem_parser = commands.add_parser("theorem", help="print the theorem summary of a genus")
    theorem_parser.add_argument("genus", type=int)
    theorem_parser.set_defaults(handler=theorem)


def _output_path(out: str, genus: int, suffix: str, several: bool) -> Path:
    if several:
        directory = Path(out)
        directory.mkdir(parents=True, exist_ok=True)
        return directory / f"g{genus:02d}.{suffix}"
    return Path(out)


def _write_svg(config: ScenarioConfig, out: str, several: bool) -> None:
    if config.plot is None:
        if not several:
            raise ScenarioConfigError(f"genus {config.genus} scenario has no [plot] section")
        app_logger.warning(f"genus {config.genus} has no [plot] section; no diagram written")
        return
    path = _output_path(out, config.genus, "svg", several)
    path.write_text(PlotService.render_scenario(config), encoding="utf-8", newline="\n")


def run(args: argparse.Namespace) -> int:
    configs = ScenarioService.load_targets(args.targets)
    several = len(configs) > 1
    reports = [ScenarioService.run_config(config) for config in configs]

    if args.json_out == "-":
        documents: List = [json.loads(ReportService.serialize_report(report)) for report in reports]
        print(json.dumps(documents if several else documents[0], indent=2, ensure_ascii=False))
    else:
        for report in reports:
            sys.stdout.write(ReportService.render_text(report))
        if args.json_out:
            for report in reports:
                path = _output_path(args.json_out, report.genus, "json", several)
                path.write_text(ReportService.serialize_report(report), encoding="utf-8", newline="\n")

    if args.svg_out:
        for config in configs:
            _write_svg(config, args.svg_out, several)

    return 0 if all(report.green for report in reports) else 1


def schema(args: argparse.Namespace) -> int:
    print(json.dumps(ReportService.report_schema(), indent=2, ensure_ascii=False))
    return 0


def theorem(args: argparse.Namespace) -> int:
    print(json.dumps(ScenarioService.theorem_summary(args.genus), indent=2, ensure_ascii=False))
    return 0
