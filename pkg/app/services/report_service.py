"""
ReportService: JSON serialization and text summaries of scenario reports
"""

import json
from typing import Any, Dict, List

from app.api.schemas.report_schemas import ScenarioReport


class ReportService:
    """Serialize and display ScenarioReports"""

    @staticmethod
    def serialize_report(report: ScenarioReport) -> str:
        """UTF-8 JSON with exact rationals as "p/q" strings"""
        data = report.model_dump(mode="json", by_alias=True)
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"

    @staticmethod
    def parse_report(text: str) -> ScenarioReport:
        return ScenarioReport.model_validate_json(text)

    @staticmethod
    def report_schema() -> Dict[str, Any]:
        return ScenarioReport.model_json_schema(by_alias=True)

    @staticmethod
    def render_text(report: ScenarioReport) -> str:
        """Human-readable dossier; assumed lines are marked apart from computed ones"""
        status = "GREEN" if report.green else "RED"
        lines: List[str] = [f"genus {report.genus}: {report.title} [{status}]"]

        for wall in report.walls:
            line = f"  wall {wall.id} ({', '.join(wall.labels)}): {wall.equation} [{wall.kind}]"
            if wall.endpoints is not None:
                line += f" endpoints {_show(wall.endpoints)}"
            lines.append(line)
        for hole in report.holes:
            name = f" {hole.label}" if hole.label else ""
            lines.append(
                f"  hole on {hole.wall}:{name} {tuple(hole.delta)} at "
                f"beta={hole.point['beta']}, alpha^2={hole.point['alpha_sq']}"
            )

        for check in report.checks:
            if check.kind == "assumed":
                lines.append(f"  [ASSUMED] {check.id}: {check.expected}")
                continue
            mark = "PASS" if check.passed else "FAIL"
            flag = " (derived)" if check.origin == "derived" else ""
            line = f"  [{mark}] {check.id}{flag}: {check.check} = {_show(check.actual)}"
            if not check.passed:
                line += f" (expected {_show(check.expected)})"
            lines.append(line)

        if report.theorem:
            components = "; ".join(report.theorem.get("components", []))
            lines.append(f"  irr_L(S) {report.theorem.get('irr')}: {components}")
        return "\n".join(lines) + "\n"


def _show(value: Any) -> str:
    if isinstance(value, list):
        return "(" + ", ".join(_show(item) for item in value) + ")"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_show(v)}" for k, v in value.items()) + "}"
    return str(value)
