#!/usr/bin/env python3
"""
Regenerate every scenario report and the genus 7 and 11 diagrams

Writes gNN.json for each genus 7..14 and gNN.svg for every scenario with a
[plot] section into the output directory (default: build/).

Usage:
    python scripts/render_all.py [OUTPUT_DIR]
"""

import os
import sys
from pathlib import Path

# Add the parent directory to the path so we can import from app
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app.services.plot_service import PlotService
from app.services.report_service import ReportService
from app.services.scenario_service import ScenarioService
from app.utils.logging_config import app_logger as logger


def render_all(out_dir: Path) -> bool:
    """Write all reports and figures; returns True when every scenario is green"""
    out_dir.mkdir(parents=True, exist_ok=True)
    green = True
    for config in ScenarioService.load_targets(["all"]):
        report = ScenarioService.run_config(config)
        green = green and report.green
        json_path = out_dir / f"g{config.genus:02d}.json"
        json_path.write_text(ReportService.serialize_report(report), encoding="utf-8", newline="\n")
        logger.info("Wrote %s (green=%s)", json_path, report.green)

        if config.plot is not None:
            svg_path = out_dir / f"g{config.genus:02d}.svg"
            svg_path.write_text(PlotService.render_scenario(config), encoding="utf-8", newline="\n")
            logger.info("Wrote %s", svg_path)
    return green


def main():
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("build")
    green = render_all(out_dir)
    print(f"{'all scenarios green' if green else 'some scenarios are red'}; output in {out_dir}")
    sys.exit(0 if green else 1)


if __name__ == "__main__":
    main()
