#!/usr/bin/env python3
"""Run every planner command end to end against synthetic weather.

Builds a self-contained workspace (scenario TOML plus a generated
weather CSV), then runs all six commands and lists the reports they
wrote.  Useful as a smoke test and as a worked example of the CLI.
"""
from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from make_synthetic_weather import generate_rows
from satqkd.cli import main as planner_main

COMMANDS = (
    "pass-profile",
    "loss-curve",
    "skl-curve",
    "annual",
    "weather-stats",
    "diversity",
)

SCENARIO_TEMPLATE = """\
theta_min_deg = 10.0
weather_csv_path = "{weather}"
overpass_hours = [0, 12]

[source]
protocol = "plob"
pulse_rate_hz = 1e9
"""


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="demo_run", help="workspace directory")
    parser.add_argument("--days", type=int, default=365, help="days of synthetic weather")
    parser.add_argument("--seed", type=int, default=0, help="weather RNG seed")
    parser.add_argument(
        "--format", choices=("csv", "json"), default="csv", help="report format"
    )
    args = parser.parse_args(argv)

    root = Path(args.out)
    root.mkdir(parents=True, exist_ok=True)
    weather_path = root / "weather.csv"
    with open(weather_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(("name", "datetime", "cloudcover"))
        writer.writerows(
            generate_rows(
                ("Dublin", "Galway", "Cork", "Waterford"),
                args.days,
                "2021-01-01",
                args.seed,
            )
        )
    scenario_path = root / "scenario.toml"
    scenario_path.write_text(SCENARIO_TEMPLATE.format(weather=weather_path.resolve()))

    reports_dir = root / "reports"
    for command in COMMANDS:
        print(f"== {command}")
        rc = planner_main(
            [
                command,
                "--config",
                str(scenario_path),
                "--out",
                str(reports_dir),
                "--format",
                args.format,
            ]
        )
        if rc != 0:
            print(f"{command} failed with exit code {rc}", file=sys.stderr)
            return rc

    written = sorted(p.name for p in reports_dir.iterdir())
    print(f"\n{len(written)} reports in {reports_dir}:")
    for name in written:
        print(f"  {name}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
