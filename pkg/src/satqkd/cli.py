"""Command-line front end.

Each subcommand reads one scenario file, runs one analysis, and writes
plot-ready CSV or JSON reports:

    satqkd-planner <command> --config <path> [--out <dir>] [--format csv|json]

Commands: pass-profile, loss-curve, skl-curve, annual, weather-stats,
diversity.  Exit codes: 0 success, 2 configuration error, 3 data error,
4 numeric-domain error.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .errors import ConfigError, DataError, PlannerError
from .geometry import PassGeometry, pass_profile
from .channel import total_loss_db
from .capacity import annual_capacity, skl_integral, skl_vs_offset
from .config import ScenarioConfig, parse_scenario, with_overrides
from .reports import Report, write_report
from .weather import (
    WeatherDataset,
    correlation_matrix,
    cross_site_min_profile,
    hourly_mean_profile,
    load_weather_csv,
    matched_hourly_samples,
    monthly_box_stats,
    running_average,
)
from .diversity import combination_report, enumerate_combinations, weighted_annual_capacity

__all__ = ["main", "run_command", "parse_scenario"]


def _nan_to_none(value: float):
    return None if np.isnan(value) else float(value)


def _cmd_pass_profile(config: ScenarioConfig) -> list[Report]:
    rows = []
    summary = []
    for theta_max in (90.0, 60.0, 30.0):
        if theta_max < config.theta_min_deg:
            continue
        geom = PassGeometry(theta_max_deg=theta_max, theta_min_deg=config.theta_min_deg)
        prof = pass_profile(geom, config.orbit, step_s=1.0)
        lit = prof.elevations_deg > 0.0
        loss = np.full(len(prof), np.nan)
        if np.any(lit):
            loss[lit] = total_loss_db(prof.elevations_deg[lit], config.link, config.orbit).total_db
        for i in range(len(prof)):
            rows.append(
                (
                    theta_max,
                    float(prof.times_s[i]),
                    float(prof.elevations_deg[i]),
                    float(prof.slant_ranges_m[i]),
                    _nan_to_none(loss[i]),
                )
            )
        summary.append((theta_max, prof.window_end_s, len(prof)))
    return [
        Report(
            "pass_profile",
            ("theta_max_deg", "t_s", "elevation_deg", "slant_range_m", "total_loss_db"),
            rows,
        ),
        Report("pass_profile_summary", ("theta_max_deg", "window_end_s", "samples"), summary),
    ]


def _cmd_loss_curve(config: ScenarioConfig) -> list[Report]:
    start = config.theta_min_deg if config.theta_min_deg > 0 else 1.0
    elevations = np.arange(start, 90.0 + 1e-9, 1.0)
    budget = total_loss_db(elevations, config.link, config.orbit)
    rows = [
        (float(e), float(a), float(d), float(o), float(t))
        for e, a, d, o, t in zip(
            elevations, budget.atm_db, budget.diff_db, budget.other_db, budget.total_db
        )
    ]
    return [
        Report(
            "loss_vs_elevation",
            ("elevation_deg", "atmospheric_db", "diffraction_db", "other_db", "total_db"),
            rows,
        )
    ]


def _skl_integral_at(config: ScenarioConfig, theta_min_deg: float) -> float:
    curve = skl_vs_offset(theta_min_deg, config.link, config.orbit, config.source)
    return skl_integral(curve)


def _cmd_skl_curve(config: ScenarioConfig) -> list[Report]:
    floors = [0.0] if config.theta_min_deg == 0.0 else [0.0, config.theta_min_deg]
    rows = []
    areas = {}
    for floor in floors:
        curve = skl_vs_offset(floor, config.link, config.orbit, config.source)
        areas[floor] = skl_integral(curve)
        for offset, skl in zip(curve.offsets_m, curve.skl_bits):
            rows.append((floor, float(offset), float(skl)))
    summary = [
        (floor, areas[floor], areas[0.0] / areas[floor] if areas[floor] > 0 else None)
        for floor in floors
    ]
    return [
        Report("skl_vs_offset", ("theta_min_deg", "offset_m", "skl_bits"), rows),
        Report(
            "skl_vs_offset_summary",
            ("theta_min_deg", "skl_integral_bit_m", "area_ratio_zero_floor_to_this"),
            summary,
        ),
    ]


def _cmd_annual(config: ScenarioConfig) -> list[Report]:
    sint = _skl_integral_at(config, config.theta_min_deg)
    site_reports = [
        (site, annual_capacity(site.latitude_deg, sint, config.orbit)) for site in config.sites
    ]
    rows = [
        (site.site_id, site.latitude_deg, rep.l_lat_m, rep.skl_year_bits)
        for site, rep in site_reports
    ]
    mean_bits = sum(rep.skl_year_bits for _, rep in site_reports) / len(site_reports)
    summary = [(sint, site_reports[0][1].n_year, mean_bits)]
    return [
        Report(
            "annual_capacity", ("site", "latitude_deg", "l_lat_m", "skl_year_bits"), rows
        ),
        Report(
            "annual_capacity_summary",
            ("skl_integral_bit_m", "n_year", "mean_skl_year_bits"),
            summary,
        ),
    ]


def _load_weather(config: ScenarioConfig) -> WeatherDataset:
    if not config.weather_csv_path:
        raise DataError("this command requires weather_csv_path in the scenario")
    return load_weather_csv(config.weather_csv_path, expected_sites=config.site_ids)


def _cmd_weather_stats(config: ScenarioConfig) -> list[Report]:
    dataset = _load_weather(config)
    series_list = [dataset.get(site_id) for site_id in config.site_ids]

    monthly_rows = []
    for series in series_list:
        for stats in monthly_box_stats(series):
            monthly_rows.append(
                (
                    series.site_id,
                    stats.month,
                    stats.minimum,
                    stats.q1,
                    stats.median,
                    stats.q3,
                    stats.maximum,
                )
            )

    profiles = [hourly_mean_profile(s) for s in series_list]
    min_profile = cross_site_min_profile(series_list)
    profile_rows = [
        (
            hour,
            *[_nan_to_none(p[hour]) for p in profiles],
            _nan_to_none(min_profile[hour]),
        )
        for hour in range(24)
    ]

    corr_rows = []
    for mode in ("raw", "hourly-profile"):
        matrix = correlation_matrix(series_list, mode=mode)
        for i in range(len(series_list)):
            for j in range(i + 1, len(series_list)):
                if mode == "raw":
                    va, _ = matched_hourly_samples(series_list[i], series_list[j])
                    n = len(va)
                else:
                    n = 24
                corr_rows.append(
                    (
                        series_list[i].site_id,
                        series_list[j].site_id,
                        mode,
                        float(matrix[i, j]),
                        n,
                    )
                )

    running_rows = []
    for hour in config.overpass_hours:
        dates, values = running_average(series_list, window_days=30, at_hour=hour)
        for date, value in zip(dates, values):
            running_rows.append((hour, str(date), float(value)))

    quality_rows = [
        (q.site_id, q.n_records, q.first, q.last, q.missing_hours, q.rejected_rows)
        for q in dataset.quality.sites
    ]

    return [
        Report(
            "monthly_cloud_stats",
            ("site", "month", "minimum", "q1", "median", "q3", "maximum"),
            monthly_rows,
        ),
        Report(
            "hourly_cloud_profile",
            ("hour", *[s.site_id for s in series_list], "cross_site_min"),
            profile_rows,
        ),
        Report(
            "cloud_correlations", ("site_a", "site_b", "mode", "r", "n_samples"), corr_rows
        ),
        Report(
            "running_min_cloud", ("overpass_hour", "date", "mean_min_cloud_pct"), running_rows
        ),
        Report(
            "weather_data_quality",
            ("site", "records", "first", "last", "missing_hours", "rejected_rows"),
            quality_rows,
        ),
    ]


def _cmd_diversity(config: ScenarioConfig) -> list[Report]:
    dataset = _load_weather(config)
    sint = _skl_integral_at(config, config.theta_min_deg)
    annual_bits = [
        annual_capacity(site.latitude_deg, sint, config.orbit).skl_year_bits
        for site in config.sites
    ]
    clear_sky = sum(annual_bits) / len(annual_bits)

    combos = enumerate_combinations(config.site_ids)
    out = []
    by_hour = {}
    for hour in config.overpass_hours:
        rows = []
        by_hour[hour] = {}
        for combo in combos:
            rep = combination_report(combo, hour, dataset)
            by_hour[hour][combo.site_ids] = rep
            counts = dict(zip(combo.site_ids, rep.selection_counts))
            rows.append(
                (
                    combo.label,
                    *[counts.get(site_id) for site_id in config.site_ids],
                    rep.total_days,
                    rep.excluded_days,
                    rep.mean_min_cloud_pct,
                    rep.availability,
                )
            )
        out.append(
            Report(
                f"site_selection_h{hour:02d}",
                (
                    "combination",
                    *[f"n_days_{site_id}" for site_id in config.site_ids],
                    "total_days",
                    "excluded_days",
                    "mean_min_cloud_pct",
                    "availability",
                ),
                rows,
            )
        )

    weighted_rows = []
    for combo in combos:
        weighted = [
            weighted_annual_capacity(by_hour[hour][combo.site_ids], clear_sky).weighted_annual_bits
            for hour in config.overpass_hours
        ]
        weighted_rows.append((combo.label, clear_sky, *weighted))
    out.append(
        Report(
            "weighted_capacity",
            (
                "combination",
                "clear_sky_annual_bits",
                *[f"weighted_annual_bits_h{hour:02d}" for hour in config.overpass_hours],
            ),
            weighted_rows,
        )
    )
    return out


_COMMANDS = {
    "pass-profile": (_cmd_pass_profile, "elevation, range and loss over sample overpasses"),
    "loss-curve": (_cmd_loss_curve, "loss budget versus elevation"),
    "skl-curve": (_cmd_skl_curve, "per-pass key length versus ground-track offset"),
    "annual": (_cmd_annual, "clear-sky annual key capacity per site"),
    "weather-stats": (_cmd_weather_stats, "cloud-cover statistics from the weather CSV"),
    "diversity": (_cmd_diversity, "site-combination availability and weighted capacity"),
}


def run_command(config: ScenarioConfig, command: str):
    """Run one analysis command and write its reports.

    Returns the written paths; raises PlannerError subclasses on
    configuration, data, or numeric-domain failures.
    """
    try:
        builder, _ = _COMMANDS[command]
    except KeyError:
        raise ConfigError(f"unknown command {command!r}") from None
    paths = []
    for report in builder(config):
        path = write_report(report, config.output_dir, config.output_format)
        print(f"wrote {path} ({len(report.rows)} rows)")
        paths.append(path)
    return tuple(paths)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="satqkd-planner",
        description="Satellite-QKD feasibility planner",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name, (_, help_text) in _COMMANDS.items():
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--config", required=True, help="scenario TOML file")
        cmd.add_argument("--out", default=None, help="output directory (overrides scenario)")
        cmd.add_argument(
            "--format", choices=("csv", "json"), default=None,
            help="report format (overrides scenario)",
        )
    args = parser.parse_args(argv)
    try:
        config = parse_scenario(args.config)
        config = with_overrides(config, output_dir=args.out, output_format=args.format)
        run_command(config, args.command)
    except PlannerError as exc:
        print(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}),
            file=sys.stderr,
        )
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
