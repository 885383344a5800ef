import json

import pytest

from satqkd import ConfigError, ScenarioConfig
from satqkd.cli import main, run_command
from satqkd.reports import read_report


def write_scenario(path, body=""):
    path.write_text(body)
    return str(path)


@pytest.fixture(scope="module")
def workspace(tmp_path_factory, weather_csv):
    """One full run of every command against the synthetic weather file."""
    root = tmp_path_factory.mktemp("cli")
    scenario = write_scenario(
        root / "scenario.toml", f'weather_csv_path = "{weather_csv}"\n'
    )
    out = root / "reports"
    for command in (
        "pass-profile",
        "loss-curve",
        "skl-curve",
        "annual",
        "weather-stats",
        "diversity",
    ):
        assert main([command, "--config", scenario, "--out", str(out)]) == 0
    return {"root": root, "scenario": scenario, "out": out}


def test_all_reports_written(workspace):
    names = sorted(p.name for p in workspace["out"].iterdir())
    assert names == [
        "annual_capacity.csv",
        "annual_capacity_summary.csv",
        "cloud_correlations.csv",
        "hourly_cloud_profile.csv",
        "loss_vs_elevation.csv",
        "monthly_cloud_stats.csv",
        "pass_profile.csv",
        "pass_profile_summary.csv",
        "running_min_cloud.csv",
        "site_selection_h00.csv",
        "site_selection_h12.csv",
        "skl_vs_offset.csv",
        "skl_vs_offset_summary.csv",
        "weather_data_quality.csv",
        "weighted_capacity.csv",
    ]


def test_pass_profile_contents(workspace):
    summary = read_report(workspace["out"] / "pass_profile_summary.csv")
    assert summary.columns == ("theta_max_deg", "window_end_s", "samples")
    windows = {row[0]: row[1] for row in summary.rows}
    assert windows[90] == pytest.approx(221.321097, abs=1e-5)
    assert windows[60] == pytest.approx(218.190309, abs=1e-5)
    assert windows[30] == pytest.approx(195.991768, abs=1e-5)


def test_loss_curve_contents(workspace):
    report = read_report(workspace["out"] / "loss_vs_elevation.csv")
    assert report.columns == (
        "elevation_deg",
        "atmospheric_db",
        "diffraction_db",
        "other_db",
        "total_db",
    )
    by_elevation = {row[0]: row for row in report.rows}
    assert by_elevation[90][4] == pytest.approx(45.0656409, abs=1e-6)
    totals = [row[4] for row in report.rows]
    assert totals == sorted(totals, reverse=True)


def test_skl_curve_contents(workspace):
    summary = read_report(workspace["out"] / "skl_vs_offset_summary.csv")
    rows = {row[0]: row for row in summary.rows}
    assert rows[10][1] == pytest.approx(4.95952962e12, rel=1e-8)
    assert rows[10][2] == pytest.approx(1.1208203, abs=1e-6)
    assert rows[0][2] == 1


def test_annual_contents(workspace):
    report = read_report(workspace["out"] / "annual_capacity.csv")
    by_site = {row[0]: row for row in report.rows}
    assert by_site["Dublin"][3] == pytest.approx(1.15555338e9, rel=1e-8)
    assert by_site["Galway"][3] == pytest.approx(1.16073318e9, rel=1e-8)
    summary = read_report(workspace["out"] / "annual_capacity_summary.csv")
    assert summary.rows[0][2] == pytest.approx(1.13990631e9, rel=1e-8)


def test_weather_stats_contents(workspace):
    correlations = read_report(workspace["out"] / "cloud_correlations.csv")
    modes = {row[2] for row in correlations.rows}
    assert modes == {"raw", "hourly-profile"}
    assert len(correlations.rows) == 6 * 2
    assert all(-1.0 <= row[3] <= 1.0 for row in correlations.rows)

    profile = read_report(workspace["out"] / "hourly_cloud_profile.csv")
    assert profile.columns == (
        "hour",
        "Dublin",
        "Galway",
        "Cork",
        "Waterford",
        "cross_site_min",
    )
    assert len(profile.rows) == 24
    for row in profile.rows:
        assert row[5] == min(row[1:5])

    running = read_report(workspace["out"] / "running_min_cloud.csv")
    hours = {row[0] for row in running.rows}
    assert hours == {0, 12}
    assert len(running.rows) == 2 * (100 - 30 + 1)

    quality = read_report(workspace["out"] / "weather_data_quality.csv")
    assert [row[0] for row in quality.rows] == ["Cork", "Dublin", "Galway", "Waterford"]
    assert all(row[1] == 2400 for row in quality.rows)


def test_diversity_contents(workspace):
    selection = read_report(workspace["out"] / "site_selection_h00.csv")
    assert len(selection.rows) == 15
    for row in selection.rows:
        combination, counts, rest = row[0], row[1:5], row[5:]
        members = combination.split("+")
        picked = [c for c in counts if c is not None]
        assert len(picked) == len(members)
        total_days, excluded, mean, availability = rest
        assert sum(picked) == total_days == 100
        assert excluded == 0
        assert availability == pytest.approx(1.0 - mean / 100.0, abs=2e-9)

    weighted = read_report(workspace["out"] / "weighted_capacity.csv")
    assert weighted.columns == (
        "combination",
        "clear_sky_annual_bits",
        "weighted_annual_bits_h00",
        "weighted_annual_bits_h12",
    )
    assert len(weighted.rows) == 15
    clear_sky = weighted.rows[0][1]
    assert clear_sky == pytest.approx(1.13990631e9, rel=1e-8)
    by_label = {row[0]: row for row in weighted.rows}
    for label in ("Dublin", "Dublin+Galway+Cork+Waterford"):
        assert by_label[label][2] < clear_sky


def test_reruns_are_byte_identical(tmp_path, workspace):
    out = tmp_path / "again"
    assert main(["annual", "--config", workspace["scenario"], "--out", str(out)]) == 0
    for name in ("annual_capacity.csv", "annual_capacity_summary.csv"):
        assert (out / name).read_bytes() == (workspace["out"] / name).read_bytes()


def test_json_format_carries_same_rows(tmp_path, workspace):
    out = tmp_path / "json_out"
    rc = main(
        ["pass-profile", "--config", workspace["scenario"], "--out", str(out),
         "--format", "json"]
    )
    assert rc == 0
    json_report = read_report(out / "pass_profile.json")
    csv_report = read_report(workspace["out"] / "pass_profile.csv")
    assert json_report == csv_report


def test_exit_code_missing_config(capsys):
    rc = main(["annual", "--config", "/nonexistent.toml"])
    assert rc == 2
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "ConfigError"
    assert "not found" in err["message"]


def test_exit_code_unknown_key(tmp_path, capsys):
    scenario = write_scenario(tmp_path / "s.toml", "not_a_key = 1\n")
    assert main(["annual", "--config", scenario, "--out", str(tmp_path)]) == 2
    assert json.loads(capsys.readouterr().err)["error"] == "ConfigError"


def test_exit_code_missing_weather(tmp_path, capsys):
    scenario = write_scenario(tmp_path / "s.toml")
    rc = main(["diversity", "--config", scenario, "--out", str(tmp_path)])
    assert rc == 3
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "DataError"
    assert "weather_csv_path" in err["message"]


def test_exit_code_numeric_domain(tmp_path, capsys):
    scenario = write_scenario(tmp_path / "s.toml", "theta_min_deg = 90\n")
    rc = main(["skl-curve", "--config", scenario, "--out", str(tmp_path)])
    assert rc == 4
    assert json.loads(capsys.readouterr().err)["error"] == "DomainError"


def test_unknown_command_is_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["orbit-dance", "--config", "x.toml"])
    assert excinfo.value.code == 2
    capsys.readouterr()


def test_run_command_unknown():
    with pytest.raises(ConfigError):
        run_command(ScenarioConfig(), "fly")
