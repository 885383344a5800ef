import csv

import numpy as np
import pytest

from satqkd import LinkBudgetParams, OrbitConfig, SiteSeries, SourceConfig

SITES = ("Dublin", "Galway", "Cork", "Waterford")


@pytest.fixture(scope="session")
def orbit():
    return OrbitConfig()


@pytest.fixture(scope="session")
def link():
    return LinkBudgetParams()


@pytest.fixture(scope="session")
def source():
    return SourceConfig()


def hourly_series(site_id, values, start="2021-01-01T00", latitude_deg=float("nan")):
    """Series with one record per hour starting at ``start``."""
    values = np.asarray(values, dtype=float)
    t0 = np.datetime64(start, "s")
    times = t0 + np.arange(len(values)) * np.timedelta64(3600, "s")
    return SiteSeries(site_id=site_id, times=times, cloud_pct=values,
                      latitude_deg=latitude_deg)


def daily_series(site_id, values, at_hour=0, start_day="2021-01-01"):
    """Series with one record per day at a fixed hour."""
    values = np.asarray(values, dtype=float)
    day0 = np.datetime64(start_day, "D")
    times = (day0 + np.arange(len(values))).astype("datetime64[s]") + np.timedelta64(
        at_hour * 3600, "s"
    )
    return SiteSeries(site_id=site_id, times=times, cloud_pct=values)


def write_weather_csv(path, rows, header=("name", "datetime", "cloudcover")):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)
    return path


def synthetic_weather_rows(sites=SITES, days=10, start="2021-01-01", seed=0, hours=range(24)):
    """Uniform-random hourly cloud rows, one value per site-hour."""
    rng = np.random.default_rng(seed)
    day0 = np.datetime64(start, "D")
    rows = []
    for site in sites:
        for day in range(days):
            for hour in hours:
                ts = (day0 + day).astype("datetime64[s]") + np.timedelta64(hour * 3600, "s")
                value = round(float(rng.uniform(0.0, 100.0)), 1)
                rows.append([site, str(ts).replace("T", " "), value])
    return rows


@pytest.fixture(scope="session")
def weather_csv(tmp_path_factory):
    """100-day 4-site synthetic hourly export."""
    rows = synthetic_weather_rows(days=100, seed=42)
    return write_weather_csv(tmp_path_factory.mktemp("weather") / "weather.csv", rows)
