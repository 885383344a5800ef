#!/usr/bin/env python3
"""Generate a synthetic hourly cloud-cover CSV.

The output matches the loader's schema (name, datetime, cloudcover) and
is meant for demos and pipeline testing only: each site gets a seasonal
swing, a diurnal swing, and Gaussian noise, which is nothing like real
Irish weather but exercises every code path the real export does.
"""
from __future__ import annotations

import argparse
import csv
import sys
from datetime import datetime, timedelta

import numpy as np

DEFAULT_SITES = ("Dublin", "Galway", "Cork", "Waterford")


def generate_rows(sites, days, start, seed):
    """Yield (name, iso timestamp, cloud %) rows, hourly per site."""
    rng = np.random.default_rng(seed)
    t0 = datetime.fromisoformat(start)
    for k, site in enumerate(sites):
        phase = k / max(len(sites), 1)
        for day in range(days):
            for hour in range(24):
                ts = t0 + timedelta(days=day, hours=hour)
                doy = ts.timetuple().tm_yday
                seasonal = 18.0 * np.sin(2.0 * np.pi * (doy / 365.25 + phase))
                diurnal = 9.0 * np.cos(2.0 * np.pi * (hour - 14) / 24.0)
                value = 55.0 + seasonal + diurnal + rng.normal(0.0, 18.0)
                value = float(np.clip(value, 0.0, 100.0))
                yield site, ts.strftime("%Y-%m-%d %H:%M:%S"), round(value, 1)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="weather.csv", help="output CSV path")
    parser.add_argument("--days", type=int, default=365, help="days per site")
    parser.add_argument("--start", default="2021-01-01", help="first day (ISO date)")
    parser.add_argument("--seed", type=int, default=0, help="RNG seed")
    parser.add_argument(
        "--sites", nargs="+", default=list(DEFAULT_SITES), help="site names"
    )
    args = parser.parse_args(argv)

    n = 0
    with open(args.out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(("name", "datetime", "cloudcover"))
        for row in generate_rows(args.sites, args.days, args.start, args.seed):
            writer.writerow(row)
            n += 1
    print(f"wrote {args.out} ({n} rows, {len(args.sites)} sites, {args.days} days)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
