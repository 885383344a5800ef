"""Hourly cloud-cover ingestion and descriptive statistics.

The input is a CSV export with one row per site-hour and three required
columns: ``name`` (site), ``datetime`` (ISO 8601, local civil time, hour
resolution) and ``cloudcover`` (percent, 0 to 100).  Extra columns are
ignored.  Statistics operate on immutable per-site series: monthly box
stats pooled across years, hour-of-day mean profiles, cross-site
minimum profiles, trailing running averages of the daily cross-site
minimum, and Pearson correlations between sites.
"""
from __future__ import annotations

import csv
import logging
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path

import numpy as np

from .errors import DataError

_log = logging.getLogger(__name__)

REQUIRED_COLUMNS = ("name", "datetime", "cloudcover")


@dataclass(frozen=True, eq=False)
class SiteSeries:
    """One site's hourly cloud-cover history, time-ordered."""

    site_id: str
    times: np.ndarray
    cloud_pct: np.ndarray
    latitude_deg: float = float("nan")
    longitude_deg: float = float("nan")

    def __post_init__(self) -> None:
        object.__setattr__(self, "times", np.asarray(self.times, dtype="datetime64[s]"))
        object.__setattr__(self, "cloud_pct", np.asarray(self.cloud_pct, dtype=float))
        if not self.site_id:
            raise DataError("site_id must be non-empty")
        if self.times.shape != self.cloud_pct.shape or self.times.ndim != 1:
            raise DataError(f"series arrays must be 1-d and equal length for {self.site_id!r}")
        if len(self.times) == 0:
            raise DataError(f"series for {self.site_id!r} is empty")
        if len(self.times) > 1 and not np.all(np.diff(self.times).astype(int) > 0):
            raise DataError(f"timestamps for {self.site_id!r} must be strictly increasing")
        if np.any((self.cloud_pct < 0.0) | (self.cloud_pct > 100.0)):
            raise DataError(f"cloud cover for {self.site_id!r} must lie in [0, 100]")

    def __len__(self) -> int:
        return len(self.times)

    def months(self) -> np.ndarray:
        """Calendar month (1-12) of each record."""
        return self.times.astype("datetime64[M]").astype(int) % 12 + 1

    def hours(self) -> np.ndarray:
        """Hour of day (0-23) of each record."""
        return (self.times.astype("datetime64[h]") - self.times.astype("datetime64[D]")).astype(int)

    def dates(self) -> np.ndarray:
        """Calendar date of each record."""
        return self.times.astype("datetime64[D]")


@dataclass(frozen=True)
class MonthlyStats:
    """Five-number summary of one calendar month, all years pooled."""

    month: int
    minimum: float
    q1: float
    median: float
    q3: float
    maximum: float


@dataclass(frozen=True)
class SiteQuality:
    site_id: str
    n_records: int
    first: str
    last: str
    missing_hours: int
    rejected_rows: int


@dataclass(frozen=True)
class DataQuality:
    """Ingestion accounting: per-site coverage plus rejected input rows."""

    sites: tuple[SiteQuality, ...]
    rejected_rows: tuple[tuple[int, str], ...] = ()
    ignored_sites: tuple[str, ...] = ()


@dataclass(frozen=True)
class WeatherDataset:
    series: tuple[SiteSeries, ...]
    quality: DataQuality
    by_site: dict = field(repr=False, compare=False, default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "by_site", {s.site_id: s for s in self.series})

    def get(self, site_id: str) -> SiteSeries:
        try:
            return self.by_site[site_id]
        except KeyError:
            raise DataError(f"no weather series for site {site_id!r}") from None

    @property
    def site_ids(self) -> tuple[str, ...]:
        return tuple(s.site_id for s in self.series)


def _parse_timestamp(text: str) -> np.datetime64:
    dt = datetime.fromisoformat(text.strip())
    if dt.tzinfo is not None:
        raise ValueError("timezone-aware timestamps are not supported")
    return np.datetime64(dt).astype("datetime64[s]")


def load_weather_csv(
    path,
    expected_sites=None,
    on_bad_record: str = "error",
) -> WeatherDataset:
    """Parse a site/datetime/cloudcover CSV into per-site series.

    Parameters
    ----------
    path : str or Path
        CSV file with at least the columns ``name``, ``datetime``,
        ``cloudcover``; extra columns are ignored.
    expected_sites : iterable of str, optional
        When given, every listed site must appear in the file (else a
        data error); sites not listed are dropped and reported.
    on_bad_record : {"error", "skip"}
        A malformed row (bad timestamp, cloud cover outside [0, 100],
        duplicate site-timestamp) raises with its line number, or is
        dropped and tallied in the quality report.

    Returns
    -------
    WeatherDataset
        Series sorted by site id, each time-ordered, plus a quality
        report with per-site record counts, hour gaps, and rejected
        rows.
    """
    if on_bad_record not in ("error", "skip"):
        raise ValueError(f"on_bad_record must be 'error' or 'skip', got {on_bad_record!r}")
    path = Path(path)
    if not path.is_file():
        raise DataError(f"weather CSV not found: {path}")

    rows_by_site: dict[str, list[tuple[np.datetime64, float, int]]] = {}
    rejected: list[tuple[int, str]] = []

    def bad(line: int, reason: str) -> None:
        if on_bad_record == "error":
            raise DataError(f"{path}:{line}: {reason}")
        rejected.append((line, reason))

    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise DataError(f"{path}: empty file, expected a header row")
        missing = [c for c in REQUIRED_COLUMNS if c not in reader.fieldnames]
        if missing:
            raise DataError(f"{path}: missing required column(s) {', '.join(missing)}")
        for row in reader:
            line = reader.line_num
            name = (row["name"] or "").strip()
            if not name:
                bad(line, "empty site name")
                continue
            try:
                ts = _parse_timestamp(row["datetime"] or "")
            except ValueError as exc:
                bad(line, f"bad datetime {row['datetime']!r}: {exc}")
                continue
            try:
                cover = float(row["cloudcover"])
            except (TypeError, ValueError):
                bad(line, f"bad cloudcover {row['cloudcover']!r}")
                continue
            if not 0.0 <= cover <= 100.0:
                bad(line, f"cloudcover {cover} outside [0, 100]")
                continue
            rows_by_site.setdefault(name, []).append((ts, cover, line))

    ignored: tuple[str, ...] = ()
    if expected_sites is not None:
        expected = list(expected_sites)
        absent = [s for s in expected if s not in rows_by_site]
        if absent:
            raise DataError(f"{path}: no records for site(s) {', '.join(absent)}")
        ignored = tuple(sorted(s for s in rows_by_site if s not in expected))
        rows_by_site = {s: rows_by_site[s] for s in expected}

    series = []
    qualities = []
    for site_id in sorted(rows_by_site):
        rows = sorted(rows_by_site[site_id], key=lambda r: (r[0], r[2]))
        kept: list[tuple[np.datetime64, float, int]] = []
        site_rejected = 0
        for r in rows:
            if kept and r[0] == kept[-1][0]:
                bad(r[2], f"duplicate timestamp {r[0]} for site {site_id!r}")
                site_rejected += 1
                continue
            kept.append(r)
        if not kept:
            raise DataError(f"{path}: all records for site {site_id!r} were rejected")
        times = np.array([r[0] for r in kept], dtype="datetime64[s]")
        cloud = np.array([r[1] for r in kept], dtype=float)
        series.append(SiteSeries(site_id=site_id, times=times, cloud_pct=cloud))
        span_hours = int((times[-1] - times[0]) / np.timedelta64(1, "h")) + 1
        qualities.append(
            SiteQuality(
                site_id=site_id,
                n_records=len(kept),
                first=str(times[0]),
                last=str(times[-1]),
                missing_hours=max(0, span_hours - len(kept)),
                rejected_rows=site_rejected,
            )
        )
    if not series:
        raise DataError(f"{path}: no usable records")
    return WeatherDataset(
        series=tuple(series),
        quality=DataQuality(
            sites=tuple(qualities), rejected_rows=tuple(rejected), ignored_sites=ignored
        ),
    )


def _month_mask(series: SiteSeries, months) -> np.ndarray:
    if months is None:
        return np.ones(len(series), dtype=bool)
    wanted = sorted(set(int(m) for m in months))
    if any(m < 1 or m > 12 for m in wanted):
        raise DataError(f"months must lie in 1..12, got {months}")
    return np.isin(series.months(), wanted)


def monthly_box_stats(series: SiteSeries) -> tuple[MonthlyStats, ...]:
    """Five-number summary per calendar month, pooling hourly records
    across all years.  Quartiles use linear interpolation between order
    statistics.  Months with no records are omitted with a warning."""
    out = []
    record_months = series.months()
    for month in range(1, 13):
        values = series.cloud_pct[record_months == month]
        if len(values) == 0:
            _log.warning("site %s has no records in month %d", series.site_id, month)
            continue
        q1, med, q3 = np.percentile(values, [25.0, 50.0, 75.0])
        out.append(
            MonthlyStats(
                month=month,
                minimum=float(values.min()),
                q1=float(q1),
                median=float(med),
                q3=float(q3),
                maximum=float(values.max()),
            )
        )
    return tuple(out)


def hourly_mean_profile(series: SiteSeries, months=None) -> np.ndarray:
    """Mean cloud cover at each hour of day (24 values).

    ``months`` restricts the records to the given calendar months.
    Hours absent from the selection come back as NaN; an empty selection
    is an error.
    """
    mask = _month_mask(series, months)
    if not np.any(mask):
        raise DataError(f"no records for site {series.site_id!r} in months {months}")
    hours = series.hours()[mask]
    values = series.cloud_pct[mask]
    sums = np.bincount(hours, weights=values, minlength=24)
    counts = np.bincount(hours, minlength=24)
    with np.errstate(invalid="ignore"):
        return np.where(counts > 0, sums / np.maximum(counts, 1), np.nan)


def cross_site_min_profile(series_seq, months=None) -> np.ndarray:
    """Pointwise minimum of the sites' hourly mean profiles."""
    profiles = [hourly_mean_profile(s, months) for s in series_seq]
    if not profiles:
        raise DataError("cross_site_min_profile needs at least one series")
    return np.min(np.vstack(profiles), axis=0)


def samples_at_hour(series: SiteSeries, hour: int):
    """All records taken at the given hour of day, as (dates, values)."""
    if not 0 <= int(hour) <= 23:
        raise DataError(f"hour must lie in 0..23, got {hour}")
    mask = series.hours() == int(hour)
    return series.dates()[mask], series.cloud_pct[mask]


def daily_cross_site_min(series_seq, at_hour: int):
    """Per-day minimum cloud cover across sites at one hour of day.

    Only days on which every site has a record at that hour are used;
    returns (dates, minima) in chronological order.
    """
    series_list = [series_seq] if isinstance(series_seq, SiteSeries) else list(series_seq)
    if not series_list:
        raise DataError("daily_cross_site_min needs at least one series")
    per_site = [samples_at_hour(s, at_hour) for s in series_list]
    common = per_site[0][0]
    for dates, _ in per_site[1:]:
        common = np.intersect1d(common, dates, assume_unique=True)
    if len(common) == 0:
        return common, np.empty(0, dtype=float)
    stacked = np.vstack(
        [values[np.searchsorted(dates, common)] for dates, values in per_site]
    )
    return common, np.min(stacked, axis=0)


def running_average(series_seq, window_days: int = 30, at_hour: int = 0):
    """Trailing mean of the daily cross-site minimum cloud cover.

    Windows slide over the sequence of usable days (days where every
    site reported at ``at_hour``); each output value is the mean of the
    ``window_days`` most recent usable days, stamped with the window-end
    date.  A sequence shorter than the window yields empty arrays.
    """
    if window_days < 1:
        raise DataError(f"window_days must be >= 1, got {window_days}")
    dates, minima = daily_cross_site_min(series_seq, at_hour)
    if len(minima) < window_days:
        return dates[:0], minima[:0]
    kernel = np.ones(window_days) / window_days
    return dates[window_days - 1 :], np.convolve(minima, kernel, mode="valid")


def pearson_correlation(a, b) -> float:
    """Pearson product-moment correlation of two equal-length series."""
    x = np.asarray(a, dtype=float)
    y = np.asarray(b, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise DataError("correlation inputs must be 1-d and equal length")
    if len(x) < 2:
        raise DataError(f"correlation needs at least 2 samples, got {len(x)}")
    dx = x - x.mean()
    dy = y - y.mean()
    sx = float(np.sqrt(np.dot(dx, dx)))
    sy = float(np.sqrt(np.dot(dy, dy)))
    if sx == 0.0 or sy == 0.0:
        raise DataError("correlation is undefined for a zero-variance series")
    return float(np.clip(np.dot(dx, dy) / (sx * sy), -1.0, 1.0))


def matched_hourly_samples(a: SiteSeries, b: SiteSeries):
    """Cloud-cover values of two sites at their shared timestamps."""
    _, ia, ib = np.intersect1d(a.times, b.times, assume_unique=True, return_indices=True)
    return a.cloud_pct[ia], b.cloud_pct[ib]


def correlation_matrix(series_seq, mode: str = "raw", months=None) -> np.ndarray:
    """Pairwise Pearson correlations between sites.

    ``mode`` selects the sample basis: ``"raw"`` correlates all matched
    hourly samples; ``"hourly-profile"`` correlates the 24-point
    hour-of-day mean profiles.
    """
    series_list = list(series_seq)
    n = len(series_list)
    if mode not in ("raw", "hourly-profile"):
        raise DataError(f"mode must be 'raw' or 'hourly-profile', got {mode!r}")
    out = np.eye(n)
    if mode == "hourly-profile":
        profiles = [hourly_mean_profile(s, months) for s in series_list]
    for i in range(n):
        for j in range(i + 1, n):
            if mode == "raw":
                if months is None:
                    va, vb = matched_hourly_samples(series_list[i], series_list[j])
                else:
                    ma = _month_mask(series_list[i], months)
                    mb = _month_mask(series_list[j], months)
                    sa = SiteSeries(
                        series_list[i].site_id,
                        series_list[i].times[ma],
                        series_list[i].cloud_pct[ma],
                    )
                    sb = SiteSeries(
                        series_list[j].site_id,
                        series_list[j].times[mb],
                        series_list[j].cloud_pct[mb],
                    )
                    va, vb = matched_hourly_samples(sa, sb)
                r = pearson_correlation(va, vb)
            else:
                r = pearson_correlation(profiles[i], profiles[j])
            out[i, j] = out[j, i] = r
    return out
