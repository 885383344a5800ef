"""Ground-station diversity under cloud cover.

For each candidate site combination, the site with the lowest cloud
cover is selected once per day at a fixed overpass hour; the tallies,
the mean of the selected minima, and the resulting availability scale
the clear-sky annual key capacity.  One downlink per day, midnight and
midday analyzed separately.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DataError, DomainError
from .weather import SiteSeries, WeatherDataset, samples_at_hour


@dataclass(frozen=True)
class SiteCombination:
    """Candidate OGS subset; listed order breaks cloud-cover ties."""

    site_ids: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "site_ids", tuple(self.site_ids))
        if not self.site_ids:
            raise DomainError("combination must contain at least one site")
        if len(set(self.site_ids)) != len(self.site_ids):
            raise DomainError(f"combination has duplicate sites: {self.site_ids}")

    @property
    def label(self) -> str:
        return "+".join(self.site_ids)

    def __len__(self) -> int:
        return len(self.site_ids)


@dataclass(frozen=True)
class CombinationReport:
    """Min-cover selection outcome for one combination at one hour.

    ``selection_counts`` is parallel to the combination's site order and
    sums to ``total_days``; ``availability`` is 1 - mean/100 exactly.
    """

    combination: SiteCombination
    overpass_hour: int
    selection_counts: tuple[int, ...]
    total_days: int
    excluded_days: int
    mean_min_cloud_pct: float
    availability: float


@dataclass(frozen=True)
class WeightedCapacityReport:
    """Clear-sky annual capacity scaled by a combination's availability."""

    combination: SiteCombination
    overpass_hour: int
    clear_sky_annual_bits: float
    weighted_annual_bits: float


def enumerate_combinations(site_ids) -> tuple[SiteCombination, ...]:
    """All non-empty site subsets (2^n - 1), ordered by size and then by
    the input site order; each subset keeps that order for tie-breaks."""
    ids = tuple(site_ids)
    if not ids:
        raise DomainError("need at least one site")
    if len(set(ids)) != len(ids):
        raise DomainError(f"duplicate site ids: {ids}")
    return tuple(
        SiteCombination(combo)
        for size in range(1, len(ids) + 1)
        for combo in itertools.combinations(ids, size)
    )


def _series_map(series_set) -> dict[str, SiteSeries]:
    if isinstance(series_set, WeatherDataset):
        return series_set.by_site
    if isinstance(series_set, SiteSeries):
        return {series_set.site_id: series_set}
    out = {}
    for s in series_set:
        out[s.site_id] = s
    return out


def select_min_cover_site(
    combination: SiteCombination, timestamp, series_set
) -> tuple[str, float]:
    """Site of the combination with the lowest cloud cover at an instant.

    Ties go to the site listed first.  Every site must have a record at
    the timestamp; a missing one raises so the caller can skip the day.
    """
    by_site = _series_map(series_set)
    ts = np.datetime64(timestamp).astype("datetime64[s]")
    best_site = None
    best_value = np.inf
    for site_id in combination.site_ids:
        series = by_site.get(site_id)
        if series is None:
            raise DataError(f"no series for site {site_id!r}")
        idx = np.searchsorted(series.times, ts)
        if idx >= len(series.times) or series.times[idx] != ts:
            raise DataError(f"site {site_id!r} has no record at {ts}")
        value = float(series.cloud_pct[idx])
        if value < best_value:
            best_site, best_value = site_id, value
    return best_site, best_value


def combination_report(
    combination: SiteCombination, overpass_hour: int, series_set
) -> CombinationReport:
    """Tally the daily min-cover selection over the whole dataset.

    Days on which any member site lacks a record at the hour are
    excluded from the tally and counted.  Selection and averaging run in
    chronological order, so results are reproducible sums.
    """
    if not 0 <= int(overpass_hour) <= 23:
        raise DomainError(f"overpass_hour must lie in 0..23, got {overpass_hour}")
    by_site = _series_map(series_set)
    per_site = {}
    for site_id in combination.site_ids:
        series = by_site.get(site_id)
        if series is None:
            raise DataError(f"no series for site {site_id!r}")
        dates, values = samples_at_hour(series, int(overpass_hour))
        per_site[site_id] = (dates, values)

    all_dates = per_site[combination.site_ids[0]][0]
    for site_id in combination.site_ids[1:]:
        all_dates = np.union1d(all_dates, per_site[site_id][0])
    usable = per_site[combination.site_ids[0]][0]
    for site_id in combination.site_ids[1:]:
        usable = np.intersect1d(usable, per_site[site_id][0], assume_unique=True)
    excluded = len(all_dates) - len(usable)
    if len(usable) == 0:
        raise DataError(
            f"no usable days for combination {combination.label} at hour {overpass_hour}"
        )

    aligned = {
        site_id: values[np.searchsorted(dates, usable)]
        for site_id, (dates, values) in per_site.items()
    }
    counts = {site_id: 0 for site_id in combination.site_ids}
    total = 0.0
    for i in range(len(usable)):
        best_site = None
        best_value = np.inf
        for site_id in combination.site_ids:
            value = float(aligned[site_id][i])
            if value < best_value:
                best_site, best_value = site_id, value
        counts[best_site] += 1
        total += best_value
    mean = total / len(usable)
    return CombinationReport(
        combination=combination,
        overpass_hour=int(overpass_hour),
        selection_counts=tuple(counts[s] for s in combination.site_ids),
        total_days=len(usable),
        excluded_days=excluded,
        mean_min_cloud_pct=mean,
        availability=1.0 - mean / 100.0,
    )


def weighted_annual_capacity(
    report: CombinationReport, clear_sky_bits: float
) -> WeightedCapacityReport:
    """Scale a clear-sky annual capacity by the combination's availability."""
    if clear_sky_bits < 0:
        raise DomainError(f"clear_sky_bits must be >= 0, got {clear_sky_bits}")
    return WeightedCapacityReport(
        combination=report.combination,
        overpass_hour=report.overpass_hour,
        clear_sky_annual_bits=clear_sky_bits,
        weighted_annual_bits=clear_sky_bits * report.availability,
    )
