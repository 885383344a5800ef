"""Satellite-QKD feasibility planner.

Models LEO overpass geometry and the space-to-ground optical loss
budget, integrates the repeaterless secret-key bound per pass and per
year, and evaluates ground-station site diversity under historical
cloud-cover data.
"""
from .errors import ConfigError, DataError, DomainError, PlannerError
from .geometry import (
    EARTH_RADIUS_M,
    OrbitConfig,
    PassGeometry,
    PassProfile,
    central_angle_from_elevation,
    contact_window_end_s,
    elevation_from_central_angle,
    max_offset_for_elevation,
    orbital_period,
    pass_profile,
    slant_range,
    slant_range_from_central_angle,
)
from .channel import (
    LinkBudgetParams,
    LossBreakdown,
    atmospheric_loss_db,
    diffraction_loss_db,
    divergence_half_angle,
    total_loss_db,
    transmissivity_from_loss_db,
)
from .capacity import (
    AnnualCapacityReport,
    CapacityCurve,
    Protocol,
    SourceConfig,
    aes256_keys_per_year,
    annual_capacity,
    orbits_per_year,
    pass_skl,
    plob_bound,
    plob_rate,
    protocol_rate,
    skl_integral,
    skl_vs_offset,
    small_t_plob_ratio,
)
from .weather import (
    DataQuality,
    MonthlyStats,
    SiteSeries,
    WeatherDataset,
    correlation_matrix,
    cross_site_min_profile,
    daily_cross_site_min,
    hourly_mean_profile,
    load_weather_csv,
    monthly_box_stats,
    pearson_correlation,
    running_average,
)
from .diversity import (
    CombinationReport,
    SiteCombination,
    WeightedCapacityReport,
    combination_report,
    enumerate_combinations,
    select_min_cover_site,
    weighted_annual_capacity,
)
from .config import DEFAULT_SITES, ScenarioConfig, Site, parse_scenario

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "DataError",
    "DomainError",
    "PlannerError",
    "EARTH_RADIUS_M",
    "OrbitConfig",
    "PassGeometry",
    "PassProfile",
    "central_angle_from_elevation",
    "contact_window_end_s",
    "elevation_from_central_angle",
    "max_offset_for_elevation",
    "orbital_period",
    "pass_profile",
    "slant_range",
    "slant_range_from_central_angle",
    "LinkBudgetParams",
    "LossBreakdown",
    "atmospheric_loss_db",
    "diffraction_loss_db",
    "divergence_half_angle",
    "total_loss_db",
    "transmissivity_from_loss_db",
    "AnnualCapacityReport",
    "CapacityCurve",
    "Protocol",
    "SourceConfig",
    "aes256_keys_per_year",
    "annual_capacity",
    "orbits_per_year",
    "pass_skl",
    "plob_bound",
    "plob_rate",
    "protocol_rate",
    "skl_integral",
    "skl_vs_offset",
    "small_t_plob_ratio",
    "DataQuality",
    "MonthlyStats",
    "SiteSeries",
    "WeatherDataset",
    "correlation_matrix",
    "cross_site_min_profile",
    "daily_cross_site_min",
    "hourly_mean_profile",
    "load_weather_csv",
    "monthly_box_stats",
    "pearson_correlation",
    "running_average",
    "CombinationReport",
    "SiteCombination",
    "WeightedCapacityReport",
    "combination_report",
    "enumerate_combinations",
    "select_min_cover_site",
    "weighted_annual_capacity",
    "DEFAULT_SITES",
    "ScenarioConfig",
    "Site",
    "parse_scenario",
]
