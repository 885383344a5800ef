"""Scenario configuration: defaults, validation, and TOML parsing."""
from __future__ import annotations

from dataclasses import dataclass, fields, replace
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from .errors import ConfigError, DomainError
from .geometry import OrbitConfig
from .channel import LinkBudgetParams
from .capacity import Protocol, SourceConfig

OUTPUT_FORMATS = ("csv", "json")


@dataclass(frozen=True)
class Site:
    site_id: str
    latitude_deg: float
    longitude_deg: float

    def __post_init__(self) -> None:
        if not self.site_id:
            raise DomainError("site_id must be non-empty")
        if not -90.0 < self.latitude_deg < 90.0:
            raise DomainError(f"latitude_deg must lie in (-90, 90), got {self.latitude_deg}")
        if not -180.0 <= self.longitude_deg <= 180.0:
            raise DomainError(f"longitude_deg must lie in [-180, 180], got {self.longitude_deg}")


DEFAULT_SITES = (
    Site("Dublin", 53.35, -6.25),
    Site("Galway", 53.54, -8.98),
    Site("Cork", 51.85, -8.48),
    Site("Waterford", 52.25, -7.08),
)


@dataclass(frozen=True)
class ScenarioConfig:
    """One planning scenario; defaults model the reference system."""

    orbit: OrbitConfig = OrbitConfig()
    link: LinkBudgetParams = LinkBudgetParams()
    source: SourceConfig = SourceConfig()
    theta_min_deg: float = 10.0
    sites: tuple[Site, ...] = DEFAULT_SITES
    weather_csv_path: str | None = None
    overpass_hours: tuple[int, ...] = (0, 12)
    output_dir: str = "reports"
    output_format: str = "csv"

    def __post_init__(self) -> None:
        object.__setattr__(self, "sites", tuple(self.sites))
        object.__setattr__(self, "overpass_hours", tuple(self.overpass_hours))
        if not 0.0 <= self.theta_min_deg <= 90.0:
            raise DomainError(f"theta_min_deg must lie in [0, 90], got {self.theta_min_deg}")
        if not self.sites:
            raise DomainError("at least one site is required")
        ids = [s.site_id for s in self.sites]
        if len(set(ids)) != len(ids):
            raise DomainError(f"duplicate site ids: {ids}")
        if not self.overpass_hours:
            raise DomainError("at least one overpass hour is required")
        for h in self.overpass_hours:
            if not (isinstance(h, int) and 0 <= h <= 23):
                raise DomainError(f"overpass hours must be integers in 0..23, got {h}")
        if len(set(self.overpass_hours)) != len(self.overpass_hours):
            raise DomainError(f"duplicate overpass hours: {self.overpass_hours}")
        if self.output_format not in OUTPUT_FORMATS:
            raise DomainError(
                f"output_format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}"
            )

    @property
    def site_ids(self) -> tuple[str, ...]:
        return tuple(s.site_id for s in self.sites)


def _build_section(cls, mapping: dict, section: str):
    allowed = {f.name for f in fields(cls)}
    for key in mapping:
        if key not in allowed:
            raise ConfigError(f"unknown key '{section}.{key}'")
    coerced = {k: float(v) if isinstance(v, int) and not isinstance(v, bool) else v
               for k, v in mapping.items()}
    try:
        return cls(**coerced)
    except DomainError as exc:
        raise ConfigError(f"invalid value in [{section}]: {exc}") from exc


_TOP_LEVEL_KEYS = {
    "orbit",
    "link",
    "source",
    "theta_min_deg",
    "sites",
    "weather_csv_path",
    "overpass_hours",
    "output_dir",
    "output_format",
}


def parse_scenario(path) -> ScenarioConfig:
    """Load a scenario TOML file, applying defaults for absent keys.

    Sections [orbit], [link], [source] override physical parameters;
    [[sites]] tables replace the default site list.  Unknown keys are
    rejected so a typo cannot silently fall back to a default.
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"scenario file not found: {path}")
    try:
        with open(path, "rb") as fh:
            raw = tomllib.load(fh)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from exc

    for key in raw:
        if key not in _TOP_LEVEL_KEYS:
            raise ConfigError(f"unknown key '{key}'")

    kwargs = {}
    if "orbit" in raw:
        kwargs["orbit"] = _build_section(OrbitConfig, raw["orbit"], "orbit")
    if "link" in raw:
        kwargs["link"] = _build_section(LinkBudgetParams, raw["link"], "link")
    if "source" in raw:
        source_raw = dict(raw["source"])
        if "protocol" in source_raw:
            name = str(source_raw["protocol"]).lower()
            try:
                source_raw["protocol"] = Protocol(name)
            except ValueError:
                valid = ", ".join(p.value for p in Protocol)
                raise ConfigError(
                    f"invalid value in [source]: protocol must be one of {valid}, got {name!r}"
                ) from None
        kwargs["source"] = _build_section(SourceConfig, source_raw, "source")
    if "sites" in raw:
        sites = []
        for i, entry in enumerate(raw["sites"]):
            if not isinstance(entry, dict):
                raise ConfigError(f"sites[{i}] must be a table")
            sites.append(_build_section(Site, entry, f"sites[{i}]"))
        kwargs["sites"] = tuple(sites)
    for key in ("theta_min_deg", "weather_csv_path", "overpass_hours", "output_dir",
                "output_format"):
        if key in raw:
            value = raw[key]
            if key == "theta_min_deg" and isinstance(value, int):
                value = float(value)
            if key == "overpass_hours":
                if not isinstance(value, list):
                    raise ConfigError("overpass_hours must be a list of integers")
                value = tuple(value)
            kwargs[key] = value
    try:
        return ScenarioConfig(**kwargs)
    except DomainError as exc:
        raise ConfigError(f"invalid scenario value: {exc}") from exc


def with_overrides(config: ScenarioConfig, output_dir=None, output_format=None) -> ScenarioConfig:
    """Apply command-line overrides on top of a parsed scenario."""
    changes = {}
    if output_dir is not None:
        changes["output_dir"] = str(output_dir)
    if output_format is not None:
        changes["output_format"] = output_format
    if not changes:
        return config
    try:
        return replace(config, **changes)
    except DomainError as exc:
        raise ConfigError(f"invalid override: {exc}") from exc
