"""Analytic circular-orbit overpass geometry.

A satellite on a circular orbit traces a great-circle ground track over a
static (non-rotating) Earth.  The ground station sits at a minimum arc
offset from that track, which fixes the maximum elevation reached during
the pass.  Elevation is measured from the station's horizon (zenith is
90 degrees); gamma denotes the Earth-central angle between the station
and the sub-satellite point.  All interfaces take and return degrees,
radians are internal only.

Scalar arguments are the common case; the angle-to-range conversions also
broadcast over numpy arrays.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

EARTH_RADIUS_M = 6_371_000.0
GRAVITATIONAL_CONSTANT = 6.67430e-11  # m^3 / (kg s^2)
EARTH_MASS_KG = 5.972e24


@dataclass(frozen=True)
class OrbitConfig:
    """Circular orbit over a spherical Earth.

    ``altitude_m = 0`` is accepted so the surface-skimming Kepler limit
    stays evaluatable.
    """

    altitude_m: float = 500_000.0
    earth_radius_m: float = EARTH_RADIUS_M
    gravitational_parameter: float = GRAVITATIONAL_CONSTANT * EARTH_MASS_KG

    def __post_init__(self) -> None:
        if self.altitude_m < 0:
            raise DomainError(f"altitude_m must be >= 0, got {self.altitude_m}")
        if self.earth_radius_m <= 0:
            raise DomainError(f"earth_radius_m must be > 0, got {self.earth_radius_m}")
        if self.gravitational_parameter <= 0:
            raise DomainError(
                f"gravitational_parameter must be > 0, got {self.gravitational_parameter}"
            )

    @property
    def orbit_radius_m(self) -> float:
        return self.earth_radius_m + self.altitude_m


def orbital_period(orbit: OrbitConfig) -> float:
    """Kepler period of the circular orbit, in seconds."""
    return 2.0 * math.pi * math.sqrt(orbit.orbit_radius_m**3 / orbit.gravitational_parameter)


def orbital_angular_rate(orbit: OrbitConfig) -> float:
    """Orbital angular rate in rad/s."""
    return 2.0 * math.pi / orbital_period(orbit)


def _check_elevation(elevation_deg) -> np.ndarray:
    e = np.asarray(elevation_deg, dtype=float)
    if np.any((e < 0.0) | (e > 90.0)):
        raise DomainError(f"elevation must lie in [0, 90] degrees, got {elevation_deg}")
    return e


def slant_range(elevation_deg, orbit: OrbitConfig):
    """Station-to-satellite line-of-sight distance at a given elevation.

    Parameters
    ----------
    elevation_deg : float or array
        Elevation of the satellite above the station's horizon, 0 to 90.
    orbit : OrbitConfig

    Returns
    -------
    float or array
        Slant range in meters.  Strictly decreasing in elevation; equals
        the orbit altitude at zenith.
    """
    e = _check_elevation(elevation_deg)
    th = np.radians(e)
    ratio = orbit.orbit_radius_m / orbit.earth_radius_m
    rng = orbit.earth_radius_m * (np.sqrt(ratio**2 - np.cos(th) ** 2) - np.sin(th))
    return float(rng) if np.ndim(elevation_deg) == 0 else rng


def central_angle_from_elevation(elevation_deg, orbit: OrbitConfig):
    """Earth-central angle gamma (radians) at which the satellite appears
    at the given elevation.  Zero at zenith, strictly decreasing in
    elevation."""
    e = _check_elevation(elevation_deg)
    th = np.radians(e)
    g = np.arccos(orbit.earth_radius_m * np.cos(th) / orbit.orbit_radius_m) - th
    return float(g) if np.ndim(elevation_deg) == 0 else g


def elevation_from_central_angle(gamma_rad, orbit: OrbitConfig):
    """Inverse of :func:`central_angle_from_elevation`, in degrees.

    Negative results mean the satellite is below the station's horizon.
    """
    g = np.asarray(gamma_rad, dtype=float)
    cos_horizon = orbit.earth_radius_m / orbit.orbit_radius_m
    e = np.degrees(np.arctan2(np.cos(g) - cos_horizon, np.sin(g)))
    return float(e) if np.ndim(gamma_rad) == 0 else e


def slant_range_from_central_angle(gamma_rad, orbit: OrbitConfig):
    """Slant range via the law of cosines on the Earth-central triangle."""
    g = np.asarray(gamma_rad, dtype=float)
    re = orbit.earth_radius_m
    r = orbit.orbit_radius_m
    rng = np.sqrt(re**2 + r**2 - 2.0 * re * r * np.cos(g))
    return float(rng) if np.ndim(gamma_rad) == 0 else rng


def max_offset_for_elevation(theta_min_deg: float, orbit: OrbitConfig) -> float:
    """Largest ground-track offset (arc length, meters) from which the
    satellite still clears the given elevation floor at closest approach."""
    return orbit.earth_radius_m * central_angle_from_elevation(theta_min_deg, orbit)


@dataclass(frozen=True)
class PassGeometry:
    """One overpass, described by its peak elevation and the operational
    elevation floor.

    ``theta_min_deg == theta_max_deg`` is the grazing pass whose contact
    window has zero length.
    """

    theta_max_deg: float
    theta_min_deg: float = 10.0

    def __post_init__(self) -> None:
        if not 0.0 < self.theta_max_deg <= 90.0:
            raise DomainError(f"theta_max_deg must lie in (0, 90], got {self.theta_max_deg}")
        if not 0.0 <= self.theta_min_deg <= self.theta_max_deg:
            raise DomainError(
                "theta_min_deg must lie in [0, theta_max_deg], got "
                f"{self.theta_min_deg} with theta_max_deg={self.theta_max_deg}"
            )

    def gamma_min_rad(self, orbit: OrbitConfig) -> float:
        """Earth-central angle at closest approach."""
        return central_angle_from_elevation(self.theta_max_deg, orbit)

    def ground_track_offset_m(self, orbit: OrbitConfig) -> float:
        """Minimum ground-track offset d_min as an arc length."""
        return orbit.earth_radius_m * self.gamma_min_rad(orbit)


@dataclass(frozen=True, eq=False)
class PassProfile:
    """Sampled elevation and range history of one pass.

    ``times_s`` is relative to closest approach and symmetric about zero;
    ``window_end_s`` is the exact half-duration of the contact window
    (elevation crosses the floor at +/- this time).
    """

    times_s: np.ndarray
    elevations_deg: np.ndarray
    slant_ranges_m: np.ndarray
    step_s: float
    window_end_s: float

    def __len__(self) -> int:
        return len(self.times_s)


def contact_window_end_s(geom: PassGeometry, orbit: OrbitConfig) -> float:
    """Time after closest approach at which elevation drops to the floor.

    Closed form on the great-circle track: the central angle evolves as
    cos(gamma(t)) = cos(gamma_min) * cos(omega * t).
    """
    gamma_min = geom.gamma_min_rad(orbit)
    gamma_end = central_angle_from_elevation(geom.theta_min_deg, orbit)
    ratio = math.cos(gamma_end) / math.cos(gamma_min)  # <= 1 since gamma_end >= gamma_min
    return math.acos(min(1.0, max(-1.0, ratio))) / orbital_angular_rate(orbit)


def pass_profile(geom: PassGeometry, orbit: OrbitConfig, step_s: float = 1.0) -> PassProfile:
    """Sample one overpass on a uniform time grid.

    Parameters
    ----------
    geom : PassGeometry
    orbit : OrbitConfig
    step_s : float
        Sampling interval in seconds; the grid is centered on closest
        approach and clamped inside the contact window.

    Returns
    -------
    PassProfile
        Samples with elevation at or above the floor.  A grazing pass
        yields the single closest-approach sample.
    """
    if step_s <= 0:
        raise DomainError(f"step_s must be > 0, got {step_s}")
    t_end = contact_window_end_s(geom, orbit)
    n = int(math.floor(t_end / step_s + 1e-9))
    times = np.arange(-n, n + 1, dtype=float) * step_s

    gamma_min = geom.gamma_min_rad(orbit)
    omega = orbital_angular_rate(orbit)
    gammas = np.arccos(np.clip(math.cos(gamma_min) * np.cos(omega * times), -1.0, 1.0))
    elevations = elevation_from_central_angle(gammas, orbit)

    # grid endpoints can land on the window edge; tolerate roundoff dust only
    keep = elevations >= geom.theta_min_deg - 1e-9
    return PassProfile(
        times_s=times[keep],
        elevations_deg=elevations[keep],
        slant_ranges_m=slant_range_from_central_angle(gammas[keep], orbit),
        step_s=step_s,
        window_end_s=t_end,
    )
