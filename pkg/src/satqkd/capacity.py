"""Secret-key capacity over the lossy downlink.

The repeaterless bound K(T) = -log2(1 - T) caps every point-to-point
protocol; practical protocols reach a constant fraction of T in the
high-loss regime.  Rates are per channel use; multiplied by the source
rate they give bits per second, integrated over a pass they give bits
per contact, and averaged over ground-track offsets they give an annual
capacity per site latitude.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError
from .channel import LinkBudgetParams, total_loss_db, transmissivity_from_loss_db
from .geometry import (
    OrbitConfig,
    PassGeometry,
    elevation_from_central_angle,
    max_offset_for_elevation,
    orbital_period,
    pass_profile,
)

_LN2 = math.log(2.0)

SECONDS_PER_YEAR = 365.25 * 86400.0


class Protocol(Enum):
    """Key-rate scalings in the high-loss limit (rate ~ coefficient * T)."""

    PLOB = "plob"
    CV_ONE_WAY = "cv_one_way"
    CV_TWO_WAY = "cv_two_way"
    BB84_SINGLE_PHOTON = "bb84_single_photon"
    BB84_WCP_DECOY = "bb84_wcp_decoy"
    MDI = "mdi"


_PROTOCOL_COEFF = {
    Protocol.CV_ONE_WAY: 1.0 / math.log(4.0),
    Protocol.CV_TWO_WAY: 1.0 / (4.0 * _LN2),
    Protocol.BB84_SINGLE_PHOTON: 0.5,
    Protocol.BB84_WCP_DECOY: 1.0 / (2.0 * math.e),
    Protocol.MDI: 1.0 / (2.0 * math.e**2),
}


@dataclass(frozen=True)
class SourceConfig:
    """Pulsed QKD source and the protocol whose rate scaling applies."""

    pulse_rate_hz: float = 1e9
    protocol: Protocol = Protocol.PLOB

    def __post_init__(self) -> None:
        if self.pulse_rate_hz <= 0:
            raise DomainError(f"pulse_rate_hz must be > 0, got {self.pulse_rate_hz}")


@dataclass(frozen=True, eq=False)
class CapacityCurve:
    """Per-pass key length sampled against ground-track offset.

    ``skl_bits`` is non-increasing in offset and zero at and beyond the
    largest offset the elevation floor admits.
    """

    offsets_m: np.ndarray
    skl_bits: np.ndarray
    theta_min_deg: float


@dataclass(frozen=True)
class AnnualCapacityReport:
    """Clear-sky annual key bound for one site latitude."""

    latitude_deg: float
    l_lat_m: float
    n_year: float
    skl_year_bits: float


def _check_transmissivity(transmissivity, allow_unity: bool) -> np.ndarray:
    t = np.asarray(transmissivity, dtype=float)
    too_high = (t > 1.0) if allow_unity else (t >= 1.0)
    if np.any((t < 0.0) | too_high):
        bound = "[0, 1]" if allow_unity else "[0, 1)"
        raise DomainError(f"transmissivity must lie in {bound}, got {transmissivity}")
    return t


def plob_bound(transmissivity):
    """Repeaterless secret-key capacity, bits per channel use.

    Defined on T in [0, 1): the bound diverges at unit transmissivity
    and is zero for a dead channel, which also covers losses so large
    that T underflows.  Uses log1p for stability: at T = 1e-10 the
    naive 1 - T form has already lost half its digits.
    """
    t = _check_transmissivity(transmissivity, allow_unity=False)
    k = -np.log1p(-t) / _LN2 + 0.0
    return float(k) if np.ndim(transmissivity) == 0 else k


def protocol_rate(transmissivity, protocol: Protocol = Protocol.PLOB):
    """Secret-key rate of the given protocol, bits per channel use."""
    if protocol is Protocol.PLOB:
        return plob_bound(transmissivity)
    t = _check_transmissivity(transmissivity, allow_unity=True)
    rate = _PROTOCOL_COEFF[protocol] * t
    return float(rate) if np.ndim(transmissivity) == 0 else rate


def small_t_plob_ratio(protocol: Protocol) -> float:
    """Limit of protocol rate over the repeaterless bound as T -> 0."""
    if protocol is Protocol.PLOB:
        return 1.0
    return _PROTOCOL_COEFF[protocol] * _LN2


def plob_rate(loss_db, source: SourceConfig):
    """Secret-key rate in bits per second at a given channel loss.

    Parameters
    ----------
    loss_db : float or array
        Total channel loss, >= 0; must be > 0 when the source protocol
        is the repeaterless bound (zero loss makes it diverge).
    source : SourceConfig

    Returns
    -------
    float or array
        Key rate, source pulse rate times the per-use rate.
    """
    t = transmissivity_from_loss_db(loss_db)
    return protocol_rate(t, source.protocol) * source.pulse_rate_hz


def pass_skl(
    geom: PassGeometry,
    params: LinkBudgetParams,
    orbit: OrbitConfig,
    source: SourceConfig,
    step_s: float = 1.0,
) -> float:
    """Secret-key length of one pass, in bits.

    Trapezoidal integral of the instantaneous key rate over the sampled
    contact window.  Samples at zero elevation (possible only with a
    floor of exactly zero) carry zero rate; passes too short to bracket
    an interval yield zero bits.
    """
    profile = pass_profile(geom, orbit, step_s=step_s)
    if len(profile) < 2:
        return 0.0
    rate = np.zeros_like(profile.times_s)
    lit = profile.elevations_deg > 0.0
    if np.any(lit):
        loss = total_loss_db(profile.elevations_deg[lit], params, orbit).total_db
        rate[lit] = plob_rate(loss, source)
    return float(np.trapezoid(rate, profile.times_s))


def skl_vs_offset(
    theta_min_deg: float,
    params: LinkBudgetParams,
    orbit: OrbitConfig,
    source: SourceConfig,
    n_points: int | None = None,
    step_s: float = 1.0,
) -> CapacityCurve:
    """Per-pass key length as a function of ground-track offset.

    Offsets are sampled uniformly from the ground track out to the
    largest offset the elevation floor admits.  ``n_points`` defaults to
    roughly one point per kilometre of that reach.
    """
    if not 0.0 <= theta_min_deg <= 90.0:
        raise DomainError(f"theta_min_deg must lie in [0, 90], got {theta_min_deg}")
    d_max = max_offset_for_elevation(theta_min_deg, orbit)
    if n_points is None:
        n_points = int(math.ceil(d_max / 1000.0)) + 1
    if n_points < 2:
        raise DomainError(f"n_points must be >= 2, got {n_points}")
    offsets = np.linspace(0.0, d_max, n_points)
    skl = np.zeros_like(offsets)
    for i, d in enumerate(offsets):
        theta_max = elevation_from_central_angle(d / orbit.earth_radius_m, orbit)
        theta_max = min(90.0, max(theta_min_deg, theta_max))
        if theta_max <= 0.0:
            continue
        geom = PassGeometry(theta_max_deg=theta_max, theta_min_deg=theta_min_deg)
        skl[i] = pass_skl(geom, params, orbit, source, step_s)
    return CapacityCurve(offsets_m=offsets, skl_bits=skl, theta_min_deg=theta_min_deg)


def skl_integral(curve: CapacityCurve) -> float:
    """Area under the key-length-versus-offset curve, in bit-metres.

    Dividing by the length of a latitude circle turns this into the mean
    key length of a uniformly placed pass, which is what the annual
    estimate consumes.
    """
    return float(np.trapezoid(curve.skl_bits, curve.offsets_m))


def orbits_per_year(orbit: OrbitConfig) -> float:
    """Number of orbits completed in a Julian year."""
    return SECONDS_PER_YEAR / orbital_period(orbit)


def annual_capacity(
    latitude_deg: float, skl_int_bit_m: float, orbit: OrbitConfig
) -> AnnualCapacityReport:
    """Clear-sky annual key bound for a site at the given latitude.

    Ground tracks crossing the site's latitude circle are taken as
    uniformly distributed in offset, so the yearly total is the orbit
    count times the offset-averaged key length per pass.
    """
    if not -90.0 < latitude_deg < 90.0:
        raise DomainError(f"latitude_deg must lie in (-90, 90), got {latitude_deg}")
    l_lat = 2.0 * math.pi * orbit.earth_radius_m * math.cos(math.radians(latitude_deg))
    n_year = orbits_per_year(orbit)
    return AnnualCapacityReport(
        latitude_deg=latitude_deg,
        l_lat_m=l_lat,
        n_year=n_year,
        skl_year_bits=n_year * skl_int_bit_m / l_lat,
    )


def aes256_keys_per_year(plob_annual_bits: float, protocol: Protocol) -> float:
    """Count of 256-bit keys a protocol distills from a PLOB-bounded total.

    Rescales the bound by the protocol's small-T fraction before cutting
    into 256-bit keys; valid in the high-loss regime where the linear
    scaling holds.
    """
    if plob_annual_bits < 0:
        raise DomainError(f"plob_annual_bits must be >= 0, got {plob_annual_bits}")
    return plob_annual_bits * small_t_plob_ratio(protocol) / 256.0
