"""Downlink optical loss budget.

Three dB terms, summed: slab-atmosphere extinction scaled by the secant
of the zenith angle, far-field diffraction between the transmit and
receive apertures, and a lumped allowance for pointing, receiver optics
and detection.  Loss functions broadcast over numpy arrays of
elevations or ranges.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .geometry import OrbitConfig, slant_range


@dataclass(frozen=True)
class LinkBudgetParams:
    """Optical terminal and atmosphere parameters.

    Defaults describe a small LEO transmitter (8 cm) paired with a 70 cm
    ground telescope at 1550 nm under clear sky, with 20 dB lumped for
    turbulence, pointing, receiver optics and detection.
    """

    wavelength_m: float = 1550e-9
    tx_aperture_m: float = 0.08
    rx_aperture_m: float = 0.70
    zenith_transmittance: float = 0.9
    other_loss_db: float = 20.0

    def __post_init__(self) -> None:
        if self.wavelength_m <= 0:
            raise DomainError(f"wavelength_m must be > 0, got {self.wavelength_m}")
        if self.tx_aperture_m <= 0:
            raise DomainError(f"tx_aperture_m must be > 0, got {self.tx_aperture_m}")
        if self.rx_aperture_m <= 0:
            raise DomainError(f"rx_aperture_m must be > 0, got {self.rx_aperture_m}")
        if not 0.0 < self.zenith_transmittance <= 1.0:
            raise DomainError(
                f"zenith_transmittance must lie in (0, 1], got {self.zenith_transmittance}"
            )
        if self.other_loss_db < 0:
            raise DomainError(f"other_loss_db must be >= 0, got {self.other_loss_db}")


@dataclass(frozen=True, eq=False)
class LossBreakdown:
    """Additive dB budget; fields are floats or elevation-shaped arrays."""

    atm_db: float | np.ndarray
    diff_db: float | np.ndarray
    other_db: float | np.ndarray
    total_db: float | np.ndarray


def divergence_half_angle(params: LinkBudgetParams) -> float:
    """Diffraction-limited half-angle beam divergence, 1.22 lambda / D_T."""
    return 1.22 * params.wavelength_m / params.tx_aperture_m


def atmospheric_loss_db(elevation_deg, tau_zenith: float):
    """Extinction loss through a plane-parallel atmosphere, in dB.

    The zenith column transmits ``tau_zenith``; an oblique path sees that
    slab thickened by sec(zenith angle) = 1/sin(elevation).  The slab
    model diverges at the horizon, so elevation must be positive.

    Parameters
    ----------
    elevation_deg : float or array
        Elevation above the horizon, in (0, 90].
    tau_zenith : float
        Zenith-column transmittance in (0, 1].

    Returns
    -------
    float or array
        Loss in dB; 0 for a lossless atmosphere (tau = 1).
    """
    if not 0.0 < tau_zenith <= 1.0:
        raise DomainError(f"tau_zenith must lie in (0, 1], got {tau_zenith}")
    e = np.asarray(elevation_deg, dtype=float)
    if np.any((e <= 0.0) | (e > 90.0)):
        raise DomainError(f"elevation must lie in (0, 90] degrees, got {elevation_deg}")
    loss = (-10.0 * math.log10(tau_zenith)) / np.sin(np.radians(e))
    return float(loss) if np.ndim(elevation_deg) == 0 else loss


def diffraction_loss_db(params: LinkBudgetParams, slant_range_m):
    """Geometric collection loss of a diverging beam, in dB.

    The beam waist grows from the transmit aperture at the diffraction-
    limited divergence; the loss is the receiver-to-spot diameter ratio
    in dB.  A receiver wider than the spot gives a negative value; the
    defaults never enter that regime.
    """
    r = np.asarray(slant_range_m, dtype=float)
    if np.any(r <= 0.0):
        raise DomainError(f"slant_range_m must be > 0, got {slant_range_m}")
    spot = params.tx_aperture_m + divergence_half_angle(params) * r
    loss = -20.0 * np.log10(params.rx_aperture_m / spot)
    return float(loss) if np.ndim(slant_range_m) == 0 else loss


def total_loss_db(elevation_deg, params: LinkBudgetParams, orbit: OrbitConfig) -> LossBreakdown:
    """Full downlink budget at a given elevation.

    Composes the slant range at that elevation with the extinction,
    diffraction, and lumped terms; the total is their exact sum and is
    strictly decreasing in elevation.
    """
    atm = atmospheric_loss_db(elevation_deg, params.zenith_transmittance)
    diff = diffraction_loss_db(params, slant_range(elevation_deg, orbit))
    other = params.other_loss_db
    if np.ndim(elevation_deg) != 0:
        other = np.full_like(np.asarray(elevation_deg, dtype=float), other)
    return LossBreakdown(atm_db=atm, diff_db=diff, other_db=other, total_db=atm + diff + other)


def transmissivity_from_loss_db(loss_db):
    """Convert a dB loss to channel transmissivity T in (0, 1]."""
    loss = np.asarray(loss_db, dtype=float)
    if np.any(loss < 0.0):
        raise DomainError(f"loss_db must be >= 0, got {loss_db}")
    t = 10.0 ** (-loss / 10.0)
    return float(t) if np.ndim(loss_db) == 0 else t
