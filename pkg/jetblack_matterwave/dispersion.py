"""Plasmon dispersion, de Broglie wavenumbers and instability regimes.

The screened dispersion relates the plasmon eigenvalue E to a wavenumber k by

    E = [1 + (k^2 + xi^2)^2] / [2 (k^2 + xi^2)]

so for a given E there are two characteristic wavenumbers, the wave-like k1
(minus sign) and the particle-like k2 (plus sign)

    k_{1,2} = sqrt(E - xi^2 -/+ alpha),    alpha = sqrt(E^2 - 1).

For a beam E = (gamma^2 - mu)/2. All square roots take the principal branch.
"""

from __future__ import annotations
import cmath
from dataclasses import dataclass
from enum import Enum
import logging
import math
from typing import List, Optional, Tuple

import numpy as np

from .errors import (
    DomainError,
    SingularInputError,
    UndefinedQuantityError,
    UnsupportedRegimeError
)
from .model import BeamParameters

LOGGER = logging.getLogger(__name__)

BOUNDARY_TOLERANCE = 1e-12


class Regime(Enum):
    """Matter wave instability regimes"""
    SUB_CHEMICAL = 'SubChemical'
    OSCILLATORY_CONJUGATE = 'OscillatoryConjugate'
    BOTH_REAL = 'BothReal'
    WAVE_EVANESCENT = 'WaveEvanescent'
    UNCLASSIFIED = 'Unclassified'

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class RegimeClass:
    """A regime tag with the critical speeds that bound the stable window.

    Attributes:
        tag (Regime): The regime.
        gamma_low (Optional[float]): The lower critical speed sqrt(mu + 2).
        gamma_high (Optional[float]): The upper critical speed
            sqrt(mu + xi^2 + 1/xi^2), infinite when xi is zero.
        on_boundary (bool): True when the speed sits on a regime boundary, in
            which case the tag is the higher regime.
    """

    tag: Regime
    gamma_low: Optional[float] = None
    gamma_high: Optional[float] = None
    on_boundary: bool = False


UNCLASSIFIED = RegimeClass(Regime.UNCLASSIFIED)


@dataclass(frozen=True)
class WavenumberPair:
    """The wave-like and particle-like wavenumbers."""

    k1: complex
    k2: complex
    alpha: complex
    regime: RegimeClass

    @property
    def product(self) -> complex:
        """k1 k2, which is one for the unscreened branches when E >= 1."""
        return self.k1 * self.k2

    @property
    def is_real(self) -> bool:
        """True when both wavenumbers are real."""
        return self.k1.imag == 0 and self.k2.imag == 0


@dataclass(frozen=True)
class StabilityWindow:
    """The beam speeds for which both wavenumbers are real."""

    gamma_low: float
    gamma_high: float
    empty: bool

    @property
    def width(self) -> float:
        """The length of the window."""
        return 0.0 if self.empty else self.gamma_high - self.gamma_low

    def __contains__(self, gamma: float) -> bool:
        return not self.empty and self.gamma_low < gamma < self.gamma_high


@dataclass(frozen=True)
class DispersionCurve:
    """A sampled dispersion curve.

    Attributes:
        k (np.ndarray): Strictly increasing wavenumbers in units of k_p.
        energy (np.ndarray): The eigenvalue at each wavenumber.
        xi (float): The screening parameter.
    """

    k: np.ndarray
    energy: np.ndarray
    xi: float

    @property
    def samples(self) -> List[Tuple[float, float]]:
        """The (k, E) samples."""
        return list(zip(self.k.tolist(), self.energy.tolist()))

    def minimum(self) -> Tuple[float, float]:
        """The sample with the lowest energy.

        Returns:
            Tuple[float, float]: The (k, E) pair.
        """
        index = int(np.argmin(self.energy))
        return float(self.k[index]), float(self.energy[index])


def principal_sqrt(z: complex) -> complex:
    """The principal complex square root, treating -0.0 imaginary parts as +0.0."""
    z = complex(z)
    return cmath.sqrt(complex(z.real, z.imag + 0.0))


def plasmon_energy(k: float, xi: float = 0.0) -> float:
    """The plasmon eigenvalue of a wavenumber.

    Args:
        k (float): The wavenumber in units of k_p.
        xi (float, optional): The screening parameter. Defaults to 0.0.

    Raises:
        SingularInputError: If k and xi are both zero.

    Returns:
        float: E = [1 + (k^2 + xi^2)^2] / [2 (k^2 + xi^2)] >= 1.
    """
    s = k * k + xi * xi
    if s == 0:
        raise SingularInputError('the dispersion is singular at k = xi = 0')
    return (1 + s * s) / (2 * s)


def energy_gap(xi: float) -> Tuple[float, float]:
    """The location and value of the dispersion minimum.

    Args:
        xi (float): The screening parameter.

    Raises:
        DomainError: If xi is negative.

    Returns:
        Tuple[float, float]: The wavenumber and eigenvalue at the minimum.
    """
    if not xi >= 0:
        raise DomainError(f'xi must be >= 0, got {xi}')
    if xi < 1:
        return math.sqrt(1 - xi * xi), 1.0
    return 0.0, plasmon_energy(0.0, xi)


def _check_classifiable(gamma: float, mu: float, xi: float) -> None:
    if xi >= 1:
        raise UnsupportedRegimeError(
            f'regimes are only classified for xi < 1, got xi={xi}'
        )
    if xi < 0 or gamma < 0 or mu < 0:
        raise DomainError(
            f'gamma, mu and xi must be non-negative, got gamma={gamma}, mu={mu}, xi={xi}'
        )


def critical_speeds(mu: float, xi: float) -> Tuple[float, float]:
    """The speeds bounding the window in which both wavenumbers are real.

    For xi >= 1 the window is empty and both speeds equal sqrt(mu + 2).

    Args:
        mu (float): The normalized chemical potential.
        xi (float): The screening parameter.

    Raises:
        DomainError: If mu or xi is negative.

    Returns:
        Tuple[float, float]: The lower and upper critical speeds.
    """
    if mu < 0 or xi < 0:
        raise DomainError(f'mu and xi must be non-negative, got mu={mu}, xi={xi}')
    gamma_low = math.sqrt(mu + 2)
    if xi >= 1:
        LOGGER.info('the stability window is empty for xi=%g', xi)
        return gamma_low, gamma_low
    if xi == 0:
        return gamma_low, math.inf
    return gamma_low, math.sqrt(mu + xi * xi + 1 / (xi * xi))


def stability_window(mu: float, xi: float) -> StabilityWindow:
    """The stability window with its emptiness flag.

    Args:
        mu (float): The normalized chemical potential.
        xi (float): The screening parameter.

    Returns:
        StabilityWindow: The window.
    """
    gamma_low, gamma_high = critical_speeds(mu, xi)
    return StabilityWindow(gamma_low, gamma_high, xi >= 1)


def classify_regime(gamma: float, mu: float, xi: float) -> RegimeClass:
    """Classify a beam speed into its instability regime.

    Args:
        gamma (float): The beam speed.
        mu (float): The normalized chemical potential.
        xi (float): The screening parameter, 0 <= xi < 1.

    Raises:
        UnsupportedRegimeError: If xi >= 1.
        DomainError: If any argument is negative.

    Returns:
        RegimeClass: The regime.
    """
    _check_classifiable(gamma, mu, xi)
    gamma_low, gamma_high = critical_speeds(mu, xi)
    boundaries = (
        (gamma_high, Regime.WAVE_EVANESCENT),
        (gamma_low, Regime.BOTH_REAL),
        (math.sqrt(mu), Regime.OSCILLATORY_CONJUGATE),
    )
    for boundary, tag in boundaries:
        if gamma >= boundary - BOUNDARY_TOLERANCE:
            return RegimeClass(
                tag,
                gamma_low,
                gamma_high,
                abs(gamma - boundary) <= BOUNDARY_TOLERANCE
            )
    return RegimeClass(Regime.SUB_CHEMICAL, gamma_low, gamma_high)


def _squared_roots(energy: float, xi: float) -> Tuple[complex, complex, complex]:
    # k1^2 k2^2 = 1 without screening, so the root that cancels is taken as
    # the reciprocal of the other.
    alpha = principal_sqrt(energy * energy - 1)
    if energy >= 1:
        upper = energy + alpha.real
        return complex(1 / upper - xi * xi), complex(upper - xi * xi), alpha
    if energy <= -1:
        lower = energy - alpha.real
        return complex(lower - xi * xi), complex(1 / lower - xi * xi), alpha
    shifted = energy - xi * xi
    return shifted - alpha, shifted + alpha, alpha


def characteristic_wavenumbers(energy: float) -> WavenumberPair:
    """The unscreened wavenumbers of a plasmon eigenvalue.

    Args:
        energy (float): The eigenvalue E.

    Returns:
        WavenumberPair: k1 = sqrt(E - alpha), k2 = sqrt(E + alpha) with
            alpha = sqrt(E^2 - 1).
    """
    k1_squared, k2_squared, alpha = _squared_roots(energy, 0.0)
    k1 = principal_sqrt(k1_squared)
    k2 = principal_sqrt(k2_squared)
    if energy >= 0:
        regime = classify_regime(math.sqrt(2 * energy), 0.0, 0.0)
    else:
        regime = RegimeClass(Regime.SUB_CHEMICAL, math.sqrt(2), math.inf)
    return WavenumberPair(k1, k2, alpha, regime)


def _screened_wavenumbers(energy: float, xi: float) -> Tuple[complex, complex, complex]:
    k1_squared, k2_squared, alpha = _squared_roots(energy, xi)
    return principal_sqrt(k1_squared), principal_sqrt(k2_squared), alpha


def debroglie_wavenumbers(beam: BeamParameters) -> WavenumberPair:
    """The generalized de Broglie wavenumbers of a beam.

    Args:
        beam (BeamParameters): The beam.

    Returns:
        WavenumberPair: The screened wavenumbers. The regime is unclassified
            when xi >= 1 or mu < 0.
    """
    k1, k2, alpha = _screened_wavenumbers(beam.energy, beam.xi)
    if beam.xi >= 1 or beam.mu < 0:
        regime = UNCLASSIFIED
    else:
        regime = classify_regime(beam.gamma, beam.mu, beam.xi)
    return WavenumberPair(k1, k2, alpha, regime)


def _stable_half_angle(shifted: float, spread: float) -> Tuple[float, float]:
    # Components (a, b) of sqrt(shifted + i spread), spread >= 0, avoiding
    # cancellation in whichever of r +/- shifted is small.
    radius = math.hypot(shifted, spread)
    if shifted >= 0:
        real = math.sqrt((radius + shifted) / 2)
        imag = spread / (2 * real) if real > 0 else 0.0
    else:
        imag = math.sqrt((radius - shifted) / 2)
        real = spread / (2 * imag)
    return real, imag


def regime_components(gamma: float, mu: float, xi: float) -> Tuple[float, float, float, float]:
    """The real and imaginary parts of k1 and k2 from the regime closed forms.

    With E = (gamma^2 - mu)/2 and D = E - xi^2:

    * |E| < 1: k1 = kr - i ki and k2 = kr + i ki, the half-angle roots of
      D +/- i sqrt(1 - E^2).
    * E >= 1 and D >= alpha: both real, sqrt(D -/+ alpha).
    * E >= 1 and D < alpha: k1 = i sqrt(alpha - D), k2 = sqrt(D + alpha).
    * E <= -1: both imaginary, i sqrt(alpha - D) and i sqrt(-D - alpha).

    Where E - alpha or E + alpha cancels it is replaced by 1/(E + alpha) or
    1/(E - alpha).

    Args:
        gamma (float): The beam speed.
        mu (float): The normalized chemical potential.
        xi (float): The screening parameter, 0 <= xi < 1.

    Raises:
        UnsupportedRegimeError: If xi >= 1.
        DomainError: If any argument is negative.

    Returns:
        Tuple[float, float, float, float]: (Re k1, Im k1, Re k2, Im k2).
    """
    _check_classifiable(gamma, mu, xi)
    energy = (gamma * gamma - mu) / 2
    shifted = energy - xi * xi
    e2 = energy * energy

    if e2 < 1:
        real, imag = _stable_half_angle(shifted, math.sqrt(1 - e2))
        return real, -imag, real, imag

    k1_squared, k2_squared, _ = _squared_roots(energy, xi)
    if energy <= -1:
        return 0.0, math.sqrt(-k1_squared.real), 0.0, math.sqrt(-k2_squared.real)
    if k1_squared.real >= 0:
        return math.sqrt(k1_squared.real), 0.0, math.sqrt(k2_squared.real), 0.0
    return 0.0, math.sqrt(-k1_squared.real), math.sqrt(k2_squared.real), 0.0


def debroglie_coefficients(beam: BeamParameters) -> Tuple[complex, complex]:
    """The wave-like and particle-like de Broglie coefficients k/gamma.

    Args:
        beam (BeamParameters): The beam.

    Raises:
        UndefinedQuantityError: If the beam is at rest.

    Returns:
        Tuple[complex, complex]: (chi1, chi2), tending to (0, 1) in the
            classical dilute limit.
    """
    if beam.gamma == 0:
        raise UndefinedQuantityError('de Broglie coefficients are undefined at gamma = 0')
    pair = debroglie_wavenumbers(beam)
    return pair.k1 / beam.gamma, pair.k2 / beam.gamma


def relative_difference(beam: BeamParameters) -> float:
    """The relative difference 1 - k2/gamma of the particle-like wavenumber.

    Args:
        beam (BeamParameters): The beam.

    Raises:
        UndefinedQuantityError: If k2 is not real or the beam is at rest.

    Returns:
        float: The relative difference, tending to zero as gamma grows.
    """
    if beam.gamma == 0:
        raise UndefinedQuantityError('the relative difference is undefined at gamma = 0')
    k2 = debroglie_wavenumbers(beam).k2
    if k2.imag != 0 or k2.real <= 0:
        raise UndefinedQuantityError(
            f'the relative difference needs a real k2, got {k2}'
        )
    return 1 - k2.real / beam.gamma


def sample_dispersion(
        xi: float,
        k_min: float,
        k_max: float,
        n_points: int
) -> DispersionCurve:
    """Sample the dispersion uniformly in k.

    Args:
        xi (float): The screening parameter.
        k_min (float): The first wavenumber, >= 0.
        k_max (float): The last wavenumber, > k_min.
        n_points (int): The number of samples, >= 2.

    Raises:
        DomainError: If the range or count is invalid.
        SingularInputError: If the range includes k = 0 with xi = 0.

    Returns:
        DispersionCurve: The curve.
    """
    if not (0 <= k_min < k_max and math.isfinite(k_max)):
        raise DomainError(f'invalid range [{k_min}, {k_max}]')
    if n_points < 2:
        raise DomainError(f'at least 2 points are needed, got {n_points}')
    if xi < 0:
        raise DomainError(f'xi must be >= 0, got {xi}')
    if k_min == 0 and xi == 0:
        raise SingularInputError('the dispersion is singular at k = xi = 0')

    k = np.linspace(k_min, k_max, n_points)
    s = k * k + xi * xi
    return DispersionCurve(k, (1 + s * s) / (2 * s), xi)
