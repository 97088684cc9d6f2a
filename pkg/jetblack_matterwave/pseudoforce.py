"""Closed form solutions of the driven pseudoforce systems.

The coupled system for the fields Phi and Psi, driven by the beam, is

    Psi'' + 2 xi Psi' + Phi + 2 E Psi = U0 cos(kd x)
    Phi'' + 2 xi Phi' - Psi = 0

with E = (gamma^2 - mu)/2 and kd = gamma. Eliminating Psi gives the fourth
order equation whose characteristic roots are the wavenumbers k1 and k2 of
k^4 - 2 E k^2 + 1 = 0.

The solutions are evaluated in complex arithmetic and depend on the k only
through k^2, so the choice of square root branch does not matter.
"""

from __future__ import annotations
from dataclasses import dataclass
import logging
import math
from typing import List, Optional, Tuple

import numpy as np
from numpy.polynomial import Polynomial

from .dispersion import characteristic_wavenumbers, principal_sqrt
from .errors import (
    DegenerateEigenvalueError,
    DomainError,
    NoDriveError,
    ResonantInputError
)
from .fields import BoundaryConditions, FieldSolution, GridLike, as_grid
from .model import BeamParameters

LOGGER = logging.getLogger(__name__)

RESONANCE_TOLERANCE = 1e-8
DEGENERACY_TOLERANCE = 1e-12
MINIMUM_DRIVE = 1e-6


@dataclass(frozen=True)
class DampedCoefficients:
    """The shifted wavenumbers and resonance denominators of the damped system.

    Attributes:
        beta1 (complex): sqrt(k1^2 - xi^2).
        beta2 (complex): sqrt(k2^2 - xi^2).
        eta1 (float): |k1^2 - kd^2 + 2 i kd xi|^2, which is
            (kd^2 - k1^2)^2 + 4 kd^2 xi^2 for real k1.
        eta2 (float): The same for k2.
    """

    beta1: complex
    beta2: complex
    eta1: float
    eta2: float


@dataclass(frozen=True)
class SteadyStateResponse:
    """The persistent oscillations amp cos(kd x - theta) of Phi and Psi."""

    kd: float
    amp_phi: float
    amp_psi: float
    theta_phi: float
    theta_psi: float

    def evaluate(self, x: GridLike) -> Tuple[np.ndarray, np.ndarray]:
        """Sample the oscillations.

        Args:
            x (GridLike): The positions.

        Returns:
            Tuple[np.ndarray, np.ndarray]: Phi and Psi.
        """
        x = np.asarray(x, dtype=float)
        return (
            self.amp_phi * np.cos(self.kd * x - self.theta_phi),
            self.amp_psi * np.cos(self.kd * x - self.theta_psi)
        )


def _wrap_phase(angle: float) -> float:
    """Wrap an angle into (-pi, pi]."""
    wrapped = math.remainder(angle, 2 * math.pi)
    return math.pi if wrapped <= -math.pi else wrapped


def _squared_wavenumbers(energy: float) -> Tuple[complex, complex, complex]:
    pair = characteristic_wavenumbers(energy)
    if abs(pair.alpha) <= DEGENERACY_TOLERANCE:
        raise DegenerateEigenvalueError(
            f'the characteristic wavenumbers coincide at E={energy}'
        )
    return pair.k1 * pair.k1, pair.k2 * pair.k2, pair.alpha


def _check_resonance(kd: float, k1: complex, k2: complex) -> None:
    for condition, k in (('kd=k1', k1), ('kd=k2', k2)):
        distance = abs(kd - k)
        if distance <= RESONANCE_TOLERANCE:
            raise ResonantInputError(condition, distance)


def _split_modes(
        first: complex,
        second: complex,
        k1_sq: complex,
        k2_sq: complex,
        alpha: complex
) -> Tuple[complex, complex]:
    # Solve m1 + m2 = first, -k1^2 m1 - k2^2 m2 = second.
    return (
        (k2_sq * first + second) / (2 * alpha),
        -(k1_sq * first + second) / (2 * alpha)
    )


def scalar_pseudoresonance(
        k: float,
        k0: float,
        kd: float,
        x_grid: GridLike
) -> np.ndarray:
    """The driven scalar oscillation starting from rest.

    Solves Psi'' + k^2 Psi = k0^2 cos(kd x) with Psi(0) = Psi'(0) = 0, giving
    k0^2 [cos(k x) - cos(kd x)] / (kd^2 - k^2), or k0^2 x sin(k x)/(2 k) when kd
    is within the resonance tolerance of k.

    Args:
        k (float): The natural wavenumber, > 0.
        k0 (float): The coupling wavenumber.
        kd (float): The drive wavenumber.
        x_grid (GridLike): The positions.

    Raises:
        DomainError: If k is not positive.

    Returns:
        np.ndarray: The samples of Psi.
    """
    if not k > 0:
        raise DomainError(f'k must be positive, got {k}')
    x = as_grid(x_grid)
    if abs(kd - k) <= RESONANCE_TOLERANCE:
        LOGGER.debug('scalar pseudoresonance at kd=%g uses the secular form', kd)
        return k0 * k0 * x * np.sin(k * x) / (2 * k)
    return k0 * k0 * (np.cos(k * x) - np.cos(kd * x)) / (kd * kd - k * k)


def solve_undamped(
        beam: BeamParameters,
        bc: Optional[BoundaryConditions] = None,
        x_grid: Optional[GridLike] = None,
        kd: Optional[float] = None
) -> FieldSolution:
    """Solve the undamped system (xi = 0) from Phi(0) = Phi0, Psi(0) = Psi0.

    The solution is

        Phi = a1 cos(k1 x) + a2 cos(k2 x) + C cos(kd x)
        Psi = -k1^2 a1 cos(k1 x) - k2^2 a2 cos(k2 x) - kd^2 C cos(kd x)

    with C = U0 / [(kd^2 - k1^2)(kd^2 - k2^2)].

    Args:
        beam (BeamParameters): The beam. Its screening is ignored.
        bc (Optional[BoundaryConditions], optional): The boundary conditions,
            which must have zero derivatives. Defaults to all zero.
        x_grid (Optional[GridLike], optional): The grid. Defaults to
            x in [0, 20].
        kd (Optional[float], optional): The drive wavenumber. Defaults to the
            de Broglie wavenumber of the beam.

    Raises:
        DomainError: If the boundary conditions have non-zero derivatives.
        DegenerateEigenvalueError: If k1 and k2 coincide.
        ResonantInputError: If kd is at k1 or k2.

    Returns:
        FieldSolution: The fields with "homogeneous" and "driven" parts.
    """
    bc = bc or BoundaryConditions()
    if bc.has_derivatives:
        raise DomainError('the undamped solution starts with zero derivatives')
    kd = beam.kd if kd is None else kd
    x = as_grid(x_grid)

    k1_sq, k2_sq, alpha = _squared_wavenumbers(beam.energy)
    _check_resonance(kd, principal_sqrt(k1_sq), principal_sqrt(k2_sq))

    kd_sq = kd * kd
    amplitude = beam.u0 / ((kd_sq - k1_sq) * (kd_sq - k2_sq))
    a1, a2 = _split_modes(
        bc.phi0 - amplitude,
        bc.psi0 + kd_sq * amplitude,
        k1_sq, k2_sq, alpha
    )

    c1 = np.cos(principal_sqrt(k1_sq) * x)
    c2 = np.cos(principal_sqrt(k2_sq) * x)
    cd = np.cos(kd * x)

    phi_h = (a1 * c1 + a2 * c2).real
    psi_h = (-k1_sq * a1 * c1 - k2_sq * a2 * c2).real
    phi_d = amplitude.real * cd
    psi_d = -kd_sq * amplitude.real * cd

    return FieldSolution(
        x,
        phi_h + phi_d,
        psi_h + psi_d,
        {'homogeneous': (phi_h, psi_h), 'driven': (phi_d, psi_d)},
        beam
    )


def damped_coefficients(
        beam: BeamParameters,
        kd: Optional[float] = None
) -> DampedCoefficients:
    """The shifted wavenumbers and resonance denominators.

    Args:
        beam (BeamParameters): The beam.
        kd (Optional[float], optional): The drive wavenumber. Defaults to the
            de Broglie wavenumber of the beam.

    Returns:
        DampedCoefficients: The coefficients.
    """
    kd = beam.kd if kd is None else kd
    pair = characteristic_wavenumbers(beam.energy)
    k1_sq, k2_sq = pair.k1 * pair.k1, pair.k2 * pair.k2
    sigma = complex(-kd * kd, 2 * beam.xi * kd)
    xi_sq = beam.xi * beam.xi
    return DampedCoefficients(
        beta1=principal_sqrt(k1_sq - xi_sq),
        beta2=principal_sqrt(k2_sq - xi_sq),
        eta1=abs(sigma + k1_sq) ** 2,
        eta2=abs(sigma + k2_sq) ** 2
    )


def _drive_response(beam: BeamParameters, kd: float) -> Tuple[complex, complex]:
    """The complex amplitudes C and sigma C of the steady oscillation."""
    sigma = complex(-kd * kd, 2 * beam.xi * kd)
    denominator = sigma * sigma + 2 * beam.energy * sigma + 1
    amplitude = beam.u0 / denominator
    return amplitude, sigma * amplitude


def solve_damped(
        beam: BeamParameters,
        x_grid: Optional[GridLike] = None,
        bc: Optional[BoundaryConditions] = None,
        kd: Optional[float] = None
) -> FieldSolution:
    """Solve the screened system.

    The fields are a steady oscillation Re[C exp(i kd x)] plus transient modes

        exp(-xi x) [a_j cos(beta_j x) + b_j sin(beta_j x)/beta_j]

    with beta_j = sqrt(k_j^2 - xi^2), complex when xi exceeds k_j. Without
    screening the undamped solution is returned.

    Args:
        beam (BeamParameters): The beam.
        x_grid (Optional[GridLike], optional): The grid. Defaults to
            x in [0, 20].
        bc (Optional[BoundaryConditions], optional): The boundary conditions.
            Defaults to all zero.
        kd (Optional[float], optional): The drive wavenumber. Defaults to the
            de Broglie wavenumber of the beam.

    Raises:
        DegenerateEigenvalueError: If k1 and k2 coincide.

    Returns:
        FieldSolution: The fields with "transient" and "steady" parts.
    """
    bc = bc or BoundaryConditions()
    if beam.xi == 0:
        return solve_undamped(beam, bc, x_grid, kd)
    kd = beam.kd if kd is None else kd
    x = as_grid(x_grid)
    xi = beam.xi

    k1_sq, k2_sq, alpha = _squared_wavenumbers(beam.energy)
    phi_amplitude, psi_amplitude = _drive_response(beam, kd)

    a1, a2 = _split_modes(
        bc.phi0 - phi_amplitude.real,
        bc.psi0 - psi_amplitude.real,
        k1_sq, k2_sq, alpha
    )
    d1, d2 = _split_modes(
        bc.dphi0 + kd * phi_amplitude.imag,
        bc.dpsi0 + kd * psi_amplitude.imag,
        k1_sq, k2_sq, alpha
    )
    b1, b2 = d1 + xi * a1, d2 + xi * a2

    envelope = np.exp(-xi * x)

    def mode(a: complex, b: complex, beta: complex) -> np.ndarray:
        return envelope * (a * np.cos(beta * x) + b * x * np.sinc(beta * x / np.pi))

    beta1 = principal_sqrt(k1_sq - xi * xi)
    beta2 = principal_sqrt(k2_sq - xi * xi)
    mode1 = mode(a1, b1, beta1)
    mode2 = mode(a2, b2, beta2)

    phi_t = (mode1 + mode2).real
    psi_t = (-k1_sq * mode1 - k2_sq * mode2).real

    drive = np.exp(1j * kd * x)
    phi_s = (phi_amplitude * drive).real
    psi_s = (psi_amplitude * drive).real

    return FieldSolution(
        x,
        phi_t + phi_s,
        psi_t + psi_s,
        {'transient': (phi_t, psi_t), 'steady': (phi_s, psi_s)},
        beam
    )


def steady_state(
        beam: BeamParameters,
        kd: Optional[float] = None
) -> SteadyStateResponse:
    """The persistent oscillation left once the transients have decayed.

    The amplitude of Phi is U0 / sqrt(eta1 eta2) and its phase is the argument
    of the resonance denominator. Psi leads by the argument of
    -kd^2 + 2 i xi kd and is larger by its modulus.

    Args:
        beam (BeamParameters): The beam, with xi > 0.
        kd (Optional[float], optional): The drive wavenumber. Defaults to the
            de Broglie wavenumber of the beam.

    Raises:
        DomainError: If the beam is unscreened.
        NoDriveError: If the drive wavenumber is zero.

    Returns:
        SteadyStateResponse: The amplitudes and phases.
    """
    kd = beam.kd if kd is None else kd
    if not beam.xi > 0:
        raise DomainError('the steady state needs a screened beam (xi > 0)')
    if kd == 0:
        raise NoDriveError('there is no steady oscillation without a drive (kd = 0)')

    phi_amplitude, psi_amplitude = _drive_response(beam, kd)
    return SteadyStateResponse(
        kd=kd,
        amp_phi=abs(phi_amplitude),
        amp_psi=abs(psi_amplitude),
        theta_phi=_wrap_phase(-np.angle(phi_amplitude)) if phi_amplitude else 0.0,
        theta_psi=_wrap_phase(-np.angle(psi_amplitude)) if psi_amplitude else 0.0
    )


def predicted_resonances(beam: BeamParameters) -> List[float]:
    """The drive wavenumbers at which the steady amplitude peaks.

    At the fixed eigenvalue of the beam the squared resonance denominator
    |D(kd)|^2 = eta1 eta2 is a polynomial in kd. Its interior minima are the
    amplitude peaks; they approach k1 and k2 as xi tends to zero and merge or
    vanish as the screening grows.

    Args:
        beam (BeamParameters): The beam.

    Returns:
        List[float]: The peak wavenumbers in increasing order.
    """
    xi = beam.xi
    sigma = Polynomial([0.0, 2j * xi, -1.0])
    denominator = sigma * sigma + 2 * beam.energy * sigma + 1
    conjugate = Polynomial(np.conj(denominator.coef))
    squared = Polynomial((denominator * conjugate).coef.real)

    slope = squared.deriv()
    curvature = slope.deriv()
    peaks = []
    for root in slope.roots():
        # The amplitude is even in kd, so kd = 0 is always stationary.
        if abs(root.imag) > 1e-7 * max(1.0, abs(root)) or root.real <= MINIMUM_DRIVE:
            continue
        kd = float(root.real)
        if curvature(kd) > 0:
            peaks.append(kd)
    LOGGER.debug('predicted resonances for %s: %s', beam, peaks)
    return sorted(peaks)
