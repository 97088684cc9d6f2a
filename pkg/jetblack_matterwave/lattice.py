"""Beam-lattice interaction.

A periodic lattice potential adds a second drive to the unscreened system

    Psi'' + Phi + 2 E Psi = U0 cos(kd x)
    Phi'' - Psi = Ug cos(n G x)

where G = 2 pi / a is the reciprocal lattice vector and n the harmonic.
"""

from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
import logging
import math
from typing import List, Optional, Tuple

import numpy as np

from .dispersion import characteristic_wavenumbers
from .errors import (
    DegenerateLatticeError,
    DomainError,
    IncommensurateDriveError,
    ResonantInputError
)
from .fields import FieldSolution, GridLike, as_grid
from .model import BeamParameters
from .pseudoforce import RESONANCE_TOLERANCE

LOGGER = logging.getLogger(__name__)

COMMENSURATE_TOLERANCE = 1e-8
CONDITION_LIMIT = 1e12


@dataclass(frozen=True)
class LatticeParameters:
    """A one dimensional lattice.

    Attributes:
        g (float): The reciprocal lattice vector in units of k_p.
        ug (float): The lattice potential amplitude in units of E_p.
        n_max (int): The highest harmonic examined.
    """

    g: float
    ug: float = 0.0
    n_max: int = 1

    def __post_init__(self) -> None:
        if not (math.isfinite(self.g) and self.g > 0):
            raise DomainError(f'G must be positive, got {self.g}')
        if not math.isfinite(self.ug):
            raise DomainError(f'Ug must be finite, got {self.ug}')
        if self.n_max < 1:
            raise DomainError(f'n_max must be at least 1, got {self.n_max}')

    @classmethod
    def from_constant(cls, a: float, ug: float = 0.0, n_max: int = 1) -> LatticeParameters:
        """Create the lattice from its lattice constant.

        Args:
            a (float): The lattice constant in units of 1/k_p.
            ug (float, optional): The potential amplitude. Defaults to 0.0.
            n_max (int, optional): The highest harmonic. Defaults to 1.

        Returns:
            LatticeParameters: The lattice.
        """
        if not (math.isfinite(a) and a > 0):
            raise DomainError(f'the lattice constant must be positive, got {a}')
        return cls(2 * math.pi / a, ug, n_max)

    @property
    def a(self) -> float:
        """The lattice constant 2 pi / G."""
        return 2 * math.pi / self.g


class Channel(Enum):
    """The branch a Bragg resonance couples to"""
    WAVE_LIKE = 'wave-like'
    PARTICLE_LIKE = 'particle-like'

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class BraggResonance:
    """A beam speed at which the matter wave meets the n-th lattice harmonic."""

    n: int
    channel: Channel
    gamma_res: float
    kd: float


def _check_unscreened(beam: BeamParameters) -> None:
    if beam.xi != 0:
        raise DomainError(f'the lattice system is unscreened, got xi={beam.xi}')


def _check_harmonic(n: int) -> None:
    if n < 1:
        raise DomainError(f'the harmonic index must be at least 1, got {n}')


def _particular_amplitudes(
        beam: BeamParameters,
        lat: LatticeParameters,
        n: int
) -> Tuple[Tuple[float, float, float], Tuple[float, float, float]]:
    """The (wavenumber, Phi, Psi) amplitudes of the beam and lattice terms."""
    pair = characteristic_wavenumbers(beam.energy)
    kd = beam.kd
    q = n * lat.g
    for label, drive in (('kd', kd), ('nG', q)):
        for name, k in (('k1', pair.k1), ('k2', pair.k2)):
            distance = abs(drive - k)
            if distance <= RESONANCE_TOLERANCE:
                raise ResonantInputError(f'{label}={name}', distance)

    def characteristic(s: float) -> float:
        return s * s - 2 * beam.energy * s + 1

    kd_sq, q_sq = kd * kd, q * q
    beam_phi = beam.u0 / characteristic(kd_sq)
    lattice_psi = -lat.ug / characteristic(q_sq)
    return (
        (kd, beam_phi, -kd_sq * beam_phi),
        (q, (q_sq - 2 * beam.energy) * lattice_psi, lattice_psi)
    )


def lattice_bloch_response(
        beam: BeamParameters,
        lat: LatticeParameters,
        n: int = 1,
        x_grid: Optional[GridLike] = None
) -> FieldSolution:
    """The response to the beam and the n-th lattice harmonic.

        Phi = U0 cos(kd x) / P(kd^2) - Ug (q^2 - k1^2 - k2^2) cos(q x) / P(q^2)
        Psi = -U0 kd^2 cos(kd x) / P(kd^2) - Ug cos(q x) / P(q^2)

    with q = n G and P(s) = (s - k1^2)(s - k2^2).

    Args:
        beam (BeamParameters): The unscreened beam.
        lat (LatticeParameters): The lattice.
        n (int, optional): The harmonic index. Defaults to 1.
        x_grid (Optional[GridLike], optional): The grid. Defaults to
            x in [0, 20].

    Raises:
        DomainError: If the beam is screened or n < 1.
        ResonantInputError: If kd or n G is at k1 or k2.

    Returns:
        FieldSolution: The fields with "driven" and "lattice" parts.
    """
    _check_unscreened(beam)
    _check_harmonic(n)
    x = as_grid(x_grid)
    (kd, beam_phi, beam_psi), (q, lattice_phi, lattice_psi) = _particular_amplitudes(beam, lat, n)

    cd = np.cos(kd * x)
    cq = np.cos(q * x)
    driven = (beam_phi * cd, beam_psi * cd)
    lattice = (lattice_phi * cq, lattice_psi * cq)
    return FieldSolution(
        x,
        driven[0] + lattice[0],
        driven[1] + lattice[1],
        {'driven': driven, 'lattice': lattice},
        (beam, lat, n)
    )


def _periodicity_matrix(ks: Tuple[complex, complex], a: float) -> np.ndarray:
    # Rows: jumps of Phi, Phi', Psi, Psi' over one period. Columns: cos and
    # sin modes of k1 then k2, with Psi = -k^2 Phi.
    columns = []
    for k in ks:
        c, s = np.cos(k * a) - 1, np.sin(k * a)
        k_sq = k * k
        columns.append([c, -k * s, -k_sq * c, k_sq * k * s])
        columns.append([s, k * c, -k_sq * s, -k_sq * k * c])
    return np.array(columns, dtype=complex).T


def _cosine_jumps(k: float, phi: float, psi: float, a: float) -> np.ndarray:
    c, s = math.cos(k * a) - 1, math.sin(k * a)
    return np.array([phi * c, -k * phi * s, psi * c, -k * psi * s])


def solve_lattice_bvp(
        beam: BeamParameters,
        lat: LatticeParameters,
        n: int = 1,
        x_grid: Optional[GridLike] = None
) -> FieldSolution:
    """Solve the lattice system with periodic boundary conditions.

    The homogeneous cos and sin modes of k1 and k2 are fixed so that Phi,
    Phi', Psi and Psi' take the same values at x = 0 and x = a.

    Args:
        beam (BeamParameters): The unscreened beam, with a drive commensurate
            with the lattice.
        lat (LatticeParameters): The lattice.
        n (int, optional): The harmonic index. Defaults to 1.
        x_grid (Optional[GridLike], optional): The grid. Defaults to
            x in [0, a] with 1001 points.

    Raises:
        DomainError: If the beam is screened or n < 1.
        IncommensurateDriveError: If kd a is not a multiple of 2 pi.
        DegenerateLatticeError: If the periodicity conditions are singular.
        ResonantInputError: If kd or n G is at k1 or k2.

    Returns:
        FieldSolution: The fields with "homogeneous", "driven" and "lattice"
            parts.
    """
    _check_unscreened(beam)
    _check_harmonic(n)
    a = lat.a
    cycles = beam.kd * a / (2 * math.pi)
    if abs(cycles - round(cycles)) > COMMENSURATE_TOLERANCE:
        raise IncommensurateDriveError(
            f'kd={beam.kd} makes {cycles:.6g} cycles per lattice constant'
        )

    x = as_grid(np.linspace(0.0, a, 1001) if x_grid is None else x_grid)
    particular = lattice_bloch_response(beam, lat, n, x)

    pair = characteristic_wavenumbers(beam.energy)
    matrix = _periodicity_matrix((pair.k1, pair.k2), a)
    condition = np.linalg.cond(matrix)
    if not condition < CONDITION_LIMIT:
        raise DegenerateLatticeError(
            f'the periodicity conditions are singular (condition {condition:.3e})'
        )

    (kd, beam_phi, beam_psi), (q, lattice_phi, lattice_psi) = _particular_amplitudes(beam, lat, n)
    jumps = _cosine_jumps(kd, beam_phi, beam_psi, a) + _cosine_jumps(q, lattice_phi, lattice_psi, a)
    coefficients = np.linalg.solve(matrix, -jumps)
    LOGGER.debug('lattice homogeneous coefficients %s', coefficients)

    phi_h = np.zeros_like(x, dtype=complex)
    psi_h = np.zeros_like(x, dtype=complex)
    for index, k in enumerate((pair.k1, pair.k2)):
        mode = (
            coefficients[2 * index] * np.cos(k * x)
            + coefficients[2 * index + 1] * np.sin(k * x)
        )
        phi_h += mode
        psi_h -= k * k * mode

    parts = dict(particular.parts)
    parts['homogeneous'] = (phi_h.real, psi_h.real)
    return FieldSolution(
        x,
        particular.phi + phi_h.real,
        particular.psi + psi_h.real,
        parts,
        (beam, lat, n)
    )


def bragg_resonant_speeds(
        mu: float,
        xi: float,
        lat: LatticeParameters
) -> List[BraggResonance]:
    """The beam speeds in Bragg resonance with the lattice harmonics.

    With K = n^2 G^2 + xi^2 the beam speed

        gamma = sqrt(1/K + K + mu)

    puts the de Broglie wavenumber of harmonic n on the wave-like branch when
    K < 1 and on the particle-like branch otherwise.

    Args:
        mu (float): The normalized chemical potential.
        xi (float): The screening parameter.
        lat (LatticeParameters): The lattice.

    Raises:
        DomainError: If mu or xi is negative.

    Returns:
        List[BraggResonance]: The resonances for n = 1 to n_max.
    """
    if mu < 0 or xi < 0:
        raise DomainError(f'mu and xi must be non-negative, got mu={mu}, xi={xi}')
    gamma_low = math.sqrt(mu + 2)
    resonances = []
    for n in range(1, lat.n_max + 1):
        q = n * lat.g
        shifted = q * q + xi * xi
        gamma = math.sqrt(1 / shifted + shifted + mu)
        # 1/K + K >= 2 keeps gamma at or above sqrt(mu + 2).
        assert gamma >= gamma_low - RESONANCE_TOLERANCE
        channel = Channel.WAVE_LIKE if shifted < 1 else Channel.PARTICLE_LIKE
        resonances.append(BraggResonance(n, channel, gamma, q))
    return resonances
