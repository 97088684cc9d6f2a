"""Numerical oracles for the pseudoforce systems.

The systems are integrated in the first order form (Phi, Phi', Psi, Psi') with
a classical fixed step fourth order Runge-Kutta scheme:

    Phi'' = -2 xi Phi' + Psi + Ug cos(g x)
    Psi'' = -2 xi Psi' - Phi - 2 E Psi + U0 cos(kd x)

Many parameter sets are integrated together, one column of the state per
system. Each integration is repeated with half the step, and the solution is
only accepted when the two agree.
"""

from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import AccuracyError, DomainError
from .fields import BoundaryConditions, FieldSolution
from .model import BeamParameters

LOGGER = logging.getLogger(__name__)

DEFAULT_STEP = 1e-3
MAX_STEP = 1e-2
MAX_STEPS = 1e8
RICHARDSON_TOLERANCE = 1e-8
RK4 = 'rk4'


class SystemKind(Enum):
    """The pseudoforce systems"""
    UNDAMPED = 'undamped'
    DAMPED = 'damped'
    LATTICE = 'lattice'

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SystemSpec:
    """The coefficients of one pseudoforce system.

    Attributes:
        kind (SystemKind): The system.
        energy (float): The eigenvalue E.
        xi (float): The screening parameter.
        u0 (float): The beam drive amplitude.
        kd (float): The beam drive wavenumber.
        ug (float): The lattice drive amplitude.
        g (float): The lattice drive wavenumber.
    """

    kind: SystemKind
    energy: float
    xi: float = 0.0
    u0: float = 0.0
    kd: float = 0.0
    ug: float = 0.0
    g: float = 0.0

    def __post_init__(self) -> None:
        values = (self.energy, self.xi, self.u0, self.kd, self.ug, self.g)
        if not all(math.isfinite(value) for value in values):
            raise DomainError(f'the {self.kind} system needs finite coefficients')
        if self.xi < 0:
            raise DomainError(f'xi must be >= 0, got {self.xi}')
        if self.kind != SystemKind.DAMPED and self.xi != 0:
            raise DomainError(f'the {self.kind} system is unscreened')
        if self.kind != SystemKind.LATTICE and self.ug != 0:
            raise DomainError(f'the {self.kind} system has no lattice drive')

    @classmethod
    def from_beam(cls, beam: BeamParameters, kd: Optional[float] = None) -> SystemSpec:
        """The damped system of a beam, or the undamped one when xi is zero.

        Args:
            beam (BeamParameters): The beam.
            kd (Optional[float], optional): The drive wavenumber. Defaults to
                the de Broglie wavenumber of the beam.

        Returns:
            SystemSpec: The system.
        """
        return cls(
            SystemKind.DAMPED if beam.xi > 0 else SystemKind.UNDAMPED,
            beam.energy,
            xi=beam.xi,
            u0=beam.u0,
            kd=beam.kd if kd is None else kd
        )

    @classmethod
    def from_lattice(cls, beam: BeamParameters, g: float, ug: float, n: int = 1) -> SystemSpec:
        """The lattice system driven by the n-th harmonic of a lattice.

        Args:
            beam (BeamParameters): The unscreened beam.
            g (float): The reciprocal lattice vector.
            ug (float): The lattice potential amplitude.
            n (int, optional): The harmonic index. Defaults to 1.

        Returns:
            SystemSpec: The system.
        """
        return cls(
            SystemKind.LATTICE,
            beam.energy,
            xi=beam.xi,
            u0=beam.u0,
            kd=beam.kd,
            ug=ug,
            g=n * g
        )


@dataclass(frozen=True)
class IntegratorConfig:
    """The fixed step integrator settings."""

    step: float = DEFAULT_STEP
    x_end: float = 20.0
    order: str = RK4
    check_accuracy: bool = True

    def __post_init__(self) -> None:
        if self.order != RK4:
            raise DomainError(f'only the {RK4} scheme is available, got {self.order}')
        if not 0 < self.step <= MAX_STEP:
            raise DomainError(f'the step must be in (0, {MAX_STEP}], got {self.step}')
        if not (math.isfinite(self.x_end) and self.x_end > 0):
            raise DomainError(f'x_end must be positive, got {self.x_end}')
        if self.x_end / self.step > MAX_STEPS:
            raise DomainError('too many steps')

    @property
    def n_steps(self) -> int:
        """The number of steps, rounded so that they end exactly at x_end."""
        return max(1, int(round(self.x_end / self.step)))


@dataclass(frozen=True)
class ResonancePeak:
    """A local maximum of the steady amplitude."""

    kd: float
    amplitude: float


class _Coefficients:
    """The coefficients of a batch of systems as column vectors."""

    def __init__(self, specs: Sequence[SystemSpec]) -> None:
        def column(name: str) -> np.ndarray:
            return np.array([getattr(spec, name) for spec in specs], dtype=float)

        self.energy = column('energy')
        self.xi = column('xi')
        self.u0 = column('u0')
        self.kd = column('kd')
        self.ug = column('ug')
        self.g = column('g')

    def derivative(self, x: float, y: np.ndarray) -> np.ndarray:
        phi, dphi, psi, dpsi = y
        return np.array([
            dphi,
            -2 * self.xi * dphi + psi + self.ug * np.cos(self.g * x),
            dpsi,
            -2 * self.xi * dpsi - phi - 2 * self.energy * psi + self.u0 * np.cos(self.kd * x)
        ])


def _runge_kutta(
        coefficients: _Coefficients,
        state: np.ndarray,
        x_end: float,
        n_steps: int,
        stride: int
) -> Tuple[np.ndarray, np.ndarray]:
    """Integrate, recording Phi and Psi every stride steps."""
    h = x_end / n_steps
    samples = n_steps // stride + 1
    phi = np.empty((samples, state.shape[1]))
    psi = np.empty((samples, state.shape[1]))
    phi[0], psi[0] = state[0], state[2]
    y = state.copy()
    f = coefficients.derivative
    for step in range(n_steps):
        x = step * h
        k1 = f(x, y)
        k2 = f(x + h / 2, y + h / 2 * k1)
        k3 = f(x + h / 2, y + h / 2 * k2)
        k4 = f(x + h, y + h * k3)
        y = y + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        if (step + 1) % stride == 0:
            index = (step + 1) // stride
            phi[index], psi[index] = y[0], y[2]
    return phi, psi


def integrate_many(
        specs: Sequence[SystemSpec],
        bcs: Sequence[BoundaryConditions],
        cfg: Optional[IntegratorConfig] = None
) -> List[FieldSolution]:
    """Integrate a batch of systems together.

    Each system is integrated with the configured step and with half of it.
    The half step values are returned on the full step grid.

    Args:
        specs (Sequence[SystemSpec]): The systems.
        bcs (Sequence[BoundaryConditions]): The boundary conditions, one per
            system.
        cfg (Optional[IntegratorConfig], optional): The integrator settings.
            Defaults to a step of 1e-3 up to x = 20.

    Raises:
        DomainError: If the number of systems and boundary conditions differ.
        AccuracyError: If halving the step changes any solution by more than
            1e-8 relative to its size.

    Returns:
        List[FieldSolution]: The solutions in the order of the specs.
    """
    cfg = cfg or IntegratorConfig()
    if len(specs) != len(bcs):
        raise DomainError(f'{len(specs)} systems but {len(bcs)} boundary conditions')
    if not specs:
        return []

    coefficients = _Coefficients(specs)
    state = np.stack([bc.as_state() for bc in bcs], axis=1)
    n_steps = cfg.n_steps
    x = np.linspace(0.0, cfg.x_end, n_steps + 1)

    phi, psi = _runge_kutta(coefficients, state, cfg.x_end, 2 * n_steps, 2)
    if cfg.check_accuracy:
        coarse_phi, coarse_psi = _runge_kutta(coefficients, state, cfg.x_end, n_steps, 1)
        difference = np.maximum(
            np.max(np.abs(phi - coarse_phi), axis=0),
            np.max(np.abs(psi - coarse_psi), axis=0)
        )
        scale = 1 + np.maximum(np.max(np.abs(phi), axis=0), np.max(np.abs(psi), axis=0))
        ratio = difference / (RICHARDSON_TOLERANCE * scale)
        worst = int(np.argmax(ratio))
        LOGGER.debug('step halving ratio %.3g for %d systems', ratio[worst], len(specs))
        if ratio[worst] > 1:
            raise AccuracyError(
                float(difference[worst]),
                float(RICHARDSON_TOLERANCE * scale[worst])
            )
        if ratio[worst] > 0.5:
            LOGGER.warning('step halving used %.0f%% of its tolerance', 100 * ratio[worst])

    return [
        FieldSolution(x, phi[:, index].copy(), psi[:, index].copy(), {}, spec)
        for index, spec in enumerate(specs)
    ]


def integrate_system(
        spec: SystemSpec,
        bc: Optional[BoundaryConditions] = None,
        cfg: Optional[IntegratorConfig] = None
) -> FieldSolution:
    """Integrate a single system.

    Args:
        spec (SystemSpec): The system.
        bc (Optional[BoundaryConditions], optional): The boundary conditions.
            Defaults to all zero.
        cfg (Optional[IntegratorConfig], optional): The integrator settings.
            Defaults to a step of 1e-3 up to x = 20.

    Raises:
        AccuracyError: If the step halving check fails.

    Returns:
        FieldSolution: The solution.
    """
    return integrate_many([spec], [bc or BoundaryConditions()], cfg)[0]


def _central_derivatives(f: np.ndarray, h: float) -> Tuple[np.ndarray, np.ndarray]:
    """Fourth order first and second derivatives at the interior points."""
    fm2, fm1, f0, fp1, fp2 = f[:-4], f[1:-3], f[2:-2], f[3:-1], f[4:]
    first = (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * h)
    second = (-fp2 + 16 * fp1 - 30 * f0 + 16 * fm1 - fm2) / (12 * h * h)
    return first, second


def system_residual(spec: SystemSpec, solution: FieldSolution) -> float:
    """The largest residual of the governing equations for sampled fields.

    Args:
        spec (SystemSpec): The system.
        solution (FieldSolution): The fields on a uniform grid of at least 5
            points.

    Raises:
        DomainError: If the grid is not uniform or too short.

    Returns:
        float: The sup norm of the residual at the interior points.
    """
    x = solution.x
    if x.size < 5:
        raise DomainError('the residual needs at least 5 samples')
    spacing = np.diff(x)
    h = float(spacing.mean())
    if np.max(np.abs(spacing - h)) > 1e-9 * h:
        raise DomainError('the residual needs a uniform grid')

    dphi, d2phi = _central_derivatives(solution.phi, h)
    dpsi, d2psi = _central_derivatives(solution.psi, h)
    xi, phi, psi = spec.xi, solution.phi[2:-2], solution.psi[2:-2]
    inner = x[2:-2]

    psi_equation = d2psi + 2 * xi * dpsi + phi + 2 * spec.energy * psi - spec.u0 * np.cos(spec.kd * inner)
    phi_equation = d2phi + 2 * xi * dphi - psi - spec.ug * np.cos(spec.g * inner)
    return float(max(np.max(np.abs(psi_equation)), np.max(np.abs(phi_equation))))


def scan_resonances(
        beam: BeamParameters,
        window: Tuple[float, float],
        n_points: int = 4001
) -> List[ResonancePeak]:
    """Find the peaks of the steady amplitude of Phi by a brute force scan.

    The eigenvalue is held at that of the beam while the drive wavenumber
    sweeps the window. At each point the complex amplitudes of the
    oscillation exp(i kd x) are found by solving the 2 by 2 system directly.

    Args:
        beam (BeamParameters): The screened beam fixing E, xi and U0.
        window (Tuple[float, float]): The drive wavenumbers to scan.
        n_points (int, optional): The number of scan points. Defaults to 4001.

    Raises:
        DomainError: If the beam is unscreened or the window is invalid.

    Returns:
        List[ResonancePeak]: The interior maxima, refined by parabolic
            interpolation, in increasing order of kd.
    """
    low, high = window
    if not beam.xi > 0:
        raise DomainError('the resonance scan needs a screened beam (xi > 0)')
    if not (0 <= low < high and math.isfinite(high)):
        raise DomainError(f'invalid scan window [{low}, {high}]')
    if n_points < 3:
        raise DomainError(f'at least 3 scan points are needed, got {n_points}')

    kd = np.linspace(low, high, n_points)
    sigma = -kd * kd + 2j * beam.xi * kd
    matrices = np.empty((n_points, 2, 2), dtype=complex)
    matrices[:, 0, 0] = sigma
    matrices[:, 0, 1] = -1
    matrices[:, 1, 0] = 1
    matrices[:, 1, 1] = sigma + 2 * beam.energy
    rhs = np.zeros((n_points, 2, 1), dtype=complex)
    rhs[:, 1, 0] = beam.u0
    amplitude = np.abs(np.linalg.solve(matrices, rhs)[:, 0, 0])

    step = kd[1] - kd[0]
    peaks = []
    for index in range(1, n_points - 1):
        left, centre, right = amplitude[index - 1:index + 2]
        if not (centre > left and centre >= right):
            continue
        curvature = left - 2 * centre + right
        offset = 0.5 * (left - right) / curvature if curvature < 0 else 0.0
        peaks.append(ResonancePeak(
            float(kd[index] + offset * step),
            float(centre - 0.25 * (left - right) * offset)
        ))
    LOGGER.debug('scan found %d peaks in [%g, %g]', len(peaks), low, high)
    return peaks
