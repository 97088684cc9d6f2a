"""Beam Parameters"""

from __future__ import annotations
from dataclasses import dataclass, replace
from enum import Enum
import math
from typing import Any, Optional

from ..errors import DomainError
from .material import MaterialScales


class ScreeningConvention(Enum):
    """How the chemical potential enters the screening parameter.

    PRIMARY uses the normalized mu = mu0/(2 E_p). PAPER_COMPAT inserts the
    numerical value of mu0 in eV, which reproduces the screening values quoted
    in the literature for Al and Ag.
    """
    PRIMARY = 'primary'
    PAPER_COMPAT = 'paper-compat'

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class BeamParameters:
    """The normalized state of an electron beam.

    Speeds are in units of v_p, energies in units of E_p and wavenumbers in
    units of k_p. Positions are measured in units of 1/k_p.

    Attributes:
        gamma (float): The beam speed v/v_p.
        mu (float): The chemical potential mu0/(2 E_p).
        theta (float): The fractional temperature T/T_p.
        xi (float): The screening parameter K/k_p.
        u0 (float): The drive amplitude V0/E_p.
        convention (ScreeningConvention): The convention xi was computed with.
        scales (Optional[MaterialScales]): The physical scales, when known.
    """

    gamma: float
    mu: float = 0.0
    theta: float = 0.1
    xi: float = 0.0
    u0: float = 0.0
    convention: ScreeningConvention = ScreeningConvention.PRIMARY
    scales: Optional[MaterialScales] = None

    def __post_init__(self) -> None:
        for name in ('gamma', 'mu', 'theta', 'xi', 'u0'):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise DomainError(f'{name} must be finite, got {value}')
        if self.gamma < 0:
            raise DomainError(f'gamma must be >= 0, got {self.gamma}')
        if self.theta <= 0:
            raise DomainError(f'theta must be > 0, got {self.theta}')
        if self.xi < 0:
            raise DomainError(f'xi must be >= 0, got {self.xi}')

    @property
    def kd(self) -> float:
        """The de Broglie wavenumber of the beam, identical to gamma."""
        return self.gamma

    @property
    def energy(self) -> float:
        """The plasmon eigenvalue E = (gamma^2 - mu)/2."""
        return (self.gamma * self.gamma - self.mu) / 2

    @property
    def kinetic_energy(self) -> float:
        """The beam kinetic energy E_K = gamma^2."""
        return self.gamma * self.gamma

    def with_values(self, **changes: Any) -> BeamParameters:
        """Copy the parameters, replacing some values.

        Returns:
            BeamParameters: The new parameters.
        """
        return replace(self, **changes)

    def __str__(self) -> str:
        return (
            f'gamma={self.gamma},mu={self.mu},theta={self.theta},'
            f'xi={self.xi},u0={self.u0},convention={self.convention}'
        )
