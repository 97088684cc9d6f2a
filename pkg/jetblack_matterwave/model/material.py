"""Host metal materials and their plasmon scales"""

from __future__ import annotations
from dataclasses import dataclass
import math

from scipy import constants

from ..errors import DomainError


@dataclass(frozen=True)
class MaterialScales:
    """The plasmon scales of a material in SI units.

    Attributes:
        k_p (float): The plasmon wavenumber sqrt(2 m E_p)/hbar [1/m].
        v_p (float): The plasmon speed hbar k_p/m [m/s].
        t_p (float): The plasmon temperature E_p/k_B [K].
        omega_p (float): The plasma frequency E_p/hbar [1/s].
    """

    k_p: float
    v_p: float
    t_p: float
    omega_p: float

    @property
    def wavelength(self) -> float:
        """The plasmon wavelength 2 pi / k_p [m]."""
        return 2 * math.pi / self.k_p


@dataclass(frozen=True)
class Material:
    """A host metal, given by its chemical potential and plasmon energy in eV."""

    name: str
    mu0_ev: float
    ep_ev: float

    def __post_init__(self) -> None:
        if not self.name:
            raise DomainError('a material needs a name')
        for label, value in (('mu0_eV', self.mu0_ev), ('Ep_eV', self.ep_ev)):
            if not (math.isfinite(value) and value > 0):
                raise DomainError(
                    f'{label} of material {self.name} must be positive, got {value}'
                )

    @property
    def mu(self) -> float:
        """The normalized chemical potential mu0/(2 E_p)."""
        return self.mu0_ev / (2 * self.ep_ev)

    def __str__(self) -> str:
        return f'{self.name}(mu0={self.mu0_ev} eV, Ep={self.ep_ev} eV)'


def material_scales(material: Material) -> MaterialScales:
    """Compute the plasmon scales of a material.

    Args:
        material (Material): The material.

    Returns:
        MaterialScales: The scales in SI units.
    """
    energy = material.ep_ev * constants.electron_volt
    k_p = math.sqrt(2 * constants.m_e * energy) / constants.hbar
    return MaterialScales(
        k_p=k_p,
        v_p=constants.hbar * k_p / constants.m_e,
        t_p=energy / constants.k,
        omega_p=energy / constants.hbar
    )


ALUMINIUM = Material('Al', 11.7, 15.0)
SILVER = Material('Ag', 5.49, 3.76)

BUILTIN_MATERIALS = {
    material.name: material
    for material in (ALUMINIUM, SILVER)
}
