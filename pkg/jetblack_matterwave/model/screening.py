"""The screening parameter"""

import logging
import math
from typing import Optional

from ..errors import DomainError
from ..specfun import FermiOrder, polylog_neg_exp
from .beam import BeamParameters, ScreeningConvention
from .material import Material, material_scales

LOGGER = logging.getLogger(__name__)

# Li_{1/2} and Li_{3/2} are the polylogs matching Fermi orders -1/2 and 1/2.
HALF_ORDER = FermiOrder(-0.5)
THREE_HALVES_ORDER = FermiOrder(0.5)


def screening_parameter(
        mu: float,
        theta: float,
        convention: ScreeningConvention = ScreeningConvention.PRIMARY,
        mu0_ev: Optional[float] = None
) -> float:
    """Compute the normalized screening parameter xi.

    xi^2 = Li_{1/2}(-exp(mu/theta)) / (2 theta Li_{3/2}(-exp(mu/theta)))

    In the classical limit this tends to 1/(2 theta), and in the degenerate
    limit to 3/(4 mu).

    Args:
        mu (float): The normalized chemical potential.
        theta (float): The fractional temperature.
        convention (ScreeningConvention, optional): The convention. Defaults to
            ScreeningConvention.PRIMARY.
        mu0_ev (Optional[float], optional): The chemical potential in eV,
            required for the PAPER_COMPAT convention. Defaults to None.

    Raises:
        DomainError: If theta is not positive, or mu0_ev is missing for the
            PAPER_COMPAT convention.

    Returns:
        float: The screening parameter xi >= 0.
    """
    if not (math.isfinite(theta) and theta > 0):
        raise DomainError(f'theta must be > 0, got {theta}')

    if convention == ScreeningConvention.PAPER_COMPAT:
        if mu0_ev is None:
            raise DomainError('the paper-compat convention needs mu0 in eV')
        mu = mu0_ev

    eta = mu / theta
    ratio = polylog_neg_exp(HALF_ORDER, eta) / polylog_neg_exp(THREE_HALVES_ORDER, eta)
    xi = math.sqrt(ratio / (2 * theta))
    LOGGER.debug('screening mu=%g theta=%g (%s) -> xi=%.12g', mu, theta, convention, xi)
    return xi


def beam_from_material(
        material: Material,
        v_fraction: float,
        theta: float,
        convention: ScreeningConvention = ScreeningConvention.PRIMARY,
        u0: float = 0.0
) -> BeamParameters:
    """Create the normalized beam for a material.

    Args:
        material (Material): The host metal.
        v_fraction (float): The beam speed in units of v_p.
        theta (float): The fractional temperature.
        convention (ScreeningConvention, optional): The screening convention.
            Defaults to ScreeningConvention.PRIMARY.
        u0 (float, optional): The drive amplitude. Defaults to 0.0.

    Raises:
        DomainError: If the speed is negative or theta is not positive.

    Returns:
        BeamParameters: The beam.
    """
    if not (math.isfinite(v_fraction) and v_fraction >= 0):
        raise DomainError(f'the speed fraction must be >= 0, got {v_fraction}')
    xi = screening_parameter(
        material.mu,
        theta,
        convention,
        mu0_ev=material.mu0_ev
    )
    return BeamParameters(
        gamma=v_fraction,
        mu=material.mu,
        theta=theta,
        xi=xi,
        u0=u0,
        convention=convention,
        scales=material_scales(material)
    )
