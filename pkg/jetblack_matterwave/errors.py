"""Errors"""

from typing import Optional


class MatterWaveError(Exception):
    """The base class for all library errors"""


class DomainError(MatterWaveError, ValueError):
    """An argument is outside the domain of the operation"""


class SingularInputError(DomainError):
    """The input is at a singular point of the formula"""


class UnsupportedRegimeError(MatterWaveError):
    """The regime classification is not defined for the parameters"""


class UndefinedQuantityError(MatterWaveError):
    """The requested quantity is not defined in this regime"""


class ResonantInputError(MatterWaveError):
    """A drive wavenumber coincides with a characteristic wavenumber"""

    def __init__(self, condition: str, distance: float) -> None:
        """A resonant input.

        Args:
            condition (str): The resonance condition that fired, e.g. "kd=k2".
            distance (float): The distance to the resonance.
        """
        super().__init__(
            f'resonant input: {condition} (distance {distance:.3e})'
        )
        self.condition = condition
        self.distance = distance


class DegenerateEigenvalueError(MatterWaveError):
    """The characteristic wavenumbers coincide (alpha = 0)"""


class NoDriveError(MatterWaveError):
    """The drive wavenumber is zero"""


class IncommensurateDriveError(MatterWaveError):
    """The drive is not periodic over the lattice constant"""


class DegenerateLatticeError(MatterWaveError):
    """The periodicity conditions do not determine the solution"""


class AccuracyError(MatterWaveError):
    """The integrator failed its step-halving check"""

    def __init__(self, difference: float, tolerance: float) -> None:
        super().__init__(
            f'step halving changed the solution by {difference:.3e} (tolerance {tolerance:.3e})'
        )
        self.difference = difference
        self.tolerance = tolerance


class ConfigurationError(MatterWaveError):
    """A material preset file is malformed"""

    def __init__(self, message: str, line_number: Optional[int] = None) -> None:
        if line_number is not None:
            message = f'line {line_number}: {message}'
        super().__init__(message)
        self.line_number = line_number
