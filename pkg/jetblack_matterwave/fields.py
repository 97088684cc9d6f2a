"""Field solutions and boundary conditions"""

from __future__ import annotations
from dataclasses import dataclass, field
import math
from typing import Any, Dict, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import DomainError

DEFAULT_X_END = 20.0
DEFAULT_POINTS = 4001

GridLike = Union[Sequence[float], np.ndarray]


def default_grid() -> np.ndarray:
    """The default sampling grid, x in [0, 20] with 4001 points."""
    return np.linspace(0.0, DEFAULT_X_END, DEFAULT_POINTS)


def as_grid(x_grid: Optional[GridLike]) -> np.ndarray:
    """Validate a sampling grid.

    Args:
        x_grid (Optional[GridLike]): The grid, or None for the default grid.

    Raises:
        DomainError: If the grid is empty, not finite or not strictly
            increasing.

    Returns:
        np.ndarray: The grid as a one dimensional float array.
    """
    if x_grid is None:
        return default_grid()
    grid = np.asarray(x_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise DomainError('the grid must be a non-empty one dimensional sequence')
    if not np.all(np.isfinite(grid)):
        raise DomainError('the grid must be finite')
    if np.any(np.diff(grid) <= 0):
        raise DomainError('the grid must be strictly increasing')
    return grid


@dataclass(frozen=True)
class BoundaryConditions:
    """The values and derivatives of the fields at x = 0."""

    phi0: float = 0.0
    psi0: float = 0.0
    dphi0: float = 0.0
    dpsi0: float = 0.0

    def __post_init__(self) -> None:
        for name in ('phi0', 'psi0', 'dphi0', 'dpsi0'):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise DomainError(f'{name} must be finite, got {value}')

    @property
    def has_derivatives(self) -> bool:
        """True when either derivative is non-zero."""
        return self.dphi0 != 0 or self.dpsi0 != 0

    def as_state(self) -> np.ndarray:
        """The state vector (phi, phi', psi, psi') at x = 0."""
        return np.array([self.phi0, self.dphi0, self.psi0, self.dpsi0])


@dataclass(frozen=True)
class FieldSolution:
    """The sampled fields Phi(x) and Psi(x).

    Attributes:
        x (np.ndarray): The strictly increasing grid in units of 1/k_p.
        phi (np.ndarray): The samples of Phi.
        psi (np.ndarray): The samples of Psi.
        parts (Dict[str, Tuple[np.ndarray, np.ndarray]]): The named
            components (phi, psi) that sum to the fields, e.g. "homogeneous"
            and "driven", or "transient" and "steady".
        params (Any): The parameters that generated the solution.
    """

    x: np.ndarray
    phi: np.ndarray
    psi: np.ndarray
    parts: Dict[str, Tuple[np.ndarray, np.ndarray]] = field(default_factory=dict)
    params: Any = None

    def __post_init__(self) -> None:
        if not (self.x.shape == self.phi.shape == self.psi.shape):
            raise DomainError('the grid and fields must have the same shape')
        if not (np.all(np.isfinite(self.phi)) and np.all(np.isfinite(self.psi))):
            raise DomainError('the fields are not finite on the grid')

    def part(self, name: str) -> Tuple[np.ndarray, np.ndarray]:
        """Get a named component.

        Args:
            name (str): The component name.

        Raises:
            KeyError: If the solution has no such component.

        Returns:
            Tuple[np.ndarray, np.ndarray]: The (phi, psi) component.
        """
        return self.parts[name]

    def sup_difference(self, other: FieldSolution) -> float:
        """The largest absolute difference of either field from another solution."""
        return float(max(
            np.max(np.abs(self.phi - other.phi)),
            np.max(np.abs(self.psi - other.psi))
        ))

    def sup_norm(self) -> float:
        """The largest absolute value of either field."""
        return float(max(np.max(np.abs(self.phi)), np.max(np.abs(self.psi))))
