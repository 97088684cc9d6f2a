"""Parameter sweeps evaluated concurrently"""

from __future__ import annotations
import asyncio
from concurrent.futures import Executor, ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
import logging
import math
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import DomainError, MatterWaveError
from .io import Column, Dataset
from .io.dataset import Value

LOGGER = logging.getLogger(__name__)

MAX_POINTS = 10_000_000
CHUNK_SIZE = 256
ERROR_COLUMN = Column('error', 'text')

Evaluate = Callable[[float], Sequence[Value]]
PointResult = Tuple[float, Optional[Sequence[Value]], Optional[str]]


class SweepVariable(Enum):
    """The parameters a sweep can vary, with their units"""
    GAMMA = ('gamma', 'v_p')
    MU = ('mu', '2E_p')
    THETA = ('theta', 'T_p')
    XI = ('xi', 'k_p')
    G = ('G', 'k_p')

    def __init__(self, label: str, unit: str) -> None:
        self.label = label
        self.unit = unit

    @classmethod
    def parse(cls, label: str) -> SweepVariable:
        """Find a variable by its label.

        Args:
            label (str): The label, e.g. "gamma".

        Raises:
            DomainError: If there is no such variable.

        Returns:
            SweepVariable: The variable.
        """
        for variable in cls:
            if variable.label == label:
                return variable
        raise DomainError(f'unknown sweep variable "{label}"')

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class SweepSpec:
    """A uniform sweep of one parameter, the others held fixed."""

    variable: SweepVariable
    low: float
    high: float
    points: int
    fixed: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not (math.isfinite(self.low) and math.isfinite(self.high) and self.low < self.high):
            raise DomainError(f'the sweep range [{self.low}, {self.high}] is empty')
        if not 2 <= self.points <= MAX_POINTS:
            raise DomainError(f'the sweep needs 2 to {MAX_POINTS} points, got {self.points}')

    def values(self) -> np.ndarray:
        """The swept values in increasing order."""
        return np.linspace(self.low, self.high, self.points)


def _evaluate_chunk(evaluate: Evaluate, values: Sequence[float]) -> List[PointResult]:
    results: List[PointResult] = []
    for value in values:
        try:
            results.append((value, evaluate(value), None))
        except MatterWaveError as error:
            LOGGER.debug('sweep point %g failed: %s', value, error)
            results.append((value, None, f'{type(error).__name__}: {error}'))
    return results


async def evaluate_points(
        spec: SweepSpec,
        evaluate: Evaluate,
        executor: Optional[Executor] = None
) -> List[PointResult]:
    """Evaluate every point of a sweep.

    The points are evaluated in chunks on the executor. A point whose
    evaluation raises a library error is returned with the error text rather
    than stopping the sweep.

    Args:
        spec (SweepSpec): The sweep.
        evaluate (Evaluate): Computes the row values for a swept value.
        executor (Optional[Executor], optional): The executor. Defaults to
            the event loop's default executor.

    Returns:
        List[PointResult]: The (value, row values, error) triples in the order
            of the swept values.
    """
    loop = asyncio.get_running_loop()
    values = [float(value) for value in spec.values()]
    chunks = [values[start:start + CHUNK_SIZE] for start in range(0, len(values), CHUNK_SIZE)]
    results = await asyncio.gather(*(
        loop.run_in_executor(executor, _evaluate_chunk, evaluate, chunk)
        for chunk in chunks
    ))
    return [result for chunk_results in results for result in chunk_results]


async def sweep_dataset(
        spec: SweepSpec,
        columns: Sequence[Column],
        evaluate: Evaluate,
        executor: Optional[Executor] = None
) -> Dataset:
    """Evaluate a sweep into a dataset.

    Args:
        spec (SweepSpec): The sweep.
        columns (Sequence[Column]): The columns produced by evaluate.
        evaluate (Evaluate): Computes the row values for a swept value.
        executor (Optional[Executor], optional): The executor. Defaults to
            the event loop's default executor.

    Returns:
        Dataset: One row per point, with the swept value first and an error
            column last.
    """
    results = await evaluate_points(spec, evaluate, executor)
    dataset = Dataset([Column(spec.variable.label, spec.variable.unit), *columns, ERROR_COLUMN])
    failures = 0
    for value, row, error in results:
        if row is None:
            failures += 1
            row = [None] * len(columns)
        dataset.append([value, *row, error])
    LOGGER.info(
        'sweep over %s finished with %d rows (%d failed)',
        spec.variable, len(dataset), failures
    )
    return dataset


def run_sweep(
        spec: SweepSpec,
        columns: Sequence[Column],
        evaluate: Evaluate,
        max_workers: Optional[int] = None
) -> Dataset:
    """Evaluate a sweep on a thread pool.

    Args:
        spec (SweepSpec): The sweep.
        columns (Sequence[Column]): The columns produced by evaluate.
        evaluate (Evaluate): Computes the row values for a swept value.
        max_workers (Optional[int], optional): The pool size. Defaults to
            the executor default.

    Returns:
        Dataset: The dataset.
    """
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        return asyncio.run(sweep_dataset(spec, columns, evaluate, executor))
