"""Commands"""

from __future__ import annotations
from abc import ABCMeta, abstractmethod
from argparse import ArgumentParser
from dataclasses import dataclass, field
from enum import Enum
import math
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Set

import numpy as np

from .dispersion import (
    classify_regime,
    debroglie_coefficients,
    debroglie_wavenumbers,
    relative_difference,
    sample_dispersion,
    stability_window
)
from .errors import DomainError, UndefinedQuantityError
from .fields import BoundaryConditions
from .io import Column, Dataset, OutputFormat
from .io.dataset import Value
from .io.dataset_writer import format_value
from .lattice import (
    LatticeParameters,
    bragg_resonant_speeds,
    lattice_bloch_response,
    solve_lattice_bvp
)
from .model import (
    BeamParameters,
    Material,
    ScreeningConvention,
    beam_from_material,
    material_scales,
    screening_parameter
)
from .presets import Preset, find_preset
from .pseudoforce import damped_coefficients, solve_damped, steady_state
from .sweep import SweepSpec, SweepVariable, run_sweep


class CommandType(Enum):
    """Command types"""
    DISPERSION = 'dispersion'
    WAVENUMBERS = 'wavenumbers'
    REGIMES = 'regimes'
    SOLVE = 'solve'
    STEADY = 'steady'
    LATTICE = 'lattice'
    BRAGG = 'bragg'
    MATERIAL = 'material'
    SWEEP = 'sweep'


@dataclass
class CommandContext:
    """The environment a command runs in."""

    materials: Dict[str, Material]
    max_workers: Optional[int] = None


@dataclass
class CommandRequest:
    """A validated command.

    Attributes:
        command (CommandType): The command.
        parameters (Dict[str, Any]): The resolved parameters.
        output_format (OutputFormat): The output format.
        destination (Optional[Path]): The output file, or None for stdout.
        preset (Optional[Preset]): The preset applied, if any.
        defaulted (Set[str]): The parameters that took their default value.
    """

    command: CommandType
    parameters: Dict[str, Any]
    output_format: OutputFormat = OutputFormat.CSV
    destination: Optional[Path] = None
    preset: Optional[Preset] = None
    defaulted: Set[str] = field(default_factory=set)


def require(condition: bool, flag: str, message: str) -> None:
    """Check a flag value.

    Args:
        condition (bool): The condition the value must meet.
        flag (str): The flag, e.g. "--points".
        message (str): What is wrong when the condition fails.

    Raises:
        DomainError: If the condition is false.
    """
    if not condition:
        raise DomainError(f'{flag}: {message}')


def _finite(value: Any) -> bool:
    return isinstance(value, (int, float)) and math.isfinite(value)


def _complex_columns(name: str, unit: str = 'k_p') -> List[Column]:
    return [Column(f'{name}_re', unit), Column(f'{name}_im', unit)]


def _split(value: Optional[complex]) -> List[Optional[float]]:
    return [None, None] if value is None else [float(value.real), float(value.imag)]


WAVENUMBER_COLUMNS = [
    Column('gamma', 'v_p'),
    Column('mu', '2E_p'),
    Column('xi', 'k_p'),
    Column('E', '2E_p'),
    *_complex_columns('k1'),
    *_complex_columns('k2'),
    Column('regime', 'text'),
    Column('on_boundary', 'flag'),
    *_complex_columns('chi1', 'dimensionless'),
    *_complex_columns('chi2', 'dimensionless'),
    Column('delta', 'dimensionless'),
]


def wavenumber_row(beam: BeamParameters) -> List[Value]:
    """The wavenumbers of a beam, with the relative difference where k2 is real."""
    pair = debroglie_wavenumbers(beam)
    chi1, chi2 = debroglie_coefficients(beam)
    try:
        delta: Optional[float] = relative_difference(beam)
    except UndefinedQuantityError:
        delta = None
    return [
        beam.gamma, beam.mu, beam.xi, beam.energy,
        *_split(pair.k1), *_split(pair.k2),
        str(pair.regime.tag), pair.regime.on_boundary,
        *_split(chi1), *_split(chi2),
        delta
    ]


REGIME_COLUMNS = [
    Column('gamma', 'v_p'),
    Column('mu', '2E_p'),
    Column('xi', 'k_p'),
    Column('sqrt_mu', 'v_p'),
    Column('gamma_low', 'v_p'),
    Column('gamma_high', 'v_p'),
    Column('window_empty', 'flag'),
    Column('window_width', 'v_p'),
    Column('regime', 'text'),
    Column('on_boundary', 'flag'),
]


def regime_row(beam: BeamParameters, classify: bool) -> List[Value]:
    """The critical speeds, and the regime of the beam when classify is set."""
    window = stability_window(beam.mu, beam.xi)
    regime: List[Value] = [None, None]
    if classify:
        regime_class = classify_regime(beam.gamma, beam.mu, beam.xi)
        regime = [str(regime_class.tag), regime_class.on_boundary]
    return [
        beam.gamma if classify else None, beam.mu, beam.xi,
        math.sqrt(beam.mu),
        window.gamma_low, window.gamma_high, window.empty, window.width,
        *regime
    ]


STEADY_COLUMNS = [
    Column('gamma', 'v_p'),
    Column('E', '2E_p'),
    Column('xi', 'k_p'),
    Column('u0', 'E_p'),
    Column('kd', 'k_p'),
    Column('amp_phi', 'dimensionless'),
    Column('amp_psi', 'dimensionless'),
    Column('theta_phi', 'rad'),
    Column('theta_psi', 'rad'),
    Column('eta1', 'dimensionless'),
    Column('eta2', 'dimensionless'),
    *_complex_columns('beta1'),
    *_complex_columns('beta2'),
]


def steady_row(beam: BeamParameters, kd: Optional[float]) -> List[Value]:
    """The steady response of a beam and its damping coefficients."""
    response = steady_state(beam, kd)
    coefficients = damped_coefficients(beam, kd)
    return [
        beam.gamma, beam.energy, beam.xi, beam.u0, response.kd,
        response.amp_phi, response.amp_psi,
        response.theta_phi, response.theta_psi,
        coefficients.eta1, coefficients.eta2,
        *_split(coefficients.beta1), *_split(coefficients.beta2)
    ]


def _bragg_sweep_columns(n_max: int) -> List[Column]:
    columns = [Column('mu', '2E_p'), Column('xi', 'k_p')]
    for n in range(1, n_max + 1):
        columns += [Column(f'gamma_{n}', 'v_p'), Column(f'channel_{n}', 'text')]
    return columns


def _bragg_sweep_row(mu: float, xi: float, lattice: LatticeParameters) -> List[Value]:
    found = {
        resonance.n: resonance
        for resonance in bragg_resonant_speeds(mu, xi, lattice)
    }
    row: List[Value] = [mu, xi]
    for n in range(1, lattice.n_max + 1):
        resonance = found.get(n)
        row += [None, None] if resonance is None else [resonance.gamma_res, str(resonance.channel)]
    return row


SCREENING_COLUMNS = [
    Column('mu', '2E_p'),
    Column('theta', 'T_p'),
    Column('xi', 'k_p'),
]


def screening_row(beam: BeamParameters) -> List[Value]:
    return [beam.mu, beam.theta, beam.xi]


def _field_dataset(
        x: np.ndarray,
        phi: np.ndarray,
        psi: np.ndarray,
        parts: Dict[str, Any]
) -> Dataset:
    columns = [Column('x', '1/k_p'), Column('phi'), Column('psi')]
    series = [x, phi, psi]
    for name, (phi_part, psi_part) in parts.items():
        columns += [Column(f'phi_{name}'), Column(f'psi_{name}')]
        series += [phi_part, psi_part]
    dataset = Dataset(columns)
    for row in zip(*(values.tolist() for values in series)):
        dataset.append(list(row))
    return dataset


def _add_beam_arguments(parser: ArgumentParser, gamma: bool = True, drive: bool = True) -> None:
    if gamma:
        parser.add_argument('--gamma', type=float, help='beam speed v/v_p')
    parser.add_argument('--mu', type=float, help='chemical potential mu0/(2 E_p) (default 0)')
    parser.add_argument('--theta', type=float, help='fractional temperature T/T_p (default 0.1)')
    parser.add_argument(
        '--xi',
        type=float,
        help='screening parameter (default 0, or computed from --material and --theta)'
    )
    parser.add_argument('--material', help='material name, e.g. Al or Ag')
    parser.add_argument(
        '--convention',
        choices=[convention.value for convention in ScreeningConvention],
        help='screening convention (default primary)'
    )
    if drive:
        parser.add_argument('--u0', type=float, help='drive amplitude V0/E_p (default 0.1)')


def _add_grid_arguments(parser: ArgumentParser) -> None:
    parser.add_argument('--xmin', type=float, help='first position (default 0)')
    parser.add_argument('--xmax', type=float, help='last position (default 20)')
    parser.add_argument('--points', type=int, help='number of positions (default 4001)')


BEAM_DEFAULTS = {'theta': 0.1, 'convention': ScreeningConvention.PRIMARY.value}
DRIVE_DEFAULTS = {**BEAM_DEFAULTS, 'u0': 0.1}
GRID_DEFAULTS = {'xmin': 0.0, 'xmax': 20.0, 'points': 4001}


def _validate_beam(parameters: Dict[str, Any], context: CommandContext, gamma: bool) -> None:
    for flag in ('gamma', 'mu', 'theta', 'xi', 'u0', 'kd'):
        if flag in parameters:
            require(_finite(parameters[flag]), f'--{flag}', 'must be a finite number')
    if gamma:
        require('gamma' in parameters, '--gamma', 'is required')
        require(parameters['gamma'] >= 0, '--gamma', 'must be >= 0')
    require(parameters['theta'] > 0, '--theta', 'must be > 0')
    if 'xi' in parameters:
        require(parameters['xi'] >= 0, '--xi', 'must be >= 0')
    if 'material' in parameters:
        require(
            parameters['material'] in context.materials,
            '--material',
            f'unknown material "{parameters["material"]}"'
        )
        require('mu' not in parameters, '--mu', 'cannot be combined with --material')


def _validate_grid(parameters: Dict[str, Any]) -> None:
    require(parameters['points'] >= 2, '--points', 'must be at least 2')
    require(
        _finite(parameters['xmin']) and _finite(parameters['xmax']),
        '--xmax',
        'must be finite'
    )
    require(parameters['xmax'] > parameters['xmin'], '--xmax', 'must be greater than --xmin')


def _grid(parameters: Dict[str, Any]) -> np.ndarray:
    return np.linspace(parameters['xmin'], parameters['xmax'], parameters['points'])


def make_beam(parameters: Dict[str, Any], context: CommandContext) -> BeamParameters:
    """Create the beam described by the parameters.

    When a material is named its chemical potential is used, and its
    screening parameter unless xi is given.

    Args:
        parameters (Dict[str, Any]): The parameters.
        context (CommandContext): The context holding the materials.

    Returns:
        BeamParameters: The beam.
    """
    convention = ScreeningConvention(parameters['convention'])
    gamma = parameters.get('gamma', 0.0)
    u0 = parameters.get('u0', 0.0)
    if 'material' in parameters:
        beam = beam_from_material(
            context.materials[parameters['material']],
            gamma,
            parameters['theta'],
            convention,
            u0
        )
        if 'xi' in parameters:
            beam = beam.with_values(xi=parameters['xi'])
        return beam
    return BeamParameters(
        gamma=gamma,
        mu=parameters.get('mu', 0.0),
        theta=parameters['theta'],
        xi=parameters.get('xi', 0.0),
        u0=u0,
        convention=convention
    )


class Command(metaclass=ABCMeta):
    """Command Base Class"""

    command_type: CommandType
    description: str = ''
    defaults: Dict[str, Any] = {}
    # Defaulted parameters recorded as inferred choices in the metadata.
    inferred: Sequence[str] = ()

    @classmethod
    def create(cls, command_type: CommandType) -> Command:
        """Create a command

        Args:
            command_type (CommandType): The command type.

        Raises:
            RuntimeError: When the command type is unknown.

        Returns:
            Command: The command.
        """
        if command_type == CommandType.DISPERSION:
            return DispersionCommand()
        elif command_type == CommandType.WAVENUMBERS:
            return WavenumbersCommand()
        elif command_type == CommandType.REGIMES:
            return RegimesCommand()
        elif command_type == CommandType.SOLVE:
            return SolveCommand()
        elif command_type == CommandType.STEADY:
            return SteadyCommand()
        elif command_type == CommandType.LATTICE:
            return LatticeCommand()
        elif command_type == CommandType.BRAGG:
            return BraggCommand()
        elif command_type == CommandType.MATERIAL:
            return MaterialCommand()
        elif command_type == CommandType.SWEEP:
            return SweepCommand()
        else:
            raise RuntimeError(f'Invalid command type {command_type}')

    @classmethod
    @abstractmethod
    def add_arguments(cls, parser: ArgumentParser) -> None:
        """Add the command flags to a parser.

        Args:
            parser (ArgumentParser): The sub-command parser.
        """

    @abstractmethod
    def validate(self, parameters: Dict[str, Any], context: CommandContext) -> None:
        """Check the parameters against the preconditions of the computation.

        Raises:
            DomainError: Naming the offending flag.
        """

    @abstractmethod
    def execute(self, parameters: Dict[str, Any], context: CommandContext) -> Dataset:
        """Run the computation.

        Returns:
            Dataset: The dataset, without metadata.
        """

    def resolve(
            self,
            options: Dict[str, Any],
            context: CommandContext,
            output_format: OutputFormat = OutputFormat.CSV,
            destination: Optional[Path] = None
    ) -> CommandRequest:
        """Apply the preset and defaults to the given flags and validate them.

        Flags given explicitly win over the preset, which wins over the
        defaults.

        Args:
            options (Dict[str, Any]): The flags, None when not given.
            context (CommandContext): The context.
            output_format (OutputFormat, optional): The output format.
                Defaults to OutputFormat.CSV.
            destination (Optional[Path], optional): The output file. Defaults
                to None.

        Raises:
            DomainError: If a flag is invalid.

        Returns:
            CommandRequest: The request.
        """
        parameters = {key: value for key, value in options.items() if value is not None}
        preset = None
        if 'preset' in parameters:
            preset = find_preset(parameters.pop('preset'), self.command_type.value)
            for key, value in preset.parameters.items():
                parameters.setdefault(key, value)
        defaulted = {key for key in self.defaults if key not in parameters}
        for key in defaulted:
            parameters[key] = self.defaults[key]
        self.validate(parameters, context)
        return CommandRequest(
            self.command_type,
            parameters,
            output_format,
            destination,
            preset,
            defaulted
        )

    def metadata(self, request: CommandRequest) -> Dict[str, str]:
        """The metadata describing how a dataset was made.

        Args:
            request (CommandRequest): The request.

        Returns:
            Dict[str, str]: The metadata in a fixed order.
        """
        metadata = {
            'command': self.command_type.value,
            'convention': str(request.parameters.get('convention', ScreeningConvention.PRIMARY.value)),
        }
        if request.preset is not None:
            metadata['preset'] = request.preset.name
            metadata['description'] = request.preset.description
        for key in sorted(request.parameters):
            metadata[f'parameter.{key}'] = format_value(request.parameters[key])
        inferred = dict(request.preset.inferred) if request.preset else {}
        for key in self.inferred:
            if key in request.defaulted:
                inferred[key] = format_value(request.parameters[key])
        for key in sorted(inferred):
            metadata[f'inferred.{key}'] = inferred[key]
        return metadata

    def run(self, request: CommandRequest, context: CommandContext) -> Dataset:
        """Execute a request and attach its metadata.

        Args:
            request (CommandRequest): The request.
            context (CommandContext): The context.

        Returns:
            Dataset: The dataset.
        """
        dataset = self.execute(request.parameters, context)
        dataset.metadata = self.metadata(request)
        return dataset


class DispersionCommand(Command):
    """Sample the plasmon dispersion"""

    command_type = CommandType.DISPERSION
    description = 'plasmon energy dispersion E(k)'
    defaults = {'xi': [0.0], 'kmin': 0.05, 'kmax': 3.0, 'points': 500}

    @classmethod
    def add_arguments(cls, parser: ArgumentParser) -> None:
        parser.add_argument('--xi', type=float, nargs='+', help='screening parameters (default 0)')
        parser.add_argument('--kmin', type=float, help='first wavenumber (default 0.05)')
        parser.add_argument('--kmax', type=float, help='last wavenumber (default 3)')
        parser.add_argument('--points', type=int, help='number of wavenumbers (default 500)')
        parser.add_argument('--preset', help='figure preset, e.g. fig1a')

    def validate(self, parameters: Dict[str, Any], context: CommandContext) -> None:
        require(parameters['points'] >= 2, '--points', 'must be at least 2')
        require(_finite(parameters['kmin']) and parameters['kmin'] >= 0, '--kmin', 'must be >= 0')
        require(
            _finite(parameters['kmax']) and parameters['kmax'] > parameters['kmin'],
            '--kmax',
            'must be greater than --kmin'
        )
        for xi in parameters['xi']:
            require(_finite(xi) and xi >= 0, '--xi', 'must be >= 0')

    def execute(self, parameters: Dict[str, Any], context: CommandContext) -> Dataset:
        xis = parameters['xi']
        curves = [
            sample_dispersion(xi, parameters['kmin'], parameters['kmax'], parameters['points'])
            for xi in xis
        ]
        columns = [Column('k', 'k_p'), Column('E_free', '2E_p')]
        if len(xis) == 1:
            columns.append(Column('E', '2E_p'))
        else:
            columns += [Column(f'E_xi={format_value(float(xi))}', '2E_p') for xi in xis]
        dataset = Dataset(columns)
        k = curves[0].k
        energies = [curve.energy for curve in curves]
        for index, k_value in enumerate(k.tolist()):
            dataset.append([
                k_value,
                k_value * k_value / 2,
                *(float(energy[index]) for energy in energies)
            ])
        return dataset


class WavenumbersCommand(Command):
    """The de Broglie wavenumbers of a beam"""

    command_type = CommandType.WAVENUMBERS
    description = 'generalized de Broglie wavenumbers and regime'
    defaults = BEAM_DEFAULTS

    @classmethod
    def add_arguments(cls, parser: ArgumentParser) -> None:
        _add_beam_arguments(parser, drive=False)

    def validate(self, parameters: Dict[str, Any], context: CommandContext) -> None:
        _validate_beam(parameters, context, gamma=True)

    def execute(self, parameters: Dict[str, Any], context: CommandContext) -> Dataset:
        return Dataset(WAVENUMBER_COLUMNS, [wavenumber_row(make_beam(parameters, context))])


class RegimesCommand(Command):
    """The critical speeds, and the regime of a beam speed when given"""

    command_type = CommandType.REGIMES
    description = 'critical speeds and regime classification'
    defaults = BEAM_DEFAULTS

    @classmethod
    def add_arguments(cls, parser: ArgumentParser) -> None:
        _add_beam_arguments(parser, drive=False)

    def validate(self, parameters: Dict[str, Any], context: CommandContext) -> None:
        _validate_beam(parameters, context, gamma=False)
        if 'gamma' in parameters:
            require(parameters['gamma'] >= 0, '--gamma', 'must be >= 0')
        require(parameters.get('mu', 0.0) >= 0, '--mu', 'must be >= 0')

    def execute(self, parameters: Dict[str, Any], context: CommandContext) -> Dataset:
        beam = make_beam(parameters, context)
        return Dataset(REGIME_COLUMNS, [regime_row(beam, 'gamma' in parameters)])


class SolveCommand(Command):
    """Sample the closed form pseudoforce fields"""

    command_type = CommandType.SOLVE
    description = 'closed form fields Phi(x) and Psi(x)'
    defaults = {
        **DRIVE_DEFAULTS,
        **GRID_DEFAULTS,
        'phi0': 0.0, 'psi0': 0.0, 'dphi0': 0.0, 'dpsi0': 0.0
    }
    inferred = ('u0', 'xmin', 'xmax')

    @classmethod
    def add_arguments(cls, parser: ArgumentParser) -> None:
        _add_beam_arguments(parser)
        parser.add_argument('--kd', type=float, help='drive wavenumber (default gamma)')
        for name in ('phi0', 'psi0', 'dphi0', 'dpsi0'):
            parser.add_argument(f'--{name}', type=float, help=f'{name} at x = 0 (default 0)')
        _add_grid_arguments(parser)

    def validate(self, parameters: Dict[str, Any], context: CommandContext) -> None:
        _validate_beam(parameters, context, gamma=True)
        _validate_grid(parameters)
        for name in ('phi0', 'psi0', 'dphi0', 'dpsi0'):
            require(_finite(parameters[name]), f'--{name}', 'must be a finite number')

    def execute(self, parameters: Dict[str, Any], context: CommandContext) -> Dataset:
        beam = make_beam(parameters, context)
        bc = BoundaryConditions(
            parameters['phi0'], parameters['psi0'], parameters['dphi0'], parameters['dpsi0']
        )
        solution = solve_damped(beam, _grid(parameters), bc, parameters.get('kd'))
        return _field_dataset(solution.x, solution.phi, solution.psi, solution.parts)


class SteadyCommand(Command):
    """The steady state amplitudes and phases"""

    command_type = CommandType.STEADY
    description = 'steady state amplitudes and phases'
    defaults = DRIVE_DEFAULTS
    inferred = ('u0',)

    @classmethod
    def add_arguments(cls, parser: ArgumentParser) -> None:
        _add_beam_arguments(parser)
        parser.add_argument('--kd', type=float, help='drive wavenumber (default gamma)')

    def validate(self, parameters: Dict[str, Any], context: CommandContext) -> None:
        _validate_beam(parameters, context, gamma=True)
        if 'material' not in parameters or 'xi' in parameters:
            require(parameters.get('xi', 0.0) > 0, '--xi', 'must be > 0 for the steady state')

    def execute(self, parameters: Dict[str, Any], context: CommandContext) -> Dataset:
        beam = make_beam(parameters, context)
        return Dataset(STEADY_COLUMNS, [steady_row(beam, parameters.get('kd'))])


class LatticeCommand(Command):
    """Sample the lattice response"""

    command_type = CommandType.LATTICE
    description = 'lattice Bloch response, optionally with periodic boundary conditions'
    defaults = {**DRIVE_DEFAULTS, **GRID_DEFAULTS, 'ug': 0.1, 'n': 1, 'bvp': False}
    inferred = ('u0', 'ug', 'xmin', 'xmax')

    @classmethod
    def add_arguments(cls, parser: ArgumentParser) -> None:
        _add_beam_arguments(parser)
        parser.add_argument('--G', dest='G', type=float, help='reciprocal lattice vector')
        parser.add_argument('--ug', type=float, help='lattice amplitude Ug/E_p (default 0.1)')
        parser.add_argument('--n', type=int, help='harmonic index (default 1)')
        parser.add_argument(
            '--bvp',
            action='store_true',
            default=None,
            help='impose periodic boundary conditions over the lattice constant'
        )
        _add_grid_arguments(parser)

    def validate(self, parameters: Dict[str, Any], context: CommandContext) -> None:
        _validate_beam(parameters, context, gamma=True)
        _validate_grid(parameters)
        require('G' in parameters, '--G', 'is required')
        require(_finite(parameters['G']) and parameters['G'] > 0, '--G', 'must be > 0')
        require(_finite(parameters['ug']), '--ug', 'must be a finite number')
        require(parameters['n'] >= 1, '--n', 'must be at least 1')

    def execute(self, parameters: Dict[str, Any], context: CommandContext) -> Dataset:
        beam = make_beam(parameters, context)
        lattice = LatticeParameters(parameters['G'], parameters['ug'], parameters['n'])
        solve = solve_lattice_bvp if parameters['bvp'] else lattice_bloch_response
        solution = solve(beam, lattice, parameters['n'], _grid(parameters))
        return _field_dataset(solution.x, solution.phi, solution.psi, solution.parts)


class BraggCommand(Command):
    """The Bragg resonant speeds"""

    command_type = CommandType.BRAGG
    description = 'Bragg resonant beam speeds'
    defaults = {**BEAM_DEFAULTS, 'nmax': 3}

    @classmethod
    def add_arguments(cls, parser: ArgumentParser) -> None:
        _add_beam_arguments(parser, gamma=False, drive=False)
        parser.add_argument('--G', dest='G', type=float, help='reciprocal lattice vector')
        parser.add_argument('--nmax', type=int, help='highest harmonic (default 3)')

    def validate(self, parameters: Dict[str, Any], context: CommandContext) -> None:
        _validate_beam(parameters, context, gamma=False)
        require(parameters.get('mu', 0.0) >= 0, '--mu', 'must be >= 0')
        require('G' in parameters, '--G', 'is required')
        require(_finite(parameters['G']) and parameters['G'] > 0, '--G', 'must be > 0')
        require(parameters['nmax'] >= 1, '--nmax', 'must be at least 1')

    def execute(self, parameters: Dict[str, Any], context: CommandContext) -> Dataset:
        beam = make_beam(parameters, context)
        lattice = LatticeParameters(parameters['G'], n_max=parameters['nmax'])
        dataset = Dataset([
            Column('n', 'index'),
            Column('G', 'k_p'),
            Column('mu', '2E_p'),
            Column('xi', 'k_p'),
            Column('channel', 'text'),
            Column('gamma_res', 'v_p'),
            Column('kd', 'k_p'),
        ])
        for resonance in bragg_resonant_speeds(beam.mu, beam.xi, lattice):
            dataset.append([
                resonance.n, lattice.g, beam.mu, beam.xi,
                str(resonance.channel), resonance.gamma_res, resonance.kd
            ])
        return dataset


class MaterialCommand(Command):
    """The constants and scales of a material"""

    command_type = CommandType.MATERIAL
    description = 'material constants, plasmon scales and screening'
    defaults = BEAM_DEFAULTS

    @classmethod
    def add_arguments(cls, parser: ArgumentParser) -> None:
        parser.add_argument('--name', help='material name, e.g. Al or Ag')
        parser.add_argument('--theta', type=float, help='fractional temperature (default 0.1)')
        parser.add_argument(
            '--convention',
            choices=[convention.value for convention in ScreeningConvention],
            help='screening convention (default primary)'
        )

    def validate(self, parameters: Dict[str, Any], context: CommandContext) -> None:
        require('name' in parameters, '--name', 'is required')
        require(
            parameters['name'] in context.materials,
            '--name',
            f'unknown material "{parameters["name"]}"'
        )
        require(_finite(parameters['theta']) and parameters['theta'] > 0, '--theta', 'must be > 0')

    def execute(self, parameters: Dict[str, Any], context: CommandContext) -> Dataset:
        material = context.materials[parameters['name']]
        theta = parameters['theta']
        scales = material_scales(material)
        xi_primary = screening_parameter(material.mu, theta, ScreeningConvention.PRIMARY)
        xi_compat = screening_parameter(
            material.mu, theta, ScreeningConvention.PAPER_COMPAT, mu0_ev=material.mu0_ev
        )
        active = ScreeningConvention(parameters['convention'])
        columns = [
            Column('name', 'text'),
            Column('mu0', 'eV'),
            Column('Ep', 'eV'),
            Column('mu', '2E_p'),
            Column('theta', 'T_p'),
            Column('xi', 'k_p'),
            Column('xi_primary', 'k_p'),
            Column('xi_paper_compat', 'k_p'),
            Column('k_p', '1/m'),
            Column('v_p', 'm/s'),
            Column('T_p', 'K'),
            Column('omega_p', '1/s'),
        ]
        return Dataset(columns, [[
            material.name, material.mu0_ev, material.ep_ev, material.mu, theta,
            xi_primary if active == ScreeningConvention.PRIMARY else xi_compat,
            xi_primary, xi_compat,
            scales.k_p, scales.v_p, scales.t_p, scales.omega_p
        ]])


SWEEP_TARGETS = ('wavenumbers', 'regimes', 'steady', 'bragg', 'screening')


class SweepCommand(Command):
    """Sweep one parameter of a computation"""

    command_type = CommandType.SWEEP
    description = 'sweep one parameter of a computation'
    defaults = {**DRIVE_DEFAULTS, 'points': 101, 'target': 'wavenumbers', 'nmax': 1}
    inferred = ('u0',)

    @classmethod
    def add_arguments(cls, parser: ArgumentParser) -> None:
        parser.add_argument(
            '--variable',
            choices=[variable.label for variable in SweepVariable],
            help='the swept parameter'
        )
        parser.add_argument(
            '--range',
            type=float,
            nargs=2,
            metavar=('LOW', 'HIGH'),
            help='the swept interval'
        )
        parser.add_argument('--points', type=int, help='number of points (default 101)')
        parser.add_argument('--target', choices=SWEEP_TARGETS, help='the computation (default wavenumbers)')
        _add_beam_arguments(parser)
        parser.add_argument('--kd', type=float, help='drive wavenumber for the steady target')
        parser.add_argument('--G', dest='G', type=float, help='reciprocal lattice vector for the bragg target')
        parser.add_argument('--nmax', type=int, help='highest harmonic for the bragg target (default 1)')
        parser.add_argument('--preset', help='figure preset, e.g. fig2a')

    def resolve(
            self,
            options: Dict[str, Any],
            context: CommandContext,
            output_format: OutputFormat = OutputFormat.CSV,
            destination: Optional[Path] = None
    ) -> CommandRequest:
        options = dict(options)
        interval = options.pop('range', None)
        if interval is not None:
            options['low'], options['high'] = interval
        return super().resolve(options, context, output_format, destination)

    def validate(self, parameters: Dict[str, Any], context: CommandContext) -> None:
        require('variable' in parameters, '--variable', 'is required')
        require('low' in parameters, '--range', 'is required')
        variable = SweepVariable.parse(parameters['variable'])
        target = parameters['target']
        try:
            SweepSpec(variable, parameters['low'], parameters['high'], parameters['points'])
        except DomainError as error:
            raise DomainError(f'--range: {error}') from error

        gamma_needed = target in ('wavenumbers', 'steady') and variable != SweepVariable.GAMMA
        _validate_beam(parameters, context, gamma=gamma_needed)
        if variable == SweepVariable.MU:
            require('material' not in parameters, '--variable', 'mu cannot be swept for a material')
        if variable == SweepVariable.G:
            require(target == 'bragg', '--variable', 'G can only be swept for the bragg target')
        if target == 'bragg':
            require(
                variable == SweepVariable.G or 'G' in parameters,
                '--G',
                'is required for the bragg target'
            )
            if 'G' in parameters:
                require(_finite(parameters['G']) and parameters['G'] > 0, '--G', 'must be > 0')
            require(parameters['nmax'] >= 1, '--nmax', 'must be at least 1')

    def _evaluator(
            self,
            parameters: Dict[str, Any],
            context: CommandContext
    ) -> Callable[[float], Sequence[Value]]:
        variable = SweepVariable.parse(parameters['variable'])
        target = parameters['target']

        def beam_at(value: float) -> BeamParameters:
            if variable == SweepVariable.G:
                return make_beam(parameters, context)
            return make_beam({**parameters, variable.label: value}, context)

        if target == 'wavenumbers':
            return lambda value: wavenumber_row(beam_at(value))
        if target == 'regimes':
            classify = 'gamma' in parameters or variable == SweepVariable.GAMMA
            return lambda value: regime_row(beam_at(value), classify)
        if target == 'steady':
            return lambda value: steady_row(beam_at(value), parameters.get('kd'))
        if target == 'screening':
            return lambda value: screening_row(beam_at(value))

        def bragg(value: float) -> Sequence[Value]:
            beam = beam_at(value)
            g = value if variable == SweepVariable.G else parameters['G']
            return _bragg_sweep_row(beam.mu, beam.xi, LatticeParameters(g, n_max=parameters['nmax']))
        return bragg

    def execute(self, parameters: Dict[str, Any], context: CommandContext) -> Dataset:
        spec = SweepSpec(
            SweepVariable.parse(parameters['variable']),
            parameters['low'],
            parameters['high'],
            parameters['points']
        )
        columns = {
            'wavenumbers': WAVENUMBER_COLUMNS,
            'regimes': REGIME_COLUMNS,
            'steady': STEADY_COLUMNS,
            'screening': SCREENING_COLUMNS,
            'bragg': _bragg_sweep_columns(parameters['nmax']),
        }[parameters['target']]
        return run_sweep(spec, columns, self._evaluator(parameters, context), context.max_workers)
