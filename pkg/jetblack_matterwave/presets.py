"""Figure reproduction presets.

Each preset pins the parameters of one published figure panel. The figures
do not state the drive amplitudes or the axis ranges, so those values are
inferred and recorded in the dataset metadata.
"""

from dataclasses import dataclass, field
from typing import Any, Dict

from .errors import DomainError


@dataclass(frozen=True)
class Preset:
    """The parameters of a figure panel.

    Attributes:
        name (str): The preset name, e.g. "fig2a".
        command (str): The command the preset applies to.
        description (str): What the panel shows.
        parameters (Dict[str, Any]): The command parameters.
        inferred (Dict[str, str]): The parameters chosen without a published
            value, with the choice made.
    """

    name: str
    command: str
    description: str
    parameters: Dict[str, Any]
    inferred: Dict[str, str] = field(default_factory=dict)


_PRESETS = [
    Preset(
        'fig1a', 'dispersion',
        'unscreened plasmon dispersion against the free electron parabola',
        {'xi': [0.0], 'kmin': 0.05, 'kmax': 3.0, 'points': 600},
        {'k_range': '[0.05, 3]'}
    ),
    Preset(
        'fig1b', 'dispersion',
        'screened plasmon dispersion for several screening parameters',
        {'xi': [0.25, 0.5, 0.75, 1.0, 1.25], 'kmin': 0.05, 'kmax': 3.0, 'points': 600},
        {'xi_values': '[0.25, 0.5, 0.75, 1.0, 1.25]', 'k_range': '[0.05, 3]'}
    ),
    Preset(
        'fig2a', 'sweep',
        'complex de Broglie wavenumbers of a classical dilute unscreened beam',
        {'variable': 'gamma', 'low': 0.01, 'high': 3.0, 'points': 600,
         'target': 'wavenumbers', 'mu': 0.0, 'xi': 0.0},
        {'gamma_range': '[0.01, 3]'}
    ),
    Preset(
        'fig2b', 'sweep',
        'critical beam speeds against the chemical potential',
        {'variable': 'mu', 'low': 0.0, 'high': 2.0, 'points': 201,
         'target': 'regimes', 'xi': 0.0},
        {'mu_range': '[0, 2]'}
    ),
    Preset(
        'fig2c', 'sweep',
        'de Broglie wavenumbers of a classical beam with screening xi = 0.5',
        {'variable': 'gamma', 'low': 0.01, 'high': 4.0, 'points': 800,
         'target': 'wavenumbers', 'mu': 0.0, 'xi': 0.5},
        {'gamma_range': '[0.01, 4]'}
    ),
    Preset(
        'fig2d', 'sweep',
        'de Broglie wavenumbers against the screening at gamma = 2',
        {'variable': 'xi', 'low': 0.0, 'high': 0.99, 'points': 100,
         'target': 'wavenumbers', 'gamma': 2.0, 'mu': 0.0},
        {'xi_range': '[0, 0.99]'}
    ),
    Preset(
        'fig3a-al', 'sweep',
        'matter wave instability in aluminium without screening',
        {'variable': 'gamma', 'low': 0.01, 'high': 3.0, 'points': 600,
         'target': 'wavenumbers', 'material': 'Al', 'xi': 0.0},
        {'gamma_range': '[0.01, 3]'}
    ),
    Preset(
        'fig3b-ag', 'sweep',
        'matter wave instability in silver without screening',
        {'variable': 'gamma', 'low': 0.01, 'high': 3.0, 'points': 600,
         'target': 'wavenumbers', 'material': 'Ag', 'xi': 0.0},
        {'gamma_range': '[0.01, 3]'}
    ),
    Preset(
        'fig3c-al', 'sweep',
        'matter wave instability in aluminium with screening at theta = 0.1',
        {'variable': 'gamma', 'low': 0.01, 'high': 4.0, 'points': 800,
         'target': 'wavenumbers', 'material': 'Al', 'theta': 0.1,
         'convention': 'paper-compat'},
        {'gamma_range': '[0.01, 4]', 'convention': 'paper-compat'}
    ),
    Preset(
        'fig3d-ag', 'sweep',
        'matter wave instability in silver with screening at theta = 0.1',
        {'variable': 'gamma', 'low': 0.01, 'high': 4.0, 'points': 800,
         'target': 'wavenumbers', 'material': 'Ag', 'theta': 0.1,
         'convention': 'paper-compat'},
        {'gamma_range': '[0.01, 4]', 'convention': 'paper-compat'}
    ),
    Preset(
        'fig4a', 'sweep',
        'Bragg resonant speeds against G for aluminium without screening',
        {'variable': 'G', 'low': 0.1, 'high': 5.0, 'points': 491,
         'target': 'bragg', 'material': 'Al', 'xi': 0.0, 'nmax': 1},
        {'G_range': '[0.1, 5]', 'second_curve': '--material Ag'}
    ),
    Preset(
        'fig4b', 'sweep',
        'Bragg resonant speeds against G with screening xi = 0.5',
        {'variable': 'G', 'low': 0.1, 'high': 5.0, 'points': 491,
         'target': 'bragg', 'mu': 0.0, 'xi': 0.5, 'nmax': 1},
        {'G_range': '[0.1, 5]', 'xi': '0.5', 'mu': '0'}
    ),
    Preset(
        'fig4c', 'sweep',
        'Bragg resonant speeds against G for aluminium at theta = 0.1',
        {'variable': 'G', 'low': 0.1, 'high': 5.0, 'points': 491,
         'target': 'bragg', 'material': 'Al', 'theta': 0.1,
         'convention': 'paper-compat', 'nmax': 1},
        {'G_range': '[0.1, 5]', 'convention': 'paper-compat', 'second_curve': '--material Ag'}
    ),
    Preset(
        'fig4d', 'sweep',
        'Bragg resonant speed against temperature for aluminium at G = 2',
        {'variable': 'theta', 'low': 0.05, 'high': 1.0, 'points': 96,
         'target': 'bragg', 'material': 'Al', 'G': 2.0, 'nmax': 1},
        {'theta_range': '[0.05, 1]', 'G': '2'}
    ),
]

PRESETS: Dict[str, Preset] = {preset.name: preset for preset in _PRESETS}


def find_preset(name: str, command: str) -> Preset:
    """Find the preset for a command.

    Args:
        name (str): The preset name.
        command (str): The command being run.

    Raises:
        DomainError: If there is no such preset for the command.

    Returns:
        Preset: The preset.
    """
    preset = PRESETS.get(name)
    if preset is None:
        raise DomainError(f'--preset: unknown preset "{name}"')
    if preset.command != command:
        raise DomainError(f'--preset: {name} is a preset for the {preset.command} command')
    return preset
