"""jetblack matterwave"""

from .dispersion import (
    DispersionCurve,
    Regime,
    RegimeClass,
    StabilityWindow,
    WavenumberPair,
    characteristic_wavenumbers,
    classify_regime,
    critical_speeds,
    debroglie_coefficients,
    debroglie_wavenumbers,
    energy_gap,
    plasmon_energy,
    relative_difference,
    sample_dispersion,
    stability_window
)
from .errors import (
    AccuracyError,
    ConfigurationError,
    DegenerateEigenvalueError,
    DegenerateLatticeError,
    DomainError,
    IncommensurateDriveError,
    MatterWaveError,
    NoDriveError,
    ResonantInputError,
    SingularInputError,
    UndefinedQuantityError,
    UnsupportedRegimeError
)
from .fields import BoundaryConditions, FieldSolution
from .lattice import (
    BraggResonance,
    Channel,
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
    load_materials,
    screening_parameter
)
from .oracle import (
    IntegratorConfig,
    SystemKind,
    SystemSpec,
    integrate_system,
    scan_resonances
)
from .pseudoforce import (
    SteadyStateResponse,
    scalar_pseudoresonance,
    solve_damped,
    solve_undamped,
    steady_state
)
from .specfun import (
    DegeneracyPoint,
    FermiOrder,
    fermi_integral,
    invert_eta,
    polylog_neg_exp
)

__all__ = [
    'DispersionCurve',
    'Regime',
    'RegimeClass',
    'StabilityWindow',
    'WavenumberPair',
    'characteristic_wavenumbers',
    'classify_regime',
    'critical_speeds',
    'debroglie_coefficients',
    'debroglie_wavenumbers',
    'energy_gap',
    'plasmon_energy',
    'relative_difference',
    'sample_dispersion',
    'stability_window',
    'AccuracyError',
    'ConfigurationError',
    'DegenerateEigenvalueError',
    'DegenerateLatticeError',
    'DomainError',
    'IncommensurateDriveError',
    'MatterWaveError',
    'NoDriveError',
    'ResonantInputError',
    'SingularInputError',
    'UndefinedQuantityError',
    'UnsupportedRegimeError',
    'BoundaryConditions',
    'FieldSolution',
    'BraggResonance',
    'Channel',
    'LatticeParameters',
    'bragg_resonant_speeds',
    'lattice_bloch_response',
    'solve_lattice_bvp',
    'BeamParameters',
    'Material',
    'ScreeningConvention',
    'beam_from_material',
    'load_materials',
    'screening_parameter',
    'IntegratorConfig',
    'SystemKind',
    'SystemSpec',
    'integrate_system',
    'scan_resonances',
    'SteadyStateResponse',
    'scalar_pseudoresonance',
    'solve_damped',
    'solve_undamped',
    'steady_state',
    'DegeneracyPoint',
    'FermiOrder',
    'fermi_integral',
    'invert_eta',
    'polylog_neg_exp',
]
